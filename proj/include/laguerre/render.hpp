#pragma once

// ASCII picture of a Laguerre history: one text row per height (highest
// first), one fixed-width column per step, then the step kinds and labels
// underneath. U is drawn as '/' on the row it starts from, D as '\' on the
// row it ends on, and level steps as a, b or c on their own row.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "laguerre/history.hpp"

namespace laguerre {

inline std::string render_history(const LaguerreHistory& h) {
  constexpr std::size_t kWidth = 7;
  const std::vector<int> hs = heights(h);
  const int top = hs.empty() ? 0 : *std::max_element(hs.begin(), hs.end());

  auto centered = [&](const std::string& s) {
    const std::size_t pad = s.size() >= kWidth ? 0 : kWidth - s.size();
    return std::string(pad / 2, ' ') + s + std::string(pad - pad / 2, ' ');
  };
  auto rstrip = [](std::string s) {
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
  };

  const std::string margin_fmt = "h=" + std::to_string(top);
  const std::size_t margin = margin_fmt.size() + 1;
  auto row_label = [&](const std::string& s) { return s + std::string(margin - s.size(), ' ') + "|"; };

  std::string out;
  for (int row = top; row >= 0; --row) {
    std::string line = row_label("h=" + std::to_string(row));
    for (int i = 1; i <= h.size(); ++i) {
      const int before = hs[static_cast<std::size_t>(i - 1)];
      const int after = hs[static_cast<std::size_t>(i)];
      std::string glyph;
      switch (h[i].kind) {
        case Step::U: glyph = before == row ? "/" : ""; break;
        case Step::D: glyph = after == row ? "\\" : ""; break;
        case Step::LA: glyph = before == row ? "a" : ""; break;
        case Step::LB: glyph = before == row ? "b" : ""; break;
        case Step::LC: glyph = before == row ? "c" : ""; break;
      }
      line += centered(glyph);
    }
    out += rstrip(line) + '\n';
  }

  std::string index_line = row_label("i");
  std::string kind_line = row_label("s");
  std::string label_line = row_label("g");
  for (int i = 1; i <= h.size(); ++i) {
    const HistoryStep& s = h[i];
    index_line += centered(std::to_string(i));
    kind_line += centered(std::string(to_string(s.kind)));
    label_line += centered("(" + (s.xi ? std::to_string(*s.xi) : std::string("-")) + "," +
                           (s.eta ? std::to_string(*s.eta) : std::string("-")) + ")");
  }
  out += rstrip(std::string(margin, '-') + "+" + std::string(kWidth * static_cast<std::size_t>(h.size()), '-')) + '\n';
  out += rstrip(index_line) + '\n' + rstrip(kind_line) + '\n' + rstrip(label_line) + '\n';
  return out;
}

}  // namespace laguerre
