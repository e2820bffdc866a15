#pragma once

// Laguerre histories: a 3-Motzkin word over {U, D, LA, LB, LC} that returns to
// height 0, decorated with labels (xi, eta) bounded by the height before each
// step. An absent label component is std::nullopt, never 0.

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "laguerre/permutation.hpp"

namespace laguerre {

enum class Step { U, D, LA, LB, LC };

inline std::string_view to_string(Step s) {
  switch (s) {
    case Step::U: return "U";
    case Step::D: return "D";
    case Step::LA: return "LA";
    case Step::LB: return "LB";
    case Step::LC: return "LC";
  }
  return "?";
}

inline std::optional<Step> step_from_string(std::string_view s) {
  if (s == "U") return Step::U;
  if (s == "D") return Step::D;
  if (s == "LA") return Step::LA;
  if (s == "LB") return Step::LB;
  if (s == "LC") return Step::LC;
  return std::nullopt;
}

/// Height change contributed by a step.
constexpr int rise(Step s) { return s == Step::U ? 1 : (s == Step::D ? -1 : 0); }

using Label = std::optional<int>;

struct HistoryStep {
  Step kind = Step::U;
  Label xi;
  Label eta;

  friend bool operator==(const HistoryStep&, const HistoryStep&) = default;
  friend auto operator<=>(const HistoryStep&, const HistoryStep&) = default;
};

inline HistoryStep up() { return {Step::U, std::nullopt, std::nullopt}; }
inline HistoryStep down(int xi, int eta) { return {Step::D, xi, eta}; }
inline HistoryStep level_a(int xi) { return {Step::LA, xi, std::nullopt}; }
inline HistoryStep level_b(int eta) { return {Step::LB, std::nullopt, eta}; }
inline HistoryStep level_c(int eta) { return {Step::LC, std::nullopt, eta}; }

struct LaguerreHistory {
  std::vector<HistoryStep> steps;

  int size() const { return static_cast<int>(steps.size()); }
  /// Step i, 1-based.
  const HistoryStep& operator[](int i) const { return steps[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const LaguerreHistory&, const LaguerreHistory&) = default;
  friend auto operator<=>(const LaguerreHistory&, const LaguerreHistory&) = default;
};

/// h_0..h_n. Computed from the step word alone; no validity check.
inline std::vector<int> heights(const LaguerreHistory& h) {
  std::vector<int> out;
  out.reserve(h.steps.size() + 1);
  out.push_back(0);
  for (const auto& s : h.steps) out.push_back(out.back() + rise(s.kind));
  return out;
}

struct Violation {
  int index = 0;  // 1-based step; 0 when the history as a whole is at fault
  std::string what;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// The first violated constraint, or nullopt if h is a Laguerre history.
inline std::optional<Violation> validate(const LaguerreHistory& h) {
  int height = 0;
  for (int i = 1; i <= h.size(); ++i) {
    const HistoryStep& s = h[i];
    const int before = height;
    auto in_range = [&](const Label& l) { return l && *l >= 1 && *l <= before; };
    auto fail = [&](std::string msg) { return Violation{i, std::move(msg)}; };
    switch (s.kind) {
      case Step::U:
        if (s.xi || s.eta) return fail("U step must carry (-, -)");
        break;
      case Step::D:
        if (!in_range(s.xi)) return fail("D step needs xi in 1.." + std::to_string(before));
        if (!in_range(s.eta)) return fail("D step needs eta in 1.." + std::to_string(before));
        break;
      case Step::LA:
        if (!in_range(s.xi)) return fail("LA step needs xi in 1.." + std::to_string(before));
        if (s.eta) return fail("LA step must have eta absent");
        break;
      case Step::LB:
        if (s.xi) return fail("LB step must have xi absent");
        if (!in_range(s.eta)) return fail("LB step needs eta in 1.." + std::to_string(before));
        break;
      case Step::LC:
        if (s.xi) return fail("LC step must have xi absent");
        if (s.eta != before + 1) return fail("LC step needs eta = " + std::to_string(before + 1));
        break;
    }
    height += rise(s.kind);
    if (height < 0) return fail("height drops below 0");
  }
  if (height != 0) return Violation{0, "final height " + std::to_string(height) + " is not 0"};
  return std::nullopt;
}

struct InvalidHistory : std::invalid_argument {
  explicit InvalidHistory(Violation v)
      : std::invalid_argument("invalid Laguerre history at step " + std::to_string(v.index) + ": " + v.what),
        violation(std::move(v)) {}
  Violation violation;
};

inline void require_valid(const LaguerreHistory& h) {
  if (auto v = validate(h)) throw InvalidHistory(*v);
}

// ---------------------------------------------------------------------------
// Text format
//
//   n
//   1 U - -
//   2 LC - 3
//   ...
// One line per step: index, kind, xi, eta, with '-' for an absent label.

inline std::string format_history(const LaguerreHistory& h) {
  std::ostringstream os;
  os << h.size() << '\n';
  auto label = [](const Label& l) { return l ? std::to_string(*l) : std::string("-"); };
  for (int i = 1; i <= h.size(); ++i) {
    os << i << ' ' << to_string(h[i].kind) << ' ' << label(h[i].xi) << ' ' << label(h[i].eta) << '\n';
  }
  return os.str();
}

/// Parses the text format. Line numbers in ParseError are 1-based; the
/// result is not validated beyond its syntax.
inline LaguerreHistory parse_history(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto to_int = [&](const std::string& tok, const char* what) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(line_no, std::string("bad ") + what + " '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line_no, std::string("bad ") + what + " '" + tok + "'");
    return v;
  };

  if (!next_line()) throw ParseError(1, "missing length line");
  int n = 0;
  {
    std::istringstream ls(line);
    std::string tok, extra;
    ls >> tok;
    n = to_int(tok, "length");
    if (ls >> extra) throw ParseError(line_no, "unexpected '" + extra + "' after length");
    if (n < 0) throw ParseError(line_no, "negative length");
  }

  LaguerreHistory h;
  h.steps.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    if (!next_line()) throw ParseError(line_no + 1, "expected " + std::to_string(n) + " step lines, got " + std::to_string(i - 1));
    std::istringstream ls(line);
    std::string idx, kind, xi, eta, extra;
    if (!(ls >> idx >> kind >> xi >> eta)) throw ParseError(line_no, "expected 'i KIND xi eta'");
    if (ls >> extra) throw ParseError(line_no, "unexpected '" + extra + "'");
    if (to_int(idx, "index") != i) throw ParseError(line_no, "step index " + idx + " out of order, expected " + std::to_string(i));
    auto k = step_from_string(kind);
    if (!k) throw ParseError(line_no, "unknown step kind '" + kind + "'");
    auto label = [&](const std::string& tok, const char* what) -> Label {
      if (tok == "-") return std::nullopt;
      return to_int(tok, what);
    };
    h.steps.push_back({*k, label(xi, "xi"), label(eta, "eta")});
  }
  if (next_line()) throw ParseError(line_no, "trailing content after " + std::to_string(n) + " steps");
  return h;
}

// ---------------------------------------------------------------------------
// Exhaustive generation

namespace detail {

template <class F>
void for_each_word(int n, std::vector<Step>& word, int height, F& f) {
  const int pos = static_cast<int>(word.size());
  if (pos == n) {
    if (height == 0) f(word);
    return;
  }
  const int remaining = n - pos;
  if (height > remaining) return;
  for (Step s : {Step::U, Step::D, Step::LA, Step::LB, Step::LC}) {
    const int next = height + rise(s);
    if (next < 0 || next > remaining - 1) continue;
    // Level steps of kind LA/LB need a label in 1..height.
    if ((s == Step::LA || s == Step::LB) && height == 0) continue;
    word.push_back(s);
    for_each_word(n, word, next, f);
    word.pop_back();
  }
}

}  // namespace detail

/// Calls f(h) for every Laguerre history of length n: step words in
/// U < D < LA < LB < LC order, then label tuples in odometer order.
template <class F>
void for_each_history(int n, F&& f) {
  std::vector<Step> word;
  auto on_word = [&](const std::vector<Step>& w) {
    LaguerreHistory h;
    h.steps.resize(w.size());
    // Free label slots and their upper bounds.
    std::vector<std::pair<Label*, int>> slots;
    int height = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      HistoryStep& s = h.steps[k];
      s.kind = w[k];
      switch (w[k]) {
        case Step::U: break;
        case Step::D:
          s.xi = 1;
          s.eta = 1;
          break;
        case Step::LA: s.xi = 1; break;
        case Step::LB: s.eta = 1; break;
        case Step::LC: s.eta = height + 1; break;
      }
      height += rise(w[k]);
    }
    height = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      HistoryStep& s = h.steps[k];
      if (s.kind == Step::D || s.kind == Step::LA) slots.emplace_back(&s.xi, height);
      if (s.kind == Step::D || s.kind == Step::LB) slots.emplace_back(&s.eta, height);
      height += rise(w[k]);
    }
    while (true) {
      f(static_cast<const LaguerreHistory&>(h));
      std::size_t k = slots.size();
      while (k > 0) {
        auto& [label, bound] = slots[k - 1];
        if (**label < bound) {
          ++**label;
          break;
        }
        **label = 1;
        --k;
      }
      if (k == 0) break;
    }
  };
  detail::for_each_word(n, word, 0, on_word);
}

inline std::vector<LaguerreHistory> all_histories(int n) {
  std::vector<LaguerreHistory> out;
  for_each_history(n, [&](const LaguerreHistory& h) { out.push_back(h); });
  return out;
}

}  // namespace laguerre
