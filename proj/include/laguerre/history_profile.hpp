#pragma once

// Set-valued statistics read directly off a Laguerre history. Those that are
// local to a step come from the step kind and labels; erecp and cyc need the
// digraph and are read from it while it is rebuilt.

#include <algorithm>

#include "laguerre/digraph.hpp"
#include "laguerre/history.hpp"
#include "laguerre/theta.hpp"

namespace laguerre {

struct HistoryProfile {
  IndexSet arecp;
  IndexSet erecl;
  IndexSet erecp;
  IndexSet excp;
  IndexSet excl;
  IndexSet rar;
  IndexSet cyc;

  friend bool operator==(const HistoryProfile&, const HistoryProfile&) = default;
};

inline HistoryProfile history_profile(const LaguerreHistory& h) {
  require_valid(h);
  HistoryProfile out;
  for (int i = 1; i <= h.size(); ++i) {
    const HistoryStep& s = h[i];
    const bool eta_one = s.eta == 1;
    const bool xi_one = s.xi == 1;
    if ((s.kind == Step::D || s.kind == Step::LB || s.kind == Step::LC) && eta_one) out.arecp.push_back(i);
    if ((s.kind == Step::D || s.kind == Step::LA) && xi_one) out.erecl.push_back(i);
    if (s.kind == Step::U || s.kind == Step::LA) out.excp.push_back(i);
    if (s.kind == Step::D || s.kind == Step::LA) out.excl.push_back(i);
    if (s.kind == Step::LC && eta_one) out.rar.push_back(i);
  }

  // i is a cycle maximum iff, in g_i, the walk back from i' returns to
  // column i. For LC that is the loop i -> i'.
  const PartialBipartiteGraph g = build_graph(h, [&](const PartialBipartiteGraph& gi, int i) {
    const Step k = h[i].kind;
    if ((k == Step::LC || k == Step::D) && gi.follow_chain_from_bottom(i).closed) out.cyc.push_back(i);
  });

  for (int i = 1; i <= g.columns(); ++i) {
    if (std::binary_search(out.erecl.begin(), out.erecl.end(), g.out_of(i))) out.erecp.push_back(i);
  }
  return out;
}

}  // namespace laguerre
