#pragma once

// The codec between permutations of size n and Laguerre histories of
// length n.
//
// encode reads each index i off the cycle classification:
//   valley       -> (U,  (-, -))
//   peak         -> (D,  (upnest(i)+1, lownest(i)+1))
//   double rise  -> (LA, (upnest(i)+1, -))
//   double fall  -> (LB, (-, lownest(i)+1))
//   fixed point  -> (LC, (-, h_{i-1}+1))
//
// decode rebuilds the bipartite digraph one column at a time. The labels are
// ranks among vacant vertices, counted after the new column is added and
// before any of its edges are inserted.

#include <cstddef>

#include "laguerre/digraph.hpp"
#include "laguerre/history.hpp"
#include "laguerre/permutation.hpp"

namespace laguerre {

inline LaguerreHistory encode(const Permutation& p) {
  const CycleClassification kinds = classify(p);
  LaguerreHistory h;
  h.steps.reserve(static_cast<std::size_t>(p.size()));
  int height = 0;
  for (int i = 1; i <= p.size(); ++i) {
    HistoryStep s;
    switch (kinds.kind_of(i)) {
      case CycleKind::Valley: s = up(); break;
      case CycleKind::Peak: s = down(upnest(p, i) + 1, lownest(p, i) + 1); break;
      case CycleKind::DoubleRise: s = level_a(upnest(p, i) + 1); break;
      case CycleKind::DoubleFall: s = level_b(lownest(p, i) + 1); break;
      case CycleKind::Fixed: s = level_c(height + 1); break;
    }
    height += rise(s.kind);
    h.steps.push_back(s);
  }
  return h;
}

/// Inserts the edges that step i contributes to a graph whose last column
/// is i. Vacancy ranks are resolved before either edge is added; for D the
/// edge into i' goes in first.
inline void apply_step(PartialBipartiteGraph& g, int i, const HistoryStep& s) {
  switch (s.kind) {
    case Step::U: break;
    case Step::D: {
      const int from = g.kth_vacant_top(*s.xi);
      const int to = g.kth_vacant_bottom(*s.eta);
      g.add_edge(from, i);
      g.add_edge(i, to);
      break;
    }
    case Step::LA: g.add_edge(g.kth_vacant_top(*s.xi), i); break;
    case Step::LB: g.add_edge(i, g.kth_vacant_bottom(*s.eta)); break;
    case Step::LC: g.add_edge(i, i); break;
  }
}

/// Builds the digraph of a valid history, calling after_column(g, i) once
/// column i and its edges are in place.
template <class Observer>
PartialBipartiteGraph build_graph(const LaguerreHistory& h, Observer&& after_column) {
  PartialBipartiteGraph g;
  for (int i = 1; i <= h.size(); ++i) {
    g.add_column();
    apply_step(g, i, h[i]);
    after_column(static_cast<const PartialBipartiteGraph&>(g), i);
  }
  return g;
}

/// Inverse of encode. Throws InvalidHistory naming the offending step.
inline Permutation decode(const LaguerreHistory& h) {
  require_valid(h);
  return build_graph(h, [](const PartialBipartiteGraph&, int) {}).to_permutation();
}

}  // namespace laguerre
