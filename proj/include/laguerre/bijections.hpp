#pragma once

// Two maps on Laguerre histories and the permutation maps they induce
// through the codec:
//
//   rho1 : a bijection sending arecp to cyc while fixing erec, exc and rar;
//   rho2 : an involution swapping arecp and cyc while fixing exc and rar.
//
// Both leave U and LA steps alone, exchange LB and LC steps according to
// whether eta = 1, and rewrite the labels of D steps by walking chains in the
// digraphs of the input and/or output history.

#include <cstddef>

#include "laguerre/digraph.hpp"
#include "laguerre/history.hpp"
#include "laguerre/theta.hpp"

namespace laguerre {

namespace detail {

/// The level-step rule shared by rho1, its inverse and rho2. It is its own
/// inverse on level steps.
inline HistoryStep swap_level_step(const HistoryStep& s, int height_before) {
  switch (s.kind) {
    case Step::LB: return *s.eta == 1 ? level_c(height_before + 1) : s;
    case Step::LC: return *s.eta == 1 ? level_c(1) : level_b(1);
    default: return s;
  }
}

/// Rank sent to 1 when equal to the pivot; ranks above the pivot are kept
/// and ranks below it move up by one.
inline int lift_rank(int rank, int pivot) {
  if (rank == pivot) return 1;
  return rank > pivot ? rank : rank + 1;
}

/// Inverse of lift_rank.
inline int lower_rank(int rank, int pivot) {
  if (rank == 1) return pivot;
  return rank > pivot ? rank : rank - 1;
}

}  // namespace detail

/// For a D step at column i, rho1 keeps xi and connects the xi-th vacant top
/// vertex to i' in the output graph first. Walking back from i' then ends at a
/// vacant bottom vertex of rank eta*; the new eta is lower_rank(eta, eta*), so
/// eta = 1 exactly when i becomes a cycle maximum. The edge out of i is added
/// last.
inline LaguerreHistory rho1(const LaguerreHistory& h) {
  require_valid(h);
  LaguerreHistory out;
  out.steps.reserve(h.steps.size());
  PartialBipartiteGraph g;  // digraph of the output
  int height = 0;
  for (int i = 1; i <= h.size(); ++i) {
    const HistoryStep& s = h[i];
    g.add_column();
    HistoryStep t;
    if (s.kind == Step::D) {
      g.add_edge(g.kth_vacant_top(*s.xi), i);
      const ChainResult chain = g.follow_chain_from_bottom(i);
      const int pivot = g.vacancy_index_bottom(chain.terminal);
      t = down(*s.xi, detail::lower_rank(*s.eta, pivot));
      g.add_edge(i, g.kth_vacant_bottom(*t.eta));
    } else {
      t = detail::swap_level_step(s, height);
      apply_step(g, i, t);
    }
    height += rise(s.kind);
    out.steps.push_back(t);
  }
  return out;
}

/// Undoes rho1. Here the walk runs in the digraph of the input, which is the
/// graph rho1 built, so it sees the same pivot and lift_rank recovers eta.
inline LaguerreHistory rho1_inv(const LaguerreHistory& h) {
  require_valid(h);
  LaguerreHistory out;
  out.steps.reserve(h.steps.size());
  PartialBipartiteGraph g;  // digraph of the input
  int height = 0;
  for (int i = 1; i <= h.size(); ++i) {
    const HistoryStep& s = h[i];
    g.add_column();
    HistoryStep t;
    if (s.kind == Step::D) {
      g.add_edge(g.kth_vacant_top(*s.xi), i);
      const ChainResult chain = g.follow_chain_from_bottom(i);
      const int pivot = g.vacancy_index_bottom(chain.terminal);
      t = down(*s.xi, detail::lift_rank(*s.eta, pivot));
      g.add_edge(i, g.kth_vacant_bottom(*s.eta));
    } else {
      t = detail::swap_level_step(s, height);
      apply_step(g, i, s);
    }
    height += rise(s.kind);
    out.steps.push_back(t);
  }
  return out;
}

/// For a D step at column i, rho2 works in both digraphs.
///
/// Input graph: insert the edge out of i first, walk forward from i to a
/// vacant top vertex of rank xi*, and set the new eta to lift_rank(xi, xi*);
/// so new eta = 1 exactly when i was a cycle maximum. Then add the edge into i'.
///
/// Output graph: insert the edge from i to the new-eta-th vacant bottom
/// vertex, walk forward to a vacant top vertex of rank eta*, and set the new
/// xi to lower_rank(eta, eta*); then add the edge into i'.
///
/// Ranks are taken among columns 1..i-1, i.e. before the edge into i' exists.
inline LaguerreHistory rho2(const LaguerreHistory& h) {
  require_valid(h);
  LaguerreHistory out;
  out.steps.reserve(h.steps.size());
  PartialBipartiteGraph in_graph;
  PartialBipartiteGraph out_graph;
  int height = 0;
  for (int i = 1; i <= h.size(); ++i) {
    const HistoryStep& s = h[i];
    in_graph.add_column();
    out_graph.add_column();
    HistoryStep t;
    if (s.kind == Step::D) {
      in_graph.add_edge(i, in_graph.kth_vacant_bottom(*s.eta));
      const int xi_pivot = in_graph.vacancy_index_top(in_graph.follow_chain_from_top(i).terminal);
      const int new_eta = detail::lift_rank(*s.xi, xi_pivot);
      in_graph.add_edge(in_graph.kth_vacant_top(*s.xi), i);

      out_graph.add_edge(i, out_graph.kth_vacant_bottom(new_eta));
      const int eta_pivot = out_graph.vacancy_index_top(out_graph.follow_chain_from_top(i).terminal);
      const int new_xi = detail::lower_rank(*s.eta, eta_pivot);
      out_graph.add_edge(out_graph.kth_vacant_top(new_xi), i);
      t = down(new_xi, new_eta);
    } else {
      t = detail::swap_level_step(s, height);
      apply_step(in_graph, i, s);
      apply_step(out_graph, i, t);
    }
    height += rise(s.kind);
    out.steps.push_back(t);
  }
  return out;
}

/// decode . rho1 . encode
inline Permutation phi(const Permutation& p) { return decode(rho1(encode(p))); }

/// decode . rho2 . encode; an involution.
inline Permutation phi_cap(const Permutation& p) { return decode(rho2(encode(p))); }

}  // namespace laguerre
