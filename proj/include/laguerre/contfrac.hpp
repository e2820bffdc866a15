#pragma once

// Moments of Stieltjes and Jacobi continued fractions, expanded as weighted
// lattice-path sums, together with the permutation-statistic sums they
// enumerate.
//
//   S-fraction 1/(1 - a1 t/(1 - a2 t/(1 - ...))):
//     mu_n = sum over Dyck paths of length 2n, a down step from height h
//     weighted a_h.
//   J-fraction 1/(1 - g0 t - b1 t^2/(1 - g1 t - b2 t^2/(1 - ...))):
//     mu_n = sum over Motzkin paths of length n, a level step at height h
//     weighted g_h and a down step from height h weighted b_h.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "laguerre/multipoly.hpp"
#include "laguerre/permutation.hpp"

namespace laguerre {

struct StieltjesSchedule {
  std::function<MultiPoly(int)> alpha;  // k >= 1
};

struct JacobiSchedule {
  std::function<MultiPoly(int)> gamma;  // k >= 0
  std::function<MultiPoly(int)> beta;   // k >= 1
};

using MomentSequence = std::vector<MultiPoly>;

namespace detail {
inline MultiPoly var(Var v) { return MultiPoly::variable(v); }
}  // namespace detail

/// alpha_{2k-1} = x + (k-1) u,  alpha_{2k} = y + (k-1) v.
inline StieltjesSchedule permutation_stieltjes_schedule() {
  using detail::var;
  return {[](int k) {
    const std::int64_t m = (k + 1) / 2 - 1;
    return k % 2 == 1 ? var(Var::x) + MultiPoly(m) * var(Var::u) : var(Var::y) + MultiPoly(m) * var(Var::v);
  }};
}

/// gamma_0 = x y w0,  gamma_k = x + y + (k-1) + k z,
/// beta_k = (x + k - 1)(y + k - 1) z.
inline JacobiSchedule permutation_jacobi_schedule() {
  using detail::var;
  return {[](int k) {
            if (k == 0) return var(Var::x) * var(Var::y) * var(Var::w0);
            return var(Var::x) + var(Var::y) + MultiPoly(k - 1) + MultiPoly(k) * var(Var::z);
          },
          [](int k) {
            return (var(Var::x) + MultiPoly(k - 1)) * (var(Var::y) + MultiPoly(k - 1)) * var(Var::z);
          }};
}

/// mu_0..mu_order of an S-fraction.
inline MomentSequence stieltjes_moments(const StieltjesSchedule& sched, int order) {
  if (order < 0) throw std::invalid_argument("negative order");
  const auto top = static_cast<std::size_t>(order);
  std::vector<MultiPoly> alpha(top + 1);
  for (std::size_t h = 1; h <= top; ++h) alpha[h] = sched.alpha(static_cast<int>(h));

  // paths[h]: weighted count of path prefixes ending at height h.
  std::vector<MultiPoly> paths(top + 2);
  paths[0] = MultiPoly(1);
  MomentSequence mu{paths[0]};
  for (std::size_t step = 1; step <= 2 * top; ++step) {
    std::vector<MultiPoly> next(top + 2);
    for (std::size_t h = 0; h <= top; ++h) {
      if (paths[h].is_zero()) continue;
      if (h + 1 <= top) next[h + 1] += paths[h];
      if (h >= 1) next[h - 1] += paths[h] * alpha[h];
    }
    paths = std::move(next);
    if (step % 2 == 0) mu.push_back(paths[0]);
  }
  return mu;
}

/// mu_0..mu_order of a J-fraction.
inline MomentSequence jacobi_moments(const JacobiSchedule& sched, int order) {
  if (order < 0) throw std::invalid_argument("negative order");
  const auto top = static_cast<std::size_t>(order);
  std::vector<MultiPoly> gamma(top + 1), beta(top + 1);
  for (std::size_t h = 0; h <= top; ++h) gamma[h] = sched.gamma(static_cast<int>(h));
  for (std::size_t h = 1; h <= top; ++h) beta[h] = sched.beta(static_cast<int>(h));

  std::vector<MultiPoly> paths(top + 2);
  paths[0] = MultiPoly(1);
  MomentSequence mu{paths[0]};
  for (std::size_t step = 1; step <= top; ++step) {
    std::vector<MultiPoly> next(top + 2);
    for (std::size_t h = 0; h <= top; ++h) {
      if (paths[h].is_zero()) continue;
      if (h + 1 <= top) next[h + 1] += paths[h];
      next[h] += paths[h] * gamma[h];
      if (h >= 1) next[h - 1] += paths[h] * beta[h];
    }
    paths = std::move(next);
    mu.push_back(paths[0]);
  }
  return mu;
}

// ---------------------------------------------------------------------------
// Brute-force statistic sums over S_n

enum class FirstStatistic { Arec, Cyc };

/// sum over S_n of x^{s} y^{erec} u^{n - exc - s} v^{exc - erec}, where s is
/// arec or cyc.
inline MultiPoly brute_force_mu(int n, FirstStatistic which) {
  MultiPoly out;
  for_each_permutation(n, [&](const Permutation& p) {
    const StatisticProfile s = profile(p);
    const int first = static_cast<int>(which == FirstStatistic::Arec ? s.arecp.size() : s.cyc.size());
    const int erec = static_cast<int>(s.erecp.size());
    const int exc = static_cast<int>(s.excp.size());
    const int u_exp = n - exc - first;
    const int v_exp = exc - erec;
    if (u_exp < 0 || v_exp < 0) {
      throw std::logic_error("negative exponent for permutation " + format_permutation(p));
    }
    Exponents e{};
    e[static_cast<std::size_t>(Var::x)] = static_cast<unsigned>(first);
    e[static_cast<std::size_t>(Var::y)] = static_cast<unsigned>(erec);
    e[static_cast<std::size_t>(Var::u)] = static_cast<unsigned>(u_exp);
    e[static_cast<std::size_t>(Var::v)] = static_cast<unsigned>(v_exp);
    out.add_term(e, 1);
  });
  return out;
}

/// sum over S_n of x^{cyc} y^{arec} z^{exc} w0^{rar}.
inline MultiPoly brute_force_jacobi(int n) {
  MultiPoly out;
  for_each_permutation(n, [&](const Permutation& p) {
    const StatisticProfile s = profile(p);
    Exponents e{};
    e[static_cast<std::size_t>(Var::x)] = static_cast<unsigned>(s.cyc.size());
    e[static_cast<std::size_t>(Var::y)] = static_cast<unsigned>(s.arecp.size());
    e[static_cast<std::size_t>(Var::z)] = static_cast<unsigned>(s.excp.size());
    e[static_cast<std::size_t>(Var::w0)] = static_cast<unsigned>(s.rar.size());
    out.add_term(e, 1);
  });
  return out;
}

}  // namespace laguerre
