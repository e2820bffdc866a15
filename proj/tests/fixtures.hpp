#pragma once

// Shared test data: the 17-point running example with its three histories,
// and definition-level oracles that share no code with the library.

#include <algorithm>
#include <random>
#include <vector>

#include "laguerre/history.hpp"
#include "laguerre/permutation.hpp"

namespace laguerre::testing {

inline Permutation running_sigma() { return Permutation({4, 9, 2, 11, 5, 10, 1, 3, 6, 8, 7, 12, 16, 17, 13, 14, 15}); }
inline Permutation running_omega() { return Permutation({4, 9, 2, 11, 1, 10, 7, 8, 3, 5, 6, 12, 16, 17, 15, 13, 14}); }
inline Permutation running_tau() { return Permutation({4, 11, 2, 9, 1, 10, 7, 8, 5, 3, 6, 12, 17, 16, 15, 14, 13}); }

/// The history of sigma, transcribed step by step.
inline LaguerreHistory running_history() {
  return {{up(), up(), level_b(2), level_a(1), level_c(3), up(), level_b(1), level_b(1), down(1, 1), down(2, 2),
           down(1, 1), level_c(1), up(), up(), level_b(1), down(1, 1), down(1, 1)}};
}

/// Its image under rho1 (the history of omega).
inline LaguerreHistory running_rho1() {
  return {{up(), up(), level_b(2), level_a(1), level_b(1), up(), level_c(4), level_c(4), down(1, 1), down(2, 1),
           down(1, 1), level_c(1), up(), up(), level_c(3), down(1, 1), down(1, 1)}};
}

/// Its image under rho2 (the history of tau).
inline LaguerreHistory running_rho2() {
  return {{up(), up(), level_b(2), level_a(1), level_b(1), up(), level_c(4), level_c(4), down(2, 2), down(2, 1),
           down(1, 1), level_c(1), up(), up(), level_c(3), down(2, 2), down(1, 1)}};
}

// ---------------------------------------------------------------------------
// Oracles written straight from the quantified definitions.

namespace oracle {

inline bool is_record(const std::vector<int>& s, int i) {
  for (int j = 1; j < i; ++j)
    if (!(s[j - 1] < s[i - 1])) return false;
  return true;
}

inline bool is_antirecord(const std::vector<int>& s, int i) {
  for (int j = i + 1; j <= static_cast<int>(s.size()); ++j)
    if (!(s[j - 1] > s[i - 1])) return false;
  return true;
}

/// i is a cycle maximum iff every iterate of i stays <= i.
inline std::vector<int> cycle_maxima(const std::vector<int>& s) {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
    bool max = true;
    for (int j = s[i - 1]; j != i; j = s[j - 1])
      if (j > i) max = false;
    if (max) out.push_back(i);
  }
  return out;
}

inline int count_cycles(const std::vector<int>& s) {
  std::vector<bool> seen(s.size() + 1, false);
  int cycles = 0;
  for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = s[j - 1]) seen[j] = true;
  }
  return cycles;
}

inline int count_pairs_lownest(const std::vector<int>& s, int i) {
  int c = 0;
  for (int j = 1; j <= static_cast<int>(s.size()); ++j)
    if (s[j - 1] < s[i - 1] && i < j) ++c;
  return c;
}

}  // namespace oracle

inline Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

}  // namespace laguerre::testing
