#pragma once

// Exhaustive checks over S_n and L_n for n = 0..n_max. Each check may be
// split across worker threads; a worker takes every case whose index is
// congruent to its id, and results are merged in case order, so the report
// does not depend on the worker count (apart from elapsed time).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "laguerre/bijections.hpp"
#include "laguerre/contfrac.hpp"
#include "laguerre/history.hpp"
#include "laguerre/history_profile.hpp"
#include "laguerre/permutation.hpp"
#include "laguerre/theta.hpp"

namespace laguerre {

inline constexpr int kMaxVerifyN = 10;
inline constexpr std::size_t kMaxStoredFailures = 100;

struct Failure {
  int n = 0;
  std::string input;
  std::string expected;
  std::string actual;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::string check_name;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t cases_run = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  // the first kMaxStoredFailures of them
  double elapsed_ms = 0.0;
  std::vector<VerificationReport> parts;  // per-check reports for "all"

  bool passed() const { return failure_count == 0; }

  void add_failure(Failure f) {
    ++failure_count;
    if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(f));
  }
};

inline const std::vector<std::string_view>& check_names() {
  static const std::vector<std::string_view> names{"roundtrip",       "transport",      "theorem1",
                                                   "theorem2",        "rho1-bijection", "rho2-involution",
                                                   "cf-stieltjes",    "cf-jacobi",      "all"};
  return names;
}

inline std::string format_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s[k]);
  }
  return out + "}";
}

namespace detail {

/// Failures and multiset keys produced for a single case.
struct CaseOutcome {
  std::vector<Failure> failures;
  std::vector<std::string> left_keys;
  std::vector<std::string> right_keys;
};

struct Sweep {
  std::uint64_t cases = 0;
  std::vector<Failure> failures;
  std::vector<std::string> left_keys;
  std::vector<std::string> right_keys;
};

/// Runs check(item, outcome) on every item produced by enumerate, split
/// across workers by case index.
template <class Item, class Enumerate, class Check>
Sweep sweep(unsigned workers, Enumerate enumerate, Check check) {
  workers = std::max(1u, workers);
  struct Local {
    std::vector<std::pair<std::uint64_t, Failure>> failures;
    std::vector<std::string> left, right;
    std::uint64_t cases = 0;
  };
  std::vector<Local> locals(workers);
  auto body = [&](unsigned id) {
    Local& mine = locals[id];
    std::uint64_t index = 0;
    enumerate([&](const Item& item) {
      const std::uint64_t k = index++;
      if (k % workers != id) return;
      ++mine.cases;
      CaseOutcome out;
      check(item, out);
      for (auto& f : out.failures) mine.failures.emplace_back(k, std::move(f));
      for (auto& key : out.left_keys) mine.left.push_back(std::move(key));
      for (auto& key : out.right_keys) mine.right.push_back(std::move(key));
    });
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) threads.emplace_back(body, id);
    for (auto& t : threads) t.join();
  }

  Sweep result;
  std::vector<std::pair<std::uint64_t, Failure>> all;
  for (auto& l : locals) {
    result.cases += l.cases;
    for (auto& f : l.failures) all.push_back(std::move(f));
    for (auto& k : l.left) result.left_keys.push_back(std::move(k));
    for (auto& k : l.right) result.right_keys.push_back(std::move(k));
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [k, f] : all) result.failures.push_back(std::move(f));
  return result;
}

template <class Check>
Sweep sweep_permutations(int n, unsigned workers, Check check) {
  return sweep<Permutation>(workers, [n](auto&& f) { for_each_permutation(n, f); }, check);
}

template <class Check>
Sweep sweep_histories(int n, unsigned workers, Check check) {
  return sweep<LaguerreHistory>(workers, [n](auto&& f) { for_each_history(n, f); }, check);
}

template <class Actual>
void expect(CaseOutcome& out, int n, bool ok, const std::string& input, std::string expected, Actual&& actual) {
  if (!ok) out.failures.push_back({n, input, std::move(expected), actual()});
}

inline std::string join_sets(std::initializer_list<const IndexSet*> sets) {
  std::string out;
  for (const IndexSet* s : sets) {
    if (!out.empty()) out += ' ';
    out += format_set(*s);
  }
  return out;
}

inline std::string one_line(const LaguerreHistory& h) {
  std::string out;
  for (const auto& s : h.steps) {
    if (!out.empty()) out += ' ';
    out += std::string(to_string(s.kind)) + "(" + (s.xi ? std::to_string(*s.xi) : "-") + "," +
           (s.eta ? std::to_string(*s.eta) : "-") + ")";
  }
  return "[" + out + "]";
}

inline void absorb(VerificationReport& r, Sweep&& s, bool count_cases = true) {
  if (count_cases) r.cases_run += s.cases;
  for (auto& f : s.failures) r.add_failure(std::move(f));
}

/// Compares two multisets of serialized statistic tuples.
inline void compare_multisets(VerificationReport& r, int n, Sweep& s, const std::string& what) {
  std::sort(s.left_keys.begin(), s.left_keys.end());
  std::sort(s.right_keys.begin(), s.right_keys.end());
  if (s.left_keys != s.right_keys) {
    std::size_t k = 0;
    while (k < s.left_keys.size() && k < s.right_keys.size() && s.left_keys[k] == s.right_keys[k]) ++k;
    r.add_failure({n, "multiset " + what + " over S_" + std::to_string(n),
                   k < s.left_keys.size() ? s.left_keys[k] : "<end>",
                   k < s.right_keys.size() ? s.right_keys[k] : "<end>"});
  }
}

inline void check_roundtrip(VerificationReport& r, int n, unsigned workers) {
  absorb(r, sweep_permutations(n, workers, [n](const Permutation& p, CaseOutcome& out) {
           const LaguerreHistory h = encode(p);
           const std::string in = format_permutation(p);
           const auto violation = validate(h);
           expect(out, n, !violation, in, "encode(p) valid", [&] { return violation->what; });
           if (violation) return;
           const Permutation back = decode(h);
           expect(out, n, back == p, in, in, [&] { return format_permutation(back); });
           // Height after step i counts j <= i with sigma(j) > i.
           const std::vector<int> hs = heights(h);
           for (int i = 0; i <= n; ++i) {
             int c = 0;
             for (int j = 1; j <= i; ++j) c += p(j) > i;
             const int got = hs[static_cast<std::size_t>(i)];
             if (got != c) {
               expect(out, n, false, in, "h_" + std::to_string(i) + "=" + std::to_string(c),
                      [&] { return std::to_string(got); });
             }
           }
         }));
  Sweep hist = sweep_histories(n, workers, [n](const LaguerreHistory& h, CaseOutcome& out) {
    const LaguerreHistory back = encode(decode(h));
    expect(out, n, back == h, one_line(h), one_line(h), [&] { return one_line(back); });
  });
  if (hist.cases != factorial(n)) {
    r.add_failure({n, "|L_" + std::to_string(n) + "|", std::to_string(factorial(n)), std::to_string(hist.cases)});
  }
  absorb(r, std::move(hist), false);
}

inline void check_transport(VerificationReport& r, int n, unsigned workers) {
  absorb(r, sweep_permutations(n, workers, [n](const Permutation& p, CaseOutcome& out) {
           const StatisticProfile s = profile(p);
           const HistoryProfile hp = history_profile(encode(p));
           const HistoryProfile want{s.arecp, s.erecl, s.erecp, s.excp, s.excl, s.rar, s.cyc};
           auto render = [](const HistoryProfile& x) {
             return join_sets({&x.arecp, &x.erecl, &x.erecp, &x.excp, &x.excl, &x.rar, &x.cyc});
           };
           expect(out, n, hp == want, format_permutation(p), render(want), [&] { return render(hp); });
         }));
}

inline void check_theorem1(VerificationReport& r, int n, unsigned workers) {
  Sweep s = sweep_permutations(n, workers, [n](const Permutation& p, CaseOutcome& out) {
    const StatisticProfile a = profile(p);
    const Permutation image = phi(p);
    const StatisticProfile b = profile(image);
    const std::string want = join_sets({&a.arecp, &a.erecp, &a.erecl, &a.excp, &a.excl, &a.rar});
    const std::string got = join_sets({&b.cyc, &b.erecp, &b.erecl, &b.excp, &b.excl, &b.rar});
    expect(out, n, want == got, format_permutation(p), want, [&] { return got + " via " + format_permutation(image); });
    out.left_keys.push_back(join_sets({&a.cyc, &a.erecp, &a.erecl, &a.excp, &a.excl, &a.rar}));
    out.right_keys.push_back(want);
  });
  compare_multisets(r, n, s, "(Cyc,Erec,Exc,Rar) vs (Arecp,Erec,Exc,Rar)");
  absorb(r, std::move(s));
}

inline void check_theorem2(VerificationReport& r, int n, unsigned workers) {
  Sweep s = sweep_permutations(n, workers, [n](const Permutation& p, CaseOutcome& out) {
    const StatisticProfile a = profile(p);
    const Permutation image = phi_cap(p);
    const StatisticProfile b = profile(image);
    const std::string in = format_permutation(p);
    const std::string want = join_sets({&a.arecp, &a.cyc, &a.excp, &a.excl, &a.rar});
    const std::string got = join_sets({&b.cyc, &b.arecp, &b.excp, &b.excl, &b.rar});
    expect(out, n, want == got, in, want, [&] { return got + " via " + format_permutation(image); });
    const Permutation twice = phi_cap(image);
    expect(out, n, twice == p, in, "Phi(Phi(p)) = " + in, [&] { return format_permutation(twice); });
    out.left_keys.push_back(join_sets({&a.cyc, &a.arecp, &a.excp, &a.excl, &a.rar}));
    out.right_keys.push_back(want);
  });
  compare_multisets(r, n, s, "(Cyc,Arecp,Exc,Rar) vs (Arecp,Cyc,Exc,Rar)");
  absorb(r, std::move(s));
}

inline void check_rho1(VerificationReport& r, int n, unsigned workers) {
  absorb(r, sweep_histories(n, workers, [n](const LaguerreHistory& h, CaseOutcome& out) {
           const std::string in = one_line(h);
           const LaguerreHistory image = rho1(h);
           const auto violation = validate(image);
           expect(out, n, !violation, in, "rho1(h) valid", [&] { return violation->what; });
           if (violation) return;
           const LaguerreHistory back = rho1_inv(image);
           expect(out, n, back == h, in, "rho1_inv(rho1(h)) = h", [&] { return one_line(back); });
           const LaguerreHistory fwd = rho1(rho1_inv(h));
           expect(out, n, fwd == h, in, "rho1(rho1_inv(h)) = h", [&] { return one_line(fwd); });
         }));
}

inline void check_rho2(VerificationReport& r, int n, unsigned workers) {
  absorb(r, sweep_histories(n, workers, [n](const LaguerreHistory& h, CaseOutcome& out) {
           const std::string in = one_line(h);
           const LaguerreHistory image = rho2(h);
           const auto violation = validate(image);
           expect(out, n, !violation, in, "rho2(h) valid", [&] { return violation->what; });
           if (violation) return;
           const LaguerreHistory back = rho2(image);
           expect(out, n, back == h, in, "rho2(rho2(h)) = h", [&] { return one_line(back); });
         }));
}

inline void check_cf_stieltjes(VerificationReport& r, int n_max) {
  const MomentSequence mu = stieltjes_moments(permutation_stieltjes_schedule(), n_max);
  for (int n = 0; n <= n_max; ++n) {
    ++r.cases_run;
    const MultiPoly& cf = mu[static_cast<std::size_t>(n)];
    const MultiPoly arec = brute_force_mu(n, FirstStatistic::Arec);
    const MultiPoly cyc = brute_force_mu(n, FirstStatistic::Cyc);
    if (cf != arec) r.add_failure({n, "mu_" + std::to_string(n) + " vs arec sum", format_poly(cf), format_poly(arec)});
    if (cf != cyc) r.add_failure({n, "mu_" + std::to_string(n) + " vs cyc sum", format_poly(cf), format_poly(cyc)});
  }
}

inline void check_cf_jacobi(VerificationReport& r, int n_max) {
  const MomentSequence mu = jacobi_moments(permutation_jacobi_schedule(), n_max);
  for (int n = 0; n <= n_max; ++n) {
    ++r.cases_run;
    const MultiPoly& cf = mu[static_cast<std::size_t>(n)];
    const MultiPoly brute = brute_force_jacobi(n);
    if (cf != brute) r.add_failure({n, "mu_" + std::to_string(n) + " vs brute force", format_poly(cf), format_poly(brute)});
    const MultiPoly swapped = brute.swapped(Var::x, Var::y);
    if (swapped != brute) {
      r.add_failure({n, "x<->y symmetry of sum " + std::to_string(n), format_poly(brute), format_poly(swapped)});
    }
  }
}

}  // namespace detail

/// Runs one named check for n = 0..n_max. Throws std::invalid_argument for
/// an unknown check or n_max outside 0..kMaxVerifyN.
inline VerificationReport run_check(std::string_view name, int n_max, unsigned workers = 1) {
  const auto& names = check_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw std::invalid_argument("unknown check '" + std::string(name) + "'");
  }
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  if (n_max > kMaxVerifyN) {
    throw std::invalid_argument("n_max " + std::to_string(n_max) + " refused: exhaustive checks visit " +
                                std::to_string(factorial(n_max)) + " cases at n=" + std::to_string(n_max) +
                                "; the limit is " + std::to_string(kMaxVerifyN));
  }

  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.check_name = std::string(name);
  r.n_max = n_max;

  if (name == "all") {
    for (std::string_view part : names) {
      if (part == "all") continue;
      VerificationReport sub = run_check(part, n_max, workers);
      r.cases_run += sub.cases_run;
      for (const auto& f : sub.failures) {
        if (r.failures.size() < kMaxStoredFailures) r.failures.push_back(f);
      }
      r.failure_count += sub.failure_count;
      r.parts.push_back(std::move(sub));
    }
  } else if (name == "cf-stieltjes") {
    detail::check_cf_stieltjes(r, n_max);
  } else if (name == "cf-jacobi") {
    detail::check_cf_jacobi(r, n_max);
  } else {
    for (int n = 0; n <= n_max; ++n) {
      if (name == "roundtrip") detail::check_roundtrip(r, n, workers);
      else if (name == "transport") detail::check_transport(r, n, workers);
      else if (name == "theorem1") detail::check_theorem1(r, n, workers);
      else if (name == "theorem2") detail::check_theorem2(r, n, workers);
      else if (name == "rho1-bijection") detail::check_rho1(r, n, workers);
      else if (name == "rho2-involution") detail::check_rho2(r, n, workers);
    }
  }

  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace laguerre
