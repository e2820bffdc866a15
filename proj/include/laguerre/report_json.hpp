#pragma once

// JSON views of reports, profiles, histories and polynomials.

#include <string>

#include <nlohmann/json.hpp>

#include "laguerre/history.hpp"
#include "laguerre/multipoly.hpp"
#include "laguerre/permutation.hpp"
#include "laguerre/verify.hpp"

namespace laguerre {

inline nlohmann::json to_json(const VerificationReport& r, bool with_timing = true) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"n", f.n}, {"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  }
  nlohmann::json j{{"check_name", r.check_name},
                   {"n_range", {r.n_min, r.n_max}},
                   {"cases_run", r.cases_run},
                   {"status", r.passed() ? "passed" : "failed"},
                   {"failure_count", r.failure_count},
                   {"failures", failures}};
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  if (!r.parts.empty()) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : r.parts) parts.push_back(to_json(p, with_timing));
    j["checks"] = parts;
  }
  return j;
}

inline nlohmann::json to_json(const StatisticProfile& s, const CycleClassification& c) {
  return {{"recp", s.recp},     {"recl", s.recl},   {"arecp", s.arecp},
          {"arecl", s.arecl},   {"erecp", s.erecp}, {"erecl", s.erecl},
          {"rar", s.rar},       {"excp", s.excp},   {"excl", s.excl},
          {"cyc", s.cyc},       {"cpeak", c.of(CycleKind::Peak)},
          {"cval", c.of(CycleKind::Valley)},        {"cdrise", c.of(CycleKind::DoubleRise)},
          {"cdfall", c.of(CycleKind::DoubleFall)},  {"fix", c.of(CycleKind::Fixed)}};
}

inline nlohmann::json to_json(const LaguerreHistory& h) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : h.steps) {
    steps.push_back({{"kind", std::string(to_string(s.kind))},
                     {"xi", s.xi ? nlohmann::json(*s.xi) : nlohmann::json(nullptr)},
                     {"eta", s.eta ? nlohmann::json(*s.eta) : nlohmann::json(nullptr)}});
  }
  return {{"n", h.size()}, {"steps", steps}};
}

inline nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (std::size_t k = 0; k < kNumVars; ++k) {
      if (e[k] != 0) exps[std::string(kVarNames[k])] = e[k];
    }
    terms.push_back({{"coeff", c}, {"exponents", exps}});
  }
  return terms;
}

}  // namespace laguerre
