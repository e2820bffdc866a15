#pragma once

// The `laguerre` command line. Kept in a header so the test suite can drive
// it with in-memory streams.
//
// Exit codes: 0 success, 1 bad input (parse or validation), 2 usage error,
// 3 a verification check failed.

#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "laguerre/laguerre.hpp"
#include "laguerre/report_json.hpp"

namespace laguerre::cli {

enum ExitCode : int { kOk = 0, kBadInput = 1, kUsage = 2, kCheckFailed = 3 };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Permutation from positional words, or standard input when there are none.
inline Permutation read_permutation(const std::vector<std::string>& words, Streams io) {
  if (words.empty()) return parse_permutation(slurp(io.in));
  std::string joined;
  for (const auto& w : words) joined += w + ' ';
  return parse_permutation(joined);
}

/// History from a file path, or standard input when the path is empty or "-".
inline LaguerreHistory read_history(const std::string& path, Streams io) {
  if (path.empty() || path == "-") return parse_history(slurp(io.in));
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  return parse_history(slurp(file));
}

inline void write_history(const LaguerreHistory& h, bool json, bool render, Streams io) {
  if (json) {
    nlohmann::json j = to_json(h);
    if (render) j["render"] = render_history(h);
    io.out << j.dump() << '\n';
    return;
  }
  io.out << format_history(h);
  if (render) io.out << '\n' << render_history(h);
}

inline void write_permutation(const Permutation& p, bool json, Streams io) {
  if (json) {
    io.out << nlohmann::json{{"n", p.size()}, {"images", p.images()}}.dump() << '\n';
  } else {
    io.out << format_permutation(p) << '\n';
  }
}

inline void write_stats(const Permutation& p, bool json, Streams io) {
  const StatisticProfile s = profile(p);
  const CycleClassification c = classify(p);
  if (json) {
    io.out << to_json(s, c).dump() << '\n';
    return;
  }
  const std::pair<const char*, IndexSet> rows[] = {
      {"recp", s.recp},   {"recl", s.recl},   {"arecp", s.arecp}, {"arecl", s.arecl},
      {"erecp", s.erecp}, {"erecl", s.erecl}, {"rar", s.rar},     {"excp", s.excp},
      {"excl", s.excl},   {"cyc", s.cyc},     {"cpeak", c.of(CycleKind::Peak)},
      {"cval", c.of(CycleKind::Valley)},      {"cdrise", c.of(CycleKind::DoubleRise)},
      {"cdfall", c.of(CycleKind::DoubleFall)}, {"fix", c.of(CycleKind::Fixed)}};
  for (const auto& [name, set] : rows) io.out << name << ": " << format_set(set) << '\n';
}

}  // namespace detail

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Laguerre-history codec, bijections and exhaustive verifier", "laguerre"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> perm_words;
  std::string history_path;
  bool render = false;

  auto* stats = app.add_subcommand("stats", "Print the set-valued statistics of a permutation");
  stats->add_option("images", perm_words, "sigma(1) ... sigma(n); read from stdin if omitted");

  auto* enc = app.add_subcommand("encode", "Permutation -> Laguerre history");
  enc->add_option("images", perm_words, "sigma(1) ... sigma(n); read from stdin if omitted");
  enc->add_flag("--render", render, "Append an ASCII drawing of the path");

  auto* dec = app.add_subcommand("decode", "Laguerre history -> permutation");
  dec->add_option("file", history_path, "History file; stdin if omitted or '-'");

  struct HistoryMap {
    const char* name;
    const char* help;
    LaguerreHistory (*fn)(const LaguerreHistory&);
  };
  const HistoryMap history_maps[] = {{"rho1", "Apply rho1 to a history", &rho1},
                                     {"rho1-inv", "Apply the inverse of rho1", &rho1_inv},
                                     {"rho2", "Apply the involution rho2", &rho2}};
  std::vector<std::pair<CLI::App*, LaguerreHistory (*)(const LaguerreHistory&)>> history_cmds;
  for (const auto& m : history_maps) {
    auto* sub = app.add_subcommand(m.name, m.help);
    sub->add_option("file", history_path, "History file; stdin if omitted or '-'");
    sub->add_flag("--render", render, "Append an ASCII drawing of the path");
    history_cmds.emplace_back(sub, m.fn);
  }

  auto* phi_cmd = app.add_subcommand("phi", "Apply phi = decode . rho1 . encode");
  phi_cmd->add_option("images", perm_words, "sigma(1) ... sigma(n); read from stdin if omitted");
  auto* phicap_cmd = app.add_subcommand("phicap", "Apply Phi = decode . rho2 . encode");
  phicap_cmd->add_option("images", perm_words, "sigma(1) ... sigma(n); read from stdin if omitted");

  std::string cf_kind;
  int cf_order = 6;
  std::string cf_source = "fraction";
  auto* cf = app.add_subcommand("cf", "Continued-fraction moments as polynomials");
  cf->add_option("kind", cf_kind, "stieltjes or jacobi")->required()->check(CLI::IsMember({"stieltjes", "jacobi"}));
  cf->add_option("--order", cf_order, "Largest n")->check(CLI::Range(0, kMaxVerifyN));
  cf->add_option("--source", cf_source,
                 "fraction (path expansion); arec or cyc (stieltjes brute force); brute (jacobi brute force)")
      ->check(CLI::IsMember({"fraction", "arec", "cyc", "brute"}));

  std::string check_name;
  int n_max = 6;
  unsigned workers = 1;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive check and print a JSON report");
  verify->add_option("check", check_name, "roundtrip, transport, theorem1, theorem2, rho1-bijection, "
                                          "rho2-involution, cf-stieltjes, cf-jacobi or all")
      ->required();
  verify->add_option("--n-max", n_max, "Check n = 0..n-max (at most 10)");
  verify->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 256u));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "laguerre: " << e.what() << '\n';
    return kUsage;
  }

  const bool json = format == "json";
  try {
    if (stats->parsed()) {
      detail::write_stats(detail::read_permutation(perm_words, io), json, io);
    } else if (enc->parsed()) {
      detail::write_history(encode(detail::read_permutation(perm_words, io)), json, render, io);
    } else if (dec->parsed()) {
      detail::write_permutation(decode(detail::read_history(history_path, io)), json, io);
    } else if (phi_cmd->parsed()) {
      detail::write_permutation(phi(detail::read_permutation(perm_words, io)), json, io);
    } else if (phicap_cmd->parsed()) {
      detail::write_permutation(phi_cap(detail::read_permutation(perm_words, io)), json, io);
    } else if (cf->parsed()) {
      const bool stieltjes = cf_kind == "stieltjes";
      if ((stieltjes && cf_source == "brute") || (!stieltjes && (cf_source == "arec" || cf_source == "cyc"))) {
        io.err << "laguerre: --source " << cf_source << " does not apply to " << cf_kind << '\n';
        return kUsage;
      }
      MomentSequence mu;
      if (cf_source == "fraction") {
        mu = stieltjes ? stieltjes_moments(permutation_stieltjes_schedule(), cf_order)
                       : jacobi_moments(permutation_jacobi_schedule(), cf_order);
      } else {
        for (int n = 0; n <= cf_order; ++n) {
          mu.push_back(cf_source == "brute" ? brute_force_jacobi(n)
                                            : brute_force_mu(n, cf_source == "arec" ? FirstStatistic::Arec
                                                                                    : FirstStatistic::Cyc));
        }
      }
      if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& p : mu) j.push_back(to_json(p));
        io.out << nlohmann::json{{"kind", cf_kind}, {"source", cf_source}, {"moments", j}}.dump() << '\n';
      } else {
        for (std::size_t n = 0; n < mu.size(); ++n) io.out << "# mu_" << n << '\n' << format_poly(mu[n]);
      }
    } else if (verify->parsed()) {
      const VerificationReport r = run_check(check_name, n_max, workers);
      io.out << to_json(r).dump() << '\n';
      if (!r.passed()) {
        io.err << "laguerre: check " << check_name << " failed " << r.failure_count << " case(s)\n";
        return kCheckFailed;
      }
    } else {
      for (const auto& [sub, fn] : history_cmds) {
        if (sub->parsed()) detail::write_history(fn(detail::read_history(history_path, io)), json, render, io);
      }
    }
  } catch (const ParseError& e) {
    io.err << "laguerre: " << e.what() << '\n';
    return kBadInput;
  } catch (const InvalidHistory& e) {
    io.err << "laguerre: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    io.err << "laguerre: " << e.what() << '\n';
    return verify->parsed() ? kUsage : kBadInput;
  } catch (const std::runtime_error& e) {
    io.err << "laguerre: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}

}  // namespace laguerre::cli
