#pragma once

// The `suzree` command line: ppd, verify, graph, report.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage error,
// 3 factorization budget exhausted, 4 adjacency data rejected.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "suzree/cyclotomic.hpp"
#include "suzree/report.hpp"

namespace suzree::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3, kData = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kProbabilisticNote =
    "note: primes above 2^64 are strong probable primes (BPSW), not proven";

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline Family parse_family(const std::string& text) {
  const std::string s = lower(text);
  if (s == "sz" || s == "suzuki" || s == "b2") return Family::Suzuki;
  if (s == "ree" || s == "g2" || s == "ree_g2") return Family::ReeG2;
  if (s == "f4" || s == "ree_f4") return Family::ReeF4;
  throw UsageError("unknown family '" + text + "' (expected sz, g2/ree or f4)");
}

inline std::vector<Family> parse_families(const std::vector<std::string>& items) {
  if (items.empty()) return {kAllFamilies.begin(), kAllFamilies.end()};
  std::vector<Family> out;
  for (const auto& item : items) {
    for (const auto& part : split(item, ',')) {
      if (lower(part) == "all") {
        out.assign(kAllFamilies.begin(), kAllFamilies.end());
        continue;
      }
      const Family f = parse_family(part);
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t parse_u64(const std::string& s, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError(std::string(what) + ": '" + s + "' is not a non-negative integer");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw UsageError(std::string(what) + ": '" + s + "' is too large");
  }
}

inline std::uint64_t check_odd_m(std::uint64_t m) {
  if (m <= 1) throw UsageError("m = " + std::to_string(m) + " must be greater than 1");
  if (m % 2 == 0) throw UsageError("m = " + std::to_string(m) + " is even; only odd m are allowed");
  return m;
}

/// "3..11", "3,5,9", "7" or combinations like "3..9,15". Even values are
/// rejected, not skipped.
inline std::vector<std::uint64_t> parse_m_values(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(check_odd_m(parse_u64(part, "--m")));
      continue;
    }
    const std::uint64_t lo = check_odd_m(parse_u64(part.substr(0, dots), "--m"));
    const std::uint64_t hi = check_odd_m(parse_u64(part.substr(dots + 2), "--m"));
    if (lo > hi) throw UsageError("--m range " + part + " is empty");
    for (std::uint64_t m = lo; m <= hi; m += 2) out.push_back(m);
  }
  if (out.empty()) throw UsageError("--m: no values given");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Nat parse_nat(const std::string& s, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError(std::string(what) + ": '" + s + "' is not a non-negative integer");
  return Nat(s);
}

inline std::string join(const std::vector<Nat>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x.get_str();
  return "{" + out + "}";
}

inline std::string join(const std::vector<Vertex>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x.to_string();
  return "{" + out + "}";
}

inline std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return "{" + out + "}";
}

struct Options {
  bool json = false;
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string data_file;
  std::string format;  // per-command default when empty

  // ppd
  std::string q, m_ppd;
  bool factor = false;
  // verify, graph, report
  std::vector<std::string> families;
  std::string m;
  std::string epsilon = "both";
  bool witness = false;
  std::uint64_t ext = 1;
  std::string out_file;
};

inline std::string output_format(const Options& o, std::initializer_list<std::string_view> allowed) {
  std::string f = o.json ? "json" : (o.format.empty() ? "text" : lower(o.format));
  if (o.json && !o.format.empty() && lower(o.format) != "json") throw UsageError("--json conflicts with --format " + o.format);
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) throw UsageError("unsupported --format " + f);
  return f;
}

inline AdjacencyData adjacency(const Options& o) {
  return o.data_file.empty() ? default_adjacency() : load_adjacency_file(o.data_file);
}

inline int cmd_ppd(const Options& o, std::ostream& out) {
  const std::string fmt = output_format(o, {"text", "json"});
  const Nat q = parse_nat(o.q, "q");
  const std::uint64_t m = parse_u64(o.m_ppd, "m");
  if (q < 2) throw UsageError("q must be at least 2");
  if (m < 3) throw UsageError("m must be at least 3");
  const Nat k = primitive_part(m, q);
  const bool exception = !zsigmondy_exists(m, q);
  std::vector<Nat> ppds;
  if (o.factor) ppds = primitive_prime_divisors(m, q, o.budget);
  const bool probabilistic = any_probabilistic(ppds);
  if (fmt == "json") {
    Json j = {{"q", str(q)}, {"m", str(m)}, {"k", str(k)}, {"zsigmondy_exception", exception}};
    if (o.factor) {
      Json a = Json::array();
      for (const auto& p : ppds) a.push_back(str(p));
      j["ppds"] = std::move(a);
      j["probabilistic"] = probabilistic;
    }
    out << canonical_dump(j);
    return kOk;
  }
  out << "k = " << k << "\n";
  if (o.factor) out << "ppds = " << join(ppds) << "\n";
  if (exception) out << "note: Zsigmondy exception, " << q << "^" << m << " - 1 has no primitive prime divisor\n";
  if (probabilistic) out << kProbabilisticNote << "\n";
  return kOk;
}

inline SweepConfig sweep_config(const Options& o) {
  SweepConfig cfg;
  cfg.families = parse_families(o.families);
  if (!o.m.empty()) cfg.m_values = parse_m_values(o.m);
  const std::string eps = lower(o.epsilon);
  if (eps == "both") {
    cfg.epsilon = EpsilonChoice::Both;
  } else if (eps == "plus" || eps == "+") {
    cfg.epsilon = EpsilonChoice::Plus;
  } else if (eps == "minus" || eps == "-") {
    cfg.epsilon = EpsilonChoice::Minus;
  } else {
    throw UsageError("--epsilon must be both, plus or minus");
  }
  cfg.want_witness = o.witness;
  cfg.budget = o.budget;
  cfg.workers = o.workers;
  return cfg;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const std::string fmt = output_format(o, {"text", "json", "csv"});
  const SweepConfig cfg = sweep_config(o);
  const auto records = run_theorem2_sweep(cfg);
  bool ok = true, probabilistic = false;
  for (const auto& r : records) {
    ok = ok && r.ok();
    if (r.verdict.witness) probabilistic = probabilistic || !primality_is_certain(*r.verdict.witness);
  }
  if (fmt == "json") {
    Json a = Json::array();
    for (const auto& r : records) a.push_back(to_json(r));
    out << canonical_dump(Json{{"records", std::move(a)}, {"pass", ok}});
  } else if (fmt == "csv") {
    out << theorem2_csv(records);
  } else {
    std::size_t exceptions = 0;
    for (const auto& r : records) {
      out << family_name(r.family) << " m=" << r.m << " eps=" << sign_name(r.epsilon)
          << " holds=" << (r.verdict.holds ? "true" : "false") << " gcd=" << r.verdict.gcd;
      if (r.verdict.witness) out << " witness=" << *r.verdict.witness;
      if (r.exception_row()) {
        out << " exception";
        ++exceptions;
      }
      out << "\n";
    }
    out << records.size() << " records, " << exceptions << " exceptions, " << (ok ? "all consistent" : "DISCREPANCY")
        << "\n";
    if (probabilistic) out << kProbabilisticNote << "\n";
  }
  return ok ? kOk : kFailed;
}

inline int cmd_graph(const Options& o, std::ostream& out) {
  const std::string fmt = output_format(o, {"text", "json", "dot"});
  if (o.m.empty()) throw UsageError("graph needs --m");
  const auto ms = parse_m_values(o.m);
  if (ms.size() != 1) throw UsageError("graph takes a single --m value");
  const auto fams = parse_families(o.families);
  if (o.families.empty() || fams.size() != 1) throw UsageError("graph needs exactly one --family");
  const GroupSpec spec{fams[0], ms[0], o.ext};
  if (o.ext == 0 || spec.m % o.ext != 0) throw UsageError("--ext must divide m");
  const AdjacencyData data = adjacency(o);

  if (spec.ext > 1) {
    if (fmt == "dot") throw UsageError("dot output is only available for ext = 1");
    const IndependenceReport r = theorem3_evaluate(spec, data);
    if (fmt == "json") {
      out << canonical_dump(theorem3_to_json(spec, r));
    } else {
      out << family_name(spec.family) << " m=" << spec.m << " ext=" << spec.ext << "\n";
      out << "t(L) = " << r.t_simple << ", t(2,L) = " << r.t2_simple << "\n";
      out << "t(G) = " << r.t << ", t(2,G) = " << r.t2 << "\n";
      out << "case " << theorem3_case_name(r.theorem3_case) << (r.pi_grows ? ", pi(G) larger than pi(L)" : "") << "\n";
    }
    return kOk;
  }

  const GKGraph g = build_gk(spec, data, o.budget);
  const IndependenceReport r = independence_number(g);
  if (fmt == "json") {
    out << canonical_dump(graph_to_json(g, r));
  } else if (fmt == "dot") {
    out << graph_to_dot(g, r);
  } else {
    out << "GK(" << family_name(spec.family) << ", m=" << spec.m << ")\n";
    bool probabilistic = false;
    for (const auto& c : g.classes) {
      out << "  " << c.label << " (" << c.support << "): " << join(c.vertices) << "\n";
      for (const auto& v : c.vertices) probabilistic = probabilistic || (v.prime && !primality_is_certain(v.value));
    }
    const auto edges = g.edges();
    out << "edges: " << edges.size() << "\n";
    for (const auto& [a, b] : edges) out << "  " << a.to_string() << " - " << b.to_string() << "\n";
    out << "t = " << r.t << ", t2 = " << r.t2 << "\n";
    for (const auto& s : r.max_class_sets) out << "  max class set " << join(s) << "\n";
    if (probabilistic) out << kProbabilisticNote << "\n";
  }
  return kOk;
}

inline int cmd_report(const Options& o, std::ostream& out) {
  output_format(o, {"text", "json"});  // the report itself is always JSON
  ReportConfig cfg;
  cfg.sweep = sweep_config(o);
  const std::string text = canonical_dump(build_report(cfg, adjacency(o)));
  if (o.out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.out_file);
    f << text;
  }
  return Json::parse(text)["pass"].get<bool>() ? kOk : kFailed;
}

/// Runs the CLI on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Options o;
  CLI::App app{"Suzuki-Ree torus orders, primitive prime divisors and prime graphs"};
  app.name("suzree");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--budget", o.budget, "Pollard rho steps allowed per cofactor")->check(CLI::PositiveNumber);
  app.add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--data", o.data_file, "adjacency data file replacing the built-in one");
  app.add_option("--format", o.format, "text, json, csv or dot");

  auto* ppd = app.add_subcommand("ppd", "primitive part k_m(q) and its primes");
  ppd->add_option("q", o.q, "base")->required();
  ppd->add_option("m", o.m_ppd, "exponent")->required();
  ppd->add_flag("--factor", o.factor, "list the primitive prime divisors");

  auto* verify = app.add_subcommand("verify", "sweep the torus-order ppd theorem");
  auto* graph = app.add_subcommand("graph", "prime graph and independence numbers");
  auto* report = app.add_subcommand("report", "consolidated JSON report");
  for (auto* sub : {verify, graph, report}) {
    sub->add_option("--family", o.families, "sz, g2 (alias ree), f4 or all; repeatable or comma separated");
    sub->add_option("--m", o.m, "odd m: 7, 3..11 or 3,5,9");
  }
  for (auto* sub : {verify, report}) {
    sub->add_option("--epsilon", o.epsilon, "both, plus or minus");
  }
  verify->add_flag("--witness", o.witness, "report the smallest witnessing prime");
  graph->add_option("--ext", o.ext, "order of G/L, a divisor of m");
  report->add_option("--out", o.out_file, "write the report to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*ppd) return cmd_ppd(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*graph) return cmd_graph(o, out);
    return cmd_report(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: factorization budget of " << e.budget() << " steps exhausted on " << e.cofactor() << "\n";
    return kBudget;
  } catch (const DataValidationError& e) {
    err << "error: adjacency data rejected: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace suzree::cli
