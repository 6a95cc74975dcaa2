#pragma once

// Sweeps over (family, m, ε), machine-readable encodings and the
// consolidated report. JSON output is canonical: object keys sorted, every
// number written as a decimal string, arrays ordered by family, then m, then ε.
// Worker count never changes the output.

#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "suzree/adjacency_data.hpp"
#include "suzree/aurifeuille.hpp"
#include "suzree/primegraph.hpp"

namespace suzree {

using Json = nlohmann::json;

/// fn(0), ..., fn(count - 1) on up to `workers` threads, results in index order.
/// The first exception by index is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, unsigned workers, Fn fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using T = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (n == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(run);
  }
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

inline std::string str(const Nat& n) { return n.get_str(); }
inline std::string str(std::uint64_t n) { return std::to_string(n); }
inline std::string str(int n) { return std::to_string(n); }

/// Odd integers lo, lo + 2, ..., hi; both ends must be odd and > 1.
inline std::vector<std::uint64_t> odd_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo <= 1 || hi <= 1) throw DomainError("m values must be greater than 1");
  if (lo % 2 == 0 || hi % 2 == 0) throw DomainError("m values must be odd");
  if (lo > hi) throw DomainError("empty m range");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = lo; m <= hi; m += 2) out.push_back(m);
  return out;
}

inline std::uint64_t default_max_m(Family f) {
  switch (f) {
    case Family::Suzuki:
      return 299;
    case Family::ReeG2:
      return 199;
    case Family::ReeF4:
      return 99;
  }
  return 3;
}

enum class EpsilonChoice { Both, Plus, Minus };

struct SweepConfig {
  std::vector<Family> families{kAllFamilies.begin(), kAllFamilies.end()};
  std::optional<std::vector<std::uint64_t>> m_values;  // per-family defaults when absent
  EpsilonChoice epsilon = EpsilonChoice::Both;
  bool want_witness = false;
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;

  std::vector<std::uint64_t> m_for(Family f) const { return m_values ? *m_values : odd_range(3, default_max_m(f)); }

  std::vector<Sign> signs() const {
    switch (epsilon) {
      case EpsilonChoice::Plus:
        return {Sign::Plus};
      case EpsilonChoice::Minus:
        return {Sign::Minus};
      case EpsilonChoice::Both:
        break;
    }
    return {Sign::Plus, Sign::Minus};
  }
};

struct Theorem2Record {
  Family family = Family::Suzuki;
  std::uint64_t m = 3;
  Sign epsilon = Sign::Plus;
  Verdict verdict;

  /// holds = false on an input the theorem exempts.
  bool exception_row() const { return !verdict.holds && verdict.is_known_exception; }
  /// A failure outside the exempt inputs would be a genuine discrepancy.
  bool ok() const { return verdict.holds || verdict.is_known_exception; }
};

inline std::vector<Theorem2Record> run_theorem2_sweep(const SweepConfig& cfg) {
  std::vector<Theorem2Record> tasks;
  for (Family f : cfg.families) {
    for (std::uint64_t m : cfg.m_for(f)) {
      for (Sign s : cfg.signs()) tasks.push_back({f, m, s, {}});
    }
  }
  return parallel_map(tasks.size(), cfg.workers, [&](std::size_t i) {
    Theorem2Record r = tasks[i];
    r.verdict = verify_theorem2(r.family, r.m, r.epsilon, cfg.want_witness, cfg.budget);
    return r;
  });
}

inline bool any_probabilistic(const std::vector<Nat>& primes) {
  for (const auto& p : primes) {
    if (!primality_is_certain(p)) return true;
  }
  return false;
}

inline Json to_json(const Theorem2Record& r) {
  Json j = {{"family", family_name(r.family)},
            {"m", str(r.m)},
            {"epsilon", sign_name(r.epsilon)},
            {"holds", r.verdict.holds},
            {"gcd", str(r.verdict.gcd)},
            {"exception", r.exception_row()},
            {"pass", r.ok()}};
  if (r.verdict.witness) {
    j["witness"] = str(*r.verdict.witness);
    j["witness_probabilistic"] = !primality_is_certain(*r.verdict.witness);
  }
  return j;
}

inline std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string theorem2_csv(const std::vector<Theorem2Record>& records) {
  std::ostringstream os;
  os << "family,m,epsilon,holds,gcd,witness,exception\r\n";
  for (const auto& r : records) {
    os << csv_field(std::string(family_name(r.family))) << ',' << r.m << ',' << csv_field(std::string(sign_name(r.epsilon)))
       << ',' << (r.verdict.holds ? "true" : "false") << ',' << r.verdict.gcd << ','
       << (r.verdict.witness ? str(*r.verdict.witness) : std::string()) << ',' << (r.exception_row() ? "true" : "false")
       << "\r\n";
  }
  return os.str();
}

inline Json to_json(const std::vector<Vertex>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(v.to_string());
  return a;
}

inline Json to_json(const std::vector<std::vector<std::string>>& sets) {
  Json a = Json::array();
  for (const auto& s : sets) a.push_back(s);
  return a;
}

inline Json to_json(const IndependenceReport& r) {
  Json j = {{"t", str(r.t)},
            {"t2", str(r.t2)},
            {"t_simple", str(r.t_simple)},
            {"t2_simple", str(r.t2_simple)},
            {"case", theorem3_case_name(r.theorem3_case)},
            {"pi_grows", r.pi_grows},
            {"max_class_sets", to_json(r.max_class_sets)},
            {"max_class_sets_with_2", to_json(r.max_class_sets_two)}};
  Json w = Json::array();
  for (const auto& s : r.witness_sets) w.push_back(to_json(s));
  j["witness_sets"] = std::move(w);
  j["witness_sets_truncated"] = r.witness_sets_truncated;
  return j;
}

inline Json graph_to_json(const GKGraph& g, const IndependenceReport& r) {
  Json classes = Json::array();
  for (const auto& c : g.classes) {
    classes.push_back({{"label", c.label},
                       {"defining", str(c.defining)},
                       {"support", str(c.support)},
                       {"vertices", to_json(c.vertices)}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a.to_string(), b.to_string()});
  Json class_edges = Json::array();
  for (std::size_t i = 0; i < g.class_graph.size(); ++i) {
    for (std::size_t j = i + 1; j < g.class_graph.size(); ++j) {
      if (g.class_graph.adjacent[i][j]) class_edges.push_back({g.class_graph.labels[i], g.class_graph.labels[j]});
    }
  }
  Json j = {{"family", family_name(g.family)},
            {"m", str(g.m)},
            {"ext", "1"},
            {"vertices", to_json(g.vertices())},
            {"edges", std::move(edges)},
            {"classes", std::move(classes)},
            {"class_edges", std::move(class_edges)},
            {"independence", to_json(r)}};
  return j;
}

inline std::string graph_to_dot(const GKGraph& g, const IndependenceReport& r) {
  std::ostringstream os;
  os << "graph \"GK(" << family_name(g.family) << ", m=" << g.m << ")\" {\n";
  os << "  label=\"t=" << r.t << ", t2=" << r.t2 << "\";\n";
  os << "  node [shape=circle];\n";
  for (const auto& c : g.classes) {
    os << "  subgraph \"cluster_" << c.label << "\" {\n";
    os << "    label=\"" << c.label << "\";\n";
    for (const auto& v : c.vertices) {
      os << "    \"" << v.to_string() << "\"";
      if (!v.prime) os << " [shape=box]";
      os << ";\n";
    }
    os << "  }\n";
  }
  for (const auto& [a, b] : g.edges()) os << "  \"" << a.to_string() << "\" -- \"" << b.to_string() << "\";\n";
  os << "}\n";
  return os.str();
}

inline Json theorem3_to_json(const GroupSpec& spec, const IndependenceReport& r) {
  Json j = to_json(r);
  j["family"] = family_name(spec.family);
  j["m"] = str(spec.m);
  j["ext"] = str(spec.ext);
  return j;
}

/// Generic bounds t(G) <= t(L) + 1 and t(2, G) <= t(2, L), and each case
/// appearing only for the family it belongs to.
inline bool theorem3_consistent(const GroupSpec& spec, const IndependenceReport& r) {
  if (r.t > r.t_simple + 1 || r.t2 > r.t2_simple || r.t2 > r.t) return false;
  switch (r.theorem3_case) {
    case Theorem3Case::A:
      return r.t == r.t_simple && r.t2 == r.t2_simple;
    case Theorem3Case::B:
      return spec.family == Family::Suzuki && spec.m == 5 && r.t == r.t_simple - 1 && r.t2 == r.t2_simple - 1;
    case Theorem3Case::C:
      return spec.family == Family::ReeF4 && r.pi_grows && r.t == r.t_simple + 1 && r.t2 == r.t2_simple;
    case Theorem3Case::D:
      return spec.family == Family::ReeG2 && !r.pi_grows && spec.ext % 3 == 0 && r.t == r.t_simple - 1 &&
             r.t2 == r.t2_simple;
    case Theorem3Case::Simple:
      return false;
  }
  return false;
}

struct ReportConfig {
  SweepConfig sweep;
  std::uint64_t lemma1_max_m = 15;     // n = 4, 6
  std::uint64_t lemma1_f4_max_m = 9;   // n = 12
  std::uint64_t lemma2_max_m = 99;
  std::uint64_t theorem3_max_m = 45;
};

struct Lemma1Task {
  Family family;
  std::uint64_t m;
  std::uint64_t s;
};

inline std::vector<Lemma1Task> lemma1_grid(const ReportConfig& cfg) {
  std::vector<Lemma1Task> out;
  for (Family f : kAllFamilies) {
    const std::uint64_t max_m = f == Family::ReeF4 ? cfg.lemma1_f4_max_m : cfg.lemma1_max_m;
    for (std::uint64_t m = 1; m <= max_m; ++m) {
      if (gcd(m, std::uint64_t(torus_index(f))) != 1) continue;
      for (std::uint64_t s : {1, 3}) out.push_back({f, m, s});
    }
  }
  return out;
}

inline Json lemma1_section(const ReportConfig& cfg) {
  const auto grid = lemma1_grid(cfg);
  auto rows = parallel_map(grid.size(), cfg.sweep.workers, [&](std::size_t i) {
    const auto& t = grid[i];
    const Lemma1Result res = lemma1_evaluate(t.family, t.m, t.s);
    Json out = Json::array();
    // ε-ordered: +, then -.
    for (Sign eps : kBothSigns) {
      for (const auto& e : res.entries) {
        if (e.induced != eps) continue;
        out.push_back({{"family", family_name(t.family)},
                       {"m", str(t.m)},
                       {"s", str(t.s)},
                       {"epsilon", sign_name(eps)},
                       {"root", root_name(e.root)},
                       {"gcd", str(e.gcd)},
                       {"f_abs", str(e.f_abs)},
                       {"pass", e.equal}});
      }
    }
    return out;
  });
  struct IdentityTask {
    Family family;
    std::uint64_t m;
    RootChoice root;
  };
  std::vector<IdentityTask> ids;
  for (const auto& t : grid) {
    if (t.s != 1) continue;
    for (const RootChoice& xi : root_choices(t.family)) ids.push_back({t.family, t.m, xi});
  }
  auto id_rows = parallel_map(ids.size(), cfg.sweep.workers, [&](std::size_t i) {
    const auto& t = ids[i];
    return with_family(t.family, [&](auto tag) {
      constexpr Family F = decltype(tag)::value;
      const bool factor = factor_identity_holds<F>(t.m, t.root);
      const bool product = divisor_product_identity_holds<F>(t.m, t.root);
      return Json{{"family", family_name(F)},
                  {"m", str(t.m)},
                  {"root", root_name(t.root)},
                  {"epsilon", sign_name(induced_sign<F>(t.m, t.root))},
                  {"factor_identity", factor},
                  {"divisor_product_identity", product},
                  {"pass", factor && product}};
    });
  });
  Json entries = Json::array(), identities = Json::array();
  bool pass = true;
  for (auto& r : rows) {
    for (auto& e : r) {
      pass = pass && e["pass"].get<bool>();
      entries.push_back(std::move(e));
    }
  }
  for (auto& r : id_rows) {
    pass = pass && r["pass"].get<bool>();
    identities.push_back(std::move(r));
  }
  return {{"entries", std::move(entries)}, {"identities", std::move(identities)}, {"pass", pass}};
}

inline Json lemma2_section(const ReportConfig& cfg) {
  std::vector<std::pair<Family, std::uint64_t>> grid;
  for (Family f : {Family::Suzuki, Family::ReeG2}) {
    for (std::uint64_t m = 3; m <= cfg.lemma2_max_m; ++m) {
      if (gcd(m, std::uint64_t(torus_index(f))) == 1) grid.emplace_back(f, m);
    }
  }
  auto rows = parallel_map(grid.size(), cfg.sweep.workers, [&](std::size_t i) {
    const auto [f, m] = grid[i];
    const Lemma2Result r = lemma2_evaluate(f, m);
    Json values = Json::array();
    for (const auto& v : r.values) values.push_back(str(v));
    return Json{{"family", family_name(f)},
                {"m", str(m)},
                {"largest_prime", str(r.largest_prime)},
                {"values", std::move(values)},
                {"status", lemma2_status_name(r.status)},
                {"pass", r.status != Lemma2Status::Fail}};
  });
  bool pass = true;
  Json entries = Json::array();
  for (auto& r : rows) {
    pass = pass && r["pass"].get<bool>();
    entries.push_back(std::move(r));
  }
  return {{"entries", std::move(entries)}, {"pass", pass}};
}

inline Json theorem2_section(const ReportConfig& cfg) {
  const auto records = run_theorem2_sweep(cfg.sweep);
  Json entries = Json::array();
  bool pass = true;
  std::size_t exceptions = 0;
  for (const auto& r : records) {
    pass = pass && r.ok();
    exceptions += r.exception_row();
    entries.push_back(to_json(r));
  }
  return {{"entries", std::move(entries)}, {"exception_rows", str(std::uint64_t(exceptions))}, {"pass", pass}};
}

inline Json theorem3_section(const ReportConfig& cfg, const AdjacencyData& data) {
  std::vector<GroupSpec> specs;
  for (Family f : kAllFamilies) {
    for (std::uint64_t m = 3; m <= cfg.theorem3_max_m; m += 2) {
      for (std::uint64_t k : divisors(m)) {
        if (k > 1) specs.push_back({f, m, k});
      }
    }
  }
  auto rows = parallel_map(specs.size(), cfg.sweep.workers, [&](std::size_t i) {
    const IndependenceReport r = theorem3_evaluate(specs[i], data);
    Json j = {{"family", family_name(specs[i].family)},
              {"m", str(specs[i].m)},
              {"ext", str(specs[i].ext)},
              {"t", str(r.t)},
              {"t2", str(r.t2)},
              {"t_simple", str(r.t_simple)},
              {"t2_simple", str(r.t2_simple)},
              {"case", theorem3_case_name(r.theorem3_case)},
              {"pi_grows", r.pi_grows},
              {"pass", theorem3_consistent(specs[i], r)}};
    return j;
  });
  bool pass = true;
  Json entries = Json::array();
  for (auto& r : rows) {
    pass = pass && r["pass"].get<bool>();
    entries.push_back(std::move(r));
  }
  return {{"entries", std::move(entries)}, {"pass", pass}};
}

inline Json build_report(const ReportConfig& cfg, const AdjacencyData& data = default_adjacency()) {
  Json doc = {{"format", "suzree-report"},
              {"version", "1"},
              {"lemma1", lemma1_section(cfg)},
              {"lemma2", lemma2_section(cfg)},
              {"theorem2", theorem2_section(cfg)},
              {"theorem3", theorem3_section(cfg, data)}};
  doc["pass"] = doc["lemma1"]["pass"].get<bool>() && doc["lemma2"]["pass"].get<bool>() &&
                doc["theorem2"]["pass"].get<bool>() && doc["theorem3"]["pass"].get<bool>();
  return doc;
}

inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace suzree
