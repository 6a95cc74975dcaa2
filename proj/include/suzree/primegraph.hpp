#pragma once

// Gruenberg-Kegel prime graphs of the simple Suzuki-Ree groups, their
// independence numbers, and the evaluator for almost simple extensions
// L < G <= Aut L.
//
// Primes of |L| are grouped into classes, each the odd-prime support of a
// torus-order factor (plus singleton classes for 2 and 3). Every class is a
// clique, so an independent set takes at most one prime per class and t(L)
// is an independence number of the class graph. Classes whose factor is 1
// for the given m are dropped.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suzree/adjacency_data.hpp"
#include "suzree/arith.hpp"
#include "suzree/aurifeuille.hpp"
#include "suzree/errors.hpp"
#include "suzree/independence.hpp"

namespace suzree {

/// L = 2B2(2^m), 2G2(3^m) or 2F4(2^m); ext is the order k of G/L inside the
/// cyclic group Out(L) of order m (k = 1 is L itself).
struct GroupSpec {
  Family family = Family::Suzuki;
  std::uint64_t m = 3;
  std::uint64_t ext = 1;

  void validate() const {
    if (m <= 1 || m % 2 == 0) throw DomainError("group spec: m must be odd and greater than 1");
    if (ext == 0 || m % ext != 0) throw DomainError("group spec: ext must divide m");
  }
};

/// A vertex of GK(L): a prime, or a composite cofactor that could not be
/// factored within budget. Such a cofactor stands for all its primes, which lie
/// in one clique class, so it never changes t or t(2).
struct Vertex {
  Nat value;
  bool prime = true;

  std::string to_string() const { return prime ? value.get_str() : "C" + value.get_str(); }

  friend bool operator==(const Vertex& a, const Vertex& b) { return a.value == b.value && a.prime == b.prime; }
  friend bool operator<(const Vertex& a, const Vertex& b) {
    return a.value != b.value ? a.value < b.value : a.prime > b.prime;
  }
};

struct ClassDefinition {
  std::string label;
  Nat defining;  // torus-derived integer
  Nat support;   // defining with 2 and/or 3 removed where the class excludes them
};

/// The class-defining integers, in the documented label order, for every m.
inline std::vector<ClassDefinition> class_definitions(Family f, std::uint64_t m) {
  const Nat q = pow(Nat(field_base(f)), m);
  const Nat psi_plus = psi_eval(f, Sign::Plus, m), psi_minus = psi_eval(f, Sign::Minus, m);
  std::vector<ClassDefinition> out;
  auto add = [&](std::string label, Nat defining, Nat support) {
    out.push_back({std::move(label), std::move(defining), std::move(support)});
  };
  switch (f) {
    case Family::Suzuki:
      add("CHAR", 4, 2);
      add("R1", q - 1, q - 1);
      add("R4P", psi_plus, psi_plus);
      add("R4M", psi_minus, psi_minus);
      break;
    case Family::ReeG2:
      add("CHAR", 3, 3);
      add("TWO", 2, 2);
      add("R1", q - 1, strip_factor(q - 1, 2));
      add("R2", q + 1, strip_factor(q + 1, 2));
      add("R6P", psi_plus, psi_plus);
      add("R6M", psi_minus, psi_minus);
      break;
    case Family::ReeF4:
      add("CHAR", 2, 2);
      add("THREE", 3, 3);
      add("R1", q - 1, q - 1);
      add("R2", q + 1, strip_factor(q + 1, 3));
      add("R4", q * q + 1, q * q + 1);
      add("R6", q * q - q + 1, strip_factor(q * q - q + 1, 3));
      add("R12P", psi_plus, psi_plus);
      add("R12M", psi_minus, psi_minus);
      break;
  }
  return out;
}

/// |L| from the standard order formulas.
inline Nat group_order(Family f, std::uint64_t m) {
  const Nat q = pow(Nat(field_base(f)), m);
  switch (f) {
    case Family::Suzuki:
      return pow(q, 2) * (pow(q, 2) + 1) * (q - 1);
    case Family::ReeG2:
      return pow(q, 3) * (pow(q, 3) + 1) * (q - 1);
    case Family::ReeF4:
      return pow(q, 12) * (pow(q, 6) + 1) * (pow(q, 4) - 1) * (pow(q, 3) + 1) * (q - 1);
  }
  throw std::logic_error("unknown family");
}

/// Class graph of GK(L) restricted to the nonempty classes; needs no factoring.
inline ClassGraph class_structure(const GroupSpec& spec, const AdjacencyData& data = default_adjacency()) {
  spec.validate();
  const ClassGraph& full = data.at(spec.family).graph;
  std::vector<std::size_t> keep;
  const auto defs = class_definitions(spec.family, spec.m);
  for (std::size_t i = 0; i < defs.size(); ++i) {
    if (defs[i].support > 1) keep.push_back(i);
  }
  ClassGraph out;
  for (std::size_t i : keep) out.labels.push_back(full.labels[i]);
  out.adjacent.assign(keep.size(), std::vector<bool>(keep.size(), false));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) out.adjacent[a][b] = full.adjacent[keep[a]][keep[b]];
  }
  return out;
}

struct PrimeClass {
  std::string label;
  Nat defining;
  Nat support;
  std::vector<Vertex> vertices;  // ascending
};

struct GKGraph {
  Family family = Family::Suzuki;
  std::uint64_t m = 3;
  std::vector<PrimeClass> classes;  // nonempty classes, documented order
  ClassGraph class_graph;           // over the labels of `classes`

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (const auto& c : classes) out.insert(out.end(), c.vertices.begin(), c.vertices.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<std::size_t> class_of(const Vertex& v) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (std::find(classes[i].vertices.begin(), classes[i].vertices.end(), v) != classes[i].vertices.end()) return i;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> class_of_prime(const Nat& p) const { return class_of(Vertex{p, true}); }

  bool adjacent(const Vertex& a, const Vertex& b) const {
    if (a == b) return false;
    const auto ca = class_of(a), cb = class_of(b);
    if (!ca || !cb) throw DomainError("adjacent: vertex not in graph");
    return *ca == *cb || class_graph.adjacent[*ca][*cb];
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    const auto vs = vertices();
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (adjacent(vs[i], vs[j])) out.emplace_back(vs[i], vs[j]);
      }
    }
    return out;
  }
};

/// Maximal element orders of 2B2(q): 4, q - 1, q ± sqrt(2q) + 1.
inline std::vector<Nat> suzuki_spectrum_generators(std::uint64_t m) {
  const Nat q = pow(Nat(2), m);
  return {Nat(4), q - 1, psi_eval(Family::Suzuki, Sign::Minus, m), psi_eval(Family::Suzuki, Sign::Plus, m)};
}

namespace detail {

// Two distinct primes of 2B2(q) are adjacent iff their product divides a
// maximal element order. The class data must reproduce that relation.
inline void check_suzuki_spectrum(const GKGraph& g) {
  const auto gens = suzuki_spectrum_generators(g.m);
  const auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].prime) continue;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!vs[j].prime) continue;
      const Nat product = vs[i].value * vs[j].value;
      const bool spectral = std::any_of(gens.begin(), gens.end(), [&](const Nat& x) { return x % product == 0; });
      if (spectral != g.adjacent(vs[i], vs[j]))
        throw DataValidationError("SUZUKI class data disagrees with the spectrum at " + vs[i].to_string() + "-" +
                                  vs[j].to_string());
    }
  }
}

}  // namespace detail

inline std::vector<Vertex> factor_vertices(const Nat& n, std::uint64_t budget) {
  std::vector<Vertex> out;
  if (n <= 1) return out;
  const Factorization fz = factorize_partial(n, budget);
  for (const auto& pp : fz.factors) out.push_back({pp.prime, true});
  for (const auto& c : fz.unfactored) out.push_back({c, false});
  std::sort(out.begin(), out.end());
  return out;
}

/// GK(L) for ext = 1.
inline GKGraph build_gk(const GroupSpec& spec, const AdjacencyData& data = default_adjacency(),
                        std::uint64_t budget = kDefaultBudget) {
  spec.validate();
  if (spec.ext != 1) throw DomainError("build_gk: only the simple group (ext = 1) has a stored graph");
  GKGraph g;
  g.family = spec.family;
  g.m = spec.m;
  g.class_graph = class_structure(spec, data);
  for (auto& def : class_definitions(spec.family, spec.m)) {
    if (def.support <= 1) continue;
    PrimeClass c{def.label, def.defining, def.support, factor_vertices(def.support, budget)};
    g.classes.push_back(std::move(c));
  }
  if (spec.family == Family::Suzuki) detail::check_suzuki_spectrum(g);
  return g;
}

/// π(G) = π(L) ∪ π(ext), with π(L) taken from the class supports.
inline std::vector<Vertex> pi_of_group(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget) {
  spec.validate();
  std::vector<Vertex> out;
  for (const auto& def : class_definitions(spec.family, spec.m)) {
    const auto vs = factor_vertices(def.support, budget);
    out.insert(out.end(), vs.begin(), vs.end());
  }
  for (const auto& [p, e] : small_factorize(spec.ext)) out.push_back({Nat(p), true});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

enum class Theorem3Case { Simple, A, B, C, D };

inline constexpr std::string_view theorem3_case_name(Theorem3Case c) {
  switch (c) {
    case Theorem3Case::Simple:
      return "simple";
    case Theorem3Case::A:
      return "a";
    case Theorem3Case::B:
      return "b";
    case Theorem3Case::C:
      return "c";
    case Theorem3Case::D:
      return "d";
  }
  return "?";
}

struct IndependenceReport {
  int t = 0;
  int t2 = 0;
  std::vector<std::vector<std::string>> max_class_sets;      // all of size t
  std::vector<std::vector<std::string>> max_class_sets_two;  // all of size t2 containing 2
  std::vector<std::vector<Vertex>> witness_sets;             // prime-level expansion of max_class_sets
  bool witness_sets_truncated = false;
  Theorem3Case theorem3_case = Theorem3Case::Simple;
  bool pi_grows = false;  // π(G) not contained in π(L)
  int t_simple = 0;       // t(L) and t(2, L), equal to t, t2 for ext = 1
  int t2_simple = 0;
};

inline constexpr std::size_t kMaxWitnessSets = 256;

namespace detail {

inline void expand_witnesses(const GKGraph& g, std::uint32_t mask, IndependenceReport& out) {
  std::vector<const PrimeClass*> picked;
  for (std::size_t i = 0; i < g.classes.size(); ++i) {
    if (mask >> i & 1u) picked.push_back(&g.classes[i]);
  }
  std::vector<std::size_t> pos(picked.size(), 0);
  for (;;) {
    if (out.witness_sets.size() >= kMaxWitnessSets) {
      out.witness_sets_truncated = true;
      return;
    }
    std::vector<Vertex> set;
    for (std::size_t k = 0; k < picked.size(); ++k) set.push_back(picked[k]->vertices[pos[k]]);
    std::sort(set.begin(), set.end());
    out.witness_sets.push_back(std::move(set));
    std::size_t k = 0;
    while (k < picked.size() && ++pos[k] == picked[k]->vertices.size()) pos[k++] = 0;
    if (k == picked.size()) return;
  }
}

}  // namespace detail

inline IndependenceReport independence_number(const GKGraph& g) {
  IndependenceReport out;
  const MaxIndependent all = max_independent_sets(g.class_graph);
  const MaxIndependent two = max_independent_sets(g.class_graph, g.class_graph.index_of(two_label(g.family)));
  out.t = out.t_simple = all.size;
  out.t2 = out.t2_simple = two.size;
  for (std::uint32_t mask : all.sets) {
    out.max_class_sets.push_back(mask_labels(g.class_graph, mask));
    detail::expand_witnesses(g, mask, out);
  }
  for (std::uint32_t mask : two.sets) out.max_class_sets_two.push_back(mask_labels(g.class_graph, mask));
  return out;
}

/// Largest independent set containing the vertex p.
inline int independence_with_vertex(const GKGraph& g, const Nat& p) {
  const auto c = g.class_of_prime(p);
  if (!c) throw DomainError("independence_with_vertex: " + p.get_str() + " is not a vertex");
  return max_independent_sets(g.class_graph, *c).size;
}

/// t(G), t(2, G) for L < G <= Aut L by the case analysis (a)-(d):
///   SUZUKI  m = 5: t and t(2) drop by one (b); otherwise unchanged (a).
///   REE_G2  3 | ext and π(G) = π(L): t drops by one (d); otherwise (a).
///   REE_F4  m > 3 and π(G) ⊄ π(L): t grows by one (c); otherwise (a).
/// "p in π(L)" is exact divisibility of |L| by p.
inline IndependenceReport theorem3_evaluate(const GroupSpec& spec, const AdjacencyData& data = default_adjacency()) {
  spec.validate();
  if (spec.ext == 1) throw DomainError("theorem3_evaluate: ext must be greater than 1");
  IndependenceReport out;
  const ClassGraph simple = class_structure(spec, data);
  out.t_simple = max_independent_sets(simple).size;
  out.t2_simple = max_independent_sets(simple, simple.index_of(two_label(spec.family))).size;

  const Nat order = group_order(spec.family, spec.m);
  for (const auto& [p, e] : small_factorize(spec.ext)) {
    if (!mpz_divisible_ui_p(order.get_mpz_t(), p)) out.pi_grows = true;
  }

  out.t = out.t_simple;
  out.t2 = out.t2_simple;
  out.theorem3_case = Theorem3Case::A;
  switch (spec.family) {
    case Family::Suzuki:
      if (spec.m == 5) {
        out.theorem3_case = Theorem3Case::B;
        out.t -= 1;
        out.t2 -= 1;
      }
      break;
    case Family::ReeG2:
      if (spec.ext % 3 == 0 && !out.pi_grows) {
        out.theorem3_case = Theorem3Case::D;
        out.t -= 1;
      }
      break;
    case Family::ReeF4:
      if (spec.m > 3 && out.pi_grows) {
        out.theorem3_case = Theorem3Case::C;
        out.t += 1;
      }
      break;
  }
  return out;
}

}  // namespace suzree
