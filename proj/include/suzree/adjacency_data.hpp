#pragma once

// Class-adjacency data for the prime graphs of the simple Suzuki-Ree groups.
//
// File layout (schema_version 1): an object with "families", one record per
// family holding "labels" in the documented order, "adjacency" as the
// row-major upper-triangular 0/1 list over those labels, and
// "externally_sourced", the label pairs whose value is not forced by the
// independent-set characterizations and comes from the literature.
//
// Every load is validated; DataValidationError is raised on any mismatch.

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "suzree/aurifeuille.hpp"
#include "suzree/errors.hpp"
#include "suzree/independence.hpp"

namespace suzree {

inline constexpr int kAdjacencySchemaVersion = 1;

inline const std::vector<std::string>& class_labels(Family f) {
  static const std::vector<std::string> suzuki = {"CHAR", "R1", "R4P", "R4M"};
  static const std::vector<std::string> g2 = {"CHAR", "TWO", "R1", "R2", "R6P", "R6M"};
  static const std::vector<std::string> f4 = {"CHAR", "THREE", "R1", "R2", "R4", "R6", "R12P", "R12M"};
  switch (f) {
    case Family::Suzuki:
      return suzuki;
    case Family::ReeG2:
      return g2;
    case Family::ReeF4:
      return f4;
  }
  throw std::logic_error("unknown family");
}

/// Label of the class {2}.
inline std::string two_label(Family f) { return f == Family::ReeG2 ? "TWO" : "CHAR"; }

struct FamilyAdjacency {
  Family family = Family::Suzuki;
  ClassGraph graph;
  std::set<std::pair<std::string, std::string>> externally_sourced;  // ordered by label position
  std::string source;
};

struct AdjacencyData {
  int schema_version = kAdjacencySchemaVersion;
  std::map<Family, FamilyAdjacency> families;

  const FamilyAdjacency& at(Family f) const {
    auto it = families.find(f);
    if (it == families.end()) throw DataValidationError("no adjacency record for " + std::string(family_name(f)));
    return it->second;
  }
};

namespace detail {

struct ForcedEntry {
  std::string_view a, b;
  bool adjacent;
};

// Entries implied by the independent-set characterizations alone.
inline std::vector<ForcedEntry> forced_entries(Family f) {
  switch (f) {
    case Family::Suzuki:
      // Four classes, t = t(2) = 4 with one prime from each.
      return {{"CHAR", "R1", false}, {"CHAR", "R4P", false}, {"CHAR", "R4M", false},
              {"R1", "R4P", false},  {"R1", "R4M", false},   {"R4P", "R4M", false}};
    case Family::ReeG2:
      // {3, r1, r2, r6+, r6-} independent; {2, r6+, r6-} the only 3-sets with 2.
      return {{"CHAR", "TWO", true},  {"CHAR", "R1", false}, {"CHAR", "R2", false}, {"CHAR", "R6P", false},
              {"CHAR", "R6M", false}, {"TWO", "R1", true},   {"TWO", "R2", true},   {"TWO", "R6P", false},
              {"TWO", "R6M", false},  {"R1", "R2", false},   {"R1", "R6P", false},  {"R1", "R6M", false},
              {"R2", "R6P", false},   {"R2", "R6M", false},  {"R6P", "R6M", false}};
    case Family::ReeF4: {
      // {r2, r4, r6, r12+, r12-} the only 5-sets; {2, r6, r12+, r12-} the only
      // 4-sets with 2; r12 classes isolated.
      std::vector<ForcedEntry> out = {{"CHAR", "THREE", true}, {"CHAR", "R1", true}, {"CHAR", "R2", true},
                                      {"CHAR", "R4", true},    {"CHAR", "R6", false}, {"R2", "R4", false},
                                      {"R2", "R6", false},     {"R4", "R6", false},  {"R12P", "R12M", false}};
      for (std::string_view other : {"CHAR", "THREE", "R1", "R2", "R4", "R6"}) {
        out.push_back({other, "R12P", false});
        out.push_back({other, "R12M", false});
      }
      return out;
    }
  }
  throw std::logic_error("unknown family");
}

struct ExpectedShape {
  int t;
  int t2;
  std::vector<std::vector<std::string>> max_sets;       // exact list, each sorted by label position
  std::vector<std::vector<std::string>> max_sets_two;   // exact list of t2-sets containing 2
};

inline ExpectedShape expected_shape(Family f) {
  switch (f) {
    case Family::Suzuki:
      return {4, 4, {{"CHAR", "R1", "R4P", "R4M"}}, {{"CHAR", "R1", "R4P", "R4M"}}};
    case Family::ReeG2:
      return {5, 3, {{"CHAR", "R1", "R2", "R6P", "R6M"}}, {{"TWO", "R6P", "R6M"}}};
    case Family::ReeF4:
      return {5, 4, {{"R2", "R4", "R6", "R12P", "R12M"}}, {{"CHAR", "R6", "R12P", "R12M"}}};
  }
  throw std::logic_error("unknown family");
}

inline std::string describe(const std::vector<std::vector<std::string>>& sets) {
  std::string s;
  for (const auto& set : sets) {
    s += "{";
    for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + set[i];
    s += "}";
  }
  return s;
}

inline std::vector<std::vector<std::string>> labelled(const ClassGraph& g, const MaxIndependent& mis) {
  std::vector<std::vector<std::string>> out;
  for (std::uint32_t mask : mis.sets) out.push_back(mask_labels(g, mask));
  return out;
}

inline ClassGraph without_label(const ClassGraph& g, const std::string& label) {
  ClassGraph out;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.labels[i] != label) keep.push_back(i);
  }
  for (std::size_t i : keep) out.labels.push_back(g.labels[i]);
  out.adjacent.assign(keep.size(), std::vector<bool>(keep.size(), false));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) out.adjacent[a][b] = g.adjacent[keep[a]][keep[b]];
  }
  return out;
}

inline void validate_family(const FamilyAdjacency& rec) {
  const std::string name(family_name(rec.family));
  const ClassGraph& g = rec.graph;
  auto fail = [&](const std::string& what) { throw DataValidationError(name + ": " + what); };

  if (g.labels != class_labels(rec.family)) fail("labels differ from the documented order");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.adjacent[i][i]) fail("class adjacent to itself");
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g.adjacent[i][j] != g.adjacent[j][i]) fail("matrix not symmetric");
    }
  }

  std::set<std::pair<std::string, std::string>> forced_pairs;
  for (const auto& [a, b, adjacent] : forced_entries(rec.family)) {
    const std::size_t i = *g.index_of(std::string(a)), j = *g.index_of(std::string(b));
    if (g.adjacent[i][j] != adjacent)
      fail("entry " + std::string(a) + "-" + std::string(b) + " must be " + (adjacent ? "1" : "0"));
    forced_pairs.emplace(g.labels[std::min(i, j)], g.labels[std::max(i, j)]);
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const std::pair<std::string, std::string> key{g.labels[i], g.labels[j]};
      const bool flagged = rec.externally_sourced.count(key) > 0;
      const bool forced = forced_pairs.count(key) > 0;
      if (flagged == forced)
        fail("entry " + key.first + "-" + key.second +
             (forced ? " is forced but flagged externally sourced" : " is not forced and must be flagged"));
    }
  }

  const ExpectedShape want = expected_shape(rec.family);
  const MaxIndependent all = max_independent_sets(g);
  const MaxIndependent with_two = max_independent_sets(g, g.index_of(two_label(rec.family)));
  if (all.size != want.t) fail("independence number " + std::to_string(all.size) + ", expected " + std::to_string(want.t));
  if (with_two.size != want.t2)
    fail("2-independence number " + std::to_string(with_two.size) + ", expected " + std::to_string(want.t2));
  if (labelled(g, all) != want.max_sets) fail("maximum independent sets " + describe(labelled(g, all)));
  if (labelled(g, with_two) != want.max_sets_two) fail("maximum sets with 2 " + describe(labelled(g, with_two)));

  if (rec.family == Family::ReeF4) {
    // 2F4(8): q + 1 = 9 leaves R2 empty; t = t(2) = 4 with {2, r6, r12+, r12-} maximum.
    const ClassGraph small = without_label(g, "R2");
    const MaxIndependent s_all = max_independent_sets(small);
    const MaxIndependent s_two = max_independent_sets(small, small.index_of("CHAR"));
    const std::vector<std::string> witness = {"CHAR", "R6", "R12P", "R12M"};
    const auto sets = labelled(small, s_all);
    if (s_all.size != 4 || s_two.size != 4 || std::find(sets.begin(), sets.end(), witness) == sets.end())
      fail("m = 3 structure does not give t = t(2) = 4 with {2, r6, r12+, r12-}");
  }
}

}  // namespace detail

inline void validate(const AdjacencyData& data) {
  if (data.schema_version != kAdjacencySchemaVersion)
    throw DataValidationError("unsupported schema_version " + std::to_string(data.schema_version));
  for (Family f : kAllFamilies) detail::validate_family(data.at(f));
}

inline Family parse_family_tag(std::string_view tag) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == tag) return f;
  }
  throw DataValidationError("unknown family tag '" + std::string(tag) + "'");
}

/// Parses and validates an adjacency document.
inline AdjacencyData parse_adjacency(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DataValidationError(std::string("adjacency data is not valid JSON: ") + e.what());
  }
  AdjacencyData data;
  try {
    data.schema_version = doc.at("schema_version").get<int>();
    if (data.schema_version != kAdjacencySchemaVersion)
      throw DataValidationError("unsupported schema_version " + std::to_string(data.schema_version));
    for (const auto& rec : doc.at("families")) {
      FamilyAdjacency fa;
      fa.family = parse_family_tag(rec.at("family").get<std::string>());
      fa.graph.labels = rec.at("labels").get<std::vector<std::string>>();
      const auto bits = rec.at("adjacency").get<std::vector<int>>();
      const std::size_t k = fa.graph.labels.size();
      if (bits.size() != k * (k - 1) / 2)
        throw DataValidationError(std::string(family_name(fa.family)) + ": adjacency needs " +
                                  std::to_string(k * (k - 1) / 2) + " entries, found " + std::to_string(bits.size()));
      fa.graph.adjacent.assign(k, std::vector<bool>(k, false));
      std::size_t pos = 0;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j, ++pos) {
          if (bits[pos] != 0 && bits[pos] != 1)
            throw DataValidationError(std::string(family_name(fa.family)) + ": adjacency entries must be 0 or 1");
          fa.graph.adjacent[i][j] = fa.graph.adjacent[j][i] = bits[pos] == 1;
        }
      }
      for (const auto& pair : rec.at("externally_sourced")) {
        auto a = pair.at(0).get<std::string>(), b = pair.at(1).get<std::string>();
        auto ia = fa.graph.index_of(a), ib = fa.graph.index_of(b);
        if (!ia || !ib || ia == ib)
          throw DataValidationError(std::string(family_name(fa.family)) + ": bad externally_sourced pair " + a + "-" + b);
        if (*ia > *ib) std::swap(a, b);
        fa.externally_sourced.emplace(a, b);
      }
      if (rec.contains("source")) fa.source = rec.at("source").get<std::string>();
      if (!data.families.emplace(fa.family, std::move(fa)).second)
        throw DataValidationError("duplicate record for " + rec.at("family").get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataValidationError(std::string("adjacency data does not match the schema: ") + e.what());
  }
  validate(data);
  return data;
}

inline AdjacencyData load_adjacency_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataValidationError("cannot open adjacency data file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_adjacency(buf.str());
}

/// Text of data/gk_adjacency.json, compiled in so the library runs without the file.
inline constexpr std::string_view kDefaultAdjacencyJson = R"json({
  "schema_version": 1,
  "layout": "adjacency lists the upper triangle of the class-adjacency matrix row-major over labels: (0,1), (0,2), ..., (0,k-1), (1,2), ...; 1 = adjacent",
  "families": [
    {
      "family": "SUZUKI",
      "labels": ["CHAR", "R1", "R4P", "R4M"],
      "adjacency": [0, 0, 0,
                    0, 0,
                    0],
      "externally_sourced": [],
      "source": "maximal element orders 4, q-1, q-sqrt(2q)+1, q+sqrt(2q)+1; re-derived from the spectrum when the graph is built"
    },
    {
      "family": "REE_G2",
      "labels": ["CHAR", "TWO", "R1", "R2", "R6P", "R6M"],
      "adjacency": [1, 0, 0, 0, 0,
                    1, 1, 0, 0,
                    0, 0, 0,
                    0, 0,
                    0],
      "externally_sourced": [],
      "source": "Vasil'ev-Vdovin adjacency criterion for 2G2(q); every entry forced by the independent-set characterization"
    },
    {
      "family": "REE_F4",
      "labels": ["CHAR", "THREE", "R1", "R2", "R4", "R6", "R12P", "R12M"],
      "adjacency": [1, 1, 1, 1, 0, 0, 0,
                    1, 1, 0, 1, 0, 0,
                    1, 1, 0, 0, 0,
                    0, 0, 0, 0,
                    0, 0, 0,
                    0, 0,
                    0],
      "externally_sourced": [["THREE", "R1"], ["THREE", "R2"], ["THREE", "R4"], ["THREE", "R6"],
                             ["R1", "R2"], ["R1", "R4"], ["R1", "R6"]],
      "source": "Vasil'ev-Vdovin adjacency criterion for 2F4(q); odd-odd entries from the maximal tori (q-1)^2, q^2-1, (q+1)^2, (q-1)(q+-sqrt(2q)+1), (q+-sqrt(2q)+1)^2, q^2+1, q^2-q+1, q^2+-sqrt(2q^3)+q+-sqrt(2q)+1"
    }
  ]
}
)json";

inline const AdjacencyData& default_adjacency() {
  static const AdjacencyData data = parse_adjacency(kDefaultAdjacencyJson);
  return data;
}

}  // namespace suzree
