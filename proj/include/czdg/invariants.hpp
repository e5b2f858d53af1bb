#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "czdg/graph.hpp"

namespace czdg {

// Distance sentinel for unreachable pairs. Large enough to sort after every
// real distance, small enough to add once without overflow.
inline constexpr int kUnreachable = 1 << 29;

struct DistanceMatrix {
  int n = 0;
  std::vector<int> d;  // row-major n*n
  int at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
};

// BFS from every vertex, O(n*(n+m)).
DistanceMatrix all_pairs_distances(const SimpleGraph& g);

// Graph invariant value that may be undefined (empty graph) or infinite.
struct ExtValue {
  enum class Kind { Undefined, Finite, Infinite };
  Kind kind = Kind::Undefined;
  int value = 0;

  static ExtValue undefined() { return {Kind::Undefined, 0}; }
  static ExtValue finite(int v) { return {Kind::Finite, v}; }
  static ExtValue infinite() { return {Kind::Infinite, 0}; }

  bool is_finite() const { return kind == Kind::Finite; }
  bool operator==(const ExtValue&) const = default;
  std::string str() const;  // "undefined" | "infinity" | decimal
};

ExtValue diameter(const SimpleGraph& g);
ExtValue girth(const SimpleGraph& g);

// Sorted multiset of distances from v to the probe set; kUnreachable entries
// sort after all finite distances.
using MultisetSignature = std::vector<int>;

MultisetSignature multiset_signature(const DistanceMatrix& dm,
                                     const std::vector<int>& probe, int v);
MultisetSignature multiset_signature(const SimpleGraph& g,
                                     const std::vector<int>& probe, int v);

// True iff distinct vertices receive distinct multiset signatures w.r.t. probe.
bool is_m_resolving(const SimpleGraph& g, const std::vector<int>& probe);
bool is_m_resolving(const DistanceMatrix& dm, const std::vector<int>& probe);

struct MdimOptions {
  std::uint64_t subset_limit = std::uint64_t{1} << 24;
};

struct MdimResult {
  ExtValue dim;
  // Lexicographically first minimum resolving set when dim = Finite(k), k >= 1.
  std::vector<int> witness;
};

// Exact multiset dimension: empty graph -> Undefined, single vertex ->
// Finite(0), otherwise subsets of sizes 1..n in lexicographic order; Infinite
// only after exhausting all of them (resolving sets are not closed under
// supersets, so no pruning by monotonicity).
MdimResult multiset_dimension(const SimpleGraph& g, const MdimOptions& opt = {});

// Classical metric dimension (ordered distance vectors), same enumeration.
ExtValue metric_dimension(const SimpleGraph& g, const MdimOptions& opt = {});

// Degree-sequence prefilter plus backtracking; graphs up to 16 vertices.
bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h);

struct GraphClass {
  bool empty = false;
  bool single_vertex = false;
  bool path = false;
  bool cycle = false;
  bool complete = false;
  bool star = false;
  bool complete_bipartite = false;
  int part_small = 0, part_large = 0;  // valid when complete_bipartite
  std::vector<std::string> tags() const;
};

GraphClass classify_named(const SimpleGraph& g);

}  // namespace czdg
