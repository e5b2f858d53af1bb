#pragma once

#include <optional>
#include <vector>

#include "czdg/graph.hpp"
#include "czdg/ring.hpp"

namespace czdg {

struct AnnClass {
  int representative = 0;        // smallest member index
  std::vector<int> members;      // ascending
  Bitset annihilator;
};

// Annihilator-equivalence classes of Z*(R): two elements share a class iff
// their annihilators are equal. The zero class and the unit class never
// appear because the domain is Z*(R).
struct ClassPartition {
  RingPtr ring;
  std::vector<AnnClass> classes;  // sorted by representative
  std::vector<int> class_of;      // element -> class id, -1 off Z*(R)
};

ClassPartition annihilator_classes(const RingPtr& r);

// Vertices Z*(R) in index order; edge {x,y} iff x != y and xy = 0.
SimpleGraph zero_divisor_graph(const RingPtr& r);

// Compressed graph on annihilator classes; edge iff the representative
// product vanishes. Checks that vanishing is constant across all member
// pairs of the two classes (InternalError otherwise). Returns nullopt iff
// R is an integral domain (the graph is undefined, not empty).
std::optional<SimpleGraph> compressed_graph(const RingPtr& r);
SimpleGraph compressed_graph(const ClassPartition& partition);

}  // namespace czdg
