#include "czdg/czdg.hpp"

#include <algorithm>
#include <unordered_map>

#include "czdg/errors.hpp"

namespace czdg {

ClassPartition annihilator_classes(const RingPtr& r) {
  ClassPartition out;
  out.ring = r;
  const int n = r->order();
  out.class_of.assign(n, -1);

  ElementSet zstar = nonzero_zero_divisors(r);
  const int zero = r->zero();

  std::unordered_map<Bitset, int, BitsetHash> by_ann;
  zstar.members.for_each([&](int x) {
    Bitset ann(n);
    for (int y = 0; y < n; ++y)
      if (r->mul(x, y) == zero) ann.set(y);
    auto it = by_ann.find(ann);
    int cls;
    if (it == by_ann.end()) {
      cls = static_cast<int>(out.classes.size());
      by_ann.emplace(ann, cls);
      out.classes.push_back({x, {x}, std::move(ann)});
    } else {
      cls = it->second;
      out.classes[cls].members.push_back(x);
    }
    out.class_of[x] = cls;
  });

  // for_each walks ascending element indices, so members are already sorted
  // and the first member is the smallest; order classes by representative
  std::vector<int> perm(out.classes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return out.classes[a].representative < out.classes[b].representative;
  });
  std::vector<AnnClass> sorted;
  std::vector<int> newid(out.classes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    newid[perm[i]] = static_cast<int>(i);
    sorted.push_back(std::move(out.classes[perm[i]]));
  }
  out.classes = std::move(sorted);
  for (int x = 0; x < n; ++x)
    if (out.class_of[x] >= 0) out.class_of[x] = newid[out.class_of[x]];
  return out;
}

SimpleGraph zero_divisor_graph(const RingPtr& r) {
  ElementSet zstar = nonzero_zero_divisors(r);
  std::vector<int> verts = zstar.indices();
  SimpleGraph g(static_cast<int>(verts.size()), GraphKind::Zdg);
  for (std::size_t i = 0; i < verts.size(); ++i) g.set_label(static_cast<int>(i), r->label(verts[i]));
  const int zero = r->zero();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (r->mul(verts[i], verts[j]) == zero)
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

SimpleGraph compressed_graph(const ClassPartition& partition) {
  const RingPtr& r = partition.ring;
  const int zero = r->zero();
  const int k = static_cast<int>(partition.classes.size());
  SimpleGraph g(k, GraphKind::Czdg);
  for (int i = 0; i < k; ++i)
    g.set_label(i, r->label(partition.classes[i].representative));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool edge =
          r->mul(partition.classes[i].representative,
                 partition.classes[j].representative) == zero;
      // the product-vanishing relation must not depend on the chosen members
      for (int a : partition.classes[i].members)
        for (int b : partition.classes[j].members)
          if ((r->mul(a, b) == zero) != edge)
            throw InternalError(
                "compressed edge relation differs across class members");
      if (edge) g.add_edge(i, j);
    }
  return g;
}

std::optional<SimpleGraph> compressed_graph(const RingPtr& r) {
  if (is_integral_domain(*r)) return std::nullopt;
  return compressed_graph(annihilator_classes(r));
}

}  // namespace czdg
