#include "czdg/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "czdg/errors.hpp"

namespace czdg {

std::string ExtValue::str() const {
  switch (kind) {
    case Kind::Undefined: return "undefined";
    case Kind::Infinite: return "infinity";
    case Kind::Finite: return std::to_string(value);
  }
  return "undefined";
}

DistanceMatrix all_pairs_distances(const SimpleGraph& g) {
  const int n = g.vertex_count();
  DistanceMatrix dm;
  dm.n = n;
  dm.d.assign(static_cast<std::size_t>(n) * n, kUnreachable);
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    int* dist = dm.d.data() + static_cast<std::size_t>(s) * n;
    dist[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      g.neighbors(u).for_each([&](int v) {
        if (dist[v] == kUnreachable) {
          dist[v] = dist[u] + 1;
          queue[tail++] = v;
        }
      });
    }
  }
  return dm;
}

ExtValue diameter(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return ExtValue::undefined();
  DistanceMatrix dm = all_pairs_distances(g);
  int best = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int d = dm.at(u, v);
      if (d == kUnreachable) return ExtValue::infinite();
      best = std::max(best, d);
    }
  return ExtValue::finite(best);
}

ExtValue girth(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return ExtValue::undefined();
  int best = kUnreachable;
  std::vector<int> dist(n), parent(n), queue(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      if (2 * dist[u] >= best) continue;  // cannot improve from here
      g.neighbors(u).for_each([&](int v) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue[tail++] = v;
        } else if (v != parent[u]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      });
    }
  }
  if (best == kUnreachable) return ExtValue::infinite();
  return ExtValue::finite(best);
}

MultisetSignature multiset_signature(const DistanceMatrix& dm,
                                     const std::vector<int>& probe, int v) {
  MultisetSignature sig;
  sig.reserve(probe.size());
  for (int b : probe) sig.push_back(dm.at(v, b));
  std::sort(sig.begin(), sig.end());
  return sig;
}

MultisetSignature multiset_signature(const SimpleGraph& g,
                                     const std::vector<int>& probe, int v) {
  return multiset_signature(all_pairs_distances(g), probe, v);
}

namespace {

// Scratch space for repeated resolving-set tests: signatures laid out
// contiguously so comparisons avoid per-subset allocation. Probe sets of up
// to 8 vertices on graphs of order <= 255 pack a whole signature into one
// 64-bit key (unreachable clamps to 255, above every finite distance).
struct SignatureScratch {
  std::vector<int> flat;
  std::vector<int> order;
  std::vector<std::uint64_t> keys;

  // multiset variant: rows sorted ascending before comparison
  bool multiset_distinct(const DistanceMatrix& dm, const int* subset, int k) {
    return distinct(dm, subset, k, /*sort_rows=*/true);
  }
  bool vector_distinct(const DistanceMatrix& dm, const int* subset, int k) {
    return distinct(dm, subset, k, /*sort_rows=*/false);
  }

 private:
  bool distinct_packed(const DistanceMatrix& dm, const int* subset, int k,
                       bool sort_rows) {
    const int n = dm.n;
    keys.resize(n);
    for (int v = 0; v < n; ++v) {
      unsigned char row[8];
      for (int i = 0; i < k; ++i) {
        int d = dm.at(v, subset[i]);
        row[i] = d >= 255 ? 255 : static_cast<unsigned char>(d);
      }
      if (sort_rows) {
        for (int i = 1; i < k; ++i) {
          unsigned char x = row[i];
          int j = i - 1;
          while (j >= 0 && row[j] > x) {
            row[j + 1] = row[j];
            --j;
          }
          row[j + 1] = x;
        }
      }
      std::uint64_t key = 0;
      for (int i = 0; i < k; ++i) key = key << 8 | row[i];
      keys[v] = key;
    }
    if (n <= 16) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (keys[a] == keys[b]) return false;
      return true;
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
  }

  bool distinct(const DistanceMatrix& dm, const int* subset, int k,
                bool sort_rows) {
    const int n = dm.n;
    if (k <= 8 && n <= 255) return distinct_packed(dm, subset, k, sort_rows);
    flat.resize(static_cast<std::size_t>(n) * k);
    for (int v = 0; v < n; ++v) {
      int* row = flat.data() + static_cast<std::size_t>(v) * k;
      for (int i = 0; i < k; ++i) row[i] = dm.at(v, subset[i]);
      if (sort_rows) std::sort(row, row + k);
    }
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    const int* base = flat.data();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::lexicographical_compare(base + static_cast<std::size_t>(a) * k,
                                          base + static_cast<std::size_t>(a) * k + k,
                                          base + static_cast<std::size_t>(b) * k,
                                          base + static_cast<std::size_t>(b) * k + k);
    });
    for (int i = 0; i + 1 < n; ++i) {
      const int* ra = base + static_cast<std::size_t>(order[i]) * k;
      const int* rb = base + static_cast<std::size_t>(order[i + 1]) * k;
      if (std::equal(ra, ra + k, rb)) return false;
    }
    return true;
  }
};

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_m_resolving(const DistanceMatrix& dm, const std::vector<int>& probe) {
  SignatureScratch scratch;
  return scratch.multiset_distinct(dm, probe.data(),
                                   static_cast<int>(probe.size()));
}

bool is_m_resolving(const SimpleGraph& g, const std::vector<int>& probe) {
  DistanceMatrix dm = all_pairs_distances(g);
  return is_m_resolving(dm, probe);
}

MdimResult multiset_dimension(const SimpleGraph& g, const MdimOptions& opt) {
  const int n = g.vertex_count();
  if (n == 0) return {ExtValue::undefined(), {}};
  if (n == 1) return {ExtValue::finite(0), {}};
  DistanceMatrix dm = all_pairs_distances(g);
  SignatureScratch scratch;
  std::uint64_t used = 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      if (++used > opt.subset_limit)
        throw ResourceLimitError(
            "multiset-dimension subset limit exceeded (finished sizes up to " +
                std::to_string(k - 1) + ")",
            k - 1);
      if (scratch.multiset_distinct(dm, comb.data(), k))
        return {ExtValue::finite(k), comb};
    } while (next_combination(comb, n));
  }
  return {ExtValue::infinite(), {}};
}

ExtValue metric_dimension(const SimpleGraph& g, const MdimOptions& opt) {
  const int n = g.vertex_count();
  if (n == 0) return ExtValue::undefined();
  if (n == 1) return ExtValue::finite(0);
  DistanceMatrix dm = all_pairs_distances(g);
  SignatureScratch scratch;
  std::uint64_t used = 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      if (++used > opt.subset_limit)
        throw ResourceLimitError(
            "metric-dimension subset limit exceeded (finished sizes up to " +
                std::to_string(k - 1) + ")",
            k - 1);
      if (scratch.vector_distinct(dm, comb.data(), k)) return ExtValue::finite(k);
    } while (next_combination(comb, n));
  }
  // The full vertex set always resolves with ordered vectors.
  return ExtValue::finite(n);
}

namespace {

bool iso_backtrack(const SimpleGraph& g, const SimpleGraph& h,
                   const std::vector<int>& order, std::vector<int>& map,
                   std::vector<bool>& used, std::size_t depth) {
  if (depth == order.size()) return true;
  int u = order[depth];
  for (int cand = 0; cand < h.vertex_count(); ++cand) {
    if (used[cand] || g.degree(u) != h.degree(cand)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      int w = order[i];
      if (g.has_edge(u, w) != h.has_edge(cand, map[w])) ok = false;
    }
    if (!ok) continue;
    map[u] = cand;
    used[cand] = true;
    if (iso_backtrack(g, h, order, map, used, depth + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.vertex_count() > 16 || h.vertex_count() > 16)
    throw SizeLimitError("isomorphism search limited to 16 vertices");
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  {
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return dg[a] > dg[b]; });
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  return iso_backtrack(g, h, order, map, used, 0);
}

std::vector<std::string> GraphClass::tags() const {
  std::vector<std::string> out;
  if (empty) out.push_back("empty");
  if (single_vertex) out.push_back("single-vertex");
  if (path) out.push_back("path");
  if (cycle) out.push_back("cycle");
  if (complete) out.push_back("complete");
  if (complete_bipartite)
    out.push_back("complete-bipartite(" + std::to_string(part_small) + "," +
                  std::to_string(part_large) + ")");
  if (star) out.push_back("star");
  return out;
}

GraphClass classify_named(const SimpleGraph& g) {
  GraphClass c;
  const int n = g.vertex_count();
  if (n == 0) {
    c.empty = true;
    return c;
  }
  c.single_vertex = (n == 1);

  const int m = g.edge_count();
  // connectivity + bipartition in one BFS
  std::vector<int> color(n, -1), queue;
  queue.push_back(0);
  color[0] = 0;
  bool bipartite = true;
  std::size_t head = 0;
  int seen = 1;
  while (head < queue.size()) {
    int u = queue[head++];
    g.neighbors(u).for_each([&](int v) {
      if (color[v] < 0) {
        color[v] = color[u] ^ 1;
        queue.push_back(v);
        ++seen;
      } else if (color[v] == color[u]) {
        bipartite = false;
      }
    });
  }
  const bool connected = (seen == n);

  int maxdeg = 0, mindeg = n;
  for (int v = 0; v < n; ++v) {
    maxdeg = std::max(maxdeg, g.degree(v));
    mindeg = std::min(mindeg, g.degree(v));
  }

  c.path = connected && m == n - 1 && maxdeg <= 2;
  c.cycle = connected && n >= 3 && mindeg == 2 && maxdeg == 2;
  c.complete = (mindeg == n - 1);
  if (connected && bipartite && n >= 2) {
    int a = 0;
    for (int v = 0; v < n; ++v) a += (color[v] == 0);
    int b = n - a;
    if (a > 0 && b > 0 && m == a * b) {
      c.complete_bipartite = true;
      c.part_small = std::min(a, b);
      c.part_large = std::max(a, b);
      c.star = (c.part_small == 1);
    }
  }
  return c;
}

}  // namespace czdg
