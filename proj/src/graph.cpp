#include "czdg/graph.hpp"

#include <cassert>
#include <string>

namespace czdg {

SimpleGraph::SimpleGraph(int n, GraphKind kind) : n_(n), kind_(kind) {
  adj_.assign(n, Bitset(n));
  labels_.resize(n);
  for (int i = 0; i < n; ++i) labels_[i] = std::to_string(i);
}

void SimpleGraph::add_edge(int u, int v) {
  assert(u != v && u >= 0 && v >= 0 && u < n_ && v < n_);
  adj_[u].set(v);
  adj_[v].set(u);
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += adj_[v].count();
  return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  assert(n >= 3);
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph complete_bipartite_graph(int m, int n) {
  SimpleGraph g(m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
  return g;
}

SimpleGraph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

}  // namespace czdg
