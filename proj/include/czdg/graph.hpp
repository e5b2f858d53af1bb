#pragma once

#include <string>
#include <utility>
#include <vector>

#include "czdg/bitset.hpp"

namespace czdg {

enum class GraphKind { Zdg, Czdg, Synthetic };

// Undirected simple graph: symmetric adjacency, no loops, no multi-edges.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n, GraphKind kind = GraphKind::Synthetic);

  int vertex_count() const { return n_; }
  GraphKind kind() const { return kind_; }

  const std::string& label(int v) const { return labels_[v]; }
  void set_label(int v, std::string s) { labels_[v] = std::move(s); }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return adj_[v].count(); }
  const Bitset& neighbors(int v) const { return adj_[v]; }

  int edge_count() const;
  // Pairs (i, j) with i < j, sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  GraphKind kind_ = GraphKind::Synthetic;
  std::vector<Bitset> adj_;
  std::vector<std::string> labels_;
};

SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);  // n >= 3
SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite_graph(int m, int n);
SimpleGraph star_graph(int leaves);  // K_{1,leaves}

}  // namespace czdg
