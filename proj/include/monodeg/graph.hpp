#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace monodeg {

// Edges are unordered pairs, normalized to u < v on construction.
struct Edge {
  int u, v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on dense 0-based vertex ids.
// Immutable after construction; no self-loops, no parallel edges.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<Edge>& edges);

  static Graph complete(int n);
  static Graph path(int n);
  // Vertices on Z_n, i ~ i+s for every shift s; shifts in 1..n/2,
  // the antipodal shift n/2 (n even) yields a single matching.
  static Graph circulant(int n, const std::vector<int>& shifts);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int min_degree() const;  // 0 for the empty graph
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  int edge_index(int u, int v) const;  // -1 if absent
  std::map<int, long long> degree_multiset() const;

  // Spanning subgraph keeping only the edges with both ends in `keep`
  // (vertex ids unchanged).
  Graph edges_within(const std::vector<int>& keep) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::uint64_t, int> index_;
};

// A graph plus a total edge coloring with colors 0..num_colors-1.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(Graph g, int num_colors, std::vector<int> edge_colors);

  const Graph& graph() const { return g_; }
  int num_colors() const { return r_; }
  const std::vector<int>& edge_colors() const { return color_; }
  int color_of_edge(int edge_idx) const { return color_[edge_idx]; }
  int color_of(int u, int v) const;

  // Spanning subgraph carrying exactly the edges of color c.
  Graph color_class(int c) const;
  std::vector<Graph> color_classes() const;

 private:
  Graph g_;
  int r_ = 1;
  std::vector<int> color_;
};

}  // namespace monodeg
