#include "monodeg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "monodeg/errors.hpp"

namespace monodeg {

namespace {
std::uint64_t edge_key(int u, int v) {
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}
}  // namespace

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  adj_.resize(n_);
  edges_.reserve(edges.size());
  index_.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    int u = std::min(e.u, e.v), v = std::max(e.u, e.v);
    if (u < 0 || v >= n_)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + "-" + std::to_string(v));
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto [it, fresh] = index_.emplace(edge_key(u, v), edge_count());
    if (!fresh)
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                  std::to_string(v));
    edges_.push_back({u, v});
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::complete(int n) {
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, es);
}

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back({v - 1, v});
  return Graph(n, es);
}

Graph Graph::circulant(int n, const std::vector<int>& shifts) {
  std::vector<Edge> es;
  for (int s : shifts) {
    if (s < 1 || 2 * s > n)
      throw std::invalid_argument("circulant shift out of range");
    int count = (2 * s == n) ? n / 2 : n;
    for (int i = 0; i < count; ++i) es.push_back({i, (i + s) % n});
  }
  return Graph(n, es);
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = index_.find(edge_key(u, v));
  return it == index_.end() ? -1 : it->second;
}

std::map<int, long long> Graph::degree_multiset() const {
  std::map<int, long long> m;
  for (int v = 0; v < n_; ++v) ++m[degree(v)];
  return m;
}

Graph Graph::edges_within(const std::vector<int>& keep) const {
  std::vector<char> in(n_, 0);
  for (int v : keep) in[v] = 1;
  std::vector<Edge> es;
  for (const Edge& e : edges_)
    if (in[e.u] && in[e.v]) es.push_back(e);
  return Graph(n_, es);
}

ColoredGraph::ColoredGraph(Graph g, int num_colors, std::vector<int> edge_colors)
    : g_(std::move(g)), r_(num_colors), color_(std::move(edge_colors)) {
  if (r_ < 1) throw std::invalid_argument("need at least one color");
  if (static_cast<int>(color_.size()) != g_.edge_count())
    throw std::invalid_argument("coloring must cover every edge exactly once");
  for (int c : color_)
    if (c < 0 || c >= r_)
      throw std::invalid_argument("edge color " + std::to_string(c) +
                                  " out of range for " + std::to_string(r_) +
                                  " colors");
}

int ColoredGraph::color_of(int u, int v) const {
  int idx = g_.edge_index(u, v);
  if (idx < 0) throw std::invalid_argument("no such edge");
  return color_[idx];
}

Graph ColoredGraph::color_class(int c) const {
  if (c < 0 || c >= r_)
    throw std::invalid_argument("color " + std::to_string(c) +
                                " out of range");
  std::vector<Edge> es;
  for (int i = 0; i < g_.edge_count(); ++i)
    if (color_[i] == c) es.push_back(g_.edges()[i]);
  return Graph(g_.vertex_count(), es);
}

std::vector<Graph> ColoredGraph::color_classes() const {
  std::vector<Graph> out;
  out.reserve(r_);
  for (int c = 0; c < r_; ++c) out.push_back(color_class(c));
  return out;
}

}  // namespace monodeg
