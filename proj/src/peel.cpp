#include "monodeg/peel.hpp"

#include <stdexcept>

namespace monodeg {

std::vector<int> core_numbers(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n), vert(n), pos(n), bin(n + 1, 0), core(n, 0);
  if (n == 0) return core;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    ++bin[deg[v]];
  }
  int start = 0;
  for (int d = 0; d <= n; ++d) {
    int width = bin[d];
    bin[d] = start;
    start += width;
  }
  for (int v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (int d = n; d >= 1; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (int i = 0; i < n; ++i) {
    int v = vert[i];
    core[v] = deg[v];
    for (int u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        int du = deg[u], pu = pos[u];
        int pw = bin[du], w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          pos[w] = pu;
          vert[pu] = w;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return core;
}

std::vector<int> d_core(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("degree parameter must be >= 1");
  std::vector<int> core = core_numbers(g);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (core[v] >= d) out.push_back(v);
  return out;
}

CoreReport max_mono_d_subgraph(const ColoredGraph& cg, int d) {
  CoreReport rep;
  rep.d = d;
  rep.per_color_core.reserve(cg.num_colors());
  for (int c = 0; c < cg.num_colors(); ++c) {
    rep.per_color_core.push_back(d_core(cg.color_class(c), d));
    int order = static_cast<int>(rep.per_color_core.back().size());
    if (order > rep.best_order) {
      rep.best_order = order;
      rep.best_color = c;
    }
  }
  return rep;
}

}  // namespace monodeg
