#include "monodeg/diagnostics.hpp"

#include <stdexcept>

#include "monodeg/peel.hpp"

namespace monodeg {

DenseCoreCheck check_lemma21(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  DenseCoreCheck rep;
  long long n = g.vertex_count();
  if (n < k) return rep;  // inapplicable
  rep.applicable = true;
  rep.edge_threshold = (k - 1LL) * n - static_cast<long long>(k) * (k - 1) / 2;
  rep.exceeds = g.edge_count() > rep.edge_threshold;
  rep.core_nonempty = !d_core(g, k).empty();
  rep.consistent = !rep.exceeds || rep.core_nonempty;
  return rep;
}

DegreeSumCheck lemma22_check(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  DegreeSumCheck rep;
  std::vector<char> in_core(g.vertex_count(), 0);
  for (int v : d_core(g, k)) in_core[v] = 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in_core[v]) {
      rep.outside.push_back(v);
      rep.degree_sum += g.degree(v);
    }
  long long x = static_cast<long long>(rep.outside.size());
  if (x < k) return rep;  // inapplicable
  rep.applicable = true;
  rep.bound = 2 * (k - 1LL) * x - static_cast<long long>(k) * (k - 1) / 2;
  rep.holds = rep.degree_sum <= rep.bound;
  return rep;
}

PartitionDiagnostic partition_rbc(const ColoredGraph& cg, int d) {
  if (cg.num_colors() != 2)
    throw std::invalid_argument("partition diagnostic needs exactly 2 colors");
  const Graph& g = cg.graph();
  int n = g.vertex_count();

  Graph red = cg.color_class(0);
  Graph blue = cg.color_class(1);
  std::vector<char> in_red(n, 0), in_blue(n, 0);
  for (int v : d_core(red, d)) in_red[v] = 1;
  for (int v : d_core(blue, d)) in_blue[v] = 1;

  PartitionDiagnostic rep;
  rep.d = d;
  rep.blue_noncore_degree.assign(n, 0);
  rep.red_noncore_degree.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    if (in_red[v] && !in_blue[v]) rep.red_only.push_back(v);
    if (in_blue[v] && !in_red[v]) rep.blue_only.push_back(v);
    if (!in_red[v] && !in_blue[v]) rep.neither.push_back(v);
    for (int u : blue.neighbors(v))
      if (!(in_blue[v] && in_blue[u])) ++rep.blue_noncore_degree[v];
    for (int u : red.neighbors(v))
      if (!(in_red[v] && in_red[u])) ++rep.red_noncore_degree[v];
  }
  for (int v : rep.neither) {
    rep.blue_sum_neither += rep.blue_noncore_degree[v];
    rep.red_sum_neither += rep.red_noncore_degree[v];
  }

  // Degree-sum inequality over the complement of each core: all color-c
  // edges at a vertex outside the c-core avoid that core, so the sums below
  // are plain color degrees there.
  long long outside_blue = static_cast<long long>(rep.red_only.size()) +
                           static_cast<long long>(rep.neither.size());
  long long outside_red = static_cast<long long>(rep.blue_only.size()) +
                          static_cast<long long>(rep.neither.size());
  long long binom = static_cast<long long>(d) * (d - 1) / 2;
  for (int v : rep.red_only) rep.blue_degree_sum += rep.blue_noncore_degree[v];
  for (int v : rep.blue_only) rep.red_degree_sum += rep.red_noncore_degree[v];
  rep.blue_degree_sum += rep.blue_sum_neither;
  rep.red_degree_sum += rep.red_sum_neither;
  rep.blue_bound = 2 * (d - 1LL) * outside_blue - binom;
  rep.red_bound = 2 * (d - 1LL) * outside_red - binom;
  rep.blue_applicable = outside_blue >= d;
  rep.red_applicable = outside_red >= d;
  rep.blue_holds = !rep.blue_applicable || rep.blue_degree_sum <= rep.blue_bound;
  rep.red_holds = !rep.red_applicable || rep.red_degree_sum <= rep.red_bound;
  return rep;
}

}  // namespace monodeg
