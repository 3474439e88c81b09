#pragma once

#include <vector>

#include "monodeg/graph.hpp"

namespace monodeg {

// Edge-count threshold check: a graph on n vertices with more than
// (k-1)n - C(k,2) edges must have a nonempty k-core. `consistent` records
// whether the implication held for this graph.
struct DenseCoreCheck {
  bool applicable = false;  // requires n >= k
  long long edge_threshold = 0;
  bool exceeds = false;
  bool core_nonempty = false;
  bool consistent = true;
};

DenseCoreCheck check_lemma21(const Graph& g, int k);

// Degree-sum check on X = vertices outside the k-core: when |X| >= k,
// sum of their full-graph degrees is at most 2(k-1)|X| - C(k,2).
struct DegreeSumCheck {
  bool applicable = false;  // requires |X| >= k
  std::vector<int> outside;
  long long degree_sum = 0;
  long long bound = 0;
  bool holds = true;
};

DegreeSumCheck lemma22_check(const Graph& g, int k);

// Vertex partition of a 2-colored graph by membership in the two d-cores
// (color 0 = red, color 1 = blue), with the per-side degree-sum inequality
// over the vertices outside each core.
struct PartitionDiagnostic {
  int d = 1;
  std::vector<int> red_only;    // in the red d-core, not in the blue one
  std::vector<int> blue_only;   // in the blue d-core, not in the red one
  std::vector<int> neither;     // in no d-core of either color

  // Per-vertex count of blue (red) edges not lying inside the blue (red)
  // d-core; for a vertex outside that core this is its full color degree.
  std::vector<long long> blue_noncore_degree;
  std::vector<long long> red_noncore_degree;
  long long blue_sum_neither = 0;  // sum of blue_noncore_degree over `neither`
  long long red_sum_neither = 0;

  // Blue side: vertices outside the blue core are red_only + neither.
  bool blue_applicable = false;  // |outside blue core| >= d
  bool red_applicable = false;
  long long blue_degree_sum = 0;
  long long red_degree_sum = 0;
  long long blue_bound = 0;
  long long red_bound = 0;
  bool blue_holds = true;
  bool red_holds = true;

  bool applicable() const { return blue_applicable || red_applicable; }
  bool inequality_holds() const {
    return (!blue_applicable || blue_holds) && (!red_applicable || red_holds);
  }
};

PartitionDiagnostic partition_rbc(const ColoredGraph& cg, int d);

}  // namespace monodeg
