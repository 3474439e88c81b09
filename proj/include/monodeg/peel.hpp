#pragma once

#include <vector>

#include "monodeg/graph.hpp"

namespace monodeg {

// Core number of every vertex (largest d such that the vertex survives
// peeling to minimum degree d). Bucket-queue peel, O(n + m).
std::vector<int> core_numbers(const Graph& g);

// The unique maximal vertex set whose induced subgraph has minimum degree
// >= d. Sorted ascending; empty when no such subgraph exists. d >= 1.
std::vector<int> d_core(const Graph& g, int d);

// Per-color d-cores of an edge-colored graph. best_color is the color of a
// maximum-order core (lowest index on ties); best_order is 0 when all cores
// are empty.
struct CoreReport {
  int d = 1;
  std::vector<std::vector<int>> per_color_core;
  int best_color = 0;
  int best_order = 0;
};

CoreReport max_mono_d_subgraph(const ColoredGraph& cg, int d);

}  // namespace monodeg
