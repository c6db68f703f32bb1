#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "quasitree/graph.hpp"

namespace quasitree {

/// rows x cols grid; vertex r * cols + c.
Graph gen_grid(int rows, int cols);
/// Path 0..n-2 plus apex n-1 adjacent to every path vertex. n >= 1.
Graph gen_fan(int n);
Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
/// Centre 0 with leaves 1..leaves.
Graph gen_star(int leaves);
/// Sides 0..s-1 and s..s+t-1.
Graph gen_kst(int s, int t);
/// K_{s,t} plus one vertex per pair of the s-side, numbered after the t-side
/// in lexicographic pair order.
Graph gen_kst_star(int s, int t);
/// Closure of the complete n-ary tree of depth k-1: every vertex is joined to
/// all of its ancestors. Vertices numbered in BFS order from the root.
Graph gen_closure(int k, int n);
/// X = 0..s-1, hub path s..s+a-1, Y = s+a..s+2a-1. X-Y complete, the first hub
/// vertex is joined to all of X, and hub i to y_i.
Graph gen_extension(int s, int a);
/// K_{s,b} with X = 0..s-1, Y = s..s+b-1, plus the path y_0 ... y_{b-1}.
Graph gen_skewered(int s, int b);
/// Erdős–Rényi G(n, p) with p = permille / 1000.
Graph gen_gnp(int n, int permille, std::uint64_t seed);
/// Random k-tree on n vertices, each edge kept with probability
/// keep_permille / 1000.
Graph gen_partial_ktree(int n, int k, int keep_permille, std::uint64_t seed);
/// Uniformly random labelled tree (Prüfer sequence) on n vertices.
Graph gen_random_tree(int n, std::uint64_t seed);

using GenParams = std::map<std::string, std::int64_t>;

/// Dispatch by family name. Throws Error{UnknownFamily} or Error{BadParams}.
Graph generate(const std::string& family, const GenParams& params);

}  // namespace quasitree
