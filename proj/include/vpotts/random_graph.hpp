#pragma once

#include <cstddef>
#include <random>

#include "vpotts/graph.hpp"
#include "vpotts/potts.hpp"

namespace vpotts {

/// Random multigraphs for cross-checking. All randomness comes from the
/// caller's std::mt19937_64, so a seed reproduces an instance exactly.
///
/// The vertex count is uniform on [min_vertices, max_vertices]. Each vertex
/// pair is joined with edge_probability, then every vertex gets a loop and
/// every simple edge a parallel copy with their own probabilities. With
/// `connected` set a random spanning tree is laid down first. The edge list
/// is shuffled, cut to max_edges (never below the tree), and given a random
/// order. Vertex i carries the distinct formal weight "w<i>".
struct RandomGraphOptions {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  std::size_t max_edges = 9;
  double edge_probability = 0.5;
  double loop_probability = 0.15;
  double parallel_probability = 0.15;
  bool connected = false;
};

WeightedGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options = {});

/// q uniform in {2, 3, 4}, beta in [0.1, 2], each J_e in [-2, 2] and each
/// field component in [-1, 1]. Also rewrites the vertex weights of `g` to
/// the matching field vectors.
PottsParams random_potts_params(std::mt19937_64& rng, WeightedGraph& g);

}  // namespace vpotts
