#pragma once

#include "vpotts/enumerate.hpp"
#include "vpotts/graph.hpp"
#include "vpotts/polynomial.hpp"

namespace vpotts {

/// The polynomial standing for an edge weight: g{id}, or the stored constant.
Polynomial gamma_polynomial(const Edge& e);

/// Product of x-variables, one per block, indexed by the block's weight sum.
Polynomial block_weight_monomial(const WeightedGraph& g,
                                 const std::vector<std::vector<std::size_t>>& blocks);

/// V(G) by the deletion-contraction recursion. Loops are stripped first and
/// components are handled separately; the pivot is the non-loop edge with the
/// highest order index.
Polynomial v_deletion_contraction(const WeightedGraph& g);

/// V(G) as a sum over all spanning subgraphs.
Polynomial v_state_sum(const WeightedGraph& g);

/// V(G) as a sum over spanning trees T of
///   prod_{II} gamma * prod_{EA} (gamma + 1) * V(T / II),
/// with V(T / II) taken by state sum on the contracted forest.
Polynomial v_spanning_tree(const WeightedGraph& g);

/// V(G) as a sum over connected partitions of x(pi) times the product over
/// blocks of the theta^1 coefficient of Z_T of the induced subgraph.
Polynomial v_connected_partition(const WeightedGraph& g);

/// V(G) as a sum over spanning forests of
///   x(F) * prod_{F} gamma * prod_{EA} (1 + gamma).
Polynomial v_spanning_forest(const WeightedGraph& g);

/// T / II(G, T): the tree as a spanning subgraph with its internally inactive
/// edges contracted. Its remaining edges are exactly IA(G, T).
WeightedGraph contract_inactive(const WeightedGraph& g, const SpanningTree& t,
                                const ActivitySets& activities);

/// Sets every x-variable to theta, turning V(G) into Z_T(G; theta, gamma).
Polynomial specialize_x_to_theta(const Polynomial& p);

}  // namespace vpotts
