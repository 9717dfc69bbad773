#pragma once

#include "vpotts/graph.hpp"
#include "vpotts/polynomial.hpp"

namespace vpotts {

/// Z_T(G; theta, gamma) = sum over A of theta^{k(A)} prod_{e in A} gamma_e.
Polynomial zt_subset_sum(const WeightedGraph& g);

/// Z_T as theta^{k(G)} times the sum over spanning trees of
///   prod_{II} gamma * prod_{IA} (gamma + theta) * prod_{EA} (gamma + 1).
Polynomial zt_traldi(const WeightedGraph& g);

/// Classical Tutte polynomial in the named variables x and y, as the
/// activity generating function over spanning trees.
Polynomial tutte_polynomial(const WeightedGraph& g);

Variable tutte_x();
Variable tutte_y();

/// [theta^1] Z_T(H): the connected spanning subgraphs of H weighted by their
/// gamma products. Throws InputError if H is not connected.
Polynomial zt_q1_connected(const WeightedGraph& h);

}  // namespace vpotts
