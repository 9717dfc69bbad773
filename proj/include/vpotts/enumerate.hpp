#pragma once

#include <cstddef>
#include <vector>

#include "vpotts/graph.hpp"

namespace vpotts {

/// Default bound on the number of trees, forests or partitions an
/// enumeration may produce before raising CapacityError.
inline constexpr std::size_t kDefaultEnumerationLimit = 1'000'000;

/// Largest edge count a sum over all 2^m spanning subgraphs accepts.
inline constexpr std::size_t kSubsetSumEdgeLimit = 24;

/// Acyclic edge subset of a host graph.
struct SpanningForest {
  EdgeSubset edges;
  friend bool operator==(const SpanningForest&, const SpanningForest&) = default;
};

/// Maximal spanning forest: a spanning tree of every component of the host.
struct SpanningTree {
  EdgeSubset edges;
  operator SpanningForest() const { return {edges}; }  // NOLINT(google-explicit-constructor)
  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

/// Partition of the vertex positions whose blocks induce connected subgraphs.
/// Blocks are sorted, and ordered by their smallest vertex.
struct ConnectedPartition {
  std::vector<std::vector<std::size_t>> blocks;
  friend bool operator==(const ConnectedPartition&, const ConnectedPartition&) = default;
};

/// Edge activities relative to a forest and the edge order.
struct ActivitySets {
  EdgeSubset internally_active;
  EdgeSubset internally_inactive;
  EdgeSubset externally_active;
  EdgeSubset externally_inactive;
};

/// All maximal spanning forests. Loops never appear. Output is sorted
/// lexicographically by the sorted order indices of the chosen edges.
std::vector<SpanningTree> spanning_trees(const WeightedGraph& g,
                                         std::size_t limit = kDefaultEnumerationLimit);

/// Every acyclic edge subset, the empty one included, in the same order.
std::vector<SpanningForest> spanning_forests(const WeightedGraph& g,
                                             std::size_t limit = kDefaultEnumerationLimit);

/// Connected partitions via restricted growth strings, filtered by induced
/// connectivity. Emitted in restricted-growth-string order.
std::vector<ConnectedPartition> connected_partitions(const WeightedGraph& g,
                                                     std::size_t limit = kDefaultEnumerationLimit);

/// Four-way activity classification.
///
/// An edge e of F is internally active when it has the least order index in
/// its cut: the edges reconnecting the two pieces of F - e (e included). An
/// edge outside F is externally active when F + e closes a cycle and e is the
/// least edge of that cycle; a loop is its own cycle. Edges joining two
/// components of F close no cycle and are externally inactive.
/// Throws InputError when F is not acyclic in `g`.
ActivitySets classify_activities(const WeightedGraph& g, const SpanningForest& f);

/// The partition of V(G) into the vertex sets of the components of F.
ConnectedPartition forest_partition(const WeightedGraph& g, const SpanningForest& f);

}  // namespace vpotts
