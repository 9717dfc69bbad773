#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vpotts/scalar.hpp"
#include "vpotts/weight.hpp"

namespace vpotts {

/// Marker for an edge whose weight is the indeterminate g{edge-id}.
struct SymbolicGamma {
  friend bool operator==(SymbolicGamma, SymbolicGamma) { return true; }
};

using Gamma = std::variant<SymbolicGamma, Rational>;

struct Vertex {
  std::string id;
  WeightElement weight;
};

struct Edge {
  std::string id;
  std::size_t u = 0;  // vertex positions
  std::size_t v = 0;
  Gamma gamma = SymbolicGamma{};
  std::size_t order = 0;

  bool is_loop() const { return u == v; }
  std::size_t other(std::size_t end) const { return end == u ? v : u; }
};

/// Vertex- and edge-weighted multigraph; loops and parallel edges allowed.
///
/// Edges carry a strict total order through `order`. Deletion and
/// contraction never renumber the order of surviving edges, and edge ids
/// survive operations on other edges.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Returns the position of the new vertex. Throws InputError on a duplicate id.
  std::size_t add_vertex(std::string id, WeightElement weight);

  /// Appends an edge between existing vertices. Without an explicit order the
  /// edge is ordered after every present edge. Throws InputError on unknown
  /// endpoints, a duplicate id, or a duplicate order index.
  std::size_t add_edge(std::string id, std::string_view u, std::string_view v,
                       Gamma gamma = SymbolicGamma{},
                       std::optional<std::size_t> order = std::nullopt);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Vertex& vertex(std::size_t pos) const { return vertices_.at(pos); }
  const Edge& edge(std::size_t pos) const { return edges_.at(pos); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;

  /// Like find_edge but throws InputError for an unknown id.
  std::size_t edge_position(std::string_view id) const;

  /// Edge positions sorted by increasing order index.
  std::vector<std::size_t> edges_by_order() const;

 private:
  friend WeightedGraph delete_edge(const WeightedGraph&, std::string_view);
  friend WeightedGraph contract_edge(const WeightedGraph&, std::string_view);
  friend WeightedGraph with_edge_order(const WeightedGraph&, const std::vector<std::string>&);

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// Set of edges of a host graph, stored by edge position.
///
/// Subset-driven routines enumerate masks, so a host may have at most 64
/// edges for them; larger hosts raise CapacityError.
class EdgeSubset {
 public:
  static constexpr std::size_t kMaxEdges = 64;

  EdgeSubset() = default;
  explicit EdgeSubset(std::uint64_t mask) : mask_(mask) {}

  /// Throws InputError if an id is not an edge of `host`.
  static EdgeSubset from_ids(const WeightedGraph& host, const std::vector<std::string>& ids);
  static EdgeSubset all(const WeightedGraph& host);

  std::uint64_t mask() const { return mask_; }
  bool contains(std::size_t edge_pos) const { return (mask_ >> edge_pos) & 1u; }
  std::size_t size() const;
  bool empty() const { return mask_ == 0; }

  void insert(std::size_t edge_pos) { mask_ |= std::uint64_t{1} << edge_pos; }
  void erase(std::size_t edge_pos) { mask_ &= ~(std::uint64_t{1} << edge_pos); }

  std::vector<std::size_t> positions() const;
  std::vector<std::string> ids(const WeightedGraph& host) const;

  friend bool operator==(EdgeSubset a, EdgeSubset b) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Throws CapacityError when `g` has more edges than an EdgeSubset can index.
void require_subset_capacity(const WeightedGraph& g);

struct SubgraphStats {
  std::size_t components = 0;  // k(A)
  std::size_t rank = 0;        // r(A) = |V| - k(A)
  std::size_t nullity = 0;     // n(A) = |A| - r(A)
};

/// Component labels of the spanning subgraph (V(G), A), numbered 0.. in order
/// of each component's first vertex.
struct ComponentLabels {
  std::vector<std::size_t> label;  // per vertex position
  std::size_t count = 0;
};

WeightedGraph delete_edge(const WeightedGraph& g, std::string_view edge_id);

/// Merges the endpoints of a non-loop edge into a vertex whose weight is the
/// semigroup sum; edges parallel to it become loops. Throws ContractError on a
/// loop, InputError on an unknown edge.
WeightedGraph contract_edge(const WeightedGraph& g, std::string_view edge_id);

SubgraphStats subgraph_stats(const WeightedGraph& g, const EdgeSubset& a);

ComponentLabels component_labels(const WeightedGraph& g, const EdgeSubset& a);

/// Connected components of `g`, as vertex ids in vertex order.
std::vector<std::vector<std::string>> components(const WeightedGraph& g);

/// Number of connected components of `g`.
std::size_t component_count(const WeightedGraph& g);

/// Subgraph on the given vertex positions with every edge whose ends both lie
/// inside; ids, weights, gammas and order indices are kept.
WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<std::size_t>& vertex_positions);

/// Spanning subgraph keeping only the edges in `a`.
WeightedGraph spanning_subgraph(const WeightedGraph& g, const EdgeSubset& a);

/// Copy of `g` whose order indices follow `order` (a permutation of edge ids).
WeightedGraph with_edge_order(const WeightedGraph& g, const std::vector<std::string>& order);

/// Copy of `g` with every vertex weight replaced; `weights` is indexed by vertex position.
WeightedGraph with_weights(const WeightedGraph& g, const std::vector<WeightElement>& weights);

/// Semigroup sum of the weights of the listed vertices (nonempty).
WeightElement weight_sum(const WeightedGraph& g, const std::vector<std::size_t>& vertex_positions);

}  // namespace vpotts
