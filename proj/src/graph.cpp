#include "vpotts/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "vpotts/error.hpp"

namespace vpotts {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::size_t WeightedGraph::add_vertex(std::string id, WeightElement weight) {
  if (find_vertex(id)) throw InputError("duplicate vertex id '" + id + "'");
  vertices_.push_back({std::move(id), std::move(weight)});
  return vertices_.size() - 1;
}

std::size_t WeightedGraph::add_edge(std::string id, std::string_view u, std::string_view v,
                                    Gamma gamma, std::optional<std::size_t> order) {
  if (find_edge(id)) throw InputError("duplicate edge id '" + id + "'");
  auto pu = find_vertex(u);
  auto pv = find_vertex(v);
  if (!pu) throw InputError("edge '" + id + "' references unknown vertex '" + std::string(u) + "'");
  if (!pv) throw InputError("edge '" + id + "' references unknown vertex '" + std::string(v) + "'");
  std::size_t ord = 0;
  if (order) {
    ord = *order;
    for (const auto& e : edges_)
      if (e.order == ord)
        throw InputError("edge '" + id + "' repeats order index " + std::to_string(ord) +
                         " of edge '" + e.id + "'");
  } else {
    for (const auto& e : edges_) ord = std::max(ord, e.order + 1);
  }
  edges_.push_back({std::move(id), *pu, *pv, std::move(gamma), ord});
  return edges_.size() - 1;
}

std::optional<std::size_t> WeightedGraph::find_vertex(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> WeightedGraph::find_edge(std::string_view id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return i;
  return std::nullopt;
}

std::size_t WeightedGraph::edge_position(std::string_view id) const {
  auto pos = find_edge(id);
  if (!pos) throw InputError("unknown edge id '" + std::string(id) + "'");
  return *pos;
}

std::vector<std::size_t> WeightedGraph::edges_by_order() const {
  std::vector<std::size_t> idx(edges_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return edges_[a].order < edges_[b].order; });
  return idx;
}

EdgeSubset EdgeSubset::from_ids(const WeightedGraph& host, const std::vector<std::string>& ids) {
  require_subset_capacity(host);
  EdgeSubset s;
  for (const auto& id : ids) s.insert(host.edge_position(id));
  return s;
}

EdgeSubset EdgeSubset::all(const WeightedGraph& host) {
  require_subset_capacity(host);
  const std::size_t m = host.edge_count();
  return EdgeSubset(m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
}

std::size_t EdgeSubset::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> EdgeSubset::positions() const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask_; m; m &= m - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

std::vector<std::string> EdgeSubset::ids(const WeightedGraph& host) const {
  std::vector<std::string> out;
  for (auto p : positions()) out.push_back(host.edge(p).id);
  return out;
}

void require_subset_capacity(const WeightedGraph& g) {
  if (g.edge_count() > EdgeSubset::kMaxEdges)
    throw CapacityError("graph has " + std::to_string(g.edge_count()) + " edges",
                        EdgeSubset::kMaxEdges);
}

WeightedGraph delete_edge(const WeightedGraph& g, std::string_view edge_id) {
  const std::size_t pos = g.edge_position(edge_id);
  WeightedGraph out;
  out.vertices_ = g.vertices_;
  out.edges_.reserve(g.edges_.size() - 1);
  for (std::size_t i = 0; i < g.edges_.size(); ++i)
    if (i != pos) out.edges_.push_back(g.edges_[i]);
  return out;
}

WeightedGraph contract_edge(const WeightedGraph& g, std::string_view edge_id) {
  const std::size_t pos = g.edge_position(edge_id);
  const Edge& e = g.edges_[pos];
  if (e.is_loop()) throw ContractError("cannot contract loop '" + e.id + "'");
  const std::size_t keep = std::min(e.u, e.v);
  const std::size_t drop = std::max(e.u, e.v);

  WeightedGraph out;
  out.vertices_.reserve(g.vertices_.size() - 1);
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    if (i == drop) continue;
    if (i == keep) {
      out.vertices_.push_back({g.vertices_[keep].id + "+" + g.vertices_[drop].id,
                               weight_add(g.vertices_[keep].weight, g.vertices_[drop].weight)});
    } else {
      out.vertices_.push_back(g.vertices_[i]);
    }
  }
  auto remap = [&](std::size_t x) {
    if (x == drop) x = keep;
    return x > drop ? x - 1 : x;
  };
  out.edges_.reserve(g.edges_.size() - 1);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    if (i == pos) continue;
    Edge f = g.edges_[i];
    f.u = remap(f.u);
    f.v = remap(f.v);
    out.edges_.push_back(std::move(f));
  }
  return out;
}

ComponentLabels component_labels(const WeightedGraph& g, const EdgeSubset& a) {
  require_subset_capacity(g);
  UnionFind uf(g.vertex_count());
  for (auto p : a.positions()) {
    if (p >= g.edge_count())
      throw InputError("edge position " + std::to_string(p) + " is not in the graph");
    uf.unite(g.edge(p).u, g.edge(p).v);
  }
  ComponentLabels out;
  out.label.assign(g.vertex_count(), 0);
  std::vector<std::size_t> root_label(g.vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const std::size_t r = uf.find(i);
    if (root_label[r] == SIZE_MAX) root_label[r] = out.count++;
    out.label[i] = root_label[r];
  }
  return out;
}

SubgraphStats subgraph_stats(const WeightedGraph& g, const EdgeSubset& a) {
  const auto labels = component_labels(g, a);
  SubgraphStats s;
  s.components = labels.count;
  s.rank = g.vertex_count() - labels.count;
  s.nullity = a.size() - s.rank;
  return s;
}

std::vector<std::vector<std::string>> components(const WeightedGraph& g) {
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) uf.unite(e.u, e.v);
  std::vector<std::vector<std::string>> blocks;
  std::vector<std::size_t> block_of(g.vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const std::size_t r = uf.find(i);
    if (block_of[r] == SIZE_MAX) {
      block_of[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[r]].push_back(g.vertex(i).id);
  }
  return blocks;
}

std::size_t component_count(const WeightedGraph& g) {
  UnionFind uf(g.vertex_count());
  std::size_t k = g.vertex_count();
  for (const auto& e : g.edges())
    if (uf.unite(e.u, e.v)) --k;
  return k;
}

WeightedGraph induced_subgraph(const WeightedGraph& g,
                               const std::vector<std::size_t>& vertex_positions) {
  std::vector<bool> inside(g.vertex_count(), false);
  WeightedGraph out;
  for (auto p : vertex_positions) {
    inside.at(p) = true;
    out.add_vertex(g.vertex(p).id, g.vertex(p).weight);
  }
  for (const auto& e : g.edges())
    if (inside[e.u] && inside[e.v])
      out.add_edge(e.id, g.vertex(e.u).id, g.vertex(e.v).id, e.gamma, e.order);
  return out;
}

WeightedGraph spanning_subgraph(const WeightedGraph& g, const EdgeSubset& a) {
  WeightedGraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v.id, v.weight);
  for (auto p : a.positions()) {
    const Edge& e = g.edge(p);
    out.add_edge(e.id, g.vertex(e.u).id, g.vertex(e.v).id, e.gamma, e.order);
  }
  return out;
}

WeightedGraph with_edge_order(const WeightedGraph& g, const std::vector<std::string>& order) {
  if (order.size() != g.edge_count())
    throw InputError("edge order lists " + std::to_string(order.size()) + " edges, graph has " +
                     std::to_string(g.edge_count()));
  WeightedGraph out = g;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t pos = g.edge_position(order[i]);
    if (!seen.insert(pos).second)
      throw InputError("edge order repeats edge '" + order[i] + "'");
    out.edges_[pos].order = i;
  }
  return out;
}

WeightedGraph with_weights(const WeightedGraph& g, const std::vector<WeightElement>& weights) {
  if (weights.size() != g.vertex_count())
    throw InputError("expected " + std::to_string(g.vertex_count()) + " vertex weights, got " +
                     std::to_string(weights.size()));
  WeightedGraph out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) out.add_vertex(g.vertex(i).id, weights[i]);
  for (const auto& e : g.edges())
    out.add_edge(e.id, g.vertex(e.u).id, g.vertex(e.v).id, e.gamma, e.order);
  return out;
}

WeightElement weight_sum(const WeightedGraph& g, const std::vector<std::size_t>& vertex_positions) {
  if (vertex_positions.empty()) throw InputError("weight sum over an empty vertex set");
  WeightElement sum = g.vertex(vertex_positions.front()).weight;
  for (std::size_t i = 1; i < vertex_positions.size(); ++i)
    sum = weight_add(sum, g.vertex(vertex_positions[i]).weight);
  return sum;
}

}  // namespace vpotts
