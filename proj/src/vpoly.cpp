#include "vpotts/vpoly.hpp"

#include "vpotts/error.hpp"
#include "vpotts/tutte.hpp"

namespace vpotts {

namespace {

std::vector<std::vector<std::size_t>> blocks_of(const ComponentLabels& labels) {
  std::vector<std::vector<std::size_t>> blocks(labels.count);
  for (std::size_t i = 0; i < labels.label.size(); ++i) blocks[labels.label[i]].push_back(i);
  return blocks;
}

Polynomial edgeless_value(const WeightedGraph& g) {
  Monomial m;
  for (const auto& v : g.vertices()) m = m * Monomial(Variable::x(v.weight));
  return Polynomial(m, Rational(1));
}

Polynomial delcon(const WeightedGraph& g) {
  Polynomial factor = Polynomial::one();
  WeightedGraph h = g;
  for (const auto& e : g.edges()) {
    if (!e.is_loop()) continue;
    factor *= gamma_polynomial(e) + Polynomial::one();
    h = delete_edge(h, e.id);
  }
  if (h.edge_count() == 0) return factor * edgeless_value(h);

  const auto labels = component_labels(h, EdgeSubset::all(h));
  if (labels.count > 1) {
    for (const auto& block : blocks_of(labels)) factor *= delcon(induced_subgraph(h, block));
    return factor;
  }

  const Edge& pivot = h.edge(h.edges_by_order().back());
  Polynomial result = delcon(delete_edge(h, pivot.id));
  result += gamma_polynomial(pivot) * delcon(contract_edge(h, pivot.id));
  return factor * result;
}

}  // namespace

Polynomial gamma_polynomial(const Edge& e) {
  if (const auto* c = std::get_if<Rational>(&e.gamma)) return Polynomial(*c);
  return Polynomial(Variable::gamma(e.id));
}

Polynomial block_weight_monomial(const WeightedGraph& g,
                                 const std::vector<std::vector<std::size_t>>& blocks) {
  Monomial m;
  for (const auto& block : blocks) m = m * Monomial(Variable::x(weight_sum(g, block)));
  return Polynomial(m, Rational(1));
}

Polynomial v_deletion_contraction(const WeightedGraph& g) {
  require_subset_capacity(g);
  return delcon(g);
}

Polynomial v_state_sum(const WeightedGraph& g) {
  const std::size_t m = g.edge_count();
  if (m > kSubsetSumEdgeLimit)
    throw CapacityError("state sum over " + std::to_string(m) + " edges", kSubsetSumEdgeLimit);
  std::vector<Polynomial> gammas;
  for (const auto& e : g.edges()) gammas.push_back(gamma_polynomial(e));

  Polynomial total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const EdgeSubset a(mask);
    Polynomial term = block_weight_monomial(g, blocks_of(component_labels(g, a)));
    for (auto p : a.positions()) term *= gammas[p];
    total += term;
  }
  return total;
}

WeightedGraph contract_inactive(const WeightedGraph& g, const SpanningTree& t,
                                const ActivitySets& activities) {
  WeightedGraph forest = spanning_subgraph(g, t.edges);
  for (const auto& id : activities.internally_inactive.ids(g)) forest = contract_edge(forest, id);
  return forest;
}

Polynomial v_spanning_tree(const WeightedGraph& g) {
  Polynomial total;
  for (const auto& tree : spanning_trees(g)) {
    const auto act = classify_activities(g, tree);
    Polynomial term = Polynomial::one();
    for (auto p : act.internally_inactive.positions()) term *= gamma_polynomial(g.edge(p));
    for (auto p : act.externally_active.positions())
      term *= gamma_polynomial(g.edge(p)) + Polynomial::one();
    term *= v_state_sum(contract_inactive(g, tree, act));
    total += term;
  }
  return total;
}

Polynomial v_connected_partition(const WeightedGraph& g) {
  Polynomial total;
  for (const auto& partition : connected_partitions(g)) {
    Polynomial term = block_weight_monomial(g, partition.blocks);
    for (const auto& block : partition.blocks) term *= zt_q1_connected(induced_subgraph(g, block));
    total += term;
  }
  return total;
}

Polynomial v_spanning_forest(const WeightedGraph& g) {
  Polynomial total;
  for (const auto& forest : spanning_forests(g)) {
    const auto act = classify_activities(g, forest);
    Polynomial term = block_weight_monomial(g, forest_partition(g, forest).blocks);
    for (auto p : forest.edges.positions()) term *= gamma_polynomial(g.edge(p));
    for (auto p : act.externally_active.positions())
      term *= Polynomial::one() + gamma_polynomial(g.edge(p));
    total += term;
  }
  return total;
}

Polynomial specialize_x_to_theta(const Polynomial& p) {
  return substitute(
      p, [](const Variable& v) { return v.kind() == VarKind::X; }, Polynomial(Variable::theta()));
}

}  // namespace vpotts
