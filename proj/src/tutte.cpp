#include "vpotts/tutte.hpp"

#include "vpotts/enumerate.hpp"
#include "vpotts/error.hpp"
#include "vpotts/vpoly.hpp"

namespace vpotts {

Variable tutte_x() { return Variable::named("x"); }
Variable tutte_y() { return Variable::named("y"); }

Polynomial zt_subset_sum(const WeightedGraph& g) {
  const std::size_t m = g.edge_count();
  if (m > kSubsetSumEdgeLimit)
    throw CapacityError("subset sum over " + std::to_string(m) + " edges", kSubsetSumEdgeLimit);
  const Variable theta = Variable::theta();
  std::vector<Polynomial> gammas;
  for (const auto& e : g.edges()) gammas.push_back(gamma_polynomial(e));

  Polynomial total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const EdgeSubset a(mask);
    Polynomial term(theta, static_cast<unsigned>(subgraph_stats(g, a).components));
    for (auto p : a.positions()) term *= gammas[p];
    total += term;
  }
  return total;
}

Polynomial zt_traldi(const WeightedGraph& g) {
  const Polynomial theta(Variable::theta());
  const Polynomial one = Polynomial::one();
  Polynomial sum;
  for (const auto& tree : spanning_trees(g)) {
    const auto act = classify_activities(g, tree);
    Polynomial term = one;
    for (auto p : act.internally_inactive.positions()) term *= gamma_polynomial(g.edge(p));
    for (auto p : act.internally_active.positions()) term *= gamma_polynomial(g.edge(p)) + theta;
    for (auto p : act.externally_active.positions()) term *= gamma_polynomial(g.edge(p)) + one;
    sum += term;
  }
  return pow(theta, static_cast<unsigned>(component_count(g))) * sum;
}

Polynomial tutte_polynomial(const WeightedGraph& g) {
  Polynomial total;
  for (const auto& tree : spanning_trees(g)) {
    const auto act = classify_activities(g, tree);
    Monomial m = Monomial(tutte_x(), static_cast<unsigned>(act.internally_active.size())) *
                 Monomial(tutte_y(), static_cast<unsigned>(act.externally_active.size()));
    total.add_term(m, Rational(1));
  }
  return total;
}

Polynomial zt_q1_connected(const WeightedGraph& h) {
  if (h.vertex_count() == 0 || component_count(h) != 1)
    throw InputError("theta^1 coefficient requires a connected graph");
  return coefficient_of(zt_subset_sum(h), Variable::theta(), 1);
}

}  // namespace vpotts
