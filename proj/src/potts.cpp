#include "vpotts/potts.hpp"

#include <cmath>
#include <functional>
#include <optional>

#include "compensated_sum.hpp"
#include "vpotts/enumerate.hpp"
#include "vpotts/error.hpp"
#include "vpotts/polynomial.hpp"
#include "vpotts/tutte.hpp"
#include "vpotts/vpoly.hpp"

namespace vpotts {

namespace {

using CouplingMap = std::map<std::string, Complex>;

Complex exp_minus_one(Complex z) {
  if (z.imag() == 0.0) return {std::expm1(z.real()), 0.0};
  return std::exp(z) - 1.0;
}

Complex ipow(Complex base, std::size_t e) {
  Complex r(1.0, 0.0);
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

const Complex& coupling_of(const CouplingMap& coupling, const std::string& edge_id) {
  auto it = coupling.find(edge_id);
  if (it == coupling.end()) throw InputError("no coupling J for edge '" + edge_id + "'");
  return it->second;
}

std::vector<Complex> field_values(const WeightElement& w) {
  std::vector<Complex> out;
  for (const auto& v : w.as_field().values) out.push_back(v.to_complex());
  return out;
}

// Graph whose vertex weights are the field vectors and whose edges are symbolic.
WeightedGraph field_graph(const WeightedGraph& g, const PottsParams& params) {
  validate(g, params);
  WeightedGraph out;
  for (const auto& v : g.vertices())
    out.add_vertex(v.id, WeightElement::field(params.field.at(v.id)));
  for (const auto& e : g.edges())
    out.add_edge(e.id, g.vertex(e.u).id, g.vertex(e.v).id, SymbolicGamma{}, e.order);
  return out;
}

// Weights single generators named by vertex id, so merged sizes can be read back.
WeightedGraph membership_graph(const WeightedGraph& g) {
  WeightedGraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v.id, WeightElement::formal(v.id));
  for (const auto& e : g.edges())
    out.add_edge(e.id, g.vertex(e.u).id, g.vertex(e.v).id, SymbolicGamma{}, e.order);
  return out;
}

// Length-1 field weights carrying a per-vertex scalar that contraction adds up.
WeightedGraph scalar_field_graph(const WeightedGraph& g, const CouplingMap& z) {
  WeightedGraph out;
  for (const auto& v : g.vertices()) {
    auto it = z.find(v.id);
    if (it == z.end()) throw InputError("no field z for vertex '" + v.id + "'");
    out.add_vertex(v.id, WeightElement::field(std::vector<Complex>{it->second}));
  }
  for (const auto& e : g.edges())
    out.add_edge(e.id, g.vertex(e.u).id, g.vertex(e.v).id, SymbolicGamma{}, e.order);
  return out;
}

EvalContext potts_context(unsigned q, double beta, const CouplingMap& coupling) {
  EvalContext ctx;
  ctx.set_resolver([q, beta, &coupling](const Variable& v) -> std::optional<Scalar> {
    switch (v.kind()) {
      case VarKind::X:
        return Scalar(field_weight(field_values(*v.weight()), beta));
      case VarKind::Gamma:
        return Scalar(exp_minus_one(beta * coupling_of(coupling, v.key())));
      case VarKind::Theta:
        return Scalar(Complex(q, 0.0));
      case VarKind::Named:
        break;
    }
    return std::nullopt;
  });
  return ctx;
}

Complex z_from_weighted(const WeightedGraph& fg, unsigned q, double beta,
                        const CouplingMap& coupling) {
  return to_complex(evaluate(v_deletion_contraction(fg), potts_context(q, beta, coupling)));
}

std::size_t checked_state_count(std::size_t n, std::size_t q, std::size_t limit) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > limit / std::max<std::size_t>(q, 1))
      throw CapacityError("brute force over " + std::to_string(q) + "^" + std::to_string(n) +
                              " states",
                          limit);
    count *= q;
  }
  if (count > limit) throw CapacityError("brute force state count", limit);
  return count;
}

// Sum of exp(-beta * energy(state)) over every assignment of 1..q to n vertices.
Complex state_sum(std::size_t n, unsigned q, double beta, std::size_t limit,
                  const std::function<Complex(const std::vector<unsigned>&)>& energy) {
  checked_state_count(n, q, limit);
  std::vector<unsigned> spins(n, 1);
  detail::CompensatedSum total;
  while (true) {
    total.add(std::exp(-beta * energy(spins)));
    std::size_t i = 0;
    while (i < n && spins[i] == q) spins[i++] = 1;
    if (i == n) break;
    ++spins[i];
  }
  return total.value();
}

Complex preferred_brute(const WeightedGraph& g, unsigned q, double beta,
                        const CouplingMap& coupling, const std::vector<Complex>& z) {
  std::vector<Complex> j;
  for (const auto& e : g.edges()) j.push_back(coupling_of(coupling, e.id));
  return state_sum(g.vertex_count(), q, beta, kBruteForceStateLimit,
                   [&](const std::vector<unsigned>& s) {
                     Complex h = 0.0;
                     for (std::size_t k = 0; k < g.edge_count(); ++k)
                       if (s[g.edge(k).u] == s[g.edge(k).v]) h -= j[k];
                     for (std::size_t i = 0; i < s.size(); ++i)
                       if (s[i] == 1) h -= z[i];
                     return h;
                   });
}

Complex rfim_brute(const WeightedGraph& g, double beta, Complex j, const std::vector<Complex>& z) {
  return state_sum(g.vertex_count(), 2, beta, kBruteForceStateLimit,
                   [&](const std::vector<unsigned>& s) {
                     IsingState tau;
                     for (auto x : s) tau.spins.push_back(x == 1 ? 1 : -1);
                     return rfim_hamiltonian(g, j, z, tau);
                   });
}

Complex field_scalar(const WeightElement& w) { return w.as_field().values.at(0).to_complex(); }

}  // namespace

std::optional<Complex> constant_coupling(const WeightedGraph& g, const PottsParams& params) {
  std::optional<Complex> j;
  for (const auto& e : g.edges()) {
    const Complex& je = coupling_of(params.coupling, e.id);
    if (j && *j != je) throw InputError("coupling is not constant across edges");
    j = je;
  }
  return j;
}

PottsParams uniform_params(const WeightedGraph& g, unsigned q, double beta, Complex coupling) {
  PottsParams p;
  p.q = q;
  p.beta = beta;
  for (const auto& e : g.edges()) p.coupling[e.id] = coupling;
  for (const auto& v : g.vertices()) p.field[v.id] = std::vector<Complex>(q, 0.0);
  return p;
}

void validate(const WeightedGraph& g, const PottsParams& params) {
  if (params.q < 1) throw InputError("q must be at least 1");
  for (const auto& e : g.edges()) coupling_of(params.coupling, e.id);
  for (const auto& v : g.vertices()) {
    auto it = params.field.find(v.id);
    if (it == params.field.end()) throw InputError("no field vector for vertex '" + v.id + "'");
    if (it->second.size() != params.q)
      throw InputError("field vector of vertex '" + v.id + "' has length " +
                       std::to_string(it->second.size()) + ", expected q = " +
                       std::to_string(params.q));
  }
}

Complex field_weight(const std::vector<Complex>& m, double beta) {
  Complex sum = 0.0;
  for (const auto& x : m) sum += std::exp(beta * x);
  return sum;
}

double relative_error(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

Complex hamiltonian(const WeightedGraph& g, const PottsParams& params, const SpinState& sigma) {
  validate(g, params);
  if (sigma.spins.size() != g.vertex_count()) throw InputError("state is not total on V(G)");
  Complex h = 0.0;
  for (const auto& e : g.edges())
    if (sigma.spins[e.u] == sigma.spins[e.v]) h -= params.coupling.at(e.id);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const unsigned s = sigma.spins[i];
    if (s < 1 || s > params.q) throw InputError("spin out of range 1..q");
    h -= params.field.at(g.vertex(i).id)[s - 1];
  }
  return h;
}

Complex z_brute_force(const WeightedGraph& g, const PottsParams& params, std::size_t state_limit) {
  validate(g, params);
  SpinState sigma;
  return state_sum(g.vertex_count(), params.q, params.beta, state_limit,
                   [&](const std::vector<unsigned>& s) {
                     sigma.spins = s;
                     return hamiltonian(g, params, sigma);
                   });
}

Complex z_ext_via_v(const WeightedGraph& g, const PottsParams& params) {
  return z_from_weighted(field_graph(g, params), params.q, params.beta, params.coupling);
}

Complex z_ext_tree_expansion(const WeightedGraph& g, const PottsParams& params) {
  const WeightedGraph fg = field_graph(g, params);
  detail::CompensatedSum total;
  for (const auto& tree : spanning_trees(fg)) {
    const auto act = classify_activities(fg, tree);
    Complex term = 1.0;
    for (auto p : act.internally_inactive.positions())
      term *= exp_minus_one(params.beta * params.coupling.at(fg.edge(p).id));
    for (auto p : act.externally_active.positions())
      term *= std::exp(params.beta * params.coupling.at(fg.edge(p).id));
    term *= z_from_weighted(contract_inactive(fg, tree, act), params.q, params.beta,
                            params.coupling);
    total.add(term);
  }
  return total.value();
}

Complex z_ext_forest_expansion(const WeightedGraph& g, const PottsParams& params) {
  const WeightedGraph fg = field_graph(g, params);
  detail::CompensatedSum total;
  for (const auto& forest : spanning_forests(fg)) {
    const auto act = classify_activities(fg, forest);
    Complex term = 1.0;
    for (const auto& block : forest_partition(fg, forest).blocks)
      term *= field_weight(field_values(weight_sum(fg, block)), params.beta);
    for (auto p : forest.edges.positions())
      term *= exp_minus_one(params.beta * params.coupling.at(fg.edge(p).id));
    for (auto p : act.externally_active.positions())
      term *= std::exp(params.beta * params.coupling.at(fg.edge(p).id));
    total.add(term);
  }
  return total.value();
}

Complex z_ext_partition_expansion(const WeightedGraph& g, const PottsParams& params) {
  const WeightedGraph fg = field_graph(g, params);
  const EvalContext ctx = potts_context(params.q, params.beta, params.coupling);
  detail::CompensatedSum total;
  for (const auto& partition : connected_partitions(fg)) {
    Complex term = 1.0;
    for (const auto& block : partition.blocks) {
      term *= field_weight(field_values(weight_sum(fg, block)), params.beta);
      term *= to_complex(evaluate(zt_q1_connected(induced_subgraph(fg, block)), ctx));
    }
    total.add(term);
  }
  return total.value();
}

Complex z_zero(const WeightedGraph& g, const PottsParams& params) {
  for (const auto& e : g.edges()) coupling_of(params.coupling, e.id);
  return to_complex(
      evaluate(zt_subset_sum(g), potts_context(params.q, params.beta, params.coupling)));
}

IdentityCheck check_potts_tutte_identity(const WeightedGraph& g, const PottsParams& params,
                                         double tolerance) {
  const auto j = constant_coupling(g, params);
  const Complex q(params.q, 0.0);
  const std::size_t n = g.vertex_count();
  const std::size_t k = component_count(g);

  IdentityCheck out;
  out.z_zero = z_zero(g, params);
  if (!j) {
    out.tutte_side = ipow(q, n);
  } else {
    const Complex v = exp_minus_one(params.beta * *j);
    if (v == Complex(0.0, 0.0)) throw SingularInputError("v = e^{beta J} - 1 is zero");
    EvalContext ctx;
    ctx.bind(tutte_x(), Scalar((q + v) / v)).bind(tutte_y(), Scalar(v + 1.0));
    const Complex t = to_complex(evaluate(tutte_polynomial(g), ctx));
    out.tutte_side = ipow(q, k) * ipow(v, n - k) * t;
  }
  out.residual = relative_error(out.z_zero, out.tutte_side);
  out.agree = out.residual <= tolerance;
  return out;
}

Complex z_zero_tree_expansion(const WeightedGraph& g, const PottsParams& params) {
  const auto j = constant_coupling(g, params);
  const Complex q(params.q, 0.0);
  const std::size_t n = g.vertex_count();
  const std::size_t k = component_count(g);
  if (!j) return ipow(q, n);
  const Complex v = exp_minus_one(params.beta * *j);
  if (v == Complex(0.0, 0.0)) throw SingularInputError("v = e^{beta J} - 1 is zero");
  const Complex internal = (q + v) / v;
  const Complex external = std::exp(params.beta * *j);
  detail::CompensatedSum sum;
  for (const auto& tree : spanning_trees(g)) {
    const auto act = classify_activities(g, tree);
    sum.add(ipow(internal, act.internally_active.size()) *
            ipow(external, act.externally_active.size()));
  }
  return ipow(q, k) * ipow(v, n - k) * sum.value();
}

Complex preferred_spin_brute_force(const WeightedGraph& g, unsigned q, double beta,
                                   const CouplingMap& coupling, const CouplingMap& z) {
  std::vector<Complex> zs;
  for (const auto& v : g.vertices()) {
    auto it = z.find(v.id);
    if (it == z.end()) throw InputError("no field z for vertex '" + v.id + "'");
    zs.push_back(it->second);
  }
  return preferred_brute(g, q, beta, coupling, zs);
}

Expansions preferred_spin_expansions(const WeightedGraph& g, unsigned q, double beta,
                                     const CouplingMap& coupling, const CouplingMap& z) {
  PottsParams params;
  params.q = q;
  params.beta = beta;
  params.coupling = coupling;
  for (const auto& v : g.vertices()) {
    auto it = z.find(v.id);
    if (it == z.end()) throw InputError("no field z for vertex '" + v.id + "'");
    std::vector<Complex> m(q, 0.0);
    m[0] = it->second;
    params.field[v.id] = std::move(m);
  }
  return {z_ext_partition_expansion(g, params), z_ext_forest_expansion(g, params),
          z_ext_tree_expansion(g, params)};
}

Expansions constant_field_expansions(const WeightedGraph& g, unsigned q, double beta, Complex j,
                                     Complex h, BetaPlacement placement) {
  const double field_scale = placement == BetaPlacement::InExponent ? beta : 1.0;
  auto block_weight = [&](std::size_t size) {
    return std::exp(field_scale * h * static_cast<double>(size)) + static_cast<double>(q) - 1.0;
  };
  const Complex v = exp_minus_one(beta * j);
  const Complex boltzmann = std::exp(beta * j);
  CouplingMap coupling;
  for (const auto& e : g.edges()) coupling[e.id] = j;
  const EvalContext ctx = potts_context(q, beta, coupling);

  Expansions out;
  detail::CompensatedSum partition_sum;
  for (const auto& partition : connected_partitions(g)) {
    Complex term = 1.0;
    for (const auto& block : partition.blocks) {
      term *= block_weight(block.size());
      term *= to_complex(evaluate(zt_q1_connected(induced_subgraph(g, block)), ctx));
    }
    partition_sum.add(term);
  }
  out.partition = partition_sum.value();

  detail::CompensatedSum forest_sum;
  for (const auto& forest : spanning_forests(g)) {
    const auto act = classify_activities(g, forest);
    Complex term = ipow(v, forest.edges.size()) * ipow(boltzmann, act.externally_active.size());
    for (const auto& block : forest_partition(g, forest).blocks) term *= block_weight(block.size());
    forest_sum.add(term);
  }
  out.forest = forest_sum.value();

  const WeightedGraph mg = membership_graph(g);
  detail::CompensatedSum tree_sum;
  for (const auto& tree : spanning_trees(mg)) {
    const auto act = classify_activities(mg, tree);
    const WeightedGraph contracted = contract_inactive(mg, tree, act);
    std::vector<Complex> z;
    for (const auto& vx : contracted.vertices())
      z.push_back(h * static_cast<double>(vx.weight.as_formal().generators.size()));
    tree_sum.add(ipow(v, act.internally_inactive.size()) *
                 ipow(boltzmann, act.externally_active.size()) *
                 preferred_brute(contracted, q, beta, coupling, z));
  }
  out.tree = tree_sum.value();
  return out;
}

Complex constant_field_brute_force(const WeightedGraph& g, unsigned q, double beta, Complex j,
                                   Complex h) {
  CouplingMap coupling;
  for (const auto& e : g.edges()) coupling[e.id] = j;
  return preferred_brute(g, q, beta, coupling, std::vector<Complex>(g.vertex_count(), h));
}

Complex rfim_hamiltonian(const WeightedGraph& g, Complex j, const std::vector<Complex>& z,
                         const IsingState& tau) {
  if (tau.spins.size() != g.vertex_count() || z.size() != g.vertex_count())
    throw InputError("Ising state and field must cover every vertex");
  for (int s : tau.spins)
    if (s != 1 && s != -1) throw InputError("Ising spins must be -1 or +1");
  Complex h = 0.0;
  for (const auto& e : g.edges()) h -= j * static_cast<double>(tau.spins[e.u] * tau.spins[e.v]);
  for (std::size_t i = 0; i < z.size(); ++i) h -= z[i] * static_cast<double>(tau.spins[i]);
  return h;
}

RfimResult rfim_partition(const WeightedGraph& g, double beta, Complex j, const CouplingMap& z,
                          BetaPlacement placement) {
  const WeightedGraph zg = scalar_field_graph(g, z);
  std::vector<Complex> zs;
  Complex z_total = 0.0;
  for (const auto& v : zg.vertices()) {
    zs.push_back(field_scalar(v.weight));
    z_total += zs.back();
  }
  auto eta = [&](std::size_t edges) { return j * static_cast<double>(edges) + 3.0 * z_total; };
  const double field_scale = placement == BetaPlacement::InExponent ? beta : 1.0;
  auto x_weight = [&](Complex c) {
    return std::exp(2.0 * field_scale * c) + std::exp(4.0 * field_scale * c);
  };
  const Complex v = exp_minus_one(2.0 * beta * j);
  const Complex boltzmann = std::exp(2.0 * beta * j);
  const Complex prefactor = std::exp(-beta * eta(g.edge_count()));

  RfimResult out;
  out.brute_force = rfim_brute(g, beta, j, zs);

  detail::CompensatedSum forest_sum;
  for (const auto& forest : spanning_forests(zg)) {
    const auto act = classify_activities(zg, forest);
    Complex term = ipow(v, forest.edges.size()) * ipow(boltzmann, act.externally_active.size());
    for (const auto& block : forest_partition(zg, forest).blocks)
      term *= x_weight(field_scalar(weight_sum(zg, block)));
    forest_sum.add(term);
  }
  out.forest = prefactor * forest_sum.value();

  detail::CompensatedSum tree_sum;
  for (const auto& tree : spanning_trees(zg)) {
    const auto act = classify_activities(zg, tree);
    const WeightedGraph contracted = contract_inactive(zg, tree, act);
    std::vector<Complex> merged;
    for (const auto& vx : contracted.vertices()) merged.push_back(field_scalar(vx.weight));
    const Complex exponent = 2.0 * beta * j * static_cast<double>(act.externally_active.size()) +
                             beta * eta(contracted.edge_count());
    tree_sum.add(ipow(v, act.internally_inactive.size()) * std::exp(exponent) *
                 rfim_brute(contracted, beta, j, merged));
  }
  out.tree = prefactor * tree_sum.value();
  return out;
}

}  // namespace vpotts
