#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "vpotts/error.hpp"
#include "vpotts/potts.hpp"
#include "vpotts/random_graph.hpp"

using namespace vpotts;
using fixtures::k3;

namespace {

constexpr double kTol = 1e-9;

bool close(Complex a, Complex b, double tol = kTol) { return relative_error(a, b) <= tol; }

PottsParams with_field(const WeightedGraph& g, unsigned q, double beta, double j,
                       std::vector<Complex> m) {
  PottsParams p = uniform_params(g, q, beta, j);
  for (auto& [id, f] : p.field) f = m;
  return p;
}

using ZFn = Complex (*)(const WeightedGraph&, const PottsParams&);
const std::pair<const char*, ZFn> kExpansions[] = {{"v", z_ext_via_v},
                                                   {"tree", z_ext_tree_expansion},
                                                   {"forest", z_ext_forest_expansion},
                                                   {"partition", z_ext_partition_expansion}};

}  // namespace

TEST_CASE("hamiltonian fixtures") {
  const auto edge = fixtures::single_edge();
  PottsParams p = uniform_params(edge, 2, 1.0, 1.7);
  CHECK(hamiltonian(edge, p, SpinState{{1, 1}}) == Complex(-1.7, 0));
  const auto vertex = fixtures::vertices({"a"});
  PottsParams pv = uniform_params(vertex, 3, 1.0, 0.0);
  pv.field["v1"] = {0.5, -2.0, 3.0};
  CHECK(hamiltonian(vertex, pv, SpinState{{2}}) == Complex(2.0, 0));
  const double h = 0.8;
  PottsParams ph = with_field(edge, 2, 1.0, 1.7, {h, 0.0});
  CHECK(hamiltonian(edge, ph, SpinState{{1, 2}}) == Complex(-h, 0));
}

TEST_CASE("validate rejects incomplete parameters") {
  const WeightedGraph g = k3();
  PottsParams p = uniform_params(g, 2, 1.0, 1.0);
  p.coupling.erase("e2");
  CHECK_THROWS_AS(validate(g, p), InputError);
  p = uniform_params(g, 2, 1.0, 1.0);
  p.field["v1"] = {0.0};
  CHECK_THROWS_AS(validate(g, p), InputError);
  CHECK_THROWS_AS(z_brute_force(g, p), InputError);
  CHECK_THROWS_AS(hamiltonian(g, uniform_params(g, 2, 1.0, 1.0), SpinState{{1, 3, 1}}), InputError);
}

TEST_CASE("brute force fixtures") {
  const double beta = 0.6, j = 1.1, h = 0.4;
  const auto vertex = fixtures::vertices({"a"});
  PottsParams pv = uniform_params(vertex, 3, beta, 0.0);
  pv.field["v1"] = {0.2, -0.5, 1.0};
  CHECK(close(z_brute_force(vertex, pv), field_weight(pv.field["v1"], beta)));
  CHECK(close(z_brute_force(vertex, pv),
              std::exp(beta * 0.2) + std::exp(-beta * 0.5) + std::exp(beta * 1.0)));

  const auto edge = fixtures::single_edge();
  CHECK(close(z_brute_force(edge, uniform_params(edge, 2, beta, j)), 2 * std::exp(beta * j) + 2.0));
  const Complex expected = std::exp(beta * j) * (std::exp(2 * beta * h) + 1.0) + 2 * std::exp(beta * h);
  const PottsParams ph = with_field(edge, 2, beta, j, {h, 0.0});
  CHECK(close(z_brute_force(edge, ph), expected));
  const Complex via_v = std::pow(std::exp(beta * h) + 1.0, 2) +
                        std::expm1(beta * j) * (std::exp(2 * beta * h) + 1.0);
  CHECK(close(via_v, expected));
  for (const auto& [name, fn] : kExpansions) {
    CAPTURE(name);
    CHECK(close(fn(edge, ph), expected));
  }
}

TEST_CASE("brute force respects the state bound") {
  const auto g = fixtures::complete(5);
  CHECK_THROWS_AS(z_brute_force(g, uniform_params(g, 4, 1.0, 1.0), 1000), CapacityError);
}

TEST_CASE("loops and edgeless graphs") {
  const double beta = 0.9, j = -0.7;
  const auto loop = fixtures::single_loop();
  PottsParams p = uniform_params(loop, 3, beta, j);
  p.field["v1"] = {0.3, 0.0, -0.1};
  const Complex xm = field_weight(p.field["v1"], beta);
  for (const auto& [name, fn] : kExpansions) {
    CAPTURE(name);
    CHECK(close(fn(loop, p), std::exp(beta * j) * xm));
  }
  CHECK(close(z_zero(loop, p), 3.0 * std::exp(beta * j)));

  const auto empty = fixtures::vertices({"a", "b", "c"});
  PottsParams pe = uniform_params(empty, 2, beta, 0.0);
  pe.field["v1"] = {1.0, 0.0};
  pe.field["v2"] = {0.0, 0.5};
  Complex product = 1.0;
  for (const auto& [id, m] : pe.field) product *= field_weight(m, beta);
  for (const auto& [name, fn] : kExpansions) {
    CAPTURE(name);
    CHECK(close(fn(empty, pe), product));
  }
  CHECK(close(z_zero(empty, pe), 8.0));
}

TEST_CASE("K3 and path expansions match brute force") {
  const auto g = k3();
  const PottsParams p = with_field(g, 2, 0.8, 1.2, {0.5, 0.0});
  for (const auto& [name, fn] : kExpansions) {
    CAPTURE(name);
    CHECK(close(fn(g, p), z_brute_force(g, p)));
  }
  const auto path = fixtures::path3();
  PottsParams pp = uniform_params(path, 3, 1.3, -0.4);
  pp.field["v2"] = {0.1, 0.7, -0.3};
  CHECK(close(z_ext_partition_expansion(path, pp), z_brute_force(path, pp)));
}

TEST_CASE("z_zero fixtures") {
  const double beta = 0.5, j = 1.5;
  const auto edge = fixtures::single_edge();
  CHECK(close(z_zero(edge, uniform_params(edge, 2, beta, j)), 4.0 + 2.0 * std::expm1(beta * j)));
}

TEST_CASE("Potts-Tutte identity and the constant-J tree expansion") {
  const auto g = k3();
  const auto p = uniform_params(g, 2, 1.0, 1.0);
  const auto check = check_potts_tutte_identity(g, p);
  CHECK(check.agree);
  CHECK(check.residual <= kTol);

  const auto edge = fixtures::single_edge();
  const double q = 3, v = std::expm1(0.7);
  const auto pe = uniform_params(edge, 3, 1.0, 0.7);
  CHECK(close(check_potts_tutte_identity(edge, pe).tutte_side, q * (q + v)));
  CHECK(close(z_zero_tree_expansion(edge, pe), q * (q + v)));

  const auto loop = fixtures::single_loop();
  const auto pl = uniform_params(loop, 3, 1.0, 0.7);
  CHECK(close(check_potts_tutte_identity(loop, pl).tutte_side, 3.0 * std::exp(0.7)));
  CHECK(close(z_zero_tree_expansion(loop, pl), 3.0 * std::exp(0.7)));

  const auto p3 = uniform_params(g, 3, 1.0, 0.5);
  CHECK(close(z_zero_tree_expansion(g, p3), z_zero(g, p3)));

  CHECK_THROWS_AS(check_potts_tutte_identity(g, uniform_params(g, 2, 1.0, 0.0)), SingularInputError);
  CHECK_THROWS_AS(z_zero_tree_expansion(g, uniform_params(g, 2, 1.0, 0.0)), SingularInputError);
  PottsParams mixed = uniform_params(g, 2, 1.0, 1.0);
  mixed.coupling["e2"] = 0.5;
  CHECK_THROWS_AS(check_potts_tutte_identity(g, mixed), InputError);
}

TEST_CASE("preferred spin fixtures") {
  const auto vertex = fixtures::vertices({"a"});
  const double beta = 0.7;
  const Complex z = 0.9;
  const auto e = preferred_spin_expansions(vertex, 4, beta, {}, {{"v1", z}});
  const Complex xz = std::exp(beta * z) + 3.0;
  CHECK(close(e.partition, xz));
  CHECK(close(e.forest, xz));
  CHECK(close(e.tree, xz));

  const auto edge = fixtures::single_edge();
  const auto coupling = fixtures::uniform(edge, 1.0, true);
  const auto fields = fixtures::uniform(edge, 1.0, false);
  const Complex brute = preferred_spin_brute_force(edge, 3, 1.0, coupling, fields);
  const auto ex = preferred_spin_expansions(edge, 3, 1.0, coupling, fields);
  CHECK(close(ex.partition, brute));
  CHECK(close(ex.forest, brute));
  CHECK(close(ex.tree, brute));

  const auto g = k3();
  const auto zero = preferred_spin_expansions(g, 3, 1.1, fixtures::uniform(g, 0.6, true),
                                              fixtures::uniform(g, 0.0, false));
  const Complex zz = z_zero(g, uniform_params(g, 3, 1.1, 0.6));
  CHECK(close(zero.partition, zz));
  CHECK(close(zero.forest, zz));
  CHECK(close(zero.tree, zz));
}

TEST_CASE("constant field fixtures") {
  const auto vertex = fixtures::vertices({"a"});
  const auto single = constant_field_expansions(vertex, 3, 0.8, 1.0, 0.5);
  CHECK(close(single.partition, std::exp(0.8 * 0.5) + 2.0));

  const auto g = k3();
  const auto zero = constant_field_expansions(g, 3, 0.8, 1.0, 0.0);
  const Complex zz = z_zero(g, uniform_params(g, 3, 0.8, 1.0));
  CHECK(close(zero.partition, zz));
  CHECK(close(zero.tree, zz));

  const Complex brute = constant_field_brute_force(g, 2, 1.0, 1.0, 0.5);
  const auto ex = constant_field_expansions(g, 2, 1.0, 1.0, 0.5);
  CHECK(close(ex.partition, brute));
  CHECK(close(ex.forest, brute));
  CHECK(close(ex.tree, brute));
  const auto literal = constant_field_expansions(g, 2, 1.0, 1.0, 0.5, BetaPlacement::Literal);
  CHECK(close(literal.tree, brute));
}

TEST_CASE("beta placement: only the exponent reading survives beta != 1") {
  const auto g = k3();
  const Complex brute = constant_field_brute_force(g, 2, 0.4, 1.0, 0.5);
  CHECK(close(constant_field_expansions(g, 2, 0.4, 1.0, 0.5).partition, brute));
  CHECK_FALSE(close(constant_field_expansions(g, 2, 0.4, 1.0, 0.5, BetaPlacement::Literal).partition, brute));

  const auto vertex = fixtures::vertices({"a"});
  const auto r = rfim_partition(vertex, 0.4, 0.0, {{"v1", 0.7}});
  CHECK(close(r.forest, r.brute_force));
  const auto lit = rfim_partition(vertex, 0.4, 0.0, {{"v1", 0.7}}, BetaPlacement::Literal);
  CHECK_FALSE(close(lit.forest, lit.brute_force));
}

TEST_CASE("RFIM fixtures") {
  const auto vertex = fixtures::vertices({"a"});
  const double z = 0.35;
  const auto r = rfim_partition(vertex, 1.0, 0.0, {{"v1", z}});
  const double expected = std::exp(z) + std::exp(-z);
  CHECK(close(r.brute_force, expected));
  CHECK(close(std::exp(-3 * z) * (std::exp(2 * z) + std::exp(4 * z)), expected));
  CHECK(close(r.forest, expected));
  CHECK(close(r.tree, expected));

  const auto edge = fixtures::single_edge();
  const double j = 0.8;
  const auto re = rfim_partition(edge, 1.0, j, fixtures::uniform(edge, 0.0, false));
  CHECK(close(re.brute_force, 2 * std::exp(j) + 2 * std::exp(-j)));
  CHECK(close(re.forest, re.brute_force));
  CHECK(close(re.tree, re.brute_force));

  const auto path = fixtures::path3();
  const std::map<std::string, Complex> zs{{"v1", 0.1}, {"v2", -0.2}, {"v3", 0.3}};
  const auto rp = rfim_partition(path, 1.0, 1.0, zs);
  CHECK(close(rp.brute_force, oracle::ising(path, 1.0, 1.0, {0.1, -0.2, 0.3})));
  CHECK(close(rp.forest, rp.brute_force));
  CHECK(close(rp.tree, rp.brute_force));
}

TEST_CASE("rfim hamiltonian") {
  const auto edge = fixtures::single_edge();
  CHECK(rfim_hamiltonian(edge, 2.0, {0.5, -1.0}, IsingState{{1, -1}}) == Complex(2.0 - 0.5 - 1.0, 0));
  CHECK_THROWS_AS(rfim_hamiltonian(edge, 2.0, {0.5, -1.0}, IsingState{{1, 0}}), InputError);
}

TEST_CASE("five-way numeric agreement on random instances") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 120; ++t) {
    WeightedGraph g = random_graph(rng);
    const PottsParams p = random_potts_params(rng, g);
    const Complex reference = oracle::potts(g, p);
    CHECK(close(z_brute_force(g, p), reference));
    for (const auto& [name, fn] : kExpansions) {
      CAPTURE(name);
      CHECK(close(fn(g, p), reference));
    }
  }
}

TEST_CASE("zero-field reduction, positivity and realness") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 100; ++t) {
    WeightedGraph g = random_graph(rng);
    PottsParams p = random_potts_params(rng, g);
    const Complex z = z_ext_via_v(g, p);
    CHECK(z.real() > 0);
    CHECK(std::abs(z.imag()) <= 1e-12 * std::abs(z));
    for (auto& [id, m] : p.field) std::fill(m.begin(), m.end(), Complex(0, 0));
    const Complex z0 = z_ext_via_v(g, p);
    CHECK(close(z0, z_zero(g, p)));
    CHECK(close(z0, oracle::potts(g, p)));
    CHECK(z0.real() > 0);
  }
}

TEST_CASE("complex couplings and fields") {
  std::mt19937_64 rng(63);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int t = 0; t < 40; ++t) {
    WeightedGraph g = random_graph(rng);
    PottsParams p = random_potts_params(rng, g);
    for (auto& [id, j] : p.coupling) j = Complex(j.real(), u(rng));
    for (auto& [id, m] : p.field)
      for (auto& c : m) c = Complex(c.real(), u(rng));
    const Complex reference = oracle::potts(g, p);
    for (const auto& [name, fn] : kExpansions) {
      CAPTURE(name);
      CHECK(close(fn(g, p), reference, 1e-8));
    }
  }
}

TEST_CASE("preferred spin with constant z matches the constant-field corollary") {
  std::mt19937_64 rng(64);
  std::uniform_real_distribution<double> u(-1.0, 1.0), b(0.1, 2.0);
  for (int t = 0; t < 50; ++t) {
    const WeightedGraph g = random_graph(rng);
    const double beta = b(rng), j = 2 * u(rng), h = u(rng);
    const unsigned q = 2 + t % 3;
    const auto pref = preferred_spin_expansions(g, q, beta, fixtures::uniform(g, j, true),
                                                fixtures::uniform(g, h, false));
    const auto cf = constant_field_expansions(g, q, beta, j, h);
    CHECK(close(pref.partition, cf.partition));
    CHECK(close(pref.forest, cf.forest));
    CHECK(close(pref.tree, cf.tree));
  }
}
