#include "vpotts/crosscheck.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "vpotts/document.hpp"
#include "vpotts/error.hpp"
#include "vpotts/potts.hpp"
#include "vpotts/random_graph.hpp"
#include "vpotts/tutte.hpp"
#include "vpotts/vpoly.hpp"

namespace vpotts {

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

namespace {

std::string complex_str(Complex z) {
  return std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") + std::to_string(z.imag()) + "i";
}

}  // namespace

CrosscheckReport run_crosscheck(const CrosscheckOptions& options) {
  CrosscheckReport report;
  RandomGraphOptions shape;
  shape.max_vertices = options.max_vertices;
  shape.max_edges = options.max_edges;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    auto rng = trial_rng(options.seed, trial);
    WeightedGraph g = random_graph(rng, shape);
    auto fail = [&](std::string check, std::string detail,
                    const std::optional<PottsParams>& params = std::nullopt) {
      report.failures.push_back({trial, std::move(check), std::move(detail), to_json(g, params)});
    };

    const Polynomial v = v_deletion_contraction(g);
    const std::array<std::pair<const char*, Polynomial>, 4> others{{
        {"statesum", v_state_sum(g)},
        {"tree", v_spanning_tree(g)},
        {"forest", v_spanning_forest(g)},
        {"partition", v_connected_partition(g)},
    }};
    for (const auto& [name, p] : others)
      if (!(p == v)) fail(std::string("vpoly ") + name, p.str() + " != " + v.str());

    const Polynomial zt = specialize_x_to_theta(v);
    if (!(zt_subset_sum(g) == zt)) fail("zt subset", zt_subset_sum(g).str() + " != " + zt.str());
    if (!(zt_traldi(g) == zt)) fail("zt traldi", zt_traldi(g).str() + " != " + zt.str());

    PottsParams params = random_potts_params(rng, g);
    const Complex brute = z_brute_force(g, params);
    const std::array<std::pair<const char*, Complex>, 4> values{{
        {"v", z_ext_via_v(g, params)},
        {"tree", z_ext_tree_expansion(g, params)},
        {"forest", z_ext_forest_expansion(g, params)},
        {"partition", z_ext_partition_expansion(g, params)},
    }};
    for (const auto& [name, z] : values) {
      const double err = relative_error(z, brute);
      report.max_relative_error = std::max(report.max_relative_error, err);
      if (err > options.tolerance)
        fail(std::string("zext ") + name, complex_str(z) + " vs brute " + complex_str(brute), params);
    }

    PottsParams zero = params;
    for (auto& [id, m] : zero.field) std::fill(m.begin(), m.end(), Complex(0.0, 0.0));
    const Complex zz = z_zero(g, params);
    const Complex zb = z_brute_force(g, zero);
    const double err = relative_error(zz, zb);
    report.max_relative_error = std::max(report.max_relative_error, err);
    if (err > options.tolerance)
      fail("zzero", complex_str(zz) + " vs brute " + complex_str(zb), params);
    ++report.trials;
  }
  return report;
}

}  // namespace vpotts
