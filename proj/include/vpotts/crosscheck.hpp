#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace vpotts {

struct CrosscheckOptions {
  std::size_t trials = 50;
  std::uint64_t seed = 7;
  std::size_t max_vertices = 6;
  std::size_t max_edges = 9;
  double tolerance = 1e-9;
};

struct CrosscheckFailure {
  std::size_t trial = 0;
  std::string check;
  std::string detail;
  std::string graph_json;
};

struct CrosscheckReport {
  std::size_t trials = 0;
  double max_relative_error = 0.0;
  std::vector<CrosscheckFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Generator for trial `trial` of a run seeded with `seed`; each trial can be
/// replayed on its own.
std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial);

/// Per random instance: the five V expansions agree exactly, the x := theta
/// specialization equals both Z_T expansions, the five Z_ext values agree
/// within the tolerance, and z_zero matches the zero-field state sum.
CrosscheckReport run_crosscheck(const CrosscheckOptions& options);

}  // namespace vpotts
