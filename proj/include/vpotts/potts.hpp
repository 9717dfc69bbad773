#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vpotts/graph.hpp"
#include "vpotts/scalar.hpp"

namespace vpotts {

/// Largest q^{|V|} a brute-force state sum will walk.
inline constexpr std::size_t kBruteForceStateLimit = 10'000'000;

/// q-state Potts parameters. beta stands for 1/(kappa T); kappa and T never
/// enter separately.
struct PottsParams {
  unsigned q = 2;
  double beta = 1.0;
  std::map<std::string, Complex> coupling;            // J_e by edge id
  std::map<std::string, std::vector<Complex>> field;  // M_i by vertex id, length q
};

/// Spin per vertex position, each in 1..q.
struct SpinState {
  std::vector<unsigned> spins;
};

/// Ising spin per vertex position, each -1 or +1.
struct IsingState {
  std::vector<int> spins;
};

/// Parameters with a zero field and the same coupling on every edge.
PottsParams uniform_params(const WeightedGraph& g, unsigned q, double beta, Complex coupling);

/// Throws InputError unless every edge and vertex of `g` has an entry of the
/// right shape.
void validate(const WeightedGraph& g, const PottsParams& params);

/// The coupling shared by every edge, or nullopt for an edgeless graph.
/// Throws InputError when couplings differ.
std::optional<Complex> constant_coupling(const WeightedGraph& g, const PottsParams& params);

/// X_M = sum_alpha e^{beta M_alpha}.
Complex field_weight(const std::vector<Complex>& m, double beta);

/// Relative distance |a - b| / max(|a|, |b|), zero when both vanish.
double relative_error(Complex a, Complex b);

/// h(sigma) with per-edge couplings and per-vertex field vectors.
Complex hamiltonian(const WeightedGraph& g, const PottsParams& params, const SpinState& sigma);

/// Definitional sum of e^{-beta h(sigma)} over all q^{|V|} states.
Complex z_brute_force(const WeightedGraph& g, const PottsParams& params,
                      std::size_t state_limit = kBruteForceStateLimit);

/// Evaluates V(G) with vertex weights M_i at x_M := X_M, gamma_e := e^{beta J_e} - 1.
Complex z_ext_via_v(const WeightedGraph& g, const PottsParams& params);

/// Sum over spanning trees of prod_{II}(e^{beta J} - 1) prod_{EA} e^{beta J}
/// times Z_ext of the contracted forest T / II with merged field vectors.
Complex z_ext_tree_expansion(const WeightedGraph& g, const PottsParams& params);

/// Sum over spanning forests of X(F) prod_{F}(e^{beta J} - 1) prod_{EA} e^{beta J}.
Complex z_ext_forest_expansion(const WeightedGraph& g, const PottsParams& params);

/// Sum over connected partitions of X(pi) times the product over induced
/// blocks of [q^1] Z_zero(H; q, e^{beta J} - 1).
Complex z_ext_partition_expansion(const WeightedGraph& g, const PottsParams& params);

/// Zero-field partition function read off Z_T at theta := q. Field entries are ignored.
Complex z_zero(const WeightedGraph& g, const PottsParams& params);

struct IdentityCheck {
  bool agree = false;
  double residual = 0.0;  // relative
  Complex z_zero;
  Complex tutte_side;
};

/// Compares Z_zero with q^{k} v^{|V|-k} T(G; (q+v)/v, v+1), v = e^{beta J} - 1.
/// Requires a constant coupling; throws SingularInputError when v = 0.
IdentityCheck check_potts_tutte_identity(const WeightedGraph& g, const PottsParams& params,
                                         double tolerance = 1e-9);

/// q^{k} v^{|V|-k} sum_T ((q+v)/v)^{|IA|} (e^{beta J})^{|EA|} for constant J.
Complex z_zero_tree_expansion(const WeightedGraph& g, const PottsParams& params);

/// The three expansions of one partition function.
struct Expansions {
  Complex partition;
  Complex forest;
  Complex tree;
};

/// Potts model where only spin 1 feels the field z_i at vertex i.
Complex preferred_spin_brute_force(const WeightedGraph& g, unsigned q, double beta,
                                   const std::map<std::string, Complex>& coupling,
                                   const std::map<std::string, Complex>& z);

/// The preferred-spin expansions with X_z = e^{beta z} + q - 1, obtained by
/// running the field-vector expansions on M_i = (z_i, 0, ..., 0).
Expansions preferred_spin_expansions(const WeightedGraph& g, unsigned q, double beta,
                                     const std::map<std::string, Complex>& coupling,
                                     const std::map<std::string, Complex>& z);

/// How the printed constant-field and random-field formulas are read.
///
/// InExponent multiplies every field exponent by beta (e^{beta H |pi_i|},
/// x_z = e^{2 beta z} + e^{4 beta z}); this is the reading that matches the
/// state sum for every beta. Literal drops beta from those exponents exactly
/// as the formulas are usually printed, and agrees only at beta = 1.
enum class BetaPlacement { InExponent, Literal };

/// Constant coupling J and constant field H on spin 1. The partition and forest
/// terms use X = e^{beta H |block|} + q - 1; the tree terms need the contracted
/// forest, whose merged vertices carry field H times their size.
Expansions constant_field_expansions(const WeightedGraph& g, unsigned q, double beta, Complex j,
                                     Complex h,
                                     BetaPlacement placement = BetaPlacement::InExponent);

Complex constant_field_brute_force(const WeightedGraph& g, unsigned q, double beta, Complex j,
                                   Complex h);

/// h(tau) = -J sum tau_i tau_j - sum z_i tau_i.
Complex rfim_hamiltonian(const WeightedGraph& g, Complex j, const std::vector<Complex>& z,
                         const IsingState& tau);

struct RfimResult {
  Complex brute_force;
  Complex forest;
  Complex tree;
};

/// Random-field Ising model: the 2^{|V|} state sum, the forest expansion
/// e^{-beta eta} sum_F x(F) (e^{2 beta J} - 1)^{|F|} prod_{EA} e^{2 beta J}
/// and the tree expansion, with eta(G) = J |E| + 3 sum z_i.
RfimResult rfim_partition(const WeightedGraph& g, double beta, Complex j,
                          const std::map<std::string, Complex>& z,
                          BetaPlacement placement = BetaPlacement::InExponent);

}  // namespace vpotts
