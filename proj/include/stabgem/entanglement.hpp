#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabgem/clifford.hpp"
#include "stabgem/codes.hpp"
#include "stabgem/logical.hpp"
#include "stabgem/oracle.hpp"
#include "stabgem/statistics.hpp"
#include "stabgem/synthesis.hpp"

namespace stabgem {

// <0_R| rho_R |0_R>, exactly: 2^(-|R|) times the sign sum over the in-region
// subgroup that is Z-type on R.  Always a power of two or zero.
double rdm_zero_fidelity(const MixedStabilizerState& state, const BitVec& region);

// True iff the reduced state on the union factorizes as the tensor product of
// the per-patch reduced states (rank additivity of the supported subgroups).
bool decoupling_check(const MixedStabilizerState& state, const std::vector<BitVec>& patches);

struct E0Bruteforce {
  long bits = 0;        // n minus the largest diagonal-subgroup rank
  double overlap = 0.0; // 2^-bits, the best squared overlap
  std::string letters;  // per-qubit measurement basis of the best product
  std::string signs;    // per-qubit eigenvalue choice, '+' or '-'
};

// Exhaustive scan over all products of single-qubit Pauli eigenstates.
E0Bruteforce e0_product_pauli_bruteforce(const MixedStabilizerState& state);

struct AscentResult {
  double bits = 0.0;
  double best_overlap = 0.0;
  std::vector<double> restart_overlaps;                  // best per restart
  std::vector<std::array<std::complex<double>, 2>> witness;  // per-site states
};

// See-saw ascent over arbitrary product states: each site is set to its
// normalized partial-overlap vector in turn, which never decreases the
// overlap.  Best over restarts; deterministic for a fixed seed.
AscentResult e0_alternating_ascent(const DenseState& psi, int restarts = 24, int iters = 200,
                                   double tol = 1e-12, std::uint64_t seed = 1);

struct NumericGate {
  std::size_t a = 0, b = 0;                  // adjacent line qubits, b = a + 1
  std::array<std::complex<double>, 16> u{};  // row-major 4x4 unitary
};

struct CircuitAscentResult {
  int t = 0;
  double bits = 0.0;
  double overlap = 0.0;
  std::vector<std::vector<NumericGate>> layers;
};

// Upper bound on the depth-t entanglement measure: maximizes |<psi|U|0..0>|^2
// over brick-wall circuits of t two-qubit layers on a line by single-gate
// environment updates (each update is globally optimal for that gate).
CircuitAscentResult et_upper_via_circuit_ascent(const DenseState& psi, int t,
                                                std::uint64_t seed = 1, int restarts = 4,
                                                int sweeps = 60);

struct PatchWitness {
  std::size_t patch_index = 0;
  Pauli loop;                // closed string, +1 in the state
  std::vector<Pauli> opens;  // open strings crossing it an odd number of times
  std::complex<double> phase;  // verified braiding phase, -1
};

struct GemCertificate {
  int t = 0;
  double epsilon = 0.2;
  double epsilon_prime = 0.01;
  std::size_t m = 0;
  double bound_bits = 0.0;
  double alpha_effective = 0.0;
  double m_target = 0.0;  // only set by the mesh-family certificate
  std::vector<BitVec> patches;
  std::vector<PatchWitness> witnesses;
  std::vector<std::string> provenance;
};

struct PatchCertificateOptions {
  std::optional<long> patch;  // default 8(t+1)
  std::optional<long> gap;    // default 2(t+1)
  double epsilon_prime = 0.01;
};

// Patch certificate: partitions the layout into separated patches, verifies a
// braiding witness inside each (dressed by the circuit when given), checks
// decoupling across patches, and emits the per-patch fidelity-gap bound.
GemCertificate patch_certificate_toric(const StabilizerCode& code, int t,
                                       const CliffordCircuit* circuit = nullptr,
                                       const PatchCertificateOptions& opt = {});

// Distance-squared certificate: builds the diagonally shifted mesh family,
// synthesizes a braiding triple at one crossing per consecutive mesh pair,
// keeps the crossings pairwise separated, and bounds the measure by the count.
GemCertificate theorem2_certificate(const StabilizerCode& code, int t, double d0_constant = 1.0,
                                    double epsilon_prime = 0.01);

struct SequentialResult {
  double product = 1.0;                        // prod_j F_j, exactly
  std::vector<double> patch_fidelity;          // F_j per patch
  std::vector<std::vector<double>> step_probs; // per patch, per measured qubit
};

// Projects every patch qubit onto |0> in row-major patch order with exact
// probability bookkeeping.  With witnesses given (one exchange triple hosted
// per patch), additionally enforces the per-patch gap F_j <= 1 - eps'.
SequentialResult sequential_projection_bound(const MixedStabilizerState& state,
                                             const std::vector<BitVec>& patches,
                                             const std::vector<ExchangeTriple>& witnesses = {},
                                             double epsilon_prime = 0.01);

// Tr(Pi_S sigma) where Pi_S projects onto the all-+1 sector of rho's group;
// upper-bounds F(rho, sigma).  With `symmetry` given, rho must first pass the
// one-form symmetry check against it.
double mixed_gem_syndrome_bound(const MixedStabilizerState& rho, const MixedStabilizerState& sigma,
                                const StabilizerCode* symmetry = nullptr);

// Probability-weighted version for an ensemble sigma.
double mixed_gem_syndrome_bound(const MixedStabilizerState& rho,
                                const std::vector<std::pair<double, MixedStabilizerState>>& sigma,
                                const StabilizerCode* symmetry = nullptr);

struct SyndromeDistribution {
  std::map<std::vector<int>, double> support;  // outcome pattern (+1 -> 0, -1 -> 1) to probability
  double all_plus_mass = 0.0;
};

// Outcome distribution of measuring every generator of `code` on sigma,
// enumerated exactly over the branching measurement tree.
SyndromeDistribution syndrome_distribution(const MixedStabilizerState& sigma,
                                           const StabilizerCode& code);

}  // namespace stabgem
