#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "stabgem/group.hpp"
#include "stabgem/pauli.hpp"

namespace stabgem {

/* Brute-force state vector, qubit 0 in the least significant bit.  Slow by
 * design; this is the reference the fast group-theoretic paths are checked
 * against, so it must stay independent of them (no rank shortcuts). */
class DenseState {
 public:
  explicit DenseState(std::size_t n, std::uint64_t basis = 0);

  std::size_t n() const { return n_; }
  const std::vector<std::complex<double>>& amps() const { return a_; }
  std::vector<std::complex<double>>& amps() { return a_; }

  double norm2() const;
  void normalize();

  void apply_pauli(const Pauli& p);
  std::complex<double> inner(const DenseState& o) const;  // <this|o>
  std::complex<double> expectation(const Pauli& p) const;

  // psi <- (I+P)/2 psi; returns the resulting squared norm (the outcome
  // probability when the input was normalized).  Renormalizes unless zero.
  double project_keep(const Pauli& p);

  // one- and two-qubit gates, for cross-checking conjugation rules
  void apply_h(std::size_t q);
  void apply_s(std::size_t q);
  void apply_sdg(std::size_t q);
  void apply_cx(std::size_t c, std::size_t t);
  void apply_cz(std::size_t a, std::size_t b);
  void apply_swap(std::size_t a, std::size_t b);

  // The +1 joint eigenstate of a full-rank (rank == n) commuting group.
  static DenseState from_stabilizer(const PauliGroup& g);

 private:
  std::size_t n_ = 0;
  std::vector<std::complex<double>> a_;
  std::uint64_t mask_of(const BitVec& v) const;
};

class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n);

  std::size_t n() const { return n_; }
  const Eigen::MatrixXcd& mat() const { return m_; }
  Eigen::MatrixXcd& mat() { return m_; }

  static DenseMatrix pure(const DenseState& s);
  // Normalized projector onto the +1 joint eigenspace: all group signs kept.
  static DenseMatrix from_stabilizer(const PauliGroup& g);

  std::complex<double> expectation(const Pauli& p) const;  // Tr(rho P)
  double trace() const;

  // Kept qubits are re-indexed in ascending order.
  DenseMatrix partial_trace_keep(const BitVec& keep) const;

  // (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2; equals <psi|rho|psi> when sigma
  // is the pure state |psi><psi|.
  double fidelity(const DenseMatrix& o) const;
  double trace_distance(const DenseMatrix& o) const;  // (1/2)||rho - sigma||_1

 private:
  std::size_t n_ = 0;
  Eigen::MatrixXcd m_;
};

// rho_keep of a pure state without forming the full density matrix.
DenseMatrix reduced_density(const DenseState& s, const BitVec& keep);

}  // namespace stabgem
