#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "stabgem/codes.hpp"
#include "stabgem/oracle.hpp"

using namespace stabgem;
using cplx = std::complex<double>;

TEST_CASE("ghz amplitudes from the stabilizer group") {
  StabilizerCode ghz = make_ghz_state(3);
  DenseState psi = DenseState::from_stabilizer(ghz.group);
  const auto& a = psi.amps();
  REQUIRE(a.size() == 8);
  double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(a[0] - cplx(r, 0)) < 1e-12);
  CHECK(std::abs(a[7] - cplx(r, 0)) < 1e-12);
  for (std::size_t i = 1; i < 7; ++i) CHECK(std::abs(a[i]) < 1e-12);
}

TEST_CASE("toric L=2 ground state has 8 equal amplitudes") {
  StabilizerCode code = make_toric(2);
  MixedStabilizerState full = code_state(code);
  DenseState psi = DenseState::from_stabilizer(full.group);
  int nonzero = 0;
  double mag = 0.0;
  for (const auto& amp : psi.amps())
    if (std::abs(amp) > 1e-12) {
      ++nonzero;
      mag = std::abs(amp);
    }
  // 3 independent stars plus 2 adjoined X-type logicals: 2^5 basis states
  CHECK(nonzero == 32);
  CHECK(mag == doctest::Approx(1.0 / std::sqrt(32.0)));
  CHECK(psi.norm2() == doctest::Approx(1.0));
  // every generator stabilizes it
  for (const Pauli& g : code.generators)
    CHECK(std::abs(psi.expectation(g) - cplx(1, 0)) < 1e-12);
}

TEST_CASE("pauli application against expectation") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    std::size_t n = 4;
    DenseState psi(n, rng() % 16);
    psi.apply_h(0);
    psi.apply_cx(0, 1);
    psi.apply_s(2);
    psi.apply_cz(2, 3);
    Pauli p(n);
    for (std::size_t q = 0; q < n; ++q) p.set_letter(q, "IXZY"[rng() % 4]);
    DenseState moved = psi;
    moved.apply_pauli(p);
    cplx via_inner = psi.inner(moved);
    cplx via_expect = psi.expectation(p);
    CHECK(std::abs(via_inner - via_expect) < 1e-12);
  }
}

TEST_CASE("project_keep probabilities") {
  // |+> measured in Z: probability 1/2 each way
  DenseState psi(1, 0);
  psi.apply_h(0);
  DenseState kept = psi;
  double pr = kept.project_keep(Pauli::single(1, 0, 'Z'));
  CHECK(pr == doctest::Approx(0.5));
  CHECK(kept.norm2() == doctest::Approx(1.0));
  // projecting the result again is free
  CHECK(kept.project_keep(Pauli::single(1, 0, 'Z')) == doctest::Approx(1.0));
  // and the orthogonal projection annihilates it
  Pauli mz = Pauli::single(1, 0, 'Z');
  mz.set_phase_exp(2);
  DenseState dead = kept;
  CHECK(dead.project_keep(mz) == doctest::Approx(0.0));
}

TEST_CASE("gate conjugation sanity: H swaps X and Z") {
  DenseState psi(2, 1);  // |01>, qubit 0 set
  psi.apply_h(0);
  CHECK(std::abs(psi.expectation(Pauli::single(2, 0, 'X')) - cplx(-1, 0)) < 1e-12);
  psi.apply_h(0);
  CHECK(std::abs(psi.expectation(Pauli::single(2, 0, 'Z')) - cplx(-1, 0)) < 1e-12);
}

TEST_CASE("reduced density of a bell pair is maximally mixed") {
  DenseState psi(2, 0);
  psi.apply_h(0);
  psi.apply_cx(0, 1);
  BitVec keep(2);
  keep.set(0);
  DenseMatrix rho = reduced_density(psi, keep);
  CHECK(rho.trace() == doctest::Approx(1.0));
  CHECK(std::abs(rho.mat()(0, 0) - cplx(0.5, 0)) < 1e-12);
  CHECK(std::abs(rho.mat()(1, 1) - cplx(0.5, 0)) < 1e-12);
  CHECK(std::abs(rho.mat()(0, 1)) < 1e-12);
}

TEST_CASE("partial trace matches reduced_density") {
  std::mt19937_64 rng(9);
  DenseState psi(4, 3);
  psi.apply_h(0);
  psi.apply_cx(0, 2);
  psi.apply_s(1);
  psi.apply_cz(1, 3);
  BitVec keep(4);
  keep.set(1);
  keep.set(2);
  DenseMatrix a = reduced_density(psi, keep);
  DenseMatrix b = DenseMatrix::pure(psi).partial_trace_keep(keep);
  CHECK((a.mat() - b.mat()).norm() < 1e-12);
}

TEST_CASE("fidelity conventions") {
  // squared overlap for pure pairs
  DenseState zero(1, 0);
  DenseState plus(1, 0);
  plus.apply_h(0);
  DenseMatrix rz = DenseMatrix::pure(zero);
  DenseMatrix rp = DenseMatrix::pure(plus);
  CHECK(rz.fidelity(rp) == doctest::Approx(0.5));
  CHECK(rz.fidelity(rz) == doctest::Approx(1.0));

  // mixed vs pure: <psi|rho|psi>
  StabilizerCode code = make_toric(2);
  DenseMatrix rho = DenseMatrix::from_stabilizer(code.group);
  MixedStabilizerState full = code_state(code);
  DenseState word = DenseState::from_stabilizer(full.group);
  double f = rho.fidelity(DenseMatrix::pure(word));
  cplx direct = 0;
  DenseState tmp = word;
  // <psi|rho|psi> via matrix action
  Eigen::VectorXcd v(word.amps().size());
  for (std::size_t i = 0; i < word.amps().size(); ++i) v(i) = word.amps()[i];
  direct = (v.adjoint() * rho.mat() * v)(0);
  CHECK(f == doctest::Approx(direct.real()).epsilon(1e-7));
}

TEST_CASE("fuchs-van de graaf inequalities hold with the squared convention") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 10; ++it) {
    // two random low-entropy mixtures of product states
    auto rand_state = [&](std::uint64_t seed) {
      DenseState s(3, seed % 8);
      s.apply_h(rng() % 3);
      s.apply_s(rng() % 3);
      s.apply_cx(0, 1 + rng() % 2);
      return s;
    };
    DenseMatrix rho(3), sigma(3);
    rho.mat() = 0.5 * DenseMatrix::pure(rand_state(rng())).mat() +
                0.5 * DenseMatrix::pure(rand_state(rng())).mat();
    sigma.mat() = DenseMatrix::pure(rand_state(rng())).mat();
    double f = rho.fidelity(sigma);
    double d = rho.trace_distance(sigma);
    CHECK(1.0 - std::sqrt(f) <= d + 1e-10);
    CHECK(d <= std::sqrt(1.0 - f) + 1e-10);
  }
}

TEST_CASE("pure-pair trace distance equals sqrt(1-F)") {
  DenseState zero(2, 0);
  DenseState other(2, 0);
  other.apply_h(0);
  other.apply_cx(0, 1);
  DenseMatrix a = DenseMatrix::pure(zero);
  DenseMatrix b = DenseMatrix::pure(other);
  double f = a.fidelity(b);
  CHECK(a.trace_distance(b) == doctest::Approx(std::sqrt(1.0 - f)).epsilon(1e-10));
}
