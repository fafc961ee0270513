#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "stabgem/codes.hpp"
#include "stabgem/entanglement.hpp"
#include "stabgem/errors.hpp"

using namespace stabgem;
using cplx = std::complex<double>;

namespace {

MixedStabilizerState zero_state(std::size_t n) {
  std::vector<Pauli> zs;
  for (std::size_t q = 0; q < n; ++q) zs.push_back(Pauli::single(n, q, 'Z'));
  return {PauliGroup::from_generators(zs)};
}

BitVec first_bits(std::size_t n, std::size_t k) {
  BitVec v(n);
  for (std::size_t q = 0; q < k; ++q) v.set(q);
  return v;
}

}  // namespace

TEST_CASE("rdm zero fidelity closed forms") {
  // one half of a bell pair: F = 1/2
  std::vector<Pauli> bell{Pauli::from_letters("XX", 1), Pauli::from_letters("ZZ", 1)};
  MixedStabilizerState pair{PauliGroup::from_generators(bell)};
  CHECK(rdm_zero_fidelity(pair, first_bits(2, 1)) == doctest::Approx(0.5));

  // ghz: half the qubits give 1/2 as well, the diagonal group is Z-parity
  StabilizerCode ghz = make_ghz_state(6);
  MixedStabilizerState gs{ghz.group};
  CHECK(rdm_zero_fidelity(gs, first_bits(6, 3)) == doctest::Approx(0.5));

  // three free qubits in |000>: exactly 1
  CHECK(rdm_zero_fidelity(zero_state(3), first_bits(3, 3)) == doctest::Approx(1.0));

  // a negative-sign Z kills the overlap completely
  std::vector<Pauli> flip{Pauli::from_letters("Z", -1)};
  MixedStabilizerState one{PauliGroup::from_generators(flip)};
  CHECK(rdm_zero_fidelity(one, first_bits(1, 1)) == doctest::Approx(0.0));
}

TEST_CASE("rdm zero fidelity matches the dense oracle on toric L=2 patches") {
  StabilizerCode code = make_toric(2);
  MixedStabilizerState word = code_state(code);
  DenseState psi = DenseState::from_stabilizer(word.group);
  for (double r : {1.0, 1.6, 2.2}) {
    BitVec region = disk_region(code.layout, {1, 1}, r);
    double fast = rdm_zero_fidelity(word, region);
    DenseMatrix rho = reduced_density(psi, region);
    DenseState zero_r(region.count(), 0);
    double dense = rho.fidelity(DenseMatrix::pure(zero_r));
    // the dense fidelity goes through an eigensolve, so only ~1e-8 accurate
    CHECK(fast == doctest::Approx(dense).epsilon(1e-7));
  }
}

TEST_CASE("decoupling holds for separated patches and fails across a bell pair") {
  // two independent bell pairs decouple as {01} vs {23}
  std::vector<Pauli> gens{Pauli::from_letters("XXII", 1), Pauli::from_letters("ZZII", 1),
                          Pauli::from_letters("IIXX", 1), Pauli::from_letters("IIZZ", 1)};
  MixedStabilizerState two{PauliGroup::from_generators(gens)};
  BitVec p1 = first_bits(4, 2);
  BitVec p2(4);
  p2.set(2);
  p2.set(3);
  CHECK(decoupling_check(two, {p1, p2}));

  // splitting one bell pair across patches cannot factorize
  BitVec q1(4);
  q1.set(0);
  BitVec q2(4);
  q2.set(1);
  CHECK(!decoupling_check(two, {q1, q2}));
}

TEST_CASE("e0 brute force on ghz is exactly one bit") {
  for (std::size_t n = 4; n <= 8; ++n) {
    StabilizerCode ghz = make_ghz_state(n);
    MixedStabilizerState state{ghz.group};
    E0Bruteforce res = e0_product_pauli_bruteforce(state);
    CHECK(res.bits == 1);
    CHECK(res.overlap == doctest::Approx(0.5));
    // the witness is the all-Z basis with consistent signs
    CHECK(res.letters == std::string(n, 'Z'));
  }
}

TEST_CASE("e0 brute force on toric L=2 is three bits") {
  StabilizerCode code = make_toric(2);
  MixedStabilizerState word = code_state(code);
  E0Bruteforce res = e0_product_pauli_bruteforce(word);
  CHECK(res.bits == 3);
  CHECK(res.overlap == doctest::Approx(0.125));
}

TEST_CASE("e0 of a product state is zero") {
  MixedStabilizerState prod = zero_state(5);
  E0Bruteforce res = e0_product_pauli_bruteforce(prod);
  CHECK(res.bits == 0);
  CHECK(res.overlap == doctest::Approx(1.0));
}

TEST_CASE("alternating ascent finds the bell overlap exactly") {
  DenseState psi(2, 0);
  psi.apply_h(0);
  psi.apply_cx(0, 1);
  AscentResult res = e0_alternating_ascent(psi, 8, 100);
  CHECK(res.best_overlap == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(res.bits == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("alternating ascent on ghz converges from most restarts") {
  StabilizerCode ghz = make_ghz_state(6);
  DenseState psi = DenseState::from_stabilizer(ghz.group);
  AscentResult res = e0_alternating_ascent(psi, 24, 200);
  CHECK(res.best_overlap == doctest::Approx(0.5).epsilon(1e-9));
  int good = 0;
  for (double r : res.restart_overlaps)
    if (r > 0.5 - 1e-6) ++good;
  CHECK(good * 10 >= (int)res.restart_overlaps.size() * 9);  // >= 90% of restarts
}

TEST_CASE("alternating ascent reproduces the toric L=2 brute force value") {
  StabilizerCode code = make_toric(2);
  MixedStabilizerState word = code_state(code);
  DenseState psi = DenseState::from_stabilizer(word.group);
  AscentResult res = e0_alternating_ascent(psi);
  CHECK(res.best_overlap == doctest::Approx(0.125).epsilon(1e-9));
  // witness states must reproduce the reported overlap
  REQUIRE(res.witness.size() == code.n);
  DenseState prod(code.n, 0);
  auto& amps = prod.amps();
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    cplx a(1, 0);
    for (std::size_t q = 0; q < code.n; ++q) a *= res.witness[q][(b >> q) & 1];
    amps[b] = a;
  }
  CHECK(std::norm(psi.inner(prod)) == doctest::Approx(res.best_overlap).epsilon(1e-9));
}

TEST_CASE("circuit ascent at t=0 reduces to the product ascent") {
  StabilizerCode ghz = make_ghz_state(6);
  DenseState psi = DenseState::from_stabilizer(ghz.group);
  CircuitAscentResult res = et_upper_via_circuit_ascent(psi, 0);
  CHECK(res.bits == doctest::Approx(1.0).epsilon(1e-6));

  MixedStabilizerState prod = zero_state(6);
  DenseState flat = DenseState::from_stabilizer(prod.group);
  CircuitAscentResult zero = et_upper_via_circuit_ascent(flat, 0);
  CHECK(zero.bits == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("deep circuit ascent prepares the toric L=2 word") {
  StabilizerCode code = make_toric(2);
  MixedStabilizerState word = code_state(code);
  DenseState psi = DenseState::from_stabilizer(word.group);
  // t = n layers of two-qubit gates on a line can carry |0..0> to this state.
  // the see-saw tail is slow (2.5e-6 bits after 400 sweeps), so settle for a
  // threshold that still sits three orders below the t=0 value of 3 bits
  CircuitAscentResult res = et_upper_via_circuit_ascent(psi, (int)code.n, 1, 2, 150);
  CHECK(res.bits < 1e-3);
}

TEST_CASE("patch certificate bound stays below the brute-force measure") {
  // one patch covering the whole L=2 torus, so a star generator fits inside
  StabilizerCode code = make_toric(2);
  PatchCertificateOptions opt;
  opt.patch = 4;
  opt.gap = 0;
  GemCertificate cert = patch_certificate_toric(code, 0, nullptr, opt);
  CHECK(cert.m == 1);
  MixedStabilizerState word = code_state(code);
  E0Bruteforce exact = e0_product_pauli_bruteforce(word);
  CHECK(cert.bound_bits <= (double)exact.bits + 1e-12);
  CHECK(cert.bound_bits > 0.0);
  for (const auto& wit : cert.witnesses)
    CHECK(std::abs(wit.phase - cplx(-1, 0)) < 1e-12);
}

TEST_CASE("patch certificate structural invariants at L=3") {
  StabilizerCode code = make_toric(3);
  PatchCertificateOptions opt;
  opt.patch = 4;
  opt.gap = 2;
  GemCertificate cert = patch_certificate_toric(code, 0, nullptr, opt);
  CHECK(cert.m >= 1);
  CHECK(cert.witnesses.size() == cert.m);
  CHECK(cert.patches.size() == cert.m);
  CHECK(cert.bound_bits == doctest::Approx(-(double)cert.m * std::log2(1.0 - cert.epsilon_prime)));
  for (const auto& wit : cert.witnesses) {
    CHECK(std::abs(wit.phase - cplx(-1, 0)) < 1e-12);
    CHECK(wit.loop.support_mask().is_subset_of(cert.patches[wit.patch_index]));
  }
}

TEST_CASE("sequential projection of a zero state is lossless") {
  MixedStabilizerState prod = zero_state(6);
  std::vector<BitVec> patches{first_bits(6, 3)};
  BitVec second(6);
  for (std::size_t q = 3; q < 6; ++q) second.set(q);
  patches.push_back(second);
  SequentialResult res = sequential_projection_bound(prod, patches);
  CHECK(res.product == doctest::Approx(1.0));
  for (double f : res.patch_fidelity) CHECK(f == doctest::Approx(1.0));
}

TEST_CASE("sequential projection is order independent for the product") {
  StabilizerCode code = make_toric(2);
  MixedStabilizerState word = code_state(code);
  BitVec a = rect_region(code.layout, {0, 0}, {2, 2});
  BitVec b = rect_region(code.layout, {2, 2}, {2, 2});
  SequentialResult fwd = sequential_projection_bound(word, {a, b});
  SequentialResult rev = sequential_projection_bound(word, {b, a});
  CHECK(fwd.product == doctest::Approx(rev.product).epsilon(1e-12));
}

TEST_CASE("sequential projection probabilities match the dense oracle") {
  StabilizerCode code = make_toric(2);
  MixedStabilizerState word = code_state(code);
  BitVec a = rect_region(code.layout, {0, 0}, {2, 2});
  BitVec b = rect_region(code.layout, {2, 2}, {2, 2});
  SequentialResult res = sequential_projection_bound(word, {a, b});

  DenseState psi = DenseState::from_stabilizer(word.group);
  double dense_product = 1.0;
  std::size_t pi = 0;
  for (const BitVec& patch : {a, b}) {
    double pf = 1.0;
    std::size_t qi = 0;
    for (std::uint32_t q : patch.ones()) {
      double pr = psi.project_keep(Pauli::single(code.n, q, 'Z'));
      CHECK(res.step_probs[pi][qi] == doctest::Approx(pr).epsilon(1e-10));
      pf *= pr;
      ++qi;
    }
    CHECK(res.patch_fidelity[pi] == doctest::Approx(pf).epsilon(1e-10));
    dense_product *= pf;
    ++pi;
  }
  CHECK(res.product == doctest::Approx(dense_product).epsilon(1e-10));
}

TEST_CASE("mixed syndrome bound is 1 when sigma equals rho") {
  StabilizerCode code = make_honeycomb_fermion(4, 4);
  MixedStabilizerState rho = symmetric_mixed_state(code);
  CHECK(mixed_gem_syndrome_bound(rho, rho) == doctest::Approx(1.0));
}

TEST_CASE("mixed syndrome bound equals the all-plus syndrome mass") {
  StabilizerCode code = make_honeycomb_fermion(4, 4);
  MixedStabilizerState rho = symmetric_mixed_state(code);
  MixedStabilizerState sigma = zero_state(code.n);
  double bound = mixed_gem_syndrome_bound(rho, sigma);
  SyndromeDistribution dist = syndrome_distribution(sigma, code);
  CHECK(bound == doctest::Approx(dist.all_plus_mass).epsilon(1e-12));
  double total = 0.0;
  for (const auto& [pattern, pr] : dist.support) total += pr;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bound < 1.0);  // |0..0> is not symmetric under the bricks
}

TEST_CASE("mixed syndrome bound upper-bounds the dense fidelity") {
  StabilizerCode code = make_honeycomb_fermion(4, 2);
  MixedStabilizerState rho = symmetric_mixed_state(code);
  MixedStabilizerState sigma = zero_state(code.n);
  double bound = mixed_gem_syndrome_bound(rho, sigma);
  DenseMatrix dr = DenseMatrix::from_stabilizer(rho.group);
  DenseMatrix ds = DenseMatrix::from_stabilizer(sigma.group);
  CHECK(dr.fidelity(ds) <= bound + 1e-10);
}

TEST_CASE("ensemble syndrome bound is the weighted average") {
  StabilizerCode code = make_honeycomb_fermion(4, 2);
  MixedStabilizerState rho = symmetric_mixed_state(code);
  MixedStabilizerState s1 = zero_state(code.n);
  MixedStabilizerState s2 = rho;
  double b1 = mixed_gem_syndrome_bound(rho, s1);
  double b2 = mixed_gem_syndrome_bound(rho, s2);
  std::vector<std::pair<double, MixedStabilizerState>> ens{{0.25, s1}, {0.75, s2}};
  CHECK(mixed_gem_syndrome_bound(rho, ens) == doctest::Approx(0.25 * b1 + 0.75 * b2));
}

TEST_CASE("symmetry precondition on the syndrome bound") {
  StabilizerCode code = make_honeycomb_fermion(4, 4);
  MixedStabilizerState rho = symmetric_mixed_state(code);
  MixedStabilizerState sigma = zero_state(code.n);
  // rho is symmetric: fine
  CHECK(mixed_gem_syndrome_bound(rho, sigma, &code) ==
        doctest::Approx(mixed_gem_syndrome_bound(rho, sigma)));
  // the zero state is not symmetric under the bricks: rejected as rho
  CHECK_THROWS_AS((void)mixed_gem_syndrome_bound(sigma, rho, &code), InputError);
}
