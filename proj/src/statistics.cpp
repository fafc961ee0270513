#include "stabgem/statistics.hpp"

#include <cmath>

#include "stabgem/errors.hpp"

namespace stabgem {

namespace {

std::complex<double> i_power(int e) {
  static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((e % 4) + 4) % 4];
}

}  // namespace

std::complex<double> pauli_expectation(const MixedStabilizerState& state, const Pauli& p) {
  auto e = state.group.phase_exp_relative(p);
  if (!e) return {0.0, 0.0};
  return i_power(*e);
}

Pauli pauli_dagger(const Pauli& p) {
  // (i^k X^x Z^z)^dag = i^(-k) Z^z X^x = i^(-k + 2|x&z|) X^x Z^z
  Pauli out = p;
  int k = p.phase_exp();
  int swaps = (int)(p.xbits().and_count(p.zbits()) & 3);
  out.set_phase_exp(((-k + 2 * swaps) % 4 + 4) % 4);
  return out;
}

std::complex<double> braiding_phase(const MixedStabilizerState& state, const Pauli& gamma_open,
                                    const Pauli& gamma_loop) {
  Pauli conj = pauli_dagger(gamma_open) * gamma_loop * gamma_open;
  std::complex<double> full = pauli_expectation(state, conj);
  // conjugation by a Pauli word only ever flips the sign
  std::complex<double> bare = pauli_expectation(state, gamma_loop);
  double flip = gamma_open.anticommutes(gamma_loop) ? -1.0 : 1.0;
  if (std::abs(full - flip * bare) > 1e-12)
    throw Error("braiding phase disagrees with the commutation parity");  // cannot happen
  return full;
}

std::complex<double> exchange_phase(const MixedStabilizerState& state,
                                    const ExchangeTriple& triple) {
  const Pauli* m[3] = {&triple.m1, &triple.m2, &triple.m3};
  double by_parity = 1.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (m[i]->anticommutes(*m[j])) by_parity = -by_parity;

  Pauli word = pauli_dagger(*m[2]) * pauli_dagger(*m[1]) * pauli_dagger(*m[0]) * *m[2] * *m[1] * *m[0];
  if (word.support_mask().any())
    throw Error("exchange word did not cancel to a phase");  // cannot happen
  std::complex<double> by_product = pauli_expectation(state, word);

  if (std::abs(by_product - std::complex<double>(by_parity, 0.0)) > 1e-12)
    throw Error("exchange phase mismatch between parity and product evaluation");
  return by_product;
}

Pauli dress(const CliffordCircuit& c, const Pauli& p) { return c.conjugate(p); }

PauliGroup dress(const CliffordCircuit& c, const PauliGroup& g) {
  std::vector<Pauli> dressed;
  dressed.reserve(g.originals().size());
  for (const Pauli& o : g.originals()) dressed.push_back(c.conjugate(o));
  return PauliGroup::from_generators(dressed, /*keep_originals=*/true,
                                     /*require_commuting=*/false);
}

MixedStabilizerState dress(const CliffordCircuit& c, const MixedStabilizerState& s) {
  MixedStabilizerState out;
  out.group = dress(c, s.group);
  return out;
}

StabilizerCode dress(const CliffordCircuit& c, const StabilizerCode& code) {
  std::vector<Pauli> gens;
  gens.reserve(code.generators.size());
  for (const Pauli& g : code.generators) gens.push_back(c.conjugate(g));
  StabilizerCode out = finish_code(code.name + "+circuit", code.n, std::move(gens), code.layout);
  // the distance survives conjugation but the old certificate does not
  out.params.d.reset();
  out.params.d_provenance = "unknown after dressing";
  return out;
}

std::vector<std::size_t> one_form_violations(const MixedStabilizerState& state,
                                             const StabilizerCode& code) {
  std::vector<std::size_t> out;
  for (std::size_t gi = 0; gi < code.generators.size(); ++gi) {
    auto e = state.group.phase_exp_relative(code.generators[gi]);
    if (!e || *e != 0) out.push_back(gi);  // Tr(rho g) must be exactly +1
  }
  return out;
}

bool has_one_form_symmetry(const MixedStabilizerState& state, const StabilizerCode& code) {
  return one_form_violations(state, code).empty();
}

std::complex<double> czx_expectation(const DenseState& psi) {
  std::size_t n = psi.n();
  if (n < 2) throw InputError("the CZ ring needs at least two qubits");
  DenseState phi = psi;
  Pauli allx(n);
  for (std::size_t q = 0; q < n; ++q) allx.set_letter(q, 'X');
  phi.apply_pauli(allx);
  for (std::size_t q = 0; q < n; ++q) phi.apply_cz(q, (q + 1) % n);
  return psi.inner(phi);
}

}  // namespace stabgem
