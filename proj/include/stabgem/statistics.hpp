#pragma once

#include <complex>
#include <vector>

#include "stabgem/clifford.hpp"
#include "stabgem/codes.hpp"
#include "stabgem/oracle.hpp"
#include "stabgem/synthesis.hpp"

namespace stabgem {

// Expectation of a signed Pauli word in a (possibly mixed) stabilizer state:
// i^e when the word lies in the group span, 0 otherwise.
std::complex<double> pauli_expectation(const MixedStabilizerState& state, const Pauli& p);

// Hermitian adjoint of a signed word.
Pauli pauli_dagger(const Pauli& p);

// <gamma_open^dag gamma_loop gamma_open>, the phase picked up by dragging the
// open string's endpoint excitations around the loop.
std::complex<double> braiding_phase(const MixedStabilizerState& state, const Pauli& gamma_open,
                                    const Pauli& gamma_loop);

// <M3' M2' M1' M3 M2 M1> (primes are adjoints), evaluated both by pairwise
// commutation parities and by full operator multiplication; the two must agree.
std::complex<double> exchange_phase(const MixedStabilizerState& state, const ExchangeTriple& triple);

// Conjugation by a finite-depth circuit, for operators, groups, states and codes.
Pauli dress(const CliffordCircuit& c, const Pauli& p);
PauliGroup dress(const CliffordCircuit& c, const PauliGroup& g);
MixedStabilizerState dress(const CliffordCircuit& c, const MixedStabilizerState& s);
StabilizerCode dress(const CliffordCircuit& c, const StabilizerCode& code);

// Indices of code generators whose expectation in the state is not exactly +1,
// i.e. loop operators the state fails to be symmetric under.
std::vector<std::size_t> one_form_violations(const MixedStabilizerState& state,
                                             const StabilizerCode& code);
bool has_one_form_symmetry(const MixedStabilizerState& state, const StabilizerCode& code);

// <psi| (ring of CZ on i,i+1 mod n) (X on every qubit) |psi>, dense evaluation.
std::complex<double> czx_expectation(const DenseState& psi);

}  // namespace stabgem
