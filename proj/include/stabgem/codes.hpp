#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabgem/geometry.hpp"
#include "stabgem/group.hpp"
#include "stabgem/pauli.hpp"

namespace stabgem {

struct CodeParams {
  std::size_t k = 0;
  std::optional<long> d;
  std::string d_provenance;  // "exhaustive", "family", "declared", or empty
  double w = 0.0;            // max generator support diameter
};

struct StabilizerCode {
  std::size_t n = 0;
  std::vector<Pauli> generators;
  Layout layout;
  CodeParams params;
  PauliGroup group;  // echelonized form of the same generators
  std::string name;

  BitVec all_qubits() const {
    BitVec m(n);
    for (std::size_t q = 0; q < n; ++q) m.set(q);
    return m;
  }
};

/* rho proportional to the projector prod_rows (I+g)/2; pure exactly when the
 * group has full rank n. */
struct MixedStabilizerState {
  PauliGroup group;

  std::size_t n() const { return group.n(); }
  bool pure() const { return group.rank() == group.n(); }
  // Tr(rho^2) = 2^(r-n)
  double purity() const;
};

// Builds group, k, and w from the generator list; d left to the caller.
StabilizerCode finish_code(std::string name, std::size_t n, std::vector<Pauli> gens, Layout lay);

/* Toric code on an L x L torus of vertices: qubits on edges, X stars on
 * vertices, Z cycles on plaquettes.  Coordinates are doubled so every edge
 * sits at an integer point: vertices (2i,2j), horizontal edge centers
 * (2i+1,2j) with id j*L+i, vertical edge centers (2i,2j+1) with id
 * L*L+j*L+i, periods (2L,2L). */
StabilizerCode make_toric(long L);

/* Fermionic honeycomb code on an Lx x Ly vertex grid (both even), drawn in
 * brick-wall form: one qubit per vertex, vertical rungs on columns where
 * (x+y) is even, and one six-body generator per brick.  Qubit id y*Lx+x sits
 * at (2x,2y) with periods (2Lx,2Ly). */
StabilizerCode make_honeycomb_fermion(long Lx, long Ly);

// Stabilizers {Z_j Z_{j+1}} plus X on every qubit; rank n, so k = 0 and the
// unique state is the even superposition of all-0 and all-1.
StabilizerCode make_ghz_state(std::size_t n);

MixedStabilizerState symmetric_mixed_state(const StabilizerCode& code);

/* Completes the code group to rank n by greedily adjoining mutually commuting
 * logical representatives, i.e. picks one code word.  seed randomizes the
 * signs of the adjoined logicals; seed 0 keeps them all +1. */
MixedStabilizerState code_state(const StabilizerCode& code, std::uint64_t seed = 0);

StabilizerCode load_code(const std::string& path);
void save_code(const StabilizerCode& code, const std::string& path);

}  // namespace stabgem
