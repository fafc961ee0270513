#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stabgem/codes.hpp"
#include "stabgem/geometry.hpp"
#include "stabgem/group.hpp"

namespace stabgem {

// Commutation of the letter content restricted to the masked qubits, signs
// ignored.  Operators commute globally but can anticommute on a sub-region.
bool commute_on(const Pauli& p, const Pauli& q, const BitVec& mask);

// Words supported in region that commute with the whole group, as +1 Paulis.
// Contains the in-region stabilizer subgroup; anything beyond it is logical.
std::vector<Pauli> centralizer_in_region(const StabilizerCode& code, const BitVec& region);

/* Minimal weight of a centralizer element outside the group, searching weight
 * classes 1..max_weight exhaustively.  nullopt when nothing that small
 * exists.  Enumeration cost is capped; oversized requests raise a capability
 * error. */
std::optional<long> distance_bruteforce(const StabilizerCode& code, long max_weight);

// True iff every centralizer element supported in region is a stabilizer,
// decided by comparing subgroup ranks.
bool is_correctable(const StabilizerCode& code, const BitVec& region);

/* Multiplies l by a stabilizer element so the product avoids region.  Input
 * must commute with the group.  Fails with the witness logical when the
 * region is not correctable. */
Pauli clean_logical(const StabilizerCode& code, const Pauli& l, const BitVec& region);

/* Greedy weight descent over generators contained in the allowed region.
 * Keeps the class of p modulo the group and never grows the support outside
 * allowed, so a cleaned operator stays cleaned.  Shakes out solver detours
 * that clean_logical leaves behind. */
Pauli tighten_in_region(const StabilizerCode& code, Pauli p, const BitVec& allowed);

struct MeshLogicalReport {
  Pauli l1, l2;  // anticommuting pair, cleaned into their meshes
  MeshSpec spec1, spec2;
  BitVec mesh1, mesh2;
  std::vector<CrossSquare> squares;       // sorted by (kind, row, col)
  std::vector<char> square_anticommutes;  // restriction parity per square
  CrossSquare Q;                          // first anticommuting square
  BitVec q_region;
};

/* Finds a pair of anticommuting logicals (symplectic pairing on the logical
 * quotient, lowest-index pivots), cleans one into each mesh, and locates the
 * crossing square Q where the restrictions anticommute. */
MeshLogicalReport mesh_logicals(const StabilizerCode& code, const MeshSpec& spec1,
                                const MeshSpec& spec2);

/* Largest-square-count mesh pair for this layout: band s = 2*(w+t)+1, pitch
 * the smallest divisor of the period >= 2s, second mesh shifted by (s, s). */
std::pair<MeshSpec, MeshSpec> default_mesh_specs(const StabilizerCode& code, long t);

}  // namespace stabgem
