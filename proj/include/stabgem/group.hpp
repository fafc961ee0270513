#pragma once

#include <optional>
#include <vector>

#include "stabgem/pauli.hpp"

namespace stabgem {

/* GF(2) elimination helpers over BitVec rows.  Pivot selection is column
 * first (lowest set bit), lowest row index on ties, so reduced forms are
 * deterministic for a given input order. */

// Rank of the row space; consumes its argument.
std::size_t gf2_rank(std::vector<BitVec> rows);

// Combos c (over the given rows, in order) with XOR_{i in c} rows[i] = 0.
std::vector<BitVec> gf2_left_nullspace(const std::vector<BitVec>& rows);

// Combo c with XOR_{i in c} rows[i] = target, if one exists.
std::optional<BitVec> gf2_solve(const std::vector<BitVec>& rows, const BitVec& target);

enum class Membership {
  kNotInSpan,     // word outside the group's span
  kSignMismatch,  // word in span but no generator product matches the phase
  kMember,        // exact element, sign included
};

struct ExpressResult {
  Membership status = Membership::kNotInSpan;
  // Indices into the original generator list whose in-order product equals
  // the query exactly (kMember) or up to phase (kSignMismatch).
  std::vector<std::size_t> indices;
};

/* Abelian Pauli group kept as sign-exact canonical rows (reduced row echelon
 * over the 2n columns x0..x_{n-1}, z0..z_{n-1}).  Optionally remembers the
 * original generating list so elements can be re-expressed as products of the
 * given (possibly redundant) local generators. */
class PauliGroup {
 public:
  PauliGroup() = default;

  // require_commuting also rejects groups containing -I or ±iI.
  static PauliGroup from_generators(const std::vector<Pauli>& gens, bool keep_originals = true,
                                    bool require_commuting = true);

  std::size_t n() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Pauli>& rows() const { return rows_; }
  const std::vector<Pauli>& originals() const { return originals_; }

  Membership membership(const Pauli& p) const;
  bool contains(const Pauli& p) const { return membership(p) == Membership::kMember; }

  // If word(p) lies in the span, the exponent e with p = i^e * (group element
  // of the same word); nullopt otherwise.  e = 0 means p is in the group.
  std::optional<int> phase_exp_relative(const Pauli& p) const;

  // Decomposition over the original generator list (requires keep_originals).
  ExpressResult express_in_originals(const Pauli& p) const;

  // Basis of { g in group : supp(g) subseteq region }.
  PauliGroup subgroup_supported_in(const BitVec& region_mask) const;

  // rank of the rows with all columns outside mask zeroed
  std::size_t rank_restricted_to(const BitVec& mask) const;

  // rank of subgroup_supported_in(region) without materializing elements
  // (rank-nullity against the restriction-to-outside map)
  std::size_t subgroup_rank_in(const BitVec& region_mask) const;

  // Basis of { g in group : supp(g) subseteq region and g is Z-type }.
  std::vector<Pauli> z_type_subgroup_in(const BitVec& region_mask) const;

  // Group element g whose letters on masked qubits equal target's, if any.
  std::optional<Pauli> solve_restriction(const Pauli& target, const BitVec& mask) const;

  // Product of rows selected by combo, multiplied in row order (sign exact).
  Pauli product_of_rows(const BitVec& combo) const;

  // Reduce p's word against the rows; returns (residual word bits as a Pauli
  // with p's phase carried along, combo over rows).  Internal but useful in
  // tests.
  std::pair<Pauli, BitVec> reduce(const Pauli& p) const;

 private:
  std::size_t n_ = 0;
  std::vector<Pauli> rows_;            // canonical RREF rows, sign exact
  std::vector<std::size_t> pivots_;    // pivot column per row (x cols then z cols)
  std::vector<BitVec> row_combos_;     // row i as XOR of originals (when kept)
  std::vector<Pauli> originals_;

  static std::size_t pivot_col(const Pauli& p);
  bool has_col(const Pauli& p, std::size_t col) const;
};

// True iff all pairs commute.
bool pairwise_commuting(const std::vector<Pauli>& gens);

}  // namespace stabgem
