#include "stabgem/group.hpp"

#include <algorithm>

#include "stabgem/errors.hpp"

namespace stabgem {

namespace {

struct EchelonRow {
  BitVec vec;
  BitVec combo;
  std::size_t pivot;
};

// Reduce v (and combo alongside) against the echelon basis.
void reduce_against(const std::vector<EchelonRow>& basis, BitVec& v, BitVec& combo) {
  for (const EchelonRow& b : basis) {
    if (v.test(b.pivot)) {
      v ^= b.vec;
      combo ^= b.combo;
    }
  }
}

void insert_row(std::vector<EchelonRow>& basis, BitVec v, BitVec combo) {
  std::size_t piv = v.find_first();
  // keep the form reduced so each pivot column is set in exactly one row
  for (EchelonRow& b : basis) {
    if (b.vec.test(piv)) {
      b.vec ^= v;
      b.combo ^= combo;
    }
  }
  EchelonRow row{std::move(v), std::move(combo), piv};
  auto pos = std::lower_bound(basis.begin(), basis.end(), piv,
                              [](const EchelonRow& a, std::size_t p) { return a.pivot < p; });
  basis.insert(pos, std::move(row));
}

}  // namespace

std::size_t gf2_rank(std::vector<BitVec> rows) {
  std::vector<EchelonRow> basis;
  BitVec dummy(0);
  for (BitVec& r : rows) {
    BitVec combo(0);
    reduce_against(basis, r, combo);
    if (r.any()) insert_row(basis, std::move(r), std::move(combo));
  }
  return basis.size();
}

std::vector<BitVec> gf2_left_nullspace(const std::vector<BitVec>& rows) {
  std::vector<EchelonRow> basis;
  std::vector<BitVec> null_combos;
  const std::size_t m = rows.size();
  for (std::size_t i = 0; i < m; i++) {
    BitVec v = rows[i];
    BitVec combo(m);
    combo.set(i);
    reduce_against(basis, v, combo);
    if (v.any()) {
      insert_row(basis, std::move(v), std::move(combo));
    } else {
      null_combos.push_back(std::move(combo));
    }
  }
  return null_combos;
}

std::optional<BitVec> gf2_solve(const std::vector<BitVec>& rows, const BitVec& target) {
  std::vector<EchelonRow> basis;
  const std::size_t m = rows.size();
  for (std::size_t i = 0; i < m; i++) {
    BitVec v = rows[i];
    BitVec combo(m);
    combo.set(i);
    reduce_against(basis, v, combo);
    if (v.any()) insert_row(basis, std::move(v), std::move(combo));
  }
  BitVec v = target;
  BitVec combo(m);
  reduce_against(basis, v, combo);
  if (v.any()) return std::nullopt;
  return combo;
}

bool pairwise_commuting(const std::vector<Pauli>& gens) {
  for (std::size_t i = 0; i < gens.size(); i++)
    for (std::size_t j = i + 1; j < gens.size(); j++)
      if (!gens[i].commutes(gens[j])) return false;
  return true;
}

std::size_t PauliGroup::pivot_col(const Pauli& p) {
  std::size_t fx = p.xbits().find_first();
  if (fx < p.n()) return fx;
  return p.n() + p.zbits().find_first();
}

bool PauliGroup::has_col(const Pauli& p, std::size_t col) const {
  return col < n_ ? p.xbits().test(col) : p.zbits().test(col - n_);
}

PauliGroup PauliGroup::from_generators(const std::vector<Pauli>& gens, bool keep_originals,
                                       bool require_commuting) {
  PauliGroup g;
  if (gens.empty()) return g;
  g.n_ = gens[0].n();
  for (const Pauli& p : gens)
    if (p.n() != g.n_) throw InputError("generators act on different qubit counts");
  if (require_commuting) {
    for (std::size_t i = 0; i < gens.size(); i++)
      for (std::size_t j = i + 1; j < gens.size(); j++)
        if (!gens[i].commutes(gens[j]))
          throw InputError("generators " + std::to_string(i) + " and " + std::to_string(j) +
                           " anticommute");
  }

  const std::size_t m = gens.size();
  for (std::size_t j = 0; j < m; j++) {
    Pauli cur = gens[j];
    BitVec combo(m);
    combo.set(j);
    // pivoted reduction; rows are kept in ascending pivot order
    for (std::size_t r = 0; r < g.rows_.size(); r++) {
      if (g.has_col(cur, g.pivots_[r])) {
        cur = cur * g.rows_[r];
        combo ^= g.row_combos_[r];
      }
    }
    if (cur.is_identity_word()) {
      if (require_commuting) {
        // redundant generator; the relation must multiply to +I exactly
        Pauli rel = Pauli::identity(g.n_);
        for (std::uint32_t idx : combo.ones()) rel = rel * gens[idx];
        if (rel.phase_exp() != 0)
          throw InputError("generator signs are inconsistent (a product of generators is " +
                           std::string(rel.phase_exp() == 2 ? "-I" : "+/-iI") + ")");
      }
      continue;
    }
    std::size_t piv = pivot_col(cur);
    for (std::size_t r = 0; r < g.rows_.size(); r++) {
      if (g.has_col(g.rows_[r], piv)) {
        g.rows_[r] = g.rows_[r] * cur;
        g.row_combos_[r] ^= combo;
      }
    }
    auto pos = std::lower_bound(g.pivots_.begin(), g.pivots_.end(), piv);
    std::size_t at = (std::size_t)(pos - g.pivots_.begin());
    g.pivots_.insert(pos, piv);
    g.rows_.insert(g.rows_.begin() + (long)at, std::move(cur));
    g.row_combos_.insert(g.row_combos_.begin() + (long)at, std::move(combo));
  }
  if (keep_originals) g.originals_ = gens;
  return g;
}

std::pair<Pauli, BitVec> PauliGroup::reduce(const Pauli& p) const {
  if (p.n() != n_) throw InputError("operator size does not match group");
  Pauli res = p;
  BitVec combo(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); r++) {
    if (has_col(res, pivots_[r])) {
      res.xbits() ^= rows_[r].xbits();
      res.zbits() ^= rows_[r].zbits();
      combo.set(r);
    }
  }
  return {std::move(res), std::move(combo)};
}

Pauli PauliGroup::product_of_rows(const BitVec& combo) const {
  Pauli prod = Pauli::identity(n_);
  for (std::uint32_t r : combo.ones()) prod = prod * rows_[r];
  return prod;
}

std::optional<int> PauliGroup::phase_exp_relative(const Pauli& p) const {
  auto [res, combo] = reduce(p);
  if (!res.is_identity_word()) return std::nullopt;
  Pauli g = product_of_rows(combo);
  return (int)((p.phase_exp() - g.phase_exp()) & 3);
}

Membership PauliGroup::membership(const Pauli& p) const {
  auto e = phase_exp_relative(p);
  if (!e) return Membership::kNotInSpan;
  return *e == 0 ? Membership::kMember : Membership::kSignMismatch;
}

ExpressResult PauliGroup::express_in_originals(const Pauli& p) const {
  if (originals_.empty() && rank() > 0)
    throw Error("group was built without keeping its original generators");
  ExpressResult out;
  auto [res, combo] = reduce(p);
  if (!res.is_identity_word()) return out;
  BitVec orig_combo(originals_.size());
  for (std::uint32_t r : combo.ones()) orig_combo ^= row_combos_[r];
  Pauli prod = Pauli::identity(n_);
  for (std::uint32_t idx : orig_combo.ones()) {
    out.indices.push_back(idx);
    prod = prod * originals_[idx];
  }
  out.status = prod == p ? Membership::kMember : Membership::kSignMismatch;
  return out;
}

PauliGroup PauliGroup::subgroup_supported_in(const BitVec& region_mask) const {
  // kernel of the restriction-to-outside map, computed as a left nullspace
  std::vector<BitVec> constraint;
  constraint.reserve(rows_.size());
  for (const Pauli& r : rows_) {
    BitVec c(2 * n_);
    BitVec ox = BitVec::from_andnot(r.xbits(), region_mask);
    BitVec oz = BitVec::from_andnot(r.zbits(), region_mask);
    for (std::uint32_t b : ox.ones()) c.set(b);
    for (std::uint32_t b : oz.ones()) c.set(n_ + b);
    constraint.push_back(std::move(c));
  }
  std::vector<Pauli> elems;
  for (const BitVec& combo : gf2_left_nullspace(constraint)) elems.push_back(product_of_rows(combo));
  if (elems.empty()) {
    PauliGroup g;
    g.n_ = n_;
    return g;
  }
  return from_generators(elems, true, false);
}

std::vector<Pauli> PauliGroup::z_type_subgroup_in(const BitVec& region_mask) const {
  std::vector<BitVec> constraint;
  constraint.reserve(rows_.size());
  for (const Pauli& r : rows_) {
    BitVec c(2 * n_);
    for (std::uint32_t b : r.xbits().ones()) c.set(b);  // x part must cancel entirely
    BitVec oz = BitVec::from_andnot(r.zbits(), region_mask);
    for (std::uint32_t b : oz.ones()) c.set(n_ + b);
    constraint.push_back(std::move(c));
  }
  std::vector<Pauli> elems;
  for (const BitVec& combo : gf2_left_nullspace(constraint)) elems.push_back(product_of_rows(combo));
  return elems;
}

std::size_t PauliGroup::rank_restricted_to(const BitVec& mask) const {
  std::vector<BitVec> rows;
  rows.reserve(rows_.size());
  for (const Pauli& r : rows_) {
    BitVec c(2 * n_);
    BitVec ix = BitVec::from_and(r.xbits(), mask);
    BitVec iz = BitVec::from_and(r.zbits(), mask);
    for (std::uint32_t b : ix.ones()) c.set(b);
    for (std::uint32_t b : iz.ones()) c.set(n_ + b);
    rows.push_back(std::move(c));
  }
  return gf2_rank(std::move(rows));
}

std::size_t PauliGroup::subgroup_rank_in(const BitVec& region_mask) const {
  BitVec outside(n_);
  for (std::size_t q = 0; q < n_; ++q)
    if (!region_mask.test(q)) outside.set(q);
  return rank() - rank_restricted_to(outside);
}

std::optional<Pauli> PauliGroup::solve_restriction(const Pauli& target, const BitVec& mask) const {
  auto restricted = [&](const Pauli& p) {
    BitVec c(2 * n_);
    BitVec ix = BitVec::from_and(p.xbits(), mask);
    BitVec iz = BitVec::from_and(p.zbits(), mask);
    for (std::uint32_t b : ix.ones()) c.set(b);
    for (std::uint32_t b : iz.ones()) c.set(n_ + b);
    return c;
  };
  std::vector<BitVec> rows;
  rows.reserve(rows_.size());
  for (const Pauli& r : rows_) rows.push_back(restricted(r));
  auto combo = gf2_solve(rows, restricted(target));
  if (!combo) return std::nullopt;
  return product_of_rows(*combo);
}

}  // namespace stabgem
