#include "stabgem/logical.hpp"

#include <algorithm>
#include <cmath>

#include "stabgem/errors.hpp"

namespace stabgem {

bool commute_on(const Pauli& p, const Pauli& q, const BitVec& mask) {
  BitVec a = BitVec::from_and(p.xbits(), q.zbits());
  a &= mask;
  BitVec b = BitVec::from_and(p.zbits(), q.xbits());
  b &= mask;
  return ((a.count() ^ b.count()) & 1) == 0;
}

std::vector<Pauli> centralizer_in_region(const StabilizerCode& code, const BitVec& region) {
  std::size_t n = code.n;
  std::vector<std::uint32_t> ids = region.ones();
  std::size_t m = ids.size();
  // columns of the symplectic constraint matrix restricted to region qubits,
  // transposed so the left nullspace is the solution space
  std::size_t r = code.group.rank();
  std::vector<BitVec> cols(2 * m, BitVec(r));
  for (std::size_t i = 0; i < r; ++i) {
    const Pauli& g = code.group.rows()[i];
    for (std::size_t c = 0; c < m; ++c) {
      if (g.zbits().test(ids[c])) cols[c].set(i);
      if (g.xbits().test(ids[c])) cols[m + c].set(i);
    }
  }
  std::vector<Pauli> out;
  for (const BitVec& v : gf2_left_nullspace(cols)) {
    Pauli p(n);
    for (std::size_t c = 0; c < m; ++c) {
      if (v.test(c)) p.xbits().set(ids[c]);
      if (v.test(m + c)) p.zbits().set(ids[c]);
    }
    p.set_phase_exp((std::uint8_t)(p.xbits().and_count(p.zbits()) & 3));
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

// n choose k with a cheap overflow cap
double choose_estimate(std::size_t n, long k) {
  double v = 1.0;
  for (long i = 0; i < k; ++i) v *= (double)(n - (std::size_t)i) / (double)(i + 1);
  return v;
}

}  // namespace

std::optional<long> distance_bruteforce(const StabilizerCode& code, long max_weight) {
  if (code.params.k == 0) throw ConfigError("code has no logical operators");
  std::size_t n = code.n;
  for (long wgt = 1; wgt <= max_weight; ++wgt) {
    if (choose_estimate(n, wgt) * std::pow(3.0, (double)wgt) > 5e7)
      throw CapabilityError("distance search space too large at weight " + std::to_string(wgt));
    std::vector<std::uint32_t> idx((std::size_t)wgt);
    bool found = false;
    // lexicographic support enumeration
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos, std::uint32_t lo) {
      if (found) return;
      if (pos == (std::size_t)wgt) {
        std::size_t combos = 1;
        for (long i = 0; i < wgt; ++i) combos *= 3;
        for (std::size_t c = 0; c < combos && !found; ++c) {
          Pauli p(n);
          std::size_t t = c;
          for (long i = 0; i < wgt; ++i) {
            static const char letters[3] = {'X', 'Z', 'Y'};
            p.set_letter(idx[(std::size_t)i], letters[t % 3]);
            t /= 3;
          }
          bool central = true;
          for (const Pauli& g : code.generators)
            if (p.anticommutes(g)) {
              central = false;
              break;
            }
          if (central && !code.group.phase_exp_relative(p).has_value()) found = true;
        }
        return;
      }
      for (std::uint32_t q = lo; q + (std::uint32_t)(wgt - 1 - (long)pos) < n && !found; ++q) {
        idx[pos] = q;
        rec(pos + 1, q + 1);
      }
    };
    rec(0, 0);
    if (found) return wgt;
  }
  return std::nullopt;
}

bool is_correctable(const StabilizerCode& code, const BitVec& region) {
  std::vector<std::uint32_t> ids = region.ones();
  std::size_t m = ids.size();
  if (m == 0) return true;
  std::size_t r = code.group.rank();
  // centralizer-in-region dimension = 2|R| - rank of the restricted
  // symplectic constraint matrix
  std::vector<BitVec> rows;
  rows.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Pauli& g = code.group.rows()[i];
    BitVec row(2 * m);
    for (std::size_t c = 0; c < m; ++c) {
      if (g.zbits().test(ids[c])) row.set(c);
      if (g.xbits().test(ids[c])) row.set(m + c);
    }
    rows.push_back(std::move(row));
  }
  std::size_t central_dim = 2 * m - gf2_rank(std::move(rows));
  return central_dim == code.group.subgroup_rank_in(region);
}

Pauli clean_logical(const StabilizerCode& code, const Pauli& l, const BitVec& region) {
  for (std::size_t i = 0; i < code.generators.size(); ++i)
    if (l.anticommutes(code.generators[i]))
      throw InputError("operator anticommutes with generator " + std::to_string(i) +
                       ", not a logical");
  auto s = code.group.solve_restriction(l, region);
  if (!s) {
    // cleaning can only fail when the region hosts a logical; dig one up so
    // the error carries a witness
    for (const Pauli& c : centralizer_in_region(code, region))
      if (!code.group.phase_exp_relative(c).has_value())
        throw ConstructionError("region is not correctable, cleaning blocked by in-region logical " +
                                c.str());
    throw ConstructionError("cleaning infeasible although region looks correctable");
  }
  Pauli out = l * *s;
  BitVec overlap = BitVec::from_and(out.support_mask(), region);
  if (overlap.any()) throw ConstructionError("cleaned operator still touches the region");
  return out;
}

Pauli tighten_in_region(const StabilizerCode& code, Pauli p, const BitVec& allowed) {
  bool improved = true;
  int guard = 0;
  while (improved && guard++ < 200) {
    improved = false;
    for (const Pauli& g : code.generators) {
      if (!g.support_mask().is_subset_of(allowed)) continue;
      Pauli cand = p * g;
      if (cand.weight() < p.weight()) {
        p = cand;
        improved = true;
      }
    }
  }
  return p;
}

namespace {

BitVec complement(const BitVec& m, std::size_t n) {
  BitVec out(n);
  for (std::size_t q = 0; q < n; ++q)
    if (!m.test(q)) out.set(q);
  return out;
}

BitVec word_bits(const Pauli& p) {
  std::size_t n = p.n();
  BitVec w(2 * n);
  for (std::uint32_t b : p.xbits().ones()) w.set(b);
  for (std::uint32_t b : p.zbits().ones()) w.set(n + b);
  return w;
}

Pauli word_to_pauli(const BitVec& w, std::size_t n) {
  Pauli p(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (w.test(q)) p.xbits().set(q);
    if (w.test(n + q)) p.zbits().set(q);
  }
  p.set_phase_exp((std::uint8_t)(p.xbits().and_count(p.zbits()) & 3));
  return p;
}

bool symplectic_product(const BitVec& v, const BitVec& w, std::size_t n) {
  bool acc = false;
  for (std::size_t q = 0; q < n; ++q)
    acc ^= (v.test(q) && w.test(n + q)) ^ (v.test(n + q) && w.test(q));
  return acc;
}

}  // namespace

MeshLogicalReport mesh_logicals(const StabilizerCode& code, const MeshSpec& spec1,
                                const MeshSpec& spec2) {
  if (code.params.k == 0) throw ConfigError("code has no logical operators");
  const Layout& lay = code.layout;
  MeshLogicalReport rep;
  rep.spec1 = spec1;
  rep.spec2 = spec2;
  rep.mesh1 = mesh_region(lay, spec1);
  rep.mesh2 = mesh_region(lay, spec2);
  BitVec holes1 = complement(rep.mesh1, code.n);
  BitVec holes2 = complement(rep.mesh2, code.n);
  if (!is_correctable(code, holes1))
    throw FeasibilityError("complement of the first mesh is not correctable");
  if (!is_correctable(code, holes2))
    throw FeasibilityError("complement of the second mesh is not correctable");

  // logical quotient basis: centralizer words reduced against the group words
  BitVec all(code.n);
  for (std::size_t q = 0; q < code.n; ++q) all.set(q);
  std::vector<Pauli> central = centralizer_in_region(code, all);
  std::vector<BitVec> echelon;  // ascending lowest-bit order, group words first
  auto reduce = [&](BitVec w) {
    for (const BitVec& e : echelon) {
      if (w.none()) break;
      if (w.test(e.find_first())) w ^= e;
    }
    return w;
  };
  auto insert = [&](BitVec w) {
    std::size_t pv = w.find_first();
    auto it = echelon.begin();
    while (it != echelon.end() && it->find_first() < pv) ++it;
    echelon.insert(it, std::move(w));
  };
  for (const Pauli& g : code.group.rows()) insert(word_bits(g));
  std::vector<BitVec> quotient;
  for (const Pauli& c : central) {
    BitVec red = reduce(word_bits(c));
    if (red.none()) continue;
    insert(red);
    quotient.push_back(red);
  }
  if (quotient.empty()) throw ConfigError("code has no logical operators");

  const BitVec& v1 = quotient.front();
  const BitVec* v2 = nullptr;
  for (std::size_t i = 1; i < quotient.size(); ++i)
    if (symplectic_product(v1, quotient[i], code.n)) {
      v2 = &quotient[i];
      break;
    }
  if (!v2) throw Error("logical quotient has no symplectic partner for the first pivot");

  rep.l1 = tighten_in_region(code, clean_logical(code, word_to_pauli(v1, code.n), holes1),
                             rep.mesh1);
  rep.l2 = tighten_in_region(code, clean_logical(code, word_to_pauli(*v2, code.n), holes2),
                             rep.mesh2);
  if (!rep.l1.anticommutes(rep.l2))
    throw Error("cleaned logicals lost their anticommutation");  // cannot happen
  if (BitVec::from_and(rep.l1.support_mask(), holes1).any() ||
      BitVec::from_and(rep.l2.support_mask(), holes2).any())
    throw Error("cleaned logical escaped its mesh");  // cannot happen

  rep.squares = crossing_squares(spec1, spec2, lay.period_x, lay.period_y);
  std::sort(rep.squares.begin(), rep.squares.end(), [](const CrossSquare& a, const CrossSquare& b) {
    return std::tie(a.kind, a.row, a.col) < std::tie(b.kind, b.row, b.col);
  });
  int total_parity = 0;
  bool have_q = false;
  for (const CrossSquare& sq : rep.squares) {
    BitVec reg = cross_square_region(lay, sq);
    bool anti = !commute_on(rep.l1, rep.l2, reg);
    rep.square_anticommutes.push_back(anti ? 1 : 0);
    total_parity ^= anti ? 1 : 0;
    if (anti && !have_q) {
      rep.Q = sq;
      rep.q_region = reg;
      have_q = true;
    }
  }
  if (total_parity != 1 || !have_q)
    throw Error("crossing squares do not carry the anticommutation, geometry is inconsistent");
  return rep;
}

std::pair<MeshSpec, MeshSpec> default_mesh_specs(const StabilizerCode& code, long t) {
  const Layout& lay = code.layout;
  if (!(lay.period_x > 0.0) || !(lay.period_y > 0.0))
    throw ConfigError("mesh construction needs a torus layout");
  long px = std::lround(lay.period_x), py = std::lround(lay.period_y);
  long w = (long)std::ceil(code.params.w);
  long s = 2 * (w + t) + 1;
  // smallest pitch >= 2s dividing both periods maximizes the square count
  long best = 0;
  for (long pitch = 2 * s; pitch <= std::min(px, py); ++pitch)
    if (px % pitch == 0 && py % pitch == 0) {
      best = pitch;
      break;
    }
  if (best == 0 && px == py && px >= 2 * s) best = px;
  if (best == 0) throw FeasibilityError("layout too small for mesh band " + std::to_string(s));
  MeshSpec m1{0, 0, best - s, s};
  MeshSpec m2{s, s, best - s, s};
  return {m1, m2};
}

}  // namespace stabgem
