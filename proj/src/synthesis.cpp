#include "stabgem/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "stabgem/errors.hpp"

namespace stabgem {

Pauli truncate_stabilizer(const StabilizerCode& code, const Pauli& s, const BitVec& region) {
  ExpressResult expr = code.group.express_in_originals(s);
  if (expr.status == Membership::kNotInSpan)
    throw InputError("operator word is outside the stabilizer group");
  if (expr.status == Membership::kSignMismatch)
    throw InputError("operator matches the stabilizer group only up to sign");
  Pauli out = Pauli::identity(code.n);
  for (std::uint32_t idx : expr.indices)
    if (code.generators[idx].support_mask().intersects(region)) out = out * code.generators[idx];

  BitVec grown = thicken(code.layout, region, code.params.w);
  if (!out.support_mask().is_subset_of(grown))
    throw ConstructionError("truncation escaped the thickened region");
  BitVec dx = s.xbits();
  dx ^= out.xbits();
  dx &= region;
  BitVec dz = s.zbits();
  dz ^= out.zbits();
  dz &= region;
  if (dx.any() || dz.any())
    throw ConstructionError("truncation changed the operator on the kept region");
  return out;
}

Pauli deform_string(const StabilizerCode& code, const Pauli& gamma, const BitVec& forbidden) {
  auto g = code.group.solve_restriction(gamma, forbidden);
  if (!g) throw FeasibilityError("no stabilizer deformation moves the string off the region");
  Pauli out = gamma * *g;
  if (out.support_mask().intersects(forbidden))
    throw Error("deformation solver left support on the forbidden region");  // cannot happen
  return out;
}

namespace {

std::vector<std::uint32_t> anticommuting_qubits(const Pauli& p, const Pauli& q) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t b : BitVec::from_or(p.support_mask(), q.support_mask()).ones()) {
    int a = p.letter_code(b), c = q.letter_code(b);
    if (a != 0 && c != 0 && a != c) out.push_back(b);
  }
  return out;
}

Vec2 centroid_near(const Layout& lay, const std::vector<std::uint32_t>& ids, Vec2 ref) {
  Vec2 acc{0.0, 0.0};
  for (std::uint32_t q : ids) {
    Vec2 d = lay.displacement(ref, lay.pos[q]);
    acc.x += d.x;
    acc.y += d.y;
  }
  double m = (double)ids.size();
  return {ref.x + acc.x / m, ref.y + acc.y / m};
}

BitVec complement(const BitVec& m, std::size_t n) {
  BitVec out(n);
  for (std::size_t q = 0; q < n; ++q)
    if (!m.test(q)) out.set(q);
  return out;
}

long mod_pos(long v, long m) { return ((v % m) + m) % m; }

/* Direction of l2's strand through the crossing square: the extent of l2's
 * support around the anchor decides, and the square orientation (kind 0 puts
 * the second mesh's band vertical) breaks ties.  The semicircle cut and the
 * re-crossing search both have to run along this axis. */
bool strand_axis_is_y(const Layout& lay, const Pauli& l2, Vec2 anchor, const CrossSquare& q) {
  double dx = 0.0, dy = 0.0;
  for (std::uint32_t b : l2.support()) {
    Vec2 d = lay.displacement(anchor, lay.pos[b]);
    if (std::hypot(d.x, d.y) > (double)q.band + 0.5) continue;
    dx = std::max(dx, std::fabs(d.x));
    dy = std::max(dy, std::fabs(d.y));
  }
  if (dy > dx + 0.5) return true;
  if (dx > dy + 0.5) return false;
  return q.kind == 0;
}

// disk big enough to hold the crossing content plus one generator diameter,
// but still inside a mesh hole
double truncation_radius(double w, double spread, long hole) {
  return std::min(std::max(3.0 * w, spread + w + 0.5), (double)hole / 2.0 - 0.5);
}

// largest disk around c that stays clear of every qubit in the region
double clear_radius(const Layout& lay, Vec2 c, const BitVec& region) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t q : region.ones()) best = std::min(best, lay.dist(c, lay.pos[q]));
  return best - 0.5;
}

MeshSpec recentre_hole(const MeshSpec& base, Vec2 target) {
  long pitch = base.pitch();
  MeshSpec out = base;
  out.ox = mod_pos(std::lround(target.x - (double)base.band - (double)base.hole / 2.0), pitch);
  out.oy = mod_pos(std::lround(target.y - (double)base.band - (double)base.hole / 2.0), pitch);
  return out;
}

}  // namespace

DeformedSpecs default_deformed_specs(const StabilizerCode& code, const MeshLogicalReport& report) {
  auto aq = anticommuting_qubits(report.l1, report.l2);
  std::vector<std::uint32_t> in_q;
  for (std::uint32_t q : aq)
    if (report.q_region.test(q)) in_q.push_back(q);
  if (in_q.empty()) throw ConstructionError("crossing square carries no anticommuting content");
  const Layout& lay = code.layout;
  Vec2 anchor = centroid_near(lay, in_q, report.Q.center());
  double spread = 0.0;
  for (std::uint32_t q : in_q) spread = std::max(spread, lay.dist(anchor, lay.pos[q]));
  DeformedSpecs d;
  d.b1p = recentre_hole(report.spec1, anchor);
  // the far crossing sits where l2's strand exits the first disk, so place the
  // second hole one disk radius along the strand, both ways
  double r1 = std::min(truncation_radius(code.params.w, spread, d.b1p.hole),
                       clear_radius(lay, anchor, mesh_region(lay, d.b1p)));
  bool axis_y = strand_axis_is_y(lay, report.l2, anchor, report.Q);
  Vec2 step = axis_y ? Vec2{0.0, r1} : Vec2{r1, 0.0};
  d.b2p_up = recentre_hole(report.spec2, {anchor.x + step.x, anchor.y + step.y});
  d.b2p_down = recentre_hole(report.spec2, {anchor.x - step.x, anchor.y - step.y});
  return d;
}

BraidingTriple build_braiding_triple(const StabilizerCode& code, const MeshLogicalReport& report,
                                     const DeformedSpecs& deformed) {
  const Layout& lay = code.layout;
  double w = code.params.w;
  std::ostringstream prov;
  BraidingTriple out;
  out.q_region = report.q_region;

  auto aq_all = anticommuting_qubits(report.l1, report.l2);
  std::vector<std::uint32_t> aq;
  for (std::uint32_t q : aq_all)
    if (report.q_region.test(q)) aq.push_back(q);
  if (aq.empty()) throw ConstructionError("crossing square carries no anticommuting content");
  Vec2 anchor = centroid_near(lay, aq, report.Q.center());
  bool axis_y = strand_axis_is_y(lay, report.l2, anchor, report.Q);
  auto along = [&](Vec2 d) { return axis_y ? d.y : d.x; };
  prov << "l2 strand runs " << (axis_y ? "vertically" : "horizontally") << "; ";

  // deformed copy of l1, away from the disk over Q
  BitVec b1p_mesh = mesh_region(lay, deformed.b1p);
  BitVec b1p_holes = complement(b1p_mesh, code.n);
  if (!is_correctable(code, b1p_holes))
    throw FeasibilityError("complement of the deformed first mesh is not correctable");
  Pauli l1p = tighten_in_region(code, clean_logical(code, report.l1, b1p_holes), b1p_mesh);
  Pauli big_s = report.l1 * l1p;  // l1^2 = I, so this is the group element joining them
  if (code.group.phase_exp_relative(big_s) != 0)
    throw ConstructionError("l1 and its deformed copy do not differ by a stabilizer");

  double spread = 0.0;
  for (std::uint32_t q : aq) spread = std::max(spread, lay.dist(anchor, lay.pos[q]));
  // clamping against the deformed mesh keeps the deformed copy out of the disk
  double r1 = std::min(truncation_radius(w, spread, deformed.b1p.hole),
                       clear_radius(lay, anchor, b1p_mesh));
  if (r1 < spread + 0.5)
    throw FeasibilityError("crossing content spread " + std::to_string(spread) +
                           " exceeds the mesh hole");
  BitVec disk1 = disk_region(lay, anchor, r1);
  Pauli circle = truncate_stabilizer(code, big_s, disk1);

  // keep the generators on one side of l1's strand, try up first
  ExpressResult circ_expr = code.group.express_in_originals(circle);
  if (circ_expr.status != Membership::kMember)
    throw Error("truncated operator lost group membership");  // cannot happen
  double cut = w / 2.0 + 0.25;
  auto half_product = [&](bool up) {
    Pauli g1 = Pauli::identity(code.n);
    for (std::uint32_t idx : circ_expr.indices) {
      Vec2 c = support_centroid(lay, code.generators[idx]);
      double rel = along(lay.displacement(anchor, c));
      if (up ? (rel >= -cut) : (rel <= cut)) g1 = g1 * code.generators[idx];
    }
    return g1;
  };
  double band_half = (double)report.Q.band / 2.0;
  auto classify = [&](const Pauli& g1, std::vector<std::uint32_t>& up_ids,
                      std::vector<std::uint32_t>& down_ids) {
    int near_par = 0, up_par = 0, down_par = 0;
    up_ids.clear();
    down_ids.clear();
    for (std::uint32_t q : anticommuting_qubits(g1, report.l2)) {
      double rel = along(lay.displacement(anchor, lay.pos[q]));
      if (std::fabs(rel) <= band_half) {
        near_par ^= 1;
      } else if (rel > 0) {
        up_par ^= 1;
        up_ids.push_back(q);
      } else {
        down_par ^= 1;
        down_ids.push_back(q);
      }
    }
    if (near_par == 0) return 0;      // no crossing at Q, side cut destroyed it
    if (up_par == down_par) return 0; // exactly one far side must carry the parity
    return up_par ? 1 : -1;
  };

  std::vector<std::uint32_t> up_ids, down_ids;
  Pauli gamma1 = half_product(true);
  int side = classify(gamma1, up_ids, down_ids);
  bool reflected = false;
  if (side == 0) {
    gamma1 = half_product(false);
    side = classify(gamma1, up_ids, down_ids);
    reflected = true;
  }
  if (side == 0)
    throw ConstructionError(
        "no half-disk cut leaves a single odd re-crossing of l2 (step: semicircle)");
  std::vector<std::uint32_t>& far = (side > 0) ? up_ids : down_ids;
  prov << (reflected ? "reflected half-disk; " : "leading half-disk; ");
  prov << "far crossing " << (side > 0 ? "ahead" : "behind") << "; ";

  // small loop of l2 around the far crossing
  const MeshSpec& b2p = (side > 0) ? deformed.b2p_up : deformed.b2p_down;
  BitVec b2p_mesh = mesh_region(lay, b2p);
  BitVec b2p_holes = complement(b2p_mesh, code.n);
  if (!is_correctable(code, b2p_holes))
    throw FeasibilityError("complement of the deformed second mesh is not correctable");
  Pauli l2p = tighten_in_region(code, clean_logical(code, report.l2, b2p_holes), b2p_mesh);
  Pauli s2_whole = report.l2 * l2p;
  if (code.group.phase_exp_relative(s2_whole) != 0)
    throw ConstructionError("l2 and its deformed copy do not differ by a stabilizer");

  Vec2 far_guess = anchor;
  (axis_y ? far_guess.y : far_guess.x) += (side > 0 ? r1 : -r1);
  Vec2 c2 = centroid_near(lay, far, far_guess);
  double spread2 = 0.0;
  for (std::uint32_t q : far) spread2 = std::max(spread2, lay.dist(c2, lay.pos[q]));
  // same clamp as for the first disk; l2p lives in b2p_mesh so the truncated
  // loop cannot pick it up
  double r2 = std::min(truncation_radius(w, spread2, b2p.hole),
                       clear_radius(lay, c2, b2p_mesh));
  if (r2 < spread2 + 0.5)
    throw ConstructionError("far crossing spread " + std::to_string(spread2) +
                            " leaves no room for the second disk, radius " + std::to_string(r2));
  BitVec disk2 = disk_region(lay, c2, r2);
  Pauli s2 = truncate_stabilizer(code, s2_whole, disk2);

  // split the loop into two segments by an angular prefix around the crossing
  auto a2 = anticommuting_qubits(s2, gamma1);
  if (a2.empty()) throw ConstructionError("truncated l2 loop never meets gamma1");
  BitVec a2_mask(code.n);
  for (std::uint32_t q : a2) a2_mask.set(q);
  std::vector<std::uint32_t> supp2 = s2.support();
  std::sort(supp2.begin(), supp2.end(), [&](std::uint32_t a, std::uint32_t b) {
    Vec2 da = lay.displacement(c2, lay.pos[a]);
    Vec2 db = lay.displacement(c2, lay.pos[b]);
    double ta = std::atan2(da.y, da.x), tb = std::atan2(db.y, db.x);
    return std::tie(ta, a) < std::tie(tb, b);
  });
  BitVec seg_mask(code.n);
  int par = 0;
  std::size_t taken = 0;
  for (std::uint32_t q : supp2) {
    seg_mask.set(q);
    ++taken;
    if (a2_mask.test(q)) par ^= 1;
    if (par == 1) break;
  }
  if (par != 1 || taken == supp2.size())
    throw ConstructionError("loop segments cannot be separated at the crossing");
  Pauli gamma2 = s2.restricted_to(seg_mask);
  Pauli gamma2p = gamma2 * s2;  // gamma2^2 = I, so gamma2 * gamma2p = s2 exactly

  // the type invariants, all machine-checked before returning
  if (code.group.phase_exp_relative(gamma1) != 0)
    throw ConstructionError("gamma1 is not a +1 group element");
  if (code.group.phase_exp_relative(gamma2 * gamma2p) != 0)
    throw ConstructionError("segment product left the stabilizer group");
  if (!gamma1.anticommutes(gamma2) || !gamma1.anticommutes(gamma2p))
    throw ConstructionError("segments do not both anticommute with gamma1");

  out.gamma1 = gamma1;
  out.gamma2 = gamma2;
  out.gamma2p = gamma2p;
  out.reflected = reflected;
  BitVec qup(code.n), qupp(code.n);
  for (std::uint32_t q : anticommuting_qubits(gamma2, gamma1)) qup.set(q);
  for (std::uint32_t q : anticommuting_qubits(gamma2p, gamma1)) qupp.set(q);
  out.qup_region = std::move(qup);
  out.qup_prime_region = std::move(qupp);
  prov << "disk radii " << r1 << " and " << r2 << "; angular prefix cut after " << taken
       << " of " << supp2.size() << " loop qubits";
  out.provenance.push_back(prov.str());
  return out;
}

namespace {

struct HoneyGrid {
  long lx = 0, ly = 0;
  std::map<std::pair<long, long>, std::size_t> at;

  static HoneyGrid from_layout(const Layout& lay) {
    HoneyGrid g;
    if (!(lay.period_x > 0.0) || !(lay.period_y > 0.0))
      throw InputError("honeycomb strings need the brick-wall torus layout");
    g.lx = std::lround(lay.period_x / 2.0);
    g.ly = std::lround(lay.period_y / 2.0);
    for (std::size_t q = 0; q < lay.size(); ++q) {
      long x = std::lround(lay.pos[q].x / 2.0), y = std::lround(lay.pos[q].y / 2.0);
      if (2.0 * x != lay.pos[q].x || 2.0 * y != lay.pos[q].y)
        throw InputError("layout is not a vertex grid with doubled coordinates");
      g.at[{x, y}] = q;
    }
    return g;
  }

  std::size_t vertex(long x, long y) const {
    auto it = at.find({((x % lx) + lx) % lx, ((y % ly) + ly) % ly});
    if (it == at.end()) throw InputError("link names a vertex with no qubit");
    return it->second;
  }
};

}  // namespace

Pauli honeycomb_link_operator(const StabilizerCode& code, const HoneyLink& link) {
  HoneyGrid grid = HoneyGrid::from_layout(code.layout);
  Pauli p(code.n);
  if (link.kind == 'H') {
    char letter = ((link.x + link.y) % 2 + 2) % 2 == 0 ? 'X' : 'Y';
    p.set_letter(grid.vertex(link.x, link.y), letter);
    p.set_letter(grid.vertex(link.x + 1, link.y), letter);
  } else if (link.kind == 'V') {
    if (((link.x + link.y) % 2 + 2) % 2 != 0)
      throw InputError("no rung at an odd column/row parity vertex");
    p.set_letter(grid.vertex(link.x, link.y), 'Z');
    p.set_letter(grid.vertex(link.x, link.y + 1), 'Z');
  } else {
    throw InputError("link kind must be 'H' or 'V'");
  }
  return p;
}

Pauli honeycomb_string(const StabilizerCode& code, const std::vector<HoneyLink>& path) {
  if (path.empty()) throw InputError("empty link path");
  HoneyGrid grid = HoneyGrid::from_layout(code.layout);
  auto ends = [&](const HoneyLink& l) {
    std::size_t a = grid.vertex(l.x, l.y);
    std::size_t b = l.kind == 'H' ? grid.vertex(l.x + 1, l.y) : grid.vertex(l.x, l.y + 1);
    return std::pair<std::size_t, std::size_t>{a, b};
  };
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto [a1, b1] = ends(path[i]);
    auto [a2, b2] = ends(path[i + 1]);
    if (a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2)
      throw InputError("link path is disconnected at step " + std::to_string(i + 1));
  }
  Pauli out = Pauli::identity(code.n);
  for (const HoneyLink& l : path) out = out * honeycomb_link_operator(code, l);
  for (std::size_t gi = 0; gi < code.generators.size(); ++gi)
    if (out.anticommutes(code.generators[gi]))
      throw Error("string anticommutes with generator " + std::to_string(gi));  // cannot happen
  return out;
}

ExchangeTriple exchange_triple(const StabilizerCode& code, std::size_t junction,
                               const std::array<std::vector<HoneyLink>, 3>& arms) {
  ExchangeTriple t;
  t.junction = junction;
  HoneyGrid grid = HoneyGrid::from_layout(code.layout);
  Pauli ms[3];
  std::size_t far_end[3];
  for (int i = 0; i < 3; ++i) {
    ms[i] = honeycomb_string(code, arms[i]);
    if (!ms[i].support_mask().test(junction))
      throw InputError("arm " + std::to_string(i + 1) + " does not reach the junction");
    std::map<std::size_t, int> incidence;
    for (const HoneyLink& l : arms[i]) {
      incidence[grid.vertex(l.x, l.y)] ^= 1;
      incidence[l.kind == 'H' ? grid.vertex(l.x + 1, l.y) : grid.vertex(l.x, l.y + 1)] ^= 1;
    }
    std::size_t odd_far = code.n;
    int odd_count = 0;
    for (auto [v, c] : incidence)
      if (c) {
        ++odd_count;
        if (v != junction) odd_far = v;
      }
    if (odd_count != 2 || odd_far == code.n || incidence[junction] == 0)
      throw InputError("arm " + std::to_string(i + 1) + " is not an open path from the junction");
    far_end[i] = odd_far;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      BitVec shared = BitVec::from_and(ms[i].support_mask(), ms[j].support_mask());
      if (shared.count() != 1 || !shared.test(junction))
        throw InputError("arms " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                         " overlap beyond the junction");
      if (ms[i].commutes(ms[j]))
        throw ConstructionError("arms " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " commute, no exchange at the junction");
    }
  t.m1 = ms[0];
  t.m2 = ms[1];
  t.m3 = ms[2];
  BitVec* regions[3] = {&t.endpoint_a, &t.endpoint_b, &t.endpoint_c};
  for (int i = 0; i < 3; ++i) {
    *regions[i] = BitVec(code.n);
    regions[i]->set(far_end[i]);
  }
  t.endpoint_d = BitVec(code.n);
  t.endpoint_d.set(junction);
  return t;
}

ExchangeTriple canonical_exchange_triple(const StabilizerCode& code, Vec2 near) {
  HoneyGrid grid = HoneyGrid::from_layout(code.layout);
  const Layout& lay = code.layout;
  long bx = -1, by = -1;
  double best = 1e300;
  std::size_t best_id = 0;
  for (long y = 0; y < grid.ly; ++y)
    for (long x = 0; x < grid.lx; ++x) {
      if ((x + y) % 2 != 0) continue;  // junction needs its rung
      std::size_t id = grid.vertex(x, y);
      double d = lay.dist(near, lay.pos[id]);
      if (d < best - 1e-9 || (std::fabs(d - best) <= 1e-9 && id < best_id)) {
        best = d;
        bx = x;
        by = y;
        best_id = id;
      }
    }
  if (bx < 0) throw ConfigError("no rung vertex found for the junction");
  std::array<std::vector<HoneyLink>, 3> arms = {
      std::vector<HoneyLink>{{bx - 1, by, 'H'}},
      std::vector<HoneyLink>{{bx, by, 'H'}},
      std::vector<HoneyLink>{{bx, by, 'V'}},
  };
  return exchange_triple(code, grid.vertex(bx, by), arms);
}

}  // namespace stabgem
