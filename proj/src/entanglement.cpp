#include "stabgem/entanglement.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "stabgem/errors.hpp"

namespace stabgem {

double rdm_zero_fidelity(const MixedStabilizerState& state, const BitVec& region) {
  std::vector<Pauli> zbasis = state.group.z_type_subgroup_in(region);
  for (const Pauli& p : zbasis)
    if (p.sign() < 0) return 0.0;  // nontrivial sign character, the sum cancels
  return std::ldexp(1.0, (int)zbasis.size() - (int)region.count());
}

bool decoupling_check(const MixedStabilizerState& state, const std::vector<BitVec>& patches) {
  if (patches.empty()) throw InputError("no patches given");
  BitVec uni(state.n());
  for (const BitVec& p : patches) {
    if (uni.intersects(p)) throw InputError("patches overlap");
    uni |= p;
  }
  std::size_t sum = 0;
  for (const BitVec& p : patches) sum += state.group.subgroup_rank_in(p);
  return sum == state.group.subgroup_rank_in(uni);
}

E0Bruteforce e0_product_pauli_bruteforce(const MixedStabilizerState& state) {
  std::size_t n = state.n();
  if (n > 12)
    throw CapabilityError("exhaustive product scan is capped at 12 qubits, use the ascent");
  const std::vector<Pauli>& rows = state.group.rows();
  std::size_t r = rows.size();

  // one GF(2) constraint per qubit on row combos; which constraint depends on
  // the measurement basis chosen there
  std::vector<BitVec> vx(n, BitVec(r)), vz(n, BitVec(r)), vy(n, BitVec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t q = 0; q < n; ++q) {
      bool x = rows[i].xbits().test(q), z = rows[i].zbits().test(q);
      if (z) vx[q].set(i);
      if (x) vz[q].set(i);
      if (x != z) vy[q].set(i);
    }

  const char* basis = "XZY";
  std::vector<int> field(n, 0), best_field;
  long best_diag = -1;
  std::vector<BitVec> m;
  m.reserve(n);
  for (;;) {
    m.clear();
    for (std::size_t q = 0; q < n; ++q)
      m.push_back(field[q] == 0 ? vx[q] : field[q] == 1 ? vz[q] : vy[q]);
    long diag = (long)r - (long)gf2_rank(m);
    if (diag > best_diag) {
      best_diag = diag;
      best_field = field;
    }
    std::size_t q = 0;
    for (; q < n; ++q) {
      if (++field[q] < 3) break;
      field[q] = 0;
    }
    if (q == n) break;
  }

  // recover the diagonal subgroup for the winning field and solve for signs
  m.clear();
  for (std::size_t q = 0; q < n; ++q)
    m.push_back(best_field[q] == 0 ? vx[q] : best_field[q] == 1 ? vz[q] : vy[q]);
  std::vector<BitVec> cols(r, BitVec(n));
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t i = 0; i < r; ++i)
      if (m[q].test(i)) cols[i].set(q);
  std::vector<BitVec> combos = gf2_left_nullspace(cols);
  std::vector<Pauli> diag_basis;
  for (const BitVec& c : combos) diag_basis.push_back(state.group.product_of_rows(c));

  std::vector<BitVec> sign_cols(n, BitVec(diag_basis.size()));
  BitVec rhs(diag_basis.size());
  for (std::size_t j = 0; j < diag_basis.size(); ++j) {
    for (std::uint32_t q : diag_basis[j].support_mask().ones()) sign_cols[q].set(j);
    if (diag_basis[j].sign() < 0) rhs.set(j);
  }
  auto sol = gf2_solve(sign_cols, rhs);
  if (!sol) throw Error("diagonal sign system is inconsistent");  // cannot happen, -I is not in the group

  E0Bruteforce out;
  out.bits = (long)n - best_diag;
  out.overlap = std::ldexp(1.0, -(int)out.bits);
  out.letters.resize(n);
  out.signs.resize(n);
  for (std::size_t q = 0; q < n; ++q) {
    out.letters[q] = basis[best_field[q]];
    out.signs[q] = sol->test(q) ? '-' : '+';
  }
  return out;
}

AscentResult e0_alternating_ascent(const DenseState& psi, int restarts, int iters, double tol,
                                   std::uint64_t seed) {
  std::size_t n = psi.n();
  const auto& amp = psi.amps();
  double norm2 = 0.0;
  for (const auto& a : amp) norm2 += std::norm(a);
  if (std::fabs(norm2 - 1.0) > 1e-9) throw InputError("input state is not normalized");
  if (restarts < 1 || iters < 1) throw InputError("restarts and iters must be positive");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  AscentResult best;
  best.best_overlap = -1.0;

  for (int rs = 0; rs < restarts; ++rs) {
    std::vector<std::array<std::complex<double>, 2>> u(n);
    for (auto& s : u) {
      std::complex<double> a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
      double nn = std::sqrt(std::norm(a) + std::norm(b));
      s = {a / nn, b / nn};
    }
    double cur = 0.0, prev = -1.0;
    for (int it = 0; it < iters; ++it) {
      for (std::size_t q = 0; q < n; ++q) {
        std::complex<double> c0 = 0.0, c1 = 0.0;
        for (std::size_t b = 0; b < amp.size(); ++b) {
          std::complex<double> wgt = amp[b];
          for (std::size_t p = 0; p < n; ++p)
            if (p != q) wgt *= std::conj(u[p][(b >> p) & 1]);
          ((b >> q) & 1 ? c1 : c0) += wgt;
        }
        double nn = std::sqrt(std::norm(c0) + std::norm(c1));
        if (nn > 1e-300) {
          u[q] = {c0 / nn, c1 / nn};  // the overlap becomes exactly nn
          cur = nn * nn;
        }
      }
      if (cur - prev < tol) break;
      prev = cur;
    }
    best.restart_overlaps.push_back(cur);
    if (cur > best.best_overlap) {
      best.best_overlap = cur;
      best.witness = u;
    }
  }
  best.bits = -std::log2(std::max(best.best_overlap, 1e-300));
  return best;
}

namespace {

using Mat4 = Eigen::Matrix4cd;
using Amps = std::vector<std::complex<double>>;

void apply_pair_gate(Amps& a, std::size_t qa, std::size_t qb, const Mat4& g) {
  std::size_t ma = 1ull << qa, mb = 1ull << qb;
  for (std::size_t b = 0; b < a.size(); ++b) {
    if (b & (ma | mb)) continue;
    Eigen::Vector4cd v(a[b], a[b | ma], a[b | mb], a[b | ma | mb]);
    Eigen::Vector4cd w = g * v;
    a[b] = w[0];
    a[b | ma] = w[1];
    a[b | mb] = w[2];
    a[b | ma | mb] = w[3];
  }
}

// environment of one gate: v = sum_ij g_ij env(i,j) over local indices
Mat4 pair_environment(const Amps& upper, const Amps& lower, std::size_t qa, std::size_t qb) {
  Mat4 env = Mat4::Zero();
  std::size_t ma = 1ull << qa, mb = 1ull << qb;
  for (std::size_t b = 0; b < lower.size(); ++b) {
    if (b & (ma | mb)) continue;
    std::size_t idx[4] = {b, b | ma, b | mb, b | ma | mb};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) env(i, j) += std::conj(upper[idx[i]]) * lower[idx[j]];
  }
  return env;
}

Mat4 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Mat4> qr(m);
  Mat4 q = qr.householderQ();
  return q;
}

}  // namespace

CircuitAscentResult et_upper_via_circuit_ascent(const DenseState& psi, int t, std::uint64_t seed,
                                                int restarts, int sweeps) {
  std::size_t n = psi.n();
  if (t < 0) throw InputError("negative circuit depth");
  if (restarts < 1 || sweeps < 1) throw InputError("restarts and sweeps must be positive");

  // brick-wall pairing on a line: layer l couples (l%2, l%2+1), (l%2+2, ...)
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<std::size_t> layer_of;
  for (int l = 0; l < t; ++l)
    for (std::size_t a = (std::size_t)(l % 2); a + 1 < n; a += 2) {
      slots.push_back({a, a + 1});
      layer_of.push_back((std::size_t)l);
    }

  std::mt19937_64 rng(seed);
  CircuitAscentResult best;
  best.t = t;
  best.overlap = -1.0;

  for (int rs = 0; rs < restarts; ++rs) {
    std::vector<Mat4> gates(slots.size());
    for (auto& g : gates) g = random_unitary(rng);

    double cur = 0.0, prev = -1.0;
    for (int sw = 0; sw < sweeps && !slots.empty(); ++sw) {
      // upperAfter[k] = adjoints of gates k+1.. applied to psi
      std::vector<Amps> upper_after(slots.size());
      Amps up = psi.amps();
      for (std::size_t k = slots.size(); k-- > 0;) {
        upper_after[k] = up;
        apply_pair_gate(up, slots[k].first, slots[k].second, gates[k].adjoint());
      }
      Amps lower((std::size_t)1 << n, 0.0);
      lower[0] = 1.0;
      for (std::size_t k = 0; k < slots.size(); ++k) {
        Mat4 env = pair_environment(upper_after[k], lower, slots[k].first, slots[k].second);
        Eigen::JacobiSVD<Mat4> svd(env.transpose(), Eigen::ComputeFullU | Eigen::ComputeFullV);
        gates[k] = svd.matrixV() * svd.matrixU().adjoint();
        double val = svd.singularValues().sum();
        cur = val * val;
        apply_pair_gate(lower, slots[k].first, slots[k].second, gates[k]);
      }
      if (cur - prev < 1e-13) break;
      prev = cur;
    }

    // evaluate the final circuit from scratch
    Amps lower((std::size_t)1 << n, 0.0);
    lower[0] = 1.0;
    for (std::size_t k = 0; k < slots.size(); ++k)
      apply_pair_gate(lower, slots[k].first, slots[k].second, gates[k]);
    std::complex<double> v = 0.0;
    for (std::size_t b = 0; b < lower.size(); ++b) v += std::conj(psi.amps()[b]) * lower[b];
    cur = std::norm(v);

    if (cur > best.overlap) {
      best.overlap = cur;
      best.layers.assign((std::size_t)std::max(t, 0), {});
      for (std::size_t k = 0; k < slots.size(); ++k) {
        NumericGate ng;
        ng.a = slots[k].first;
        ng.b = slots[k].second;
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) ng.u[(std::size_t)(4 * i + j)] = gates[k](i, j);
        best.layers[layer_of[k]].push_back(ng);
      }
    }
  }
  best.bits = -std::log2(std::max(best.overlap, 1e-300));
  return best;
}

namespace {

double region_distance(const Layout& lay, const BitVec& a, const BitVec& b) {
  double bestd = 1e300;
  for (std::uint32_t qa : a.ones())
    for (std::uint32_t qb : b.ones()) bestd = std::min(bestd, lay.dist(lay.pos[qa], lay.pos[qb]));
  return bestd;
}

}  // namespace

GemCertificate patch_certificate_toric(const StabilizerCode& code, int t,
                                       const CliffordCircuit* circuit,
                                       const PatchCertificateOptions& opt) {
  if (t < 0) throw InputError("negative depth");
  if (!(opt.epsilon_prime > 0.0 && opt.epsilon_prime < 1.0))
    throw InputError("epsilon' must lie in (0,1)");
  long patch = opt.patch.value_or(8L * (t + 1));
  long gap = opt.gap.value_or(2L * (t + 1));
  PatchGrid grid = partition_into_patches(code.layout, patch, gap);
  if (grid.patches.empty())
    throw CertificateError("layout too small for one " + std::to_string(patch) + "-wide patch");

  double need = 2.0 * (t + 1);
  for (std::size_t i = 0; i < grid.patches.size(); ++i)
    for (std::size_t j = i + 1; j < grid.patches.size(); ++j)
      if (region_distance(code.layout, grid.patches[i], grid.patches[j]) <= need)
        throw CertificateError("patches " + std::to_string(i) + " and " + std::to_string(j) +
                               " are closer than 2(t+1)");

  MixedStabilizerState state{code.group};
  MixedStabilizerState dressed = circuit ? dress(*circuit, state) : state;

  if (!decoupling_check(dressed, grid.patches))
    throw CertificateError("patches fail the decoupling rank check");

  GemCertificate cert;
  cert.t = t;
  cert.epsilon_prime = opt.epsilon_prime;
  cert.epsilon = 2.0 * std::sqrt(opt.epsilon_prime);
  cert.patches = grid.patches;

  double reach = (double)t * 1.5 + 1e-9;  // conjugation spread of a depth-t local circuit
  for (std::size_t pi = 0; pi < grid.patches.size(); ++pi) {
    const BitVec& reg = grid.patches[pi];
    Vec2 center{grid.origins[pi].x + patch / 2.0, grid.origins[pi].y + patch / 2.0};
    long pick = -1;
    double bd = 1e300;
    for (std::size_t gi = 0; gi < code.generators.size(); ++gi) {
      if (!code.generators[gi].support_mask().is_subset_of(reg)) continue;
      double d = code.layout.dist(center, support_centroid(code.layout, code.generators[gi]));
      if (d < bd - 1e-9) {
        bd = d;
        pick = (long)gi;
      }
    }
    if (pick < 0)
      throw CertificateError("patch " + std::to_string(pi) + " hosts no generator entirely");

    Pauli loop = code.generators[(std::size_t)pick];
    std::uint32_t q = loop.support_mask().find_first();
    Pauli open(code.n);
    open.set_letter(q, loop.letter_code(q) == 1 ? 'Z' : 'X');
    if (circuit) {
      loop = dress(*circuit, loop);
      open = dress(*circuit, open);
    }
    BitVec padded = thicken(code.layout, reg, reach);
    if (!loop.support_mask().is_subset_of(padded) || !open.support_mask().is_subset_of(padded))
      throw CertificateError("patch " + std::to_string(pi) + " witness leaked past its padding");

    std::complex<double> ph = braiding_phase(dressed, open, loop);
    if (std::abs(ph - std::complex<double>(-1.0, 0.0)) > 1e-12)
      throw CertificateError("patch " + std::to_string(pi) + " witness phase is not -1");
    cert.witnesses.push_back({pi, loop, {open}, ph});
  }

  for (std::size_t i = 0; i < cert.witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < cert.witnesses.size(); ++j) {
      BitVec a = BitVec::from_or(cert.witnesses[i].loop.support_mask(),
                                 cert.witnesses[i].opens[0].support_mask());
      BitVec b = BitVec::from_or(cert.witnesses[j].loop.support_mask(),
                                 cert.witnesses[j].opens[0].support_mask());
      if (a.intersects(b))
        throw CertificateError("witnesses " + std::to_string(i) + " and " + std::to_string(j) +
                               " overlap");
    }

  cert.m = grid.patches.size();
  cert.bound_bits = -(double)cert.m * std::log2(1.0 - cert.epsilon_prime);
  cert.alpha_effective = cert.bound_bits / (double)code.n;
  {
    std::ostringstream os;
    os << "patch " << patch << " gap " << gap << " grid " << grid.nx << "x" << grid.ny
       << (circuit ? " dressed" : " bare") << "; decoupling rank check passed; per-patch gap "
       << "constant from the half-disk fidelity argument";
    cert.provenance.push_back(os.str());
  }
  return cert;
}

GemCertificate theorem2_certificate(const StabilizerCode& code, int t, double d0_constant,
                                    double epsilon_prime) {
  if (t < 0) throw InputError("negative depth");
  if (!code.params.d) throw ConfigError("code distance unknown; declare it or run the search");
  double d = (double)*code.params.d;
  double w = code.params.w;
  double need = d0_constant * (w + t) * (w + t);
  if (!(d > need)) {
    std::ostringstream os;
    os << "distance " << d << " does not exceed the threshold " << need << " = c*(w+t)^2 with w="
       << w << ", t=" << t;
    throw FeasibilityError(os.str());
  }

  auto [base1, base2] = default_mesh_specs(code, t);
  long pitch = base1.pitch();
  long s = base1.band;
  long k_distinct = pitch / std::gcd(s, pitch);

  GemCertificate cert;
  cert.t = t;
  cert.epsilon_prime = epsilon_prime;
  cert.epsilon = 2.0 * std::sqrt(epsilon_prime);
  cert.m_target = d * d / (w * w * (w + t) * (w + t));

  MixedStabilizerState state{code.group};
  double need_sep = 2.0 * (t + 1);
  long target = (long)std::ceil(cert.m_target);
  long pairs_tried = 0, intersections_tried = 0;

  // every unordered pair of distinct meshes from the diagonal family crosses;
  // each anticommuting intersection square is its own braiding candidate
  struct Candidate {
    std::tuple<int, long, long> key;  // kind, u0, v0 for deterministic ordering
    BitVec region;
    BraidingTriple triple;
  };
  std::vector<Candidate> pool;
  std::set<std::tuple<int, long, long>> seen;
  for (long gap = 1; gap < k_distinct; ++gap) {
    for (long i = 0; i + gap < k_distinct; ++i) {
      long j = i + gap;
      MeshSpec a{(i * s) % pitch, (i * s) % pitch, base1.hole, base1.band};
      MeshSpec b{(j * s) % pitch, (j * s) % pitch, base1.hole, base1.band};
      ++pairs_tried;
      std::string tag = "meshes " + std::to_string(i) + "," + std::to_string(j);
      MeshLogicalReport rep;
      try {
        rep = mesh_logicals(code, a, b);
      } catch (const Error& e) {
        cert.provenance.push_back(tag + ": " + e.what());
        continue;
      }
      for (std::size_t si = 0; si < rep.squares.size(); ++si) {
        if (!rep.square_anticommutes[si]) continue;
        MeshLogicalReport local = rep;
        local.Q = rep.squares[si];
        local.q_region = cross_square_region(code.layout, local.Q);
        std::tuple<int, long, long> key{local.Q.kind, local.Q.u0, local.Q.v0};
        if (!seen.insert(key).second) continue;  // same square reached via another pair
        ++intersections_tried;
        std::string where = tag + " square (" + std::to_string(local.Q.kind) + " " +
                            std::to_string(local.Q.u0) + "," + std::to_string(local.Q.v0) + ")";
        try {
          DeformedSpecs def = default_deformed_specs(code, local);
          BraidingTriple triple = build_braiding_triple(code, local, def);
          for (const Pauli* open : {&triple.gamma2, &triple.gamma2p}) {
            std::complex<double> ph = braiding_phase(state, *open, triple.gamma1);
            if (std::abs(ph - std::complex<double>(-1.0, 0.0)) > 1e-12)
              throw ConstructionError("witness phase is not -1");
          }
          pool.push_back({key, local.q_region, std::move(triple)});
          cert.provenance.push_back(where + ": verified");
        } catch (const Error& e) {
          cert.provenance.push_back(where + ": " + e.what());
        }
      }
    }
  }
  if (pool.empty())
    throw CertificateError("no braiding intersection could be verified for any mesh pair");
  std::sort(pool.begin(), pool.end(),
            [](const Candidate& a, const Candidate& b) { return a.key < b.key; });

  // farthest-point selection over the verified pool: grow the kept set by the
  // candidate whose nearest kept crossing is as far away as possible
  std::vector<char> taken(pool.size(), 0);
  while ((long)cert.witnesses.size() < target) {
    long best = -1;
    double best_gap = need_sep;
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (taken[c]) continue;
      double gap = std::numeric_limits<double>::infinity();
      for (const BitVec& kept : cert.patches)
        gap = std::min(gap, region_distance(code.layout, pool[c].region, kept));
      if (gap > best_gap) {
        best = (long)c;
        best_gap = gap;
      }
    }
    if (best < 0) break;
    taken[best] = 1;
    const Candidate& c = pool[best];
    cert.patches.push_back(c.region);
    cert.witnesses.push_back({cert.patches.size() - 1, c.triple.gamma1,
                              {c.triple.gamma2, c.triple.gamma2p},
                              std::complex<double>(-1.0, 0.0)});
    std::ostringstream os;
    os << "kept square (" << std::get<0>(c.key) << " " << std::get<1>(c.key) << ","
       << std::get<2>(c.key) << ")";
    if (cert.patches.size() > 1) os << ", clearance " << best_gap;
    cert.provenance.push_back(os.str());
  }

  cert.m = cert.witnesses.size();
  cert.bound_bits = -(double)cert.m * std::log2(1.0 - epsilon_prime);
  cert.alpha_effective = cert.bound_bits / (double)code.n;
  {
    std::ostringstream os;
    os << "diagonal mesh family: pitch " << pitch << ", step " << s << ", " << k_distinct
       << " meshes, " << pairs_tried << " pairs and " << intersections_tried
       << " intersections tried, " << pool.size() << " verified, " << cert.m
       << " kept with separation > " << need_sep << "; target ratio " << cert.m_target;
    cert.provenance.push_back(os.str());
  }
  return cert;
}

namespace {

// one projective measurement postselected on the +1 outcome; rows updated in
// place, returns the outcome probability (exactly 0, 1/2 or 1)
double project_plus(std::vector<Pauli>& rows, const Pauli& meas) {
  long pivot = -1;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].anticommutes(meas)) {
      pivot = (long)i;
      break;
    }
  if (pivot >= 0) {
    for (std::size_t j = (std::size_t)pivot + 1; j < rows.size(); ++j)
      if (rows[j].anticommutes(meas)) rows[j] = rows[j] * rows[(std::size_t)pivot];
    rows[(std::size_t)pivot] = meas;
    return 0.5;
  }
  PauliGroup g = PauliGroup::from_generators(rows, /*keep_originals=*/false,
                                             /*require_commuting=*/false);
  auto e = g.phase_exp_relative(meas);
  if (e) return *e == 0 ? 1.0 : 0.0;
  rows.push_back(meas);
  return 0.5;
}

}  // namespace

SequentialResult sequential_projection_bound(const MixedStabilizerState& state,
                                             const std::vector<BitVec>& patches,
                                             const std::vector<ExchangeTriple>& witnesses,
                                             double epsilon_prime) {
  std::size_t n = state.n();
  if (patches.empty()) throw InputError("no patches given");
  BitVec uni(n);
  for (const BitVec& p : patches) {
    if (uni.intersects(p)) throw InputError("patches overlap");
    uni |= p;
  }
  if (!witnesses.empty()) {
    if (witnesses.size() != patches.size())
      throw InputError("need exactly one exchange triple per patch");
    for (std::size_t j = 0; j < patches.size(); ++j) {
      BitVec supp = BitVec::from_or(witnesses[j].m1.support_mask(),
                                    witnesses[j].m2.support_mask());
      supp |= witnesses[j].m3.support_mask();
      if (!supp.is_subset_of(patches[j]))
        throw InputError("witness " + std::to_string(j) + " is not hosted by its patch");
      std::complex<double> ph = exchange_phase(state, witnesses[j]);
      if (std::abs(ph - std::complex<double>(-1.0, 0.0)) > 1e-12)
        throw CertificateError("witness " + std::to_string(j) + " exchange phase is not -1");
    }
  }

  std::vector<Pauli> rows = state.group.rows();
  SequentialResult out;
  for (std::size_t j = 0; j < patches.size(); ++j) {
    double fj = 1.0;
    std::vector<double> probs;
    for (std::uint32_t q : patches[j].ones()) {
      Pauli zq(n);
      zq.set_letter(q, 'Z');
      double p = project_plus(rows, zq);
      probs.push_back(p);
      fj *= p;
      if (p == 0.0) break;
    }
    out.patch_fidelity.push_back(fj);
    out.step_probs.push_back(std::move(probs));
    out.product *= fj;
    if (!witnesses.empty() && fj > 1.0 - epsilon_prime + 1e-12)
      throw CertificateError("patch " + std::to_string(j) + " fidelity " + std::to_string(fj) +
                             " exceeds 1 - eps'");
    if (out.product == 0.0) break;  // later conditionals are undefined, bound is final
  }
  return out;
}

double mixed_gem_syndrome_bound(const MixedStabilizerState& rho, const MixedStabilizerState& sigma,
                                const StabilizerCode* symmetry) {
  if (rho.n() != sigma.n()) throw InputError("state sizes differ");
  if (symmetry && !has_one_form_symmetry(rho, *symmetry))
    throw InputError("rho is not symmetric under the given loop operators");

  std::size_t n = rho.n();
  auto word_of = [n](const Pauli& p) {
    BitVec w(2 * n);
    for (std::uint32_t b : p.xbits().ones()) w.set(b);
    for (std::uint32_t b : p.zbits().ones()) w.set(n + b);
    return w;
  };
  std::vector<BitVec> words;
  for (const Pauli& p : sigma.group.rows()) words.push_back(word_of(p));
  std::size_t off = words.size();
  for (const Pauli& p : rho.group.rows()) words.push_back(word_of(p));

  int rc = 0;
  for (const BitVec& combo : gf2_left_nullspace(words)) {
    BitVec rho_part(rho.group.rank());
    for (std::size_t i = off; i < words.size(); ++i)
      if (combo.test(i)) rho_part.set((std::uint32_t)(i - off));
    if (rho_part.none()) continue;  // cannot happen: sigma rows are independent
    Pauli c = rho.group.product_of_rows(rho_part);
    auto e = sigma.group.phase_exp_relative(c);
    if (!e) throw Error("common-subgroup element escaped the span");  // cannot happen
    if (*e != 0) return 0.0;  // sign character is nontrivial, the sum cancels
    ++rc;
  }
  return std::ldexp(1.0, rc - (int)rho.group.rank());
}

double mixed_gem_syndrome_bound(const MixedStabilizerState& rho,
                                const std::vector<std::pair<double, MixedStabilizerState>>& sigma,
                                const StabilizerCode* symmetry) {
  if (sigma.empty()) throw InputError("empty ensemble");
  if (symmetry && !has_one_form_symmetry(rho, *symmetry))
    throw InputError("rho is not symmetric under the given loop operators");
  double total = 0.0, psum = 0.0;
  for (const auto& [p, st] : sigma) {
    if (p < -1e-12) throw InputError("negative ensemble probability");
    total += p * mixed_gem_syndrome_bound(rho, st, nullptr);
    psum += p;
  }
  if (std::fabs(psum - 1.0) > 1e-9) throw InputError("ensemble probabilities must sum to 1");
  return total;
}

SyndromeDistribution syndrome_distribution(const MixedStabilizerState& sigma,
                                           const StabilizerCode& code) {
  if (sigma.n() != code.n) throw InputError("state and code sizes differ");
  struct Branch {
    std::vector<Pauli> rows;
    double prob;
    std::vector<int> pattern;
  };
  std::vector<Branch> branches{{sigma.group.rows(), 1.0, {}}};
  for (const Pauli& g : code.generators) {
    std::vector<Branch> next;
    for (Branch& br : branches) {
      Pauli minus = g;
      minus.set_phase_exp((g.phase_exp() + 2) & 3);
      std::vector<Pauli> rows_plus = br.rows;
      double p_plus = project_plus(rows_plus, g);
      if (p_plus > 0.0) {
        Branch nb{std::move(rows_plus), br.prob * p_plus, br.pattern};
        nb.pattern.push_back(0);
        next.push_back(std::move(nb));
      }
      if (p_plus < 1.0) {
        std::vector<Pauli> rows_minus = std::move(br.rows);
        double p_minus = project_plus(rows_minus, minus);
        Branch nb{std::move(rows_minus), br.prob * p_minus, br.pattern};
        nb.pattern.push_back(1);
        next.push_back(std::move(nb));
      }
    }
    branches = std::move(next);
    if (branches.size() > 65536)
      throw CapabilityError("syndrome support too large to enumerate exactly");
  }
  SyndromeDistribution out;
  for (Branch& br : branches) {
    out.support[br.pattern] += br.prob;
    if (std::all_of(br.pattern.begin(), br.pattern.end(), [](int s) { return s == 0; }))
      out.all_plus_mass += br.prob;
  }
  return out;
}

}  // namespace stabgem
