#include "stabgem/clifford.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "stabgem/errors.hpp"

namespace stabgem {

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::kH: return "H";
    case GateKind::kS: return "S";
    case GateKind::kSdg: return "Sdg";
    case GateKind::kX: return "X";
    case GateKind::kY: return "Y";
    case GateKind::kZ: return "Z";
    case GateKind::kCX: return "CX";
    case GateKind::kCZ: return "CZ";
    case GateKind::kSwap: return "SWAP";
  }
  return "?";
}

std::optional<GateKind> gate_from_name(const std::string& name) {
  static const std::pair<const char*, GateKind> tab[] = {
      {"H", GateKind::kH},   {"S", GateKind::kS},   {"Sdg", GateKind::kSdg},
      {"X", GateKind::kX},   {"Y", GateKind::kY},   {"Z", GateKind::kZ},
      {"CX", GateKind::kCX}, {"CZ", GateKind::kCZ}, {"SWAP", GateKind::kSwap},
  };
  for (const auto& [s, k] : tab)
    if (name == s) return k;
  return std::nullopt;
}

bool gate_is_two_qubit(GateKind k) {
  return k == GateKind::kCX || k == GateKind::kCZ || k == GateKind::kSwap;
}

void CliffordCircuit::validate() const {
  for (std::size_t l = 0; l < layers.size(); ++l) {
    std::vector<char> used(n, 0);
    for (const Gate& g : layers[l]) {
      bool two = gate_is_two_qubit(g.kind);
      if (g.a >= n || (two && g.b >= n))
        throw InputError("circuit layer " + std::to_string(l) + " touches a qubit id out of range");
      if (two && g.a == g.b)
        throw InputError("two-qubit gate with equal qubits in layer " + std::to_string(l));
      if (used[g.a] || (two && used[g.b]))
        throw InputError("layer " + std::to_string(l) + " uses a qubit twice");
      used[g.a] = 1;
      if (two) used[g.b] = 1;
    }
  }
}

void CliffordCircuit::validate_local(const Layout& lay, double radius) const {
  if (lay.size() != n) throw InputError("circuit size does not match layout");
  validate();
  for (std::size_t l = 0; l < layers.size(); ++l)
    for (const Gate& g : layers[l])
      if (gate_is_two_qubit(g.kind) && lay.dist(g.a, g.b) > radius)
        throw InputError("two-qubit gate in layer " + std::to_string(l) +
                         " spans qubits farther apart than the locality radius");
}

/* Conjugation runs on the letter word: p = i^e * h with h the +1-sign tensor
 * of letters, and h is tracked as (x, z, r) bits where r is the sign bit of
 * the conjugated word.  Gate rules are the usual tableau updates. */
Pauli CliffordCircuit::conjugate(const Pauli& p) const {
  if (p.n() != n) throw InputError("operator size does not match circuit");
  int e = p.prefix_exp();
  BitVec x = p.xbits();
  BitVec z = p.zbits();
  bool r = false;
  for (const auto& layer : layers) {
    for (const Gate& g : layer) {
      bool xa = x.test(g.a), za = z.test(g.a);
      bool xb = gate_is_two_qubit(g.kind) ? x.test(g.b) : false;
      bool zb = gate_is_two_qubit(g.kind) ? z.test(g.b) : false;
      switch (g.kind) {
        case GateKind::kH:
          r ^= xa && za;
          x.assign(g.a, za);
          z.assign(g.a, xa);
          break;
        case GateKind::kS:
          r ^= xa && za;
          z.assign(g.a, za ^ xa);
          break;
        case GateKind::kSdg:
          z.assign(g.a, za ^ xa);
          r ^= xa && (za ^ xa);
          break;
        case GateKind::kX:
          r ^= za;
          break;
        case GateKind::kY:
          r ^= xa ^ za;
          break;
        case GateKind::kZ:
          r ^= xa;
          break;
        case GateKind::kCX:
          // a = control, b = target
          r ^= xa && zb && (xb ^ za ^ 1);
          x.assign(g.b, xb ^ xa);
          z.assign(g.a, za ^ zb);
          break;
        case GateKind::kCZ:
          r ^= xa && xb && (za ^ zb);
          z.assign(g.a, za ^ xb);
          z.assign(g.b, zb ^ xa);
          break;
        case GateKind::kSwap:
          x.assign(g.a, xb);
          x.assign(g.b, xa);
          z.assign(g.a, zb);
          z.assign(g.b, za);
          break;
      }
    }
  }
  Pauli out(n);
  out.xbits() = std::move(x);
  out.zbits() = std::move(z);
  int y_count = (int)(out.xbits().and_count(out.zbits()) & 3);
  out.set_phase_exp((std::uint8_t)((y_count + e + (r ? 2 : 0)) & 3));
  return out;
}

CliffordCircuit brick_wall_random(const Layout& lay, std::size_t depth, std::uint64_t seed,
                                  double radius) {
  std::size_t n = lay.size();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> candidates;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (lay.dist(i, j) <= radius) candidates.emplace_back(i, j);

  CliffordCircuit c;
  c.n = n;
  std::mt19937_64 rng(seed);
  static const GateKind two_kinds[] = {GateKind::kCX, GateKind::kCZ, GateKind::kSwap};
  static const GateKind one_kinds[] = {GateKind::kH, GateKind::kS,   GateKind::kSdg,
                                       GateKind::kX, GateKind::kY,   GateKind::kZ};
  for (std::size_t l = 0; l < depth; ++l) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pool = candidates;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<char> used(n, 0);
    std::vector<Gate> layer;
    for (auto [i, j] : pool) {
      if (used[i] || used[j]) continue;
      used[i] = used[j] = 1;
      Gate g;
      g.kind = two_kinds[rng() % 3];
      bool flip = (rng() & 1) != 0;  // random CX orientation
      g.a = flip ? j : i;
      g.b = flip ? i : j;
      layer.push_back(g);
    }
    for (std::uint32_t q = 0; q < n; ++q) {
      if (used[q]) continue;
      std::uint64_t pick = rng() % 7;
      if (pick == 6) continue;  // leave the qubit alone
      layer.push_back(Gate{one_kinds[pick], q, 0});
    }
    c.layers.push_back(std::move(layer));
  }
  c.validate_local(lay, radius);
  return c;
}

}  // namespace stabgem
