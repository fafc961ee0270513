#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabgem/geometry.hpp"
#include "stabgem/pauli.hpp"

namespace stabgem {

enum class GateKind : std::uint8_t { kH, kS, kSdg, kX, kY, kZ, kCX, kCZ, kSwap };

const char* gate_name(GateKind k);
std::optional<GateKind> gate_from_name(const std::string& name);
bool gate_is_two_qubit(GateKind k);

struct Gate {
  GateKind kind = GateKind::kH;
  std::uint32_t a = 0;
  std::uint32_t b = 0;  // second qubit, two-qubit kinds only (CX: a=control, b=target)
};

/* Layered circuit of named Clifford gates.  Layers apply first to last, so
 * conjugation walks them in that order.  depth() is the layer count t that
 * the entanglement bounds are phrased in. */
struct CliffordCircuit {
  std::size_t n = 0;
  std::vector<std::vector<Gate>> layers;

  std::size_t depth() const { return layers.size(); }

  // Qubit ids in range and no qubit touched twice within one layer.
  void validate() const;
  // validate() plus: two-qubit gates only across pairs within radius.
  void validate_local(const Layout& lay, double radius) const;

  // U p U^dagger with the exact phase.
  Pauli conjugate(const Pauli& p) const;
};

/* Random geometrically local circuit: each layer greedily matches disjoint
 * qubit pairs within `radius` (shuffled order) and puts a random two-qubit
 * gate on each pair; unmatched qubits get a random single-qubit gate or are
 * left alone.  Deterministic in (seed, depth, layout). */
CliffordCircuit brick_wall_random(const Layout& lay, std::size_t depth, std::uint64_t seed,
                                  double radius = 1.5);

}  // namespace stabgem
