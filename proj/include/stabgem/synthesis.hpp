#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "stabgem/codes.hpp"
#include "stabgem/geometry.hpp"
#include "stabgem/logical.hpp"

namespace stabgem {

/* Product of exactly those generators in s's decomposition whose support
 * meets region.  The result stays in the group, is supported inside the
 * region thickened by the generator diameter, and matches s's letters on the
 * region itself. */
Pauli truncate_stabilizer(const StabilizerCode& code, const Pauli& s, const BitVec& region);

// Multiplies gamma by a group element so the product avoids forbidden, if the
// coset allows it.
Pauli deform_string(const StabilizerCode& code, const Pauli& gamma, const BitVec& forbidden);

struct BraidingTriple {
  Pauli gamma1;   // loop-like group element through Q
  Pauli gamma2;   // segment of the small loop S2, crosses gamma1 once
  Pauli gamma2p;  // complementary segment, gamma2 * gamma2p = S2
  BitVec q_region, qup_region, qup_prime_region;
  bool reflected = false;
  std::vector<std::string> provenance;
};

struct DeformedSpecs {
  MeshSpec b1p;       // holes centered on the crossing content at Q
  MeshSpec b2p_up;    // holes centered on the expected upper re-crossing
  MeshSpec b2p_down;  // mirror of b2p_up, used when the build reflects
};

/* Deformed meshes whose holes sit over Q and over the point where the
 * truncated loop is expected to re-cross l2, one band/hole geometry shared
 * with the report's meshes. */
DeformedSpecs default_deformed_specs(const StabilizerCode& code, const MeshLogicalReport& report);

/* The braiding construction: clean l1 into the deformed mesh, multiply to get
 * a stabilizer loop, truncate it to a disk over Q, drop the generators on the
 * far side of l1's strand, then repeat around the upper crossing for l2 and
 * split that loop into two segments.  Every returned triple has its
 * invariants checked: gamma1 and gamma2*gamma2p in the group, gamma1
 * anticommuting with both segments. */
BraidingTriple build_braiding_triple(const StabilizerCode& code, const MeshLogicalReport& report,
                                     const DeformedSpecs& deformed);

// Links of the brick-wall honeycomb drawing, named by their lower-left vertex.
struct HoneyLink {
  long x = 0, y = 0;
  char kind = 'H';  // 'H': (x,y)-(x+1,y); 'V': the rung (x,y)-(x,y+1)
};

// The two-body logical of one link: XX or YY across horizontal links
// (alternating with column parity), ZZ across rungs.
Pauli honeycomb_link_operator(const StabilizerCode& code, const HoneyLink& link);

// Product of the link operators along a connected path, phase tracked exactly.
Pauli honeycomb_string(const StabilizerCode& code, const std::vector<HoneyLink>& path);

struct ExchangeTriple {
  Pauli m1, m2, m3;
  std::size_t junction = 0;
  BitVec endpoint_a, endpoint_b, endpoint_c, endpoint_d;  // arm ends and the junction
};

/* Three strings meeting only at the junction qubit, pairwise anticommuting
 * there.  Arms are link paths; each must start at the junction. */
ExchangeTriple exchange_triple(const StabilizerCode& code, std::size_t junction,
                               const std::array<std::vector<HoneyLink>, 3>& arms);

/* Single-link T-junction at the rung vertex nearest `near` (lowest id on
 * ties): left and right horizontal links plus the rung. */
ExchangeTriple canonical_exchange_triple(const StabilizerCode& code, Vec2 near);

}  // namespace stabgem
