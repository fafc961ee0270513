#include "doctest.h"

#include <random>

#include "stabgem/codes.hpp"
#include "stabgem/errors.hpp"
#include "stabgem/logical.hpp"

using namespace stabgem;

TEST_CASE("commute_on sees only the masked letters") {
  Pauli a = Pauli::from_letters("XXI", 1);
  Pauli b = Pauli::from_letters("ZZI", 1);
  BitVec m0(3);
  m0.set(0);
  CHECK(!commute_on(a, b, m0));  // single overlap anticommutes
  BitVec m01(3);
  m01.set(0);
  m01.set(1);
  CHECK(commute_on(a, b, m01));  // two overlaps cancel
}

TEST_CASE("centralizer elements commute with the group and stay inside") {
  StabilizerCode code = make_toric(2);
  BitVec region(code.n);
  for (std::uint32_t q : code.generators[0].support()) region.set(q);
  auto cent = centralizer_in_region(code, region);
  CHECK(!cent.empty());
  for (const Pauli& c : cent) {
    CHECK(c.support_mask().is_subset_of(region));
    for (const Pauli& g : code.generators) CHECK(c.commutes(g));
  }
}

TEST_CASE("correctability of disks versus bands") {
  StabilizerCode code = make_toric(5);
  BitVec disk = disk_region(code.layout, {3, 3}, 2.0);
  CHECK(is_correctable(code, disk));

  // a full horizontal band hosts a noncontractible loop
  BitVec band = rect_region(code.layout, {0, 0}, {10, 2});
  CHECK(!is_correctable(code, band));
}

TEST_CASE("cleaning property suite on toric L=5") {
  StabilizerCode code = make_toric(5);
  auto [m1, m2] = default_mesh_specs(code, 0);
  MeshLogicalReport rep = mesh_logicals(code, m1, m2);
  std::vector<Pauli> basis{rep.l1, rep.l2};

  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 100) {
    // random nontrivial logical class times a random stabilizer element
    int a = (int)(rng() % 2), b = (int)(rng() % 2);
    if (a == 0 && b == 0) continue;
    Pauli l = Pauli::identity(code.n);
    if (a) l = l * basis[0];
    if (b) l = l * basis[1];
    for (int j = 0; j < 5; ++j) l = l * code.generators[rng() % code.generators.size()];

    Vec2 center{(double)(rng() % 10), (double)(rng() % 10)};
    double radius = 1.0 + 0.5 * (double)(rng() % 3);
    BitVec region = disk_region(code.layout, center, radius);
    if (!is_correctable(code, region)) continue;

    Pauli cleaned = clean_logical(code, l, region);
    CHECK(!cleaned.support_mask().intersects(region));
    // same class: cleaned^dag * l is a +1 stabilizer element (the dagger keeps
    // this right even when the random product picked up an i)
    auto rel = code.group.phase_exp_relative(cleaned.dagger() * l);
    REQUIRE(rel.has_value());
    CHECK(*rel == 0);
    ++done;
  }
}

TEST_CASE("cleaning onto a logical-bearing region fails with a witness") {
  StabilizerCode code = make_toric(5);
  auto [m1, m2] = default_mesh_specs(code, 0);
  MeshLogicalReport rep = mesh_logicals(code, m1, m2);
  BitVec everything = code.all_qubits();
  CHECK_THROWS_AS((void)clean_logical(code, rep.l1, everything), ConstructionError);
}

TEST_CASE("clean_logical rejects non-logicals") {
  StabilizerCode code = make_toric(2);
  Pauli x0 = Pauli::single(code.n, 0, 'X');  // anticommutes with some plaquette
  BitVec region(code.n);
  region.set(0);
  CHECK_THROWS_AS((void)clean_logical(code, x0, region), InputError);
}

TEST_CASE("tighten_in_region only ever shrinks and keeps the class") {
  StabilizerCode code = make_toric(5);
  auto [m1, m2] = default_mesh_specs(code, 0);
  MeshLogicalReport rep = mesh_logicals(code, m1, m2);
  std::mt19937_64 rng(37);
  for (int it = 0; it < 20; ++it) {
    Pauli l = rep.l1;
    for (int j = 0; j < 8; ++j) l = l * code.generators[rng() % code.generators.size()];
    Pauli t = tighten_in_region(code, l, code.all_qubits());
    CHECK(t.weight() <= l.weight());
    auto rel = code.group.phase_exp_relative(t.dagger() * l);
    REQUIRE(rel.has_value());
    CHECK(*rel == 0);
  }
}

TEST_CASE("mesh_logicals report invariants on toric L=6") {
  StabilizerCode code = make_toric(6);
  auto [m1, m2] = default_mesh_specs(code, 0);
  MeshLogicalReport rep = mesh_logicals(code, m1, m2);
  CHECK(rep.l1.anticommutes(rep.l2));
  CHECK(rep.l1.support_mask().is_subset_of(rep.mesh1));
  CHECK(rep.l2.support_mask().is_subset_of(rep.mesh2));
  REQUIRE(!rep.squares.empty());
  CHECK(rep.squares.size() == rep.square_anticommutes.size());
  // the selected square really carries the anticommutation
  CHECK(!commute_on(rep.l1, rep.l2, rep.q_region));
  // and outside it the pair commutes (all crossings accounted for)
  BitVec outside = code.all_qubits();
  for (std::uint32_t q : rep.q_region.ones()) outside.reset(q);
  CHECK(commute_on(rep.l1, rep.l2, outside));
}
