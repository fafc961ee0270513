#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "stabgem/codes.hpp"
#include "stabgem/errors.hpp"
#include "stabgem/logical.hpp"

using namespace stabgem;

TEST_CASE("toric family parameters") {
  for (long L : {2L, 3L, 4L}) {
    StabilizerCode code = make_toric(L);
    CHECK(code.n == (std::size_t)(2 * L * L));
    CHECK(code.generators.size() == (std::size_t)(2 * L * L));  // stars + plaquettes
    CHECK(code.group.rank() == code.n - 2);  // one relation per type
    CHECK(code.params.k == 2);
    REQUIRE(code.params.d.has_value());
    CHECK(*code.params.d == L);
    CHECK(code.params.d_provenance == "family");
    CHECK(code.layout.period_x == doctest::Approx(2.0 * L));
    // every generator commutes with every other (already enforced by the
    // group build, but cheap to restate)
    for (const Pauli& g : code.generators) CHECK(code.group.phase_exp_relative(g) == 0);
  }
}

TEST_CASE("toric distance by brute force at small sizes") {
  for (long L : {2L, 3L}) {
    StabilizerCode code = make_toric(L);
    auto d = distance_bruteforce(code, L + 1);
    REQUIRE(d.has_value());
    CHECK(*d == L);
  }
}

TEST_CASE("honeycomb family parameters") {
  for (auto [lx, ly] : {std::pair<long, long>{4, 4}, {6, 4}, {6, 6}}) {
    StabilizerCode code = make_honeycomb_fermion(lx, ly);
    CHECK(code.n == (std::size_t)(lx * ly));
    CHECK(code.params.k == 1 + code.n / 2);
    REQUIRE(code.params.d.has_value());
    CHECK(*code.params.d == 2);
    CHECK(code.params.d_provenance == "family");
    CHECK(code.group.rank() + code.params.k == code.n);
  }
  CHECK_THROWS_AS((void)make_honeycomb_fermion(3, 4), ConfigError);  // odd size
}

TEST_CASE("honeycomb d=2 verified by exhaustive search") {
  StabilizerCode code = make_honeycomb_fermion(4, 4);
  auto d = distance_bruteforce(code, 3);
  REQUIRE(d.has_value());
  CHECK(*d == 2);
}

TEST_CASE("ghz state has full rank and no logicals") {
  StabilizerCode ghz = make_ghz_state(5);
  CHECK(ghz.n == 5);
  CHECK(ghz.group.rank() == 5);
  CHECK(ghz.params.k == 0);
  CHECK(!ghz.layout.periodic());
}

TEST_CASE("code_state completes to a pure state") {
  StabilizerCode code = make_toric(2);
  MixedStabilizerState word = code_state(code);
  CHECK(word.pure());
  CHECK(word.purity() == doctest::Approx(1.0));
  // the original group is contained in the completed one
  for (const Pauli& g : code.group.rows()) CHECK(word.group.contains(g));

  MixedStabilizerState mixed = symmetric_mixed_state(code);
  CHECK(!mixed.pure());
  CHECK(mixed.purity() == doctest::Approx(0.25));  // rank n-2
}

TEST_CASE("code_state seeds flip adjoined signs only") {
  StabilizerCode code = make_toric(2);
  MixedStabilizerState a = code_state(code, 0);
  MixedStabilizerState b = code_state(code, 12345);
  CHECK(a.pure());
  CHECK(b.pure());
  for (const Pauli& g : code.group.rows()) {
    CHECK(a.group.contains(g));
    CHECK(b.group.contains(g));  // stabilizers keep their signs either way
  }
}

TEST_CASE("save/load round trip") {
  StabilizerCode code = make_honeycomb_fermion(4, 4);
  std::string path = "/tmp/stabgem_roundtrip.json";
  save_code(code, path);
  StabilizerCode back = load_code(path);
  CHECK(back.n == code.n);
  CHECK(back.name == code.name);
  CHECK(back.params.k == code.params.k);
  CHECK(back.params.d == code.params.d);
  CHECK(back.params.d_provenance == code.params.d_provenance);
  REQUIRE(back.generators.size() == code.generators.size());
  for (std::size_t i = 0; i < code.generators.size(); ++i)
    CHECK(back.generators[i] == code.generators[i]);
  CHECK(back.layout.period_x == doctest::Approx(code.layout.period_x));
  for (std::size_t q = 0; q < code.n; ++q) {
    CHECK(back.layout.pos[q].x == doctest::Approx(code.layout.pos[q].x));
    CHECK(back.layout.pos[q].y == doctest::Approx(code.layout.pos[q].y));
  }
  std::remove(path.c_str());
}

TEST_CASE("load accepts a hand-written file and rejects malformed ones") {
  std::string path = "/tmp/stabgem_hand.json";
  {
    std::ofstream f(path);
    f << R"({
      "version": 1,
      "n": 2,
      "qubits": [{"id": 0, "x": 0, "y": 0}, {"id": 1, "x": 1, "y": 0}],
      "periods": null,
      "generators": [{"pauli": "ZZ", "sign": "+1"}, {"pauli": "XX", "sign": "-1"}],
      "metadata": {"name": "bell-ish"}
    })";
  }
  StabilizerCode code = load_code(path);
  CHECK(code.n == 2);
  CHECK(code.name == "bell-ish");
  CHECK(code.group.rank() == 2);
  CHECK(code.params.k == 0);
  CHECK(code.generators[1].sign() == -1);
  CHECK(!code.params.d.has_value());

  {
    std::ofstream f(path);
    f << R"({"version": 1, "n": 2, "qubits": [], "periods": null, "generators": [{"pauli": "XZ", "sign": "+1"}]})";
  }
  CHECK_THROWS_AS((void)load_code(path), InputError);  // qubit list does not match n
  {
    std::ofstream f(path);
    f << "not json at all";
  }
  CHECK_THROWS_AS((void)load_code(path), InputError);
  CHECK_THROWS_AS((void)load_code("/tmp/no_such_file_stabgem.json"), InputError);
  std::remove(path.c_str());
}

TEST_CASE("finish_code computes the diameter") {
  Layout lay;
  lay.pos = {{0, 0}, {3, 4}};
  std::vector<Pauli> gens{Pauli::from_letters("ZZ", 1)};
  StabilizerCode code = finish_code("pair", 2, gens, lay);
  CHECK(code.params.w == doctest::Approx(5.0));
  CHECK(code.params.k == 1);
}
