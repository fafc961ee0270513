#include "doctest.h"

#include <random>

#include "stabgem/bitvec.hpp"
#include "stabgem/pauli.hpp"

using namespace stabgem;

TEST_CASE("bitvec basics") {
  BitVec v(130);
  CHECK(v.none());
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 3);
  CHECK(v.test(64));
  CHECK(!v.test(63));
  CHECK(v.find_first() == 0);
  v.reset(0);
  CHECK(v.find_first() == 64);
  auto ids = v.ones();
  REQUIRE(ids.size() == 2);
  CHECK(ids[0] == 64);
  CHECK(ids[1] == 129);

  BitVec w(130);
  w.set(64);
  CHECK(v.intersects(w));
  CHECK(w.is_subset_of(v));
  CHECK(!v.is_subset_of(w));
  CHECK(BitVec::from_and(v, w).count() == 1);
  CHECK(BitVec::from_or(v, w).count() == 2);
  CHECK(BitVec::from_andnot(v, w).count() == 1);
  CHECK(v.and_parity(w) == 1);

  v ^= w;
  CHECK(v.count() == 1);
  CHECK(!v.test(64));
}

TEST_CASE("single-qubit multiplication table") {
  // XY = iZ, YX = -iZ, ZX = iY, and so on around the cycle
  auto X = Pauli::single(1, 0, 'X');
  auto Y = Pauli::single(1, 0, 'Y');
  auto Z = Pauli::single(1, 0, 'Z');
  CHECK((X * Y).str() == "+iZ");
  CHECK((Y * X).str() == "-iZ");
  CHECK((Y * Z).str() == "+iX");
  CHECK((Z * Y).str() == "-iX");
  CHECK((Z * X).str() == "+iY");
  CHECK((X * Z).str() == "-iY");
  CHECK((X * X).is_identity());
  CHECK((Y * Y).is_identity());
  CHECK((Z * Z).is_identity());
}

TEST_CASE("phase bookkeeping for Y letters") {
  auto p = Pauli::from_letters("YY", +1);
  CHECK(p.str() == "+YY");
  CHECK(p.sign() == +1);
  CHECK(p.is_hermitian());
  // internal exponent holds one i per Y, the printed prefix stays +
  CHECK(p.phase_exp() == 2);
  CHECK(p.prefix_exp() == 0);

  auto q = Pauli::from_letters("XZ", -1);
  CHECK(q.sign() == -1);
  CHECK(q.str() == "-XZ");
  auto prod = p * q;  // (Y X)(Y Z) letterwise with sign -1: (iZ)(-iX)*(-1)
  CHECK(prod.is_hermitian());
}

TEST_CASE("str/parse round trip on random words") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + rng() % 12;
    Pauli p(n);
    for (std::size_t q = 0; q < n; ++q) p.set_letter(q, "IXZY"[rng() % 4]);
    if (rng() & 1) p.set_phase_exp(p.phase_exp() + 2);
    Pauli back = Pauli::parse(p.str());
    CHECK(back == p);
    CHECK(back.str() == p.str());
  }
  CHECK(Pauli::parse("XIZ") == Pauli::parse("+XIZ"));
  CHECK_THROWS(Pauli::parse("+AB"));
  CHECK_THROWS(Pauli::from_letters("XQ", 1));
}

TEST_CASE("commutation is the symplectic parity") {
  auto a = Pauli::from_letters("XXI", +1);
  auto b = Pauli::from_letters("ZII", +1);
  auto c = Pauli::from_letters("ZZI", +1);
  CHECK(a.anticommutes(b));
  CHECK(a.commutes(c));
  CHECK(b.commutes(c));
  // phases never affect commutation
  auto am = a;
  am.set_phase_exp(am.phase_exp() + 2);
  CHECK(am.anticommutes(b));
}

TEST_CASE("dagger inverts the phase only") {
  auto p = Pauli::parse("+iXZ");
  auto d = p.dagger();
  CHECK((p * d).is_identity());
  CHECK(d.str() == "-iXZ");
  auto h = Pauli::from_letters("YZX", -1);
  CHECK(h.dagger() == h);  // Hermitian words are self-adjoint
}

TEST_CASE("restriction keeps letters and resets the prefix") {
  auto p = Pauli::from_letters("YXZY", -1);
  BitVec mask(4);
  mask.set(0);
  mask.set(3);
  auto r = p.restricted_to(mask);
  CHECK(r.letter(0) == 'Y');
  CHECK(r.letter(1) == 'I');
  CHECK(r.letter(2) == 'I');
  CHECK(r.letter(3) == 'Y');
  CHECK(r.sign() == +1);
  CHECK(r.weight() == 2);
}

TEST_CASE("weight and support") {
  auto p = Pauli::from_letters("IXIZY", +1);
  CHECK(p.weight() == 3);
  auto s = p.support();
  REQUIRE(s.size() == 3);
  CHECK(s[0] == 1);
  CHECK(s[1] == 3);
  CHECK(s[2] == 4);
}
