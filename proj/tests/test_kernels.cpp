#include "doctest.h"

#include <cstring>
#include <random>
#include <vector>

#include "stabgem/kernels.hpp"

using namespace stabgem;

namespace {

std::vector<kern::word> random_words(std::mt19937_64& rng, std::size_t nw) {
  std::vector<kern::word> v(nw);
  for (auto& w : v) w = rng();
  return v;
}

}  // namespace

TEST_CASE("scalar kernels match naive loops") {
  std::mt19937_64 rng(7);
  const auto& ops = kern::scalar::ops;
  for (std::size_t nw : {std::size_t(0), std::size_t(1), std::size_t(3), std::size_t(17)}) {
    auto a = random_words(rng, nw);
    auto b = random_words(rng, nw);

    std::uint64_t pc = 0, apc = 0, opc = 0;
    bool nn_any = false, a_any = false, zero = true, eq = true;
    for (std::size_t i = 0; i < nw; ++i) {
      pc += __builtin_popcountll(a[i]);
      apc += __builtin_popcountll(a[i] & b[i]);
      opc += __builtin_popcountll(a[i] | b[i]);
      nn_any |= (a[i] & ~b[i]) != 0;
      a_any |= (a[i] & b[i]) != 0;
      zero &= a[i] == 0;
      eq &= a[i] == b[i];
    }
    CHECK(ops.popcount(a.data(), nw) == pc);
    CHECK(ops.and_popcount(a.data(), b.data(), nw) == apc);
    CHECK(ops.or_popcount(a.data(), b.data(), nw) == opc);
    CHECK(ops.andnot_any(a.data(), b.data(), nw) == nn_any);
    CHECK(ops.and_any(a.data(), b.data(), nw) == a_any);
    CHECK(ops.is_zero(a.data(), nw) == zero);
    CHECK(ops.equal(a.data(), b.data(), nw) == eq);

    auto dst = a;
    ops.xor_into(dst.data(), b.data(), nw);
    for (std::size_t i = 0; i < nw; ++i) CHECK(dst[i] == (a[i] ^ b[i]));
  }
}

#if defined(STABGEM_HAVE_AVX2)
TEST_CASE("avx2 kernels agree with scalar on random buffers") {
  if (!kern::avx2::supported()) return;  // nothing to compare on this machine
  std::mt19937_64 rng(11);
  const auto& sc = kern::scalar::ops;
  const auto& vx = kern::avx2::ops;
  // cover lengths around the 4-word vector width, incl. ragged tails
  for (std::size_t nw = 0; nw <= 13; ++nw) {
    for (int rep = 0; rep < 50; ++rep) {
      auto a = random_words(rng, nw);
      auto b = random_words(rng, nw);
      CHECK(vx.popcount(a.data(), nw) == sc.popcount(a.data(), nw));
      CHECK(vx.and_popcount(a.data(), b.data(), nw) == sc.and_popcount(a.data(), b.data(), nw));
      CHECK(vx.or_popcount(a.data(), b.data(), nw) == sc.or_popcount(a.data(), b.data(), nw));
      CHECK(vx.andnot_any(a.data(), b.data(), nw) == sc.andnot_any(a.data(), b.data(), nw));
      CHECK(vx.and_any(a.data(), b.data(), nw) == sc.and_any(a.data(), b.data(), nw));
      CHECK(vx.is_zero(a.data(), nw) == sc.is_zero(a.data(), nw));
      CHECK(vx.equal(a.data(), b.data(), nw) == sc.equal(a.data(), b.data(), nw));
      auto d1 = a, d2 = a;
      sc.xor_into(d1.data(), b.data(), nw);
      vx.xor_into(d2.data(), b.data(), nw);
      CHECK(std::memcmp(d1.data(), d2.data(), nw * sizeof(kern::word)) == 0);
    }
  }
  // edge patterns: all zeros, all ones, single trailing bit
  std::vector<kern::word> z(5, 0), o(5, ~kern::word(0));
  CHECK(vx.is_zero(z.data(), 5));
  CHECK(!vx.is_zero(o.data(), 5));
  CHECK(vx.popcount(o.data(), 5) == 320);
  z[4] = kern::word(1) << 63;
  CHECK(!vx.is_zero(z.data(), 5));
  CHECK(vx.andnot_any(z.data(), o.data(), 5) == false);
}
#endif

TEST_CASE("force() switches the active variant and back") {
  const char* before = kern::active().name;
  REQUIRE(kern::force("scalar"));
  CHECK(std::string(kern::active().name) == "scalar");
  kern::force(nullptr);  // re-detect
  CHECK(std::string(kern::active().name) == before);
  CHECK(!kern::force("no-such-variant"));
}
