#include "stabgem/kernels.hpp"

namespace stabgem::kern::scalar {

namespace {

void xor_into(word* dst, const word* src, std::size_t nw) {
  for (std::size_t i = 0; i < nw; i++) dst[i] ^= src[i];
}

std::uint64_t popcount(const word* a, std::size_t nw) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < nw; i++) c += (std::uint64_t)__builtin_popcountll(a[i]);
  return c;
}

std::uint64_t and_popcount(const word* a, const word* b, std::size_t nw) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < nw; i++) c += (std::uint64_t)__builtin_popcountll(a[i] & b[i]);
  return c;
}

std::uint64_t or_popcount(const word* a, const word* b, std::size_t nw) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < nw; i++) c += (std::uint64_t)__builtin_popcountll(a[i] | b[i]);
  return c;
}

bool andnot_any(const word* a, const word* b, std::size_t nw) {
  for (std::size_t i = 0; i < nw; i++)
    if (a[i] & ~b[i]) return true;
  return false;
}

bool and_any(const word* a, const word* b, std::size_t nw) {
  for (std::size_t i = 0; i < nw; i++)
    if (a[i] & b[i]) return true;
  return false;
}

bool is_zero(const word* a, std::size_t nw) {
  for (std::size_t i = 0; i < nw; i++)
    if (a[i]) return false;
  return true;
}

bool equal(const word* a, const word* b, std::size_t nw) {
  for (std::size_t i = 0; i < nw; i++)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

const Ops ops = {
    xor_into, popcount, and_popcount, or_popcount,
    andnot_any, and_any, is_zero, equal,
    "scalar",
};

}  // namespace stabgem::kern::scalar
