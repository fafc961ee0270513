#pragma once

#include <cstddef>
#include <cstdint>

/* Word-level kernels for packed GF(2) vectors.  Everything above this layer
 * (Pauli words, group elimination, support masks) reduces to XOR, AND+popcount
 * and emptiness tests over uint64_t buffers, so these are the only loops worth
 * vectorizing.  A scalar reference implementation always exists; an AVX2
 * variant is compiled when the toolchain supports it and selected at runtime.
 * Both variants must agree bit-for-bit (see tests/test_kernels.cpp).
 */

namespace stabgem::kern {

using word = std::uint64_t;

struct Ops {
  void (*xor_into)(word* dst, const word* src, std::size_t nw);
  std::uint64_t (*popcount)(const word* a, std::size_t nw);
  std::uint64_t (*and_popcount)(const word* a, const word* b, std::size_t nw);
  std::uint64_t (*or_popcount)(const word* a, const word* b, std::size_t nw);
  // any bit set in (a & ~b); subset tests are !andnot_any(a, b)
  bool (*andnot_any)(const word* a, const word* b, std::size_t nw);
  bool (*and_any)(const word* a, const word* b, std::size_t nw);
  bool (*is_zero)(const word* a, std::size_t nw);
  bool (*equal)(const word* a, const word* b, std::size_t nw);
  const char* name;
};

namespace scalar {
extern const Ops ops;
}

#if defined(STABGEM_HAVE_AVX2)
namespace avx2 {
extern const Ops ops;
bool supported();
}
#endif

// Runtime-selected implementation.  Honors STABGEM_KERNELS=scalar|avx2 from
// the environment (falls back to scalar when the request cannot be served).
const Ops& active();

// Test hook: force a variant by name ("scalar", "avx2"), nullptr to re-detect.
// Returns false if the variant is unavailable on this machine.
bool force(const char* name);

}  // namespace stabgem::kern
