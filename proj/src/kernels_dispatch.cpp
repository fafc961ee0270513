#include "stabgem/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace stabgem::kern {

namespace {

const Ops* detect() {
  const char* req = std::getenv("STABGEM_KERNELS");
#if defined(STABGEM_HAVE_AVX2)
  if (req) {
    if (std::strcmp(req, "avx2") == 0 && avx2::supported()) return &avx2::ops;
    if (std::strcmp(req, "scalar") == 0) return &scalar::ops;
  }
  if (avx2::supported()) return &avx2::ops;
#else
  (void)req;
#endif
  return &scalar::ops;
}

const Ops* g_active = nullptr;

}  // namespace

const Ops& active() {
  if (!g_active) g_active = detect();
  return *g_active;
}

bool force(const char* name) {
  if (!name) {
    g_active = detect();
    return true;
  }
  if (std::strcmp(name, "scalar") == 0) {
    g_active = &scalar::ops;
    return true;
  }
#if defined(STABGEM_HAVE_AVX2)
  if (std::strcmp(name, "avx2") == 0 && avx2::supported()) {
    g_active = &avx2::ops;
    return true;
  }
#endif
  return false;
}

}  // namespace stabgem::kern
