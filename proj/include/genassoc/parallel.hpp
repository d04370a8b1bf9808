#pragma once

#include <cstdlib>
#include <string>

#include <omp.h>

namespace genassoc {

/// Worker count for a kernel: explicit request > GENASSOC_THREADS > OpenMP
/// default. Thread count affects scheduling only; every kernel sorts its
/// results before returning.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GENASSOC_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return omp_get_max_threads();
}

}  // namespace genassoc
