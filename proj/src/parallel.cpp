#include "bidensity/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bidensity {

int thread_cap() {
  int cap = 1;
#ifdef _OPENMP
  cap = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("BIDENSITY_THREADS")) {
    try {
      int requested = std::stoi(env);
      if (requested >= 1) cap = std::min(cap, requested);
    } catch (...) {
      // Malformed value: keep the OpenMP default.
    }
  }
  return cap < 1 ? 1 : cap;
}

void apply_thread_cap_from_env() {
#ifdef _OPENMP
  omp_set_num_threads(thread_cap());
#endif
}

}  // namespace bidensity
