#include "focusopt/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace focusopt::par {

namespace {

int read_worker_cap() {
#ifdef _OPENMP
  int hw = omp_get_max_threads();
#else
  int hw = 1;
#endif
  if (const char* env = std::getenv("FOCUSOPT_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) hw = std::min(hw, cap);
    } catch (...) {
      // unparsable value: ignore and use the hardware count
    }
  }
  return std::max(hw, 1);
}

}  // namespace

int max_workers() {
  static const int cap = read_worker_cap();
  return cap;
}

}  // namespace focusopt::par
