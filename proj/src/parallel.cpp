#include "chebylie/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace chebylie {

namespace {
int g_workers = 0;  // 0: not configured, use omp_get_max_threads()
}

int worker_count() { return g_workers > 0 ? g_workers : omp_get_max_threads(); }

void set_worker_count(int workers) { g_workers = workers > 0 ? workers : 0; }

int configure_workers_from_env() {
  if (const char* env = std::getenv("CHEBYLIE_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) set_worker_count(v);
    } catch (const std::exception&) {
    }
  }
  return worker_count();
}

}  // namespace chebylie
