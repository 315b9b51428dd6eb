#include "hecke/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hecke {

namespace {

unsigned initial_limit() {
  if (const char* env = std::getenv("HECKE_ZERO_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return 0;
}

std::atomic<unsigned> g_limit{initial_limit()};

}  // namespace

unsigned thread_limit() {
  unsigned v = g_limit.load();
  if (v == 0) v = std::max(1u, std::thread::hardware_concurrency());
  return v;
}

void set_thread_limit(unsigned n) { g_limit.store(n); }

}  // namespace hecke
