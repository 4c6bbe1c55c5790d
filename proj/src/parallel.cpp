#include "sumint/parallel.hpp"

namespace sumint {

namespace {
std::atomic<unsigned> g_threads{0};
}

void set_thread_count(unsigned threads) { g_threads = threads; }

unsigned thread_count() {
  const unsigned t = g_threads.load();
  if (t != 0) return t;
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace sumint
