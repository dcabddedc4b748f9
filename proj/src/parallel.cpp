#include "hgft/parallel.hpp"

#include <atomic>

namespace hgft {
namespace {

std::atomic<unsigned> g_threads{0};

}  // namespace

unsigned thread_count() {
  const unsigned n = g_threads.load();
  if (n != 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_thread_count(unsigned n) { g_threads.store(n); }

}  // namespace hgft
