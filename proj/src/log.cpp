#include "hgft/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace hgft::log {
namespace {

std::mutex g_mutex;
std::function<void(const std::string&)> g_sink;
std::atomic<std::size_t> g_count{0};

}  // namespace

void warn(const std::string& message) {
  ++g_count;
  std::lock_guard lock(g_mutex);
  if (g_sink) {
    g_sink(message);
  } else {
    std::cerr << "warning: " << message << '\n';
  }
}

void set_sink(std::function<void(const std::string&)> sink) {
  std::lock_guard lock(g_mutex);
  g_sink = std::move(sink);
}

std::size_t warning_count() { return g_count.load(); }

}  // namespace hgft::log
