#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace hgft::log {

/// Emits a warning through the current sink (stderr by default).
void warn(const std::string& message);

/// Replaces the sink; pass an empty function to restore stderr.
void set_sink(std::function<void(const std::string&)> sink);

/// Number of warnings emitted since process start.
std::size_t warning_count();

}  // namespace hgft::log
