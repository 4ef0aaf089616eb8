#pragma once

#include <string>

namespace equirag {

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

/// Minimal stderr logger. Output never feeds report artifacts, so log noise
/// cannot break run determinism.
void set_log_level(LogLevel level);
LogLevel log_level();
void log(LogLevel level, const std::string& msg);

inline void log_debug(const std::string& msg) { log(LogLevel::debug, msg); }
inline void log_info(const std::string& msg) { log(LogLevel::info, msg); }
inline void log_warn(const std::string& msg) { log(LogLevel::warn, msg); }
inline void log_error(const std::string& msg) { log(LogLevel::error, msg); }

}  // namespace equirag
