#pragma once

#include <sstream>
#include <string>

namespace qps {

/// Logging verbosity, controlled by the QPS_LOG environment variable
/// ("off" | "info" | "trace", default off). Read once per process.
enum class LogLevel { Off = 0, Info = 1, Trace = 2 };

LogLevel log_level();

void log_message(LogLevel level, const std::string& msg);

template <typename... Args>
void log_info(Args&&... args) {
  if (log_level() < LogLevel::Info) return;
  std::ostringstream os;
  (os << ... << args);
  log_message(LogLevel::Info, os.str());
}

template <typename... Args>
void log_trace(Args&&... args) {
  if (log_level() < LogLevel::Trace) return;
  std::ostringstream os;
  (os << ... << args);
  log_message(LogLevel::Trace, os.str());
}

}  // namespace qps
