#include "qps/log.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <mutex>

namespace qps {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("QPS_LOG");
    if (env == nullptr) return LogLevel::Off;
    if (std::strcmp(env, "trace") == 0) return LogLevel::Trace;
    if (std::strcmp(env, "info") == 0) return LogLevel::Info;
    return LogLevel::Off;
  }();
  return level;
}

void log_message(LogLevel level, const std::string& msg) {
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  std::cerr << (level == LogLevel::Trace ? "[qps trace] " : "[qps] ") << msg << "\n";
}

}  // namespace qps
