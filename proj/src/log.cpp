#include "lienard/log.hpp"

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace lienard {

LogLevel log_level() {
  static LogLevel lvl = [] {
    const char* s = std::getenv("LIENARD_LAB_LOG");
    if (!s) return LogLevel::Warn;
    if (std::strcmp(s, "error") == 0) return LogLevel::Error;
    if (std::strcmp(s, "warn") == 0) return LogLevel::Warn;
    if (std::strcmp(s, "info") == 0) return LogLevel::Info;
    if (std::strcmp(s, "debug") == 0) return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return lvl;
}

void log_msg(LogLevel lvl, const char* fmt, ...) {
  if (lvl > log_level()) return;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::fprintf(stderr, "[%s] ", names[static_cast<int>(lvl)]);
  va_list ap;
  va_start(ap, fmt);
  std::vfprintf(stderr, fmt, ap);
  va_end(ap);
  std::fputc('\n', stderr);
}

}  // namespace lienard
