#pragma once

namespace lienard {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Level comes from LIENARD_LAB_LOG (error|warn|info|debug); default warn.
LogLevel log_level();

// printf-style, writes to stderr with a level prefix if lvl <= log_level().
void log_msg(LogLevel lvl, const char* fmt, ...)
#if defined(__GNUC__)
    __attribute__((format(printf, 2, 3)))
#endif
    ;

}  // namespace lienard
