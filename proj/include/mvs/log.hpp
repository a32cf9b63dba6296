#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace mvs {

// Raised for bad user input (missing files, malformed data, out-of-range
// arguments). The CLI maps it to exit code 2; other exceptions exit 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Level comes from MVS_LOG (error|warn|info|debug), default warn.
inline LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("MVS_LOG");
        if (!env) return LogLevel::kWarn;
        if (!std::strcmp(env, "error")) return LogLevel::kError;
        if (!std::strcmp(env, "info")) return LogLevel::kInfo;
        if (!std::strcmp(env, "debug")) return LogLevel::kDebug;
        return LogLevel::kWarn;
    }();
    return level;
}

template <typename... Args>
inline void log(LogLevel lvl, const char* fmt, Args... args) {
    if (lvl > log_level()) return;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::fprintf(stderr, "[mvs %s] ", names[static_cast<int>(lvl)]);
    std::fprintf(stderr, fmt, args...);
    std::fputc('\n', stderr);
}

inline void log(LogLevel lvl, const char* msg) { log(lvl, "%s", msg); }

#define MVS_LOG_INFO(...) ::mvs::log(::mvs::LogLevel::kInfo, __VA_ARGS__)
#define MVS_LOG_WARN(...) ::mvs::log(::mvs::LogLevel::kWarn, __VA_ARGS__)
#define MVS_LOG_DEBUG(...) ::mvs::log(::mvs::LogLevel::kDebug, __VA_ARGS__)

}  // namespace mvs
