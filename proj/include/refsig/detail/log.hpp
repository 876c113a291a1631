#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace refsig::log {

enum class Level { off = 0, error = 1, warn = 2, info = 3, debug = 4 };

// Log level comes from the REFSIG_LOG environment variable
// (off|error|warn|info|debug). Default: warn.
inline Level level() {
  static const Level lvl = [] {
    const char* env = std::getenv("REFSIG_LOG");
    if (!env) return Level::warn;
    const std::string v(env);
    if (v == "off") return Level::off;
    if (v == "error") return Level::error;
    if (v == "warn") return Level::warn;
    if (v == "info") return Level::info;
    if (v == "debug") return Level::debug;
    return Level::warn;
  }();
  return lvl;
}

inline void emit(Level lvl, const char* tag, const std::string& msg) {
  if (static_cast<int>(lvl) <= static_cast<int>(level()))
    std::fprintf(stderr, "refsig: %s: %s\n", tag, msg.c_str());
}

inline void error(const std::string& msg) { emit(Level::error, "error", msg); }
inline void warn(const std::string& msg) { emit(Level::warn, "warning", msg); }
inline void info(const std::string& msg) { emit(Level::info, "info", msg); }
inline void debug(const std::string& msg) { emit(Level::debug, "debug", msg); }

}  // namespace refsig::log
