#pragma once

#include <json.hpp>

#include <string>

namespace thermoseg::cli {

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3 };

LogLevel log_level_from_string(const std::string& s);

// JSON-lines logger on stderr. A single mutex guards each write, so lines
// from parallel per-record workers never interleave.
void set_log_level(LogLevel level);
void log(LogLevel level, const std::string& event, nlohmann::json fields = {});

inline void log_debug(const std::string& event, nlohmann::json fields = {}) {
  log(LogLevel::debug, event, std::move(fields));
}
inline void log_info(const std::string& event, nlohmann::json fields = {}) {
  log(LogLevel::info, event, std::move(fields));
}
inline void log_warn(const std::string& event, nlohmann::json fields = {}) {
  log(LogLevel::warn, event, std::move(fields));
}
inline void log_error(const std::string& event, nlohmann::json fields = {}) {
  log(LogLevel::error, event, std::move(fields));
}

}  // namespace thermoseg::cli
