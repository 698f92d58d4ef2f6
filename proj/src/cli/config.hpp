#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "thermoseg/match.hpp"

namespace thermoseg::cli {

// Flat TOML subset: [section] headers, key = value with strings, integers,
// floats, booleans and arrays of strings. Keys are stored as
// "section.key" ("key" at top level). Enough for pipeline configuration;
// nested tables are not supported.
class TomlConfig {
 public:
  using Value = std::variant<std::string, int64_t, double, bool, std::vector<std::string>>;

  static TomlConfig parse_file(const std::string& path);
  static TomlConfig parse_string(const std::string& text);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::string get_string(const std::string& key, const std::string& fallback) const;
  int64_t get_int(const std::string& key, int64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<std::string> get_string_array(const std::string& key,
                                            std::vector<std::string> fallback) const;

 private:
  std::map<std::string, Value> values_;
};

// Shared settings resolved from the config file; command-line flags override
// individual fields afterwards (flags win).
struct PipelineConfig {
  std::string manifest_path;
  std::string out_dir = "out";
  std::vector<std::string> class_names{"other", "weed", "plant"};
  MatchConfig match;
  uint64_t seed = 0;
  int jobs = 1;

  // schedule parameters
  std::string strategy = "balanced";
  int batch_size = 8;
  int epochs = 1;
  int pretrain_epochs = 1;
  int finetune_epochs = 1;
  int real_count = -1;  // --k; -1 means all real records

  // augmentation
  int target_size = 256;

  static PipelineConfig from_toml(const TomlConfig& toml);
};

}  // namespace thermoseg::cli
