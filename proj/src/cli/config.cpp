#include "cli/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace thermoseg::cli {

namespace {

std::string trim(const std::string& s) {
  size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

std::string parse_quoted(const std::string& raw, size_t line_number) {
  if (raw.size() < 2 || raw.back() != '"')
    throw std::runtime_error("config line " + std::to_string(line_number) +
                             ": unterminated string");
  std::string out;
  for (size_t i = 1; i + 1 < raw.size(); ++i) {
    if (raw[i] == '\\' && i + 2 < raw.size()) {
      ++i;
      switch (raw[i]) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        default:
          throw std::runtime_error("config line " + std::to_string(line_number) +
                                   ": bad escape");
      }
    } else {
      out += raw[i];
    }
  }
  return out;
}

TomlConfig::Value parse_value(const std::string& raw, size_t line_number) {
  if (raw.empty())
    throw std::runtime_error("config line " + std::to_string(line_number) + ": empty value");
  if (raw.front() == '"') return parse_quoted(raw, line_number);
  if (raw == "true") return true;
  if (raw == "false") return false;
  if (raw.front() == '[') {
    if (raw.back() != ']')
      throw std::runtime_error("config line " + std::to_string(line_number) +
                               ": unterminated array");
    std::vector<std::string> items;
    std::string body = raw.substr(1, raw.size() - 2);
    size_t pos = 0;
    while (pos < body.size()) {
      while (pos < body.size() && (std::isspace(static_cast<unsigned char>(body[pos])) ||
                                   body[pos] == ','))
        ++pos;
      if (pos >= body.size()) break;
      if (body[pos] != '"')
        throw std::runtime_error("config line " + std::to_string(line_number) +
                                 ": only string arrays are supported");
      const size_t close = body.find('"', pos + 1);
      if (close == std::string::npos)
        throw std::runtime_error("config line " + std::to_string(line_number) +
                                 ": unterminated array string");
      items.push_back(body.substr(pos + 1, close - pos - 1));
      pos = close + 1;
    }
    return items;
  }
  // number: integer when it survives a full int64 parse, float otherwise
  try {
    size_t used = 0;
    const int64_t as_int = std::stoll(raw, &used);
    if (used == raw.size()) return as_int;
  } catch (const std::exception&) {
  }
  try {
    size_t used = 0;
    const double as_double = std::stod(raw, &used);
    if (used == raw.size()) return as_double;
  } catch (const std::exception&) {
  }
  throw std::runtime_error("config line " + std::to_string(line_number) + ": cannot parse value '" +
                           raw + "'");
}

}  // namespace

TomlConfig TomlConfig::parse_string(const std::string& text) {
  TomlConfig config;
  std::istringstream in(text);
  std::string line, section;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    // strip comments outside strings
    bool in_string = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
      if (line[i] == '#' && !in_string) {
        line.resize(i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::runtime_error("config line " + std::to_string(line_number) +
                                 ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw std::runtime_error("config line " + std::to_string(line_number) +
                                 ": empty section name");
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(line_number) +
                               ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty())
      throw std::runtime_error("config line " + std::to_string(line_number) + ": empty key");
    const std::string full_key = section.empty() ? key : section + "." + key;
    config.values_[full_key] = parse_value(trim(line.substr(eq + 1)), line_number);
  }
  return config;
}

TomlConfig TomlConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_string(text.str());
}

std::string TomlConfig::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (const auto* v = std::get_if<std::string>(&it->second)) return *v;
  throw std::runtime_error("config: '" + key + "' is not a string");
}

int64_t TomlConfig::get_int(const std::string& key, int64_t fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (const auto* v = std::get_if<int64_t>(&it->second)) return *v;
  throw std::runtime_error("config: '" + key + "' is not an integer");
}

double TomlConfig::get_double(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (const auto* v = std::get_if<double>(&it->second)) return *v;
  if (const auto* v = std::get_if<int64_t>(&it->second)) return static_cast<double>(*v);
  throw std::runtime_error("config: '" + key + "' is not a number");
}

bool TomlConfig::get_bool(const std::string& key, bool fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (const auto* v = std::get_if<bool>(&it->second)) return *v;
  throw std::runtime_error("config: '" + key + "' is not a boolean");
}

std::vector<std::string> TomlConfig::get_string_array(const std::string& key,
                                                      std::vector<std::string> fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (const auto* v = std::get_if<std::vector<std::string>>(&it->second)) return *v;
  throw std::runtime_error("config: '" + key + "' is not a string array");
}

PipelineConfig PipelineConfig::from_toml(const TomlConfig& toml) {
  PipelineConfig config;
  config.manifest_path = toml.get_string("manifest", config.manifest_path);
  config.out_dir = toml.get_string("out_dir", config.out_dir);
  config.class_names = toml.get_string_array("class_names", config.class_names);
  config.seed = static_cast<uint64_t>(toml.get_int("seed", static_cast<int64_t>(config.seed)));
  config.jobs = static_cast<int>(toml.get_int("jobs", config.jobs));

  config.match.scale_min = toml.get_double("match.scale_min", config.match.scale_min);
  config.match.scale_max = toml.get_double("match.scale_max", config.match.scale_max);
  config.match.scale_step = toml.get_double("match.scale_step", config.match.scale_step);
  config.match.accept_threshold =
      toml.get_double("match.threshold", config.match.accept_threshold);
  config.match.time_window_sec =
      toml.get_double("match.window_sec", config.match.time_window_sec);

  config.strategy = toml.get_string("schedule.strategy", config.strategy);
  config.batch_size = static_cast<int>(toml.get_int("schedule.batch_size", config.batch_size));
  config.epochs = static_cast<int>(toml.get_int("schedule.epochs", config.epochs));
  config.pretrain_epochs =
      static_cast<int>(toml.get_int("schedule.pretrain_epochs", config.pretrain_epochs));
  config.finetune_epochs =
      static_cast<int>(toml.get_int("schedule.finetune_epochs", config.finetune_epochs));
  config.real_count = static_cast<int>(toml.get_int("schedule.k", config.real_count));

  config.target_size = static_cast<int>(toml.get_int("augment.target_size", config.target_size));
  return config;
}

}  // namespace thermoseg::cli
