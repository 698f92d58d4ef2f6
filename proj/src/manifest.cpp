#include "thermoseg/manifest.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>

namespace thermoseg {

using nlohmann::json;

std::string to_string(Domain d) { return d == Domain::real ? "real" : "synthetic"; }

std::string to_string(Modality m) {
  switch (m) {
    case Modality::rgb: return "rgb";
    case Modality::thermal: return "thermal";
    case Modality::gen_thermal: return "gen_thermal";
  }
  return "rgb";
}

std::string to_string(Stage s) {
  switch (s) {
    case Stage::emergence: return "emergence";
    case Stage::vegetative: return "vegetative";
    case Stage::flowering: return "flowering";
    case Stage::unknown: return "unknown";
  }
  return "unknown";
}

Domain domain_from_string(const std::string& s) {
  if (s == "real") return Domain::real;
  if (s == "synthetic") return Domain::synthetic;
  throw std::invalid_argument("invalid domain '" + s + "'");
}

Modality modality_from_string(const std::string& s) {
  if (s == "rgb") return Modality::rgb;
  if (s == "thermal") return Modality::thermal;
  if (s == "gen_thermal") return Modality::gen_thermal;
  throw std::invalid_argument("invalid modality '" + s + "'");
}

Stage stage_from_string(const std::string& s) {
  if (s == "emergence") return Stage::emergence;
  if (s == "vegetative") return Stage::vegetative;
  if (s == "flowering") return Stage::flowering;
  if (s == "unknown") return Stage::unknown;
  throw std::invalid_argument("invalid stage '" + s + "'");
}

const SampleRecord* Manifest::find(const std::string& id) const {
  for (const auto& rec : records)
    if (rec.id == id) return &rec;
  return nullptr;
}

namespace {

// Days since 1970-01-01 for a proleptic Gregorian date (Howard Hinnant's
// days_from_civil), so parsing never touches the local time zone.
int64_t days_from_civil(int64_t y, int m, int d) {
  y -= m <= 2;
  const int64_t era = (y >= 0 ? y : y - 399) / 400;
  const int64_t yoe = y - era * 400;
  const int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + doe - 719468;
}

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static const int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return lengths[m - 1];
}

}  // namespace

double parse_timestamp_utc(const std::string& s) {
  int year = 0, month = 0, day = 0, hour = 0, minute = 0, sec = 0;
  int consumed = 0;
  if (std::sscanf(s.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%n", &year, &month, &day, &hour, &minute,
                  &sec, &consumed) != 6 || consumed != 19) {
    throw std::invalid_argument("timestamp '" + s + "' is not ISO-8601 UTC");
  }
  size_t pos = 19;
  double frac = 0.0;
  if (pos < s.size() && s[pos] == '.') {
    size_t digits = 0;
    double scale = 0.1;
    ++pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      frac += (s[pos] - '0') * scale;
      scale *= 0.1;
      ++pos;
      ++digits;
    }
    if (digits == 0) throw std::invalid_argument("timestamp '" + s + "': empty fraction");
  }
  const std::string zone = s.substr(pos);
  if (zone != "Z" && zone != "+00:00")
    throw std::invalid_argument("timestamp '" + s + "' must be UTC (Z or +00:00)");
  if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month) || hour > 23 ||
      minute > 59 || sec > 60 || hour < 0 || minute < 0 || sec < 0)
    throw std::invalid_argument("timestamp '" + s + "' has out-of-range fields");

  const int64_t days = days_from_civil(year, month, day);
  return static_cast<double>(days * 86400 + hour * 3600 + minute * 60 + sec) + frac;
}

namespace {

SampleRecord record_from_json(const json& obj) {
  static const std::set<std::string> known = {"id",        "domain",       "modality",
                                              "image_path", "mask_path",    "timestamp",
                                              "stage",      "thermal_scale", "thermal_offset"};
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!known.count(key)) throw std::invalid_argument("unknown field '" + key + "'");
  }
  SampleRecord rec;
  rec.id = obj.at("id").get<std::string>();
  if (rec.id.empty()) throw std::invalid_argument("empty id");
  rec.domain = domain_from_string(obj.at("domain").get<std::string>());
  rec.modality = modality_from_string(obj.at("modality").get<std::string>());
  rec.image_path = obj.at("image_path").get<std::string>();
  if (obj.contains("mask_path") && !obj.at("mask_path").is_null())
    rec.mask_path = obj.at("mask_path").get<std::string>();
  rec.timestamp = obj.at("timestamp").get<std::string>();
  rec.timestamp_sec = parse_timestamp_utc(rec.timestamp);
  rec.stage = obj.contains("stage") ? stage_from_string(obj.at("stage").get<std::string>())
                                    : Stage::unknown;
  const bool has_scale = obj.contains("thermal_scale");
  const bool has_offset = obj.contains("thermal_offset");
  if (has_scale != has_offset)
    throw std::invalid_argument("thermal_scale and thermal_offset must appear together");
  if (has_scale) {
    if (rec.modality != Modality::thermal)
      throw std::invalid_argument("thermal calibration on non-thermal record");
    rec.thermal_scale = obj.at("thermal_scale").get<double>();
    rec.thermal_offset = obj.at("thermal_offset").get<double>();
    if (!(*rec.thermal_scale > 0.0))
      throw std::invalid_argument("thermal_scale must be > 0");
    if (!std::isfinite(*rec.thermal_offset))
      throw std::invalid_argument("thermal_offset must be finite");
  }
  return rec;
}

json record_to_json(const SampleRecord& rec) {
  json obj;
  obj["id"] = rec.id;
  obj["domain"] = to_string(rec.domain);
  obj["modality"] = to_string(rec.modality);
  obj["image_path"] = rec.image_path;
  if (rec.mask_path) obj["mask_path"] = *rec.mask_path;
  obj["timestamp"] = rec.timestamp;
  obj["stage"] = to_string(rec.stage);
  if (rec.thermal_scale) obj["thermal_scale"] = *rec.thermal_scale;
  if (rec.thermal_offset) obj["thermal_offset"] = *rec.thermal_offset;
  return obj;
}

}  // namespace

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("manifest: cannot open '" + path + "'");

  Manifest manifest;
  std::set<std::string> seen_ids;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    SampleRecord rec;
    try {
      rec = record_from_json(json::parse(line));
    } catch (const std::exception& e) {
      throw std::runtime_error("manifest: " + path + ":" + std::to_string(line_number) + ": " +
                               e.what());
    }
    if (!seen_ids.insert(rec.id).second)
      throw std::runtime_error("manifest: " + path + ":" + std::to_string(line_number) +
                               ": duplicate id '" + rec.id + "'");
    manifest.records.push_back(std::move(rec));
  }
  return manifest;
}

void save_manifest(const Manifest& manifest, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("manifest: cannot write '" + path + "'");
  for (const auto& rec : manifest.records) out << record_to_json(rec).dump() << '\n';
}

}  // namespace thermoseg
