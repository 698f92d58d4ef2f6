#pragma once

#include <optional>
#include <string>
#include <vector>

namespace thermoseg {

enum class Domain { real, synthetic };
enum class Modality { rgb, thermal, gen_thermal };
enum class Stage { emergence, vegetative, flowering, unknown };

std::string to_string(Domain d);
std::string to_string(Modality m);
std::string to_string(Stage s);
Domain domain_from_string(const std::string& s);
Modality modality_from_string(const std::string& s);
Stage stage_from_string(const std::string& s);

// One dataset sample. thermal_scale / thermal_offset are allowed only on
// thermal records and carry the count-to-Celsius calibration; temperature
// extraction fails when a thermal record omits them.
struct SampleRecord {
  std::string id;
  Domain domain = Domain::real;
  Modality modality = Modality::rgb;
  std::string image_path;
  std::optional<std::string> mask_path;
  std::string timestamp;        // ISO-8601 UTC, e.g. 2025-06-01T10:00:00Z
  Stage stage = Stage::unknown;
  std::optional<double> thermal_scale;
  std::optional<double> thermal_offset;

  double timestamp_sec = 0.0;  // derived: seconds since the Unix epoch

  bool operator==(const SampleRecord& other) const {
    return id == other.id && domain == other.domain && modality == other.modality &&
           image_path == other.image_path && mask_path == other.mask_path &&
           timestamp == other.timestamp && stage == other.stage &&
           thermal_scale == other.thermal_scale && thermal_offset == other.thermal_offset;
  }
};

struct Manifest {
  std::vector<SampleRecord> records;
  std::vector<std::string> class_names{"other", "weed", "plant"};

  const SampleRecord* find(const std::string& id) const;
};

// Seconds since the Unix epoch for "YYYY-MM-DDTHH:MM:SS[.fff](Z|+00:00)".
// Throws on anything else; the toolkit stores all timestamps in UTC.
double parse_timestamp_utc(const std::string& s);

// JSON-lines, one record object per line, field names as in SampleRecord.
Manifest load_manifest(const std::string& path);
void save_manifest(const Manifest& manifest, const std::string& path);

}  // namespace thermoseg
