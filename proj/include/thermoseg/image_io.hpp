#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thermoseg/raster.hpp"

namespace thermoseg {

// 16-bit single-channel pixel payload. Thermal calibration is attached
// separately from the manifest record.
struct Counts16 {
  int width = 0;
  int height = 0;
  std::vector<uint16_t> values;
};

// 8-bit gray or RGB PNG decoded to [0, 1] floats. Alpha is dropped,
// palette images are expanded.
RasterImage read_raster_png(const std::string& path);
void write_raster_png(const std::string& path, const RasterImage& img);

// 8-bit single-channel PNG whose pixel value IS the class id.
LabelMask read_mask_png(const std::string& path);
void write_mask_png(const std::string& path, const LabelMask& mask);

// 16-bit single-channel PNG (network byte order on disk, as PNG requires).
Counts16 read_counts_png(const std::string& path);
void write_counts_png(const std::string& path, const Counts16& counts);

// Minimal uncompressed little-endian TIFF, 16-bit single-channel.
Counts16 read_counts_tiff(const std::string& path);
void write_counts_tiff(const std::string& path, const Counts16& counts);

// Dispatch on extension: .png / .tif / .tiff.
Counts16 read_counts(const std::string& path);

}  // namespace thermoseg
