/*
 * Copyright 2026 The prfmap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PRF_RASTER_IO_H_
#define PRF_RASTER_IO_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "prf/geometry.h"

namespace prf {

// 8-bit binary PGM (P5). Row 0 of the image is the top (max y) row of the
// grid; pixel = round(255 * whiteness), so 0 is certainly occupied.
struct GreyImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, top row first

  friend bool operator==(const GreyImage&, const GreyImage&) = default;
};

// whiteness has one value in [0, 1] per grid cell, flat grid order.
GreyImage ToImage(const GridSpec& grid, std::span<const double> whiteness);
// Probability of black per cell: pixel = round(255 * (1 - p)).
GreyImage FromBlackProbability(const GridSpec& grid, std::span<const double> p_black);
// Back to flat grid order, pixel / 255.
std::vector<double> WhitenessFromImage(const GridSpec& grid, const GreyImage& image);

std::string EncodePgm(const GreyImage& image);
// Throws std::runtime_error on malformed data.
GreyImage DecodePgm(const std::string& bytes);
void WritePgmFile(const std::string& path, const GreyImage& image);
GreyImage ReadPgmFile(const std::string& path);

// Sidecar: "key value..." lines describing a raster.
struct RasterSidecar {
  std::string image;
  std::string kind;
  GridSpec grid;
  std::int64_t samples = 0;
  std::int64_t chains = 0;
  std::map<std::string, std::string> extra;
};
std::string SidecarPath(const std::string& pgm_path);
std::string FormatSidecar(const RasterSidecar& s);
RasterSidecar ParseSidecar(const std::string& text);

// Writes <path> and its sidecar.
void WriteRaster(const std::string& path, const GreyImage& image, const RasterSidecar& sidecar);

}  // namespace prf

#endif  // PRF_RASTER_IO_H_
