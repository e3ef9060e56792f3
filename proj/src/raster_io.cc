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

#include "prf/raster_io.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace prf {
namespace {

std::string Format(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint8_t ToByte(double v) {
  if (!(v >= 0.0)) v = 0.0;
  return static_cast<std::uint8_t>(std::lround(std::min(v, 1.0) * 255.0));
}

}  // namespace

GreyImage ToImage(const GridSpec& grid, std::span<const double> whiteness) {
  if (static_cast<int>(whiteness.size()) != grid.num_cells()) {
    throw std::invalid_argument("raster size does not match grid");
  }
  GreyImage img;
  img.width = grid.nx();
  img.height = grid.ny();
  img.pixels.resize(whiteness.size());
  for (int iy = 0; iy < grid.ny(); ++iy) {
    const int row = grid.ny() - 1 - iy;
    for (int ix = 0; ix < grid.nx(); ++ix) {
      img.pixels[row * grid.nx() + ix] = ToByte(whiteness[grid.Flat({ix, iy})]);
    }
  }
  return img;
}

GreyImage FromBlackProbability(const GridSpec& grid, std::span<const double> p_black) {
  std::vector<double> white(p_black.size());
  for (size_t i = 0; i < p_black.size(); ++i) white[i] = 1.0 - p_black[i];
  return ToImage(grid, white);
}

std::vector<double> WhitenessFromImage(const GridSpec& grid, const GreyImage& image) {
  if (image.width != grid.nx() || image.height != grid.ny()) {
    throw std::invalid_argument("image size does not match grid");
  }
  std::vector<double> out(grid.num_cells());
  for (int iy = 0; iy < grid.ny(); ++iy) {
    const int row = grid.ny() - 1 - iy;
    for (int ix = 0; ix < grid.nx(); ++ix) {
      out[grid.Flat({ix, iy})] = image.pixels[row * grid.nx() + ix] / 255.0;
    }
  }
  return out;
}

std::string EncodePgm(const GreyImage& image) {
  std::string out = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) +
                    "\n255\n";
  out.append(image.pixels.begin(), image.pixels.end());
  return out;
}

GreyImage DecodePgm(const std::string& bytes) {
  size_t pos = 0;
  auto skip_space = [&] {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
  };
  auto number = [&] {
    skip_space();
    const size_t start = pos;
    while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) ++pos;
    if (start == pos) throw std::runtime_error("pgm: bad header");
    return std::stoi(bytes.substr(start, pos - start));
  };
  if (bytes.compare(0, 2, "P5") != 0) throw std::runtime_error("pgm: not a P5 image");
  pos = 2;
  GreyImage img;
  img.width = number();
  img.height = number();
  if (number() != 255) throw std::runtime_error("pgm: maxval must be 255");
  if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
    throw std::runtime_error("pgm: bad header");
  }
  ++pos;
  const size_t n = static_cast<size_t>(img.width) * img.height;
  if (bytes.size() - pos != n) throw std::runtime_error("pgm: pixel count mismatch");
  img.pixels.assign(bytes.begin() + pos, bytes.end());
  return img;
}

void WritePgmFile(const std::string& path, const GreyImage& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << EncodePgm(image);
  if (!out) throw std::runtime_error("error writing " + path);
}

GreyImage ReadPgmFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return DecodePgm(bytes);
}

std::string SidecarPath(const std::string& pgm_path) { return pgm_path + ".txt"; }

std::string FormatSidecar(const RasterSidecar& s) {
  const Rect& w = s.grid.window();
  std::ostringstream out;
  out << "# prfmap raster: 0 = occupied (black), 255 = free; first image row is max y\n";
  out << "image " << s.image << "\n";
  out << "kind " << s.kind << "\n";
  out << "window " << Format(w.min.x) << " " << Format(w.min.y) << " " << Format(w.max.x) << " "
      << Format(w.max.y) << "\n";
  out << "cell_size " << Format(s.grid.cell_size()) << "\n";
  out << "nx " << s.grid.nx() << "\nny " << s.grid.ny() << "\n";
  out << "samples " << s.samples << "\nchains " << s.chains << "\n";
  for (const auto& [k, v] : s.extra) out << k << " " << v << "\n";
  return out.str();
}

RasterSidecar ParseSidecar(const std::string& text) {
  RasterSidecar s;
  std::istringstream in(text);
  std::string line;
  Rect window;
  double cell = 0.0;
  int nx = -1, ny = -1;
  bool have_window = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream f(line);
    std::string key;
    f >> key;
    if (key == "image") {
      f >> s.image;
    } else if (key == "kind") {
      f >> s.kind;
    } else if (key == "window") {
      have_window = static_cast<bool>(f >> window.min.x >> window.min.y >> window.max.x >> window.max.y);
    } else if (key == "cell_size") {
      f >> cell;
    } else if (key == "nx") {
      f >> nx;
    } else if (key == "ny") {
      f >> ny;
    } else if (key == "samples") {
      f >> s.samples;
    } else if (key == "chains") {
      f >> s.chains;
    } else {
      std::string rest;
      std::getline(f >> std::ws, rest);
      s.extra[key] = rest;
    }
  }
  if (!have_window || !(cell > 0.0)) throw std::runtime_error("sidecar: missing window or cell_size");
  s.grid = GridSpec(window, cell);
  if (s.grid.nx() != nx || s.grid.ny() != ny) throw std::runtime_error("sidecar: grid size mismatch");
  return s;
}

void WriteRaster(const std::string& path, const GreyImage& image, const RasterSidecar& sidecar) {
  WritePgmFile(path, image);
  std::ofstream out(SidecarPath(path));
  if (!out) throw std::runtime_error("cannot write " + SidecarPath(path));
  out << FormatSidecar(sidecar);
}

}  // namespace prf
