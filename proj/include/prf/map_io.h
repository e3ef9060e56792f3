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

#ifndef PRF_MAP_IO_H_
#define PRF_MAP_IO_H_

#include <string>

#include "prf/coloring.h"

namespace prf {

// Polygonal map export: window, anchor point and color, vertex array
// (id, x, y, kind, perimeter) and edge array (id, vertex ids). Doubles are
// written with round-trip precision.
std::string MapToJson(const Coloring& coloring);
// Throws std::runtime_error on malformed input.
Coloring MapFromJson(const std::string& text,
                     double index_cell_size = kDefaultIndexCellSize);

void WriteMapFile(const std::string& path, const Coloring& coloring);
Coloring ReadMapFile(const std::string& path,
                     double index_cell_size = kDefaultIndexCellSize);

}  // namespace prf

#endif  // PRF_MAP_IO_H_
