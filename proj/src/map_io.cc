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

#include "prf/map_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace prf {

using nlohmann::json;

std::string MapToJson(const Coloring& coloring) {
  json j;
  const Rect& w = coloring.window();
  j["window"] = {{"xmin", w.min.x}, {"ymin", w.min.y}, {"xmax", w.max.x}, {"ymax", w.max.y}};
  j["anchor"] = {{"x", coloring.anchor().x},
                 {"y", coloring.anchor().y},
                 {"color", coloring.anchor_color() == Color::kBlack ? "black" : "white"}};
  json vertices = json::array();
  std::vector<int> vids(coloring.interior_vertices().begin(), coloring.interior_vertices().end());
  vids.insert(vids.end(), coloring.boundary_vertices().begin(), coloring.boundary_vertices().end());
  std::sort(vids.begin(), vids.end());
  for (int id : vids) {
    const Vertex& v = coloring.vertex(id);
    json jv = {{"id", id}, {"x", v.p.x}, {"y", v.p.y},
               {"kind", v.kind == VertexKind::kInterior ? "interior" : "boundary"}};
    if (v.kind == VertexKind::kBoundary) jv["perimeter"] = v.perimeter;
    vertices.push_back(jv);
  }
  j["vertices"] = vertices;
  std::vector<int> eids(coloring.edge_ids().begin(), coloring.edge_ids().end());
  std::sort(eids.begin(), eids.end());
  json edges = json::array();
  for (int id : eids) {
    const Edge& e = coloring.edge(id);
    edges.push_back({{"id", id}, {"v", {e.v[0], e.v[1]}}});
  }
  j["edges"] = edges;
  return j.dump(1);
}

Coloring MapFromJson(const std::string& text, double index_cell_size) {
  try {
    const json j = json::parse(text);
    const json& w = j.at("window");
    const Rect window{{w.at("xmin").get<double>(), w.at("ymin").get<double>()},
                      {w.at("xmax").get<double>(), w.at("ymax").get<double>()}};
    const std::string color = j.at("anchor").at("color").get<std::string>();
    if (color != "black" && color != "white") throw std::runtime_error("bad anchor color");
    std::vector<VertexRecord> vertices;
    for (const json& jv : j.at("vertices")) {
      Vertex v;
      v.p = {jv.at("x").get<double>(), jv.at("y").get<double>()};
      const std::string kind = jv.at("kind").get<std::string>();
      if (kind == "boundary") {
        v.kind = VertexKind::kBoundary;
        v.perimeter = jv.contains("perimeter") ? jv.at("perimeter").get<double>()
                                               : PerimeterCoordinate(window, v.p);
      } else if (kind != "interior") {
        throw std::runtime_error("bad vertex kind: " + kind);
      }
      vertices.push_back({jv.at("id").get<int>(), v});
    }
    std::vector<EdgeRecord> edges;
    for (const json& je : j.at("edges")) {
      Edge e;
      e.v[0] = je.at("v").at(0).get<int>();
      e.v[1] = je.at("v").at(1).get<int>();
      edges.push_back({je.at("id").get<int>(), e});
    }
    return Coloring::FromGraph(window, index_cell_size,
                               color == "black" ? Color::kBlack : Color::kWhite,
                               vertices, edges);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed map file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("inconsistent map file: ") + e.what());
  }
}

void WriteMapFile(const std::string& path, const Coloring& coloring) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << MapToJson(coloring) << "\n";
}

Coloring ReadMapFile(const std::string& path, double index_cell_size) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return MapFromJson(ss.str(), index_cell_size);
}

}  // namespace prf
