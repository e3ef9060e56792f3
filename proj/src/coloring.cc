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

#include "prf/coloring.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace prf {
namespace {

const double kMinSin = std::sin(kAngleEpsilon);

void SortUnique(std::vector<int>* v) {
  std::sort(v->begin(), v->end());
  v->erase(std::unique(v->begin(), v->end()), v->end());
}

}  // namespace

void Coloring::DenseIdSet::Insert(int id) {
  if (id >= static_cast<int>(pos.size())) pos.resize(id + 1, -1);
  pos[id] = static_cast<int>(items.size());
  items.push_back(id);
}

int Coloring::DenseIdSet::Remove(int id) {
  const int at = pos[id];
  const int last = items.back();
  items[at] = last;
  pos[last] = at;
  items.pop_back();
  pos[id] = -1;
  return at;
}

void Coloring::DenseIdSet::UndoInsert(int id) {
  items.pop_back();
  pos[id] = -1;
}

void Coloring::DenseIdSet::UndoRemove(int id, int at) {
  if (at == static_cast<int>(items.size())) {
    items.push_back(id);
  } else {
    const int moved = items[at];
    items.push_back(moved);
    pos[moved] = static_cast<int>(items.size()) - 1;
    items[at] = id;
  }
  pos[id] = at;
}

Coloring::Coloring(const Rect& window, double index_cell_size,
                   Color anchor_color)
    : window_(window),
      anchor_(window.Center()),
      anchor_color_(anchor_color),
      index_(GridSpec(window, index_cell_size)) {}

Coloring Coloring::FromGraph(const Rect& window, double index_cell_size,
                             Color anchor_color,
                             std::span<const VertexRecord> vertices,
                             std::span<const EdgeRecord> edges) {
  Coloring c(window, index_cell_size, anchor_color);
  int max_v = -1, max_e = -1;
  for (const auto& v : vertices) max_v = std::max(max_v, v.id);
  for (const auto& e : edges) max_e = std::max(max_e, e.id);
  c.vertices_.resize(max_v + 1);
  c.vertex_alive_.assign(max_v + 1, 0);
  c.edges_.resize(max_e + 1);
  c.edge_alive_.assign(max_e + 1, 0);
  for (const auto& rec : vertices) {
    if (rec.id < 0 || c.vertex_alive_[rec.id]) {
      throw std::invalid_argument("duplicate or negative vertex id");
    }
    Vertex v = rec.vertex;
    v.edges[0] = v.edges[1] = -1;
    c.vertices_[rec.id] = v;
    c.vertex_alive_[rec.id] = 1;
    (v.kind == VertexKind::kInterior ? c.interior_ : c.boundary_).Insert(rec.id);
  }
  for (const auto& rec : edges) {
    if (rec.id < 0 || c.edge_alive_[rec.id]) {
      throw std::invalid_argument("duplicate or negative edge id");
    }
    for (int k = 0; k < 2; ++k) {
      const int v = rec.edge.v[k];
      if (v < 0 || v > max_v || !c.vertex_alive_[v]) {
        throw std::invalid_argument("edge references a missing vertex");
      }
    }
    c.edges_[rec.id] = rec.edge;
    c.edge_alive_[rec.id] = 1;
    for (int k = 0; k < 2; ++k) {
      Vertex& v = c.vertices_[rec.edge.v[k]];
      if (v.edges[0] < 0) {
        v.edges[0] = rec.id;
      } else if (v.edges[1] < 0) {
        v.edges[1] = rec.id;
      } else {
        throw std::invalid_argument("vertex has more than two edges");
      }
    }
    c.edge_list_.Insert(rec.id);
    c.index_.Insert(rec.id, c.EdgeSegment(rec.id));
  }
  for (int id = max_v; id >= 0; --id) {
    if (!c.vertex_alive_[id]) c.vertex_free_.push_back(id);
  }
  for (int id = max_e; id >= 0; --id) {
    if (!c.edge_alive_[id]) c.edge_free_.push_back(id);
  }
  c.stats_ = c.RecomputeStats();
  return c;
}

bool Coloring::HasVertex(int id) const {
  return id >= 0 && id < static_cast<int>(vertex_alive_.size()) &&
         vertex_alive_[id];
}

bool Coloring::HasEdge(int id) const {
  return id >= 0 && id < static_cast<int>(edge_alive_.size()) &&
         edge_alive_[id];
}

Segment Coloring::EdgeSegment(int id) const {
  return {vertices_[edges_[id].v[0]].p, vertices_[edges_[id].v[1]].p};
}

int Coloring::OtherEnd(int edge_id, int vertex_id) const {
  const Edge& e = edges_[edge_id];
  return e.v[0] == vertex_id ? e.v[1] : e.v[0];
}

double Coloring::VertexLogSin(int v) const {
  const Vertex& vx = vertices_[v];
  double s;
  if (vx.kind == VertexKind::kInterior) {
    const Point2 u = vertices_[Neighbor(v, 0)].p - vx.p;
    const Point2 w = vertices_[Neighbor(v, 1)].p - vx.p;
    s = std::abs(Cross(u, w)) / (Norm(u) * Norm(w));
  } else {
    const Point2 d = vertices_[Neighbor(v, 0)].p - vx.p;
    s = std::abs(Cross(d, PerimeterTangent(window_, vx.perimeter))) / Norm(d);
  }
  return std::log(std::min(1.0, s));
}

CachedStats Coloring::RecomputeStats() const {
  CachedStats s;
  for (int e : edge_list_.items) {
    const double len = EdgeLength(e);
    ++s.edge_count;
    s.total_length += len;
    s.sum_log_length += std::log(len);
  }
  for (const auto* set : {&interior_, &boundary_}) {
    for (int v : set->items) {
      if (vertices_[v].degree() == vertices_[v].required_degree()) {
        s.sum_log_sin += VertexLogSin(v);
      }
    }
  }
  return s;
}

int Coloring::CrossingParity(Point2 a, Point2 b) const {
  const Segment path{a, b};
  const double len = path.Length();
  bool degenerate = false;
  int count = 0;
  for (int e : index_.Candidates(path)) {
    const Segment s = EdgeSegment(e);
    if (PointSegmentDistance(s.a, path) <= kGeomEpsilon ||
        PointSegmentDistance(s.b, path) <= kGeomEpsilon) {
      degenerate = true;
      break;
    }
    if (SegmentsProperlyIntersect(path, s)) ++count;
  }
  if (!degenerate) return count & 1;
  // Route around the vertex through a slightly displaced midpoint.
  const Point2 dir = len > 0.0 ? (1.0 / len) * path.Direction() : Point2{1.0, 0.0};
  const Point2 normal{-dir.y, dir.x};
  for (int k = 1; k <= 8; ++k) {
    const Point2 mid = 0.5 * (a + b) + (1e-5 * k * std::max(len, 1e-3)) * normal;
    const Segment l1{a, mid}, l2{mid, b};
    bool bad = false;
    int c = 0;
    for (const Segment& leg : {l1, l2}) {
      for (int e : index_.Candidates(leg)) {
        const Segment s = EdgeSegment(e);
        if (PointSegmentDistance(s.a, leg) <= kGeomEpsilon ||
            PointSegmentDistance(s.b, leg) <= kGeomEpsilon) {
          bad = true;
          break;
        }
        if (SegmentsProperlyIntersect(leg, s)) ++c;
      }
      if (bad) break;
    }
    if (!bad) return c & 1;
  }
  return count & 1;
}

Color Coloring::ColorAt(Point2 q) const {
  for (int e : index_.EdgesInCell(index_.grid().Flat(index_.grid().CellOf(q)))) {
    if (PointSegmentDistance(q, EdgeSegment(e)) <= kGeomEpsilon) {
      const Point2 d = anchor_ - q;
      const double n = Norm(d);
      if (n > 0.0) q = q + (10.0 * kGeomEpsilon / n) * d;
      break;
    }
  }
  return CrossingParity(anchor_, q) ? Flip(anchor_color_) : anchor_color_;
}

std::vector<Violation> Coloring::Validate() const {
  std::vector<Violation> out;
  auto add = [&out](Violation::Kind k, int a, int b, std::string msg) {
    out.push_back({k, a, b, std::move(msg)});
  };
  for (const auto* set : {&interior_, &boundary_}) {
    for (int v : set->items) {
      const Vertex& vx = vertices_[v];
      if (vx.degree() != vx.required_degree()) {
        add(Violation::Kind::kDegree, v, -1, "vertex " + std::to_string(v) + " has degree " + std::to_string(vx.degree()));
        continue;
      }
      if (vx.kind == VertexKind::kInterior) {
        if (!window_.Contains(vx.p) || window_.InteriorMargin(vx.p) <= kGeomEpsilon) {
          add(Violation::Kind::kPlacement, v, -1, "interior vertex not strictly inside window");
        }
      } else if (!window_.Contains(vx.p) || window_.InteriorMargin(vx.p) > 1e-9 ||
                 DistanceToCorner(window_, vx.perimeter) <= kGeomEpsilon) {
        add(Violation::Kind::kPlacement, v, -1, "boundary vertex off the boundary or at a corner");
      }
      if (std::exp(VertexLogSin(v)) < kMinSin) {
        add(Violation::Kind::kAngle, v, -1, "degenerate associated angle");
      }
    }
  }
  for (int e : edge_list_.items) {
    const Segment s = EdgeSegment(e);
    if (s.Length() <= kGeomEpsilon) add(Violation::Kind::kShortEdge, e, -1, "edge too short");
    if (PointSegmentDistance(anchor_, s) <= kGeomEpsilon) {
      add(Violation::Kind::kAnchorOnEdge, e, -1, "anchor lies on edge");
    }
    if (!index_.Contains(e) || !(index_.segment(e) == s)) {
      add(Violation::Kind::kIndex, e, -1, "edge missing from index");
    } else {
      const auto cells = index_.CellsOf(e);
      const auto expect = GridTraceSegment(s, index_.grid());
      if (!std::equal(cells.begin(), cells.end(), expect.begin(), expect.end())) {
        add(Violation::Kind::kIndex, e, -1, "index cells differ from trace");
      }
    }
    for (int f : index_.Candidates(s)) {
      if (f <= e) continue;
      const Edge& ea = edges_[e];
      const Edge& fb = edges_[f];
      int shared = 0;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) shared += ea.v[i] == fb.v[j];
      }
      if (shared >= 2 || (shared == 0 && SegmentDistance(s, EdgeSegment(f)) <= kGeomEpsilon)) {
        add(Violation::Kind::kCrossing, e, f, "edges " + std::to_string(e) + " and " + std::to_string(f) + " cross");
      }
    }
  }
  if (index_.size() != num_edges()) {
    add(Violation::Kind::kIndex, -1, -1, "index holds stale edges");
  }
  return out;
}

int Coloring::AllocVertex(bool* grew) {
  if (!vertex_free_.empty()) {
    const int id = vertex_free_.back();
    vertex_free_.pop_back();
    *grew = false;
    return id;
  }
  vertices_.emplace_back();
  vertex_alive_.push_back(0);
  *grew = true;
  return static_cast<int>(vertices_.size()) - 1;
}

int Coloring::AllocEdge(bool* grew) {
  if (!edge_free_.empty()) {
    const int id = edge_free_.back();
    edge_free_.pop_back();
    *grew = false;
    return id;
  }
  edges_.emplace_back();
  edge_alive_.push_back(0);
  *grew = true;
  return static_cast<int>(edges_.size()) - 1;
}

ChangeRecord Coloring::Apply(const Edit& edit) {
  // Validate references and final degrees before touching anything.
  std::unordered_set<int> removed_edges, removed_vertices;
  for (int e : edit.remove_edges) {
    if (!HasEdge(e) || !removed_edges.insert(e).second) {
      throw std::invalid_argument("edit removes a missing edge");
    }
  }
  for (int v : edit.remove_vertices) {
    if (!HasVertex(v) || !removed_vertices.insert(v).second) {
      throw std::invalid_argument("edit removes a missing vertex");
    }
    for (int e : vertices_[v].edges) {
      if (e >= 0 && !removed_edges.count(e)) {
        throw std::invalid_argument("edit removes a vertex that keeps an edge");
      }
    }
  }
  std::unordered_map<int, int> degree_change;
  for (int e : edit.remove_edges) {
    for (int v : edges_[e].v) --degree_change[v];
  }
  std::vector<int> new_degree(edit.add_vertices.size(), 0);
  auto check_ref = [&](const VertexRef& r) {
    if (r.id >= 0) {
      if (!HasVertex(r.id) || removed_vertices.count(r.id)) {
        throw std::invalid_argument("edit connects a missing vertex");
      }
      ++degree_change[r.id];
    } else if (r.new_index >= 0 &&
               r.new_index < static_cast<int>(edit.add_vertices.size())) {
      ++new_degree[r.new_index];
    } else {
      throw std::invalid_argument("edit has a dangling vertex reference");
    }
  };
  for (const NewEdge& ne : edit.add_edges) {
    check_ref(ne.a);
    check_ref(ne.b);
  }
  for (const VertexMove& m : edit.move_vertices) {
    if (!HasVertex(m.id) || removed_vertices.count(m.id)) {
      throw std::invalid_argument("edit moves a missing vertex");
    }
  }
  for (const auto& [v, d] : degree_change) {
    if (removed_vertices.count(v)) continue;
    if (vertices_[v].degree() + d != vertices_[v].required_degree()) {
      throw std::invalid_argument("edit leaves a vertex with the wrong degree");
    }
  }
  for (size_t i = 0; i < edit.add_vertices.size(); ++i) {
    const int need = edit.add_vertices[i].kind == VertexKind::kInterior ? 2 : 1;
    if (new_degree[i] != need) {
      throw std::invalid_argument("edit adds a vertex with the wrong degree");
    }
  }

  ChangeRecord rec;
  rec.stats_before = stats_;
  StatsDelta& delta = rec.delta;

  std::vector<int> moved_edges;
  std::vector<int> before_vertices;
  for (int e : edit.remove_edges) {
    for (int v : edges_[e].v) before_vertices.push_back(v);
  }
  for (const VertexMove& m : edit.move_vertices) {
    before_vertices.push_back(m.id);
    for (int e : vertices_[m.id].edges) {
      if (e < 0 || removed_edges.count(e)) continue;
      moved_edges.push_back(e);
      before_vertices.push_back(OtherEnd(e, m.id));
    }
  }
  SortUnique(&before_vertices);
  SortUnique(&moved_edges);
  for (int v : before_vertices) {
    if (vertices_[v].degree() == vertices_[v].required_degree()) {
      delta.sum_log_sin -= VertexLogSin(v);
    }
  }
  for (int e : edit.remove_edges) {
    const Segment s = EdgeSegment(e);
    const double len = s.Length();
    --delta.edge_count;
    delta.total_length -= len;
    delta.sum_log_length -= std::log(len);
    rec.removed_segments.push_back(s);
  }
  for (int e : moved_edges) {
    const Segment s = EdgeSegment(e);
    const double len = s.Length();
    delta.total_length -= len;
    delta.sum_log_length -= std::log(len);
    rec.removed_segments.push_back(s);
  }

  using Op = ChangeRecord::UndoOp;
  for (int e : edit.remove_edges) {
    Op op{Op::Type::kRemoveEdge};
    op.id = e;
    op.edge = edges_[e];
    for (int k = 0; k < 2; ++k) {
      Vertex& v = vertices_[edges_[e].v[k]];
      op.slot[k] = v.edges[0] == e ? 0 : 1;
      v.edges[op.slot[k]] = -1;
    }
    index_.Remove(e);
    op.dense_pos = edge_list_.Remove(e);
    edge_alive_[e] = 0;
    edge_free_.push_back(e);
    rec.ops.push_back(op);
  }
  for (int v : edit.remove_vertices) {
    Op op{Op::Type::kRemoveVertex};
    op.id = v;
    op.vertex = vertices_[v];
    op.dense_pos = (vertices_[v].kind == VertexKind::kInterior ? interior_ : boundary_).Remove(v);
    vertex_alive_[v] = 0;
    vertex_free_.push_back(v);
    rec.ops.push_back(op);
  }
  for (const NewVertex& nv : edit.add_vertices) {
    Op op{Op::Type::kAddVertex};
    op.id = AllocVertex(&op.grew);
    Vertex& v = vertices_[op.id];
    v = Vertex{};
    v.p = nv.p;
    v.kind = nv.kind;
    v.perimeter = nv.perimeter;
    vertex_alive_[op.id] = 1;
    (nv.kind == VertexKind::kInterior ? interior_ : boundary_).Insert(op.id);
    rec.new_vertex_ids.push_back(op.id);
    rec.ops.push_back(op);
  }
  for (const VertexMove& m : edit.move_vertices) {
    Op op{Op::Type::kMoveVertex};
    op.id = m.id;
    op.vertex = vertices_[m.id];
    vertices_[m.id].p = m.to;
    vertices_[m.id].perimeter = m.perimeter_to;
    rec.ops.push_back(op);
  }
  for (int e : moved_edges) {
    index_.Remove(e);
    index_.Insert(e, EdgeSegment(e));
  }
  auto resolve = [&](const VertexRef& r) {
    return r.id >= 0 ? r.id : rec.new_vertex_ids[r.new_index];
  };
  for (const NewEdge& ne : edit.add_edges) {
    Op op{Op::Type::kAddEdge};
    op.id = AllocEdge(&op.grew);
    Edge& e = edges_[op.id];
    e.v[0] = resolve(ne.a);
    e.v[1] = resolve(ne.b);
    for (int k = 0; k < 2; ++k) {
      Vertex& v = vertices_[e.v[k]];
      op.slot[k] = v.edges[0] < 0 ? 0 : 1;
      v.edges[op.slot[k]] = op.id;
    }
    edge_alive_[op.id] = 1;
    edge_list_.Insert(op.id);
    index_.Insert(op.id, EdgeSegment(op.id));
    rec.new_edge_ids.push_back(op.id);
    rec.ops.push_back(op);
  }
  if (edit.flip_anchor) {
    anchor_color_ = Flip(anchor_color_);
    rec.ops.push_back(Op{Op::Type::kFlipAnchor});
  }

  std::vector<int> after_vertices;
  for (int v : before_vertices) {
    if (!removed_vertices.count(v)) after_vertices.push_back(v);
  }
  for (int v : rec.new_vertex_ids) after_vertices.push_back(v);
  for (int e : rec.new_edge_ids) {
    for (int v : edges_[e].v) after_vertices.push_back(v);
  }
  SortUnique(&after_vertices);
  for (int v : after_vertices) {
    if (vertices_[v].degree() == vertices_[v].required_degree()) {
      delta.sum_log_sin += VertexLogSin(v);
    }
  }
  for (int e : rec.new_edge_ids) {
    const Segment s = EdgeSegment(e);
    const double len = s.Length();
    ++delta.edge_count;
    delta.total_length += len;
    delta.sum_log_length += std::log(len);
    rec.added_segments.push_back(s);
  }
  for (int e : moved_edges) {
    const Segment s = EdgeSegment(e);
    const double len = s.Length();
    delta.total_length += len;
    delta.sum_log_length += std::log(len);
    rec.added_segments.push_back(s);
  }
  stats_.edge_count += delta.edge_count;
  stats_.total_length += delta.total_length;
  stats_.sum_log_length += delta.sum_log_length;
  stats_.sum_log_sin += delta.sum_log_sin;

  rec.touched_edges = rec.new_edge_ids;
  rec.touched_edges.insert(rec.touched_edges.end(), moved_edges.begin(), moved_edges.end());
  rec.touched_vertices = std::move(after_vertices);
  return rec;
}

void Coloring::Revert(ChangeRecord&& record) {
  using Op = ChangeRecord::UndoOp;
  std::vector<int> moved;
  for (auto it = record.ops.rbegin(); it != record.ops.rend(); ++it) {
    Op& op = *it;
    switch (op.type) {
      case Op::Type::kFlipAnchor:
        anchor_color_ = Flip(anchor_color_);
        break;
      case Op::Type::kAddEdge: {
        index_.Remove(op.id);
        edge_list_.UndoInsert(op.id);
        for (int k = 0; k < 2; ++k) vertices_[edges_[op.id].v[k]].edges[op.slot[k]] = -1;
        edge_alive_[op.id] = 0;
        if (op.grew) {
          edges_.pop_back();
          edge_alive_.pop_back();
        } else {
          edge_free_.push_back(op.id);
        }
        break;
      }
      case Op::Type::kMoveVertex: {
        Vertex& v = vertices_[op.id];
        v.p = op.vertex.p;
        v.perimeter = op.vertex.perimeter;
        for (int e : v.edges) {
          if (e >= 0) moved.push_back(e);
        }
        break;
      }
      case Op::Type::kAddVertex: {
        (vertices_[op.id].kind == VertexKind::kInterior ? interior_ : boundary_).UndoInsert(op.id);
        vertex_alive_[op.id] = 0;
        if (op.grew) {
          vertices_.pop_back();
          vertex_alive_.pop_back();
        } else {
          vertex_free_.push_back(op.id);
        }
        break;
      }
      case Op::Type::kRemoveVertex: {
        vertex_free_.pop_back();
        vertex_alive_[op.id] = 1;
        vertices_[op.id] = op.vertex;
        (op.vertex.kind == VertexKind::kInterior ? interior_ : boundary_).UndoRemove(op.id, op.dense_pos);
        break;
      }
      case Op::Type::kRemoveEdge: {
        edge_free_.pop_back();
        edge_alive_[op.id] = 1;
        edges_[op.id] = op.edge;
        for (int k = 0; k < 2; ++k) vertices_[op.edge.v[k]].edges[op.slot[k]] = op.id;
        edge_list_.UndoRemove(op.id, op.dense_pos);
        index_.Insert(op.id, EdgeSegment(op.id));
        break;
      }
    }
  }
  // Moved edges were re-indexed after all moves; restore their geometry now
  // that every vertex is back in place.
  SortUnique(&moved);
  for (int e : moved) {
    if (HasEdge(e) && index_.Contains(e)) {
      index_.Remove(e);
      index_.Insert(e, EdgeSegment(e));
    }
  }
  stats_ = record.stats_before;
}

bool Coloring::LocallyValid(const ChangeRecord& record) const {
  for (int v : record.touched_vertices) {
    if (!HasVertex(v)) continue;
    const Vertex& vx = vertices_[v];
    if (vx.degree() != vx.required_degree()) return false;
    if (vx.kind == VertexKind::kInterior) {
      if (!window_.Contains(vx.p) || window_.InteriorMargin(vx.p) <= kGeomEpsilon) return false;
    } else if (DistanceToCorner(window_, vx.perimeter) <= kGeomEpsilon) {
      return false;
    }
  }
  for (int e : record.touched_edges) {
    const Segment s = EdgeSegment(e);
    if (s.Length() <= kGeomEpsilon) return false;
    if (PointSegmentDistance(anchor_, s) <= kGeomEpsilon) return false;
    const Edge& ea = edges_[e];
    for (const CellIndex c : index_.CellsOf(e)) {
      for (int f : index_.EdgesInCell(index_.grid().Flat(c))) {
        if (f == e) continue;
        const Edge& fb = edges_[f];
        int shared = 0;
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) shared += ea.v[i] == fb.v[j];
        }
        if (shared >= 2) return false;
        if (shared == 0 && SegmentDistance(s, EdgeSegment(f)) <= kGeomEpsilon) return false;
      }
    }
  }
  for (int v : record.touched_vertices) {
    if (!HasVertex(v)) continue;
    if (std::exp(VertexLogSin(v)) < kMinSin) return false;
  }
  return true;
}

Edit Coloring::InverseEdit(const Edit& edit, const ChangeRecord& record) const {
  using Op = ChangeRecord::UndoOp;
  Edit inv;
  inv.remove_edges = record.new_edge_ids;
  inv.remove_vertices = record.new_vertex_ids;
  std::unordered_map<int, int> readded;
  for (const Op& op : record.ops) {
    if (op.type == Op::Type::kRemoveVertex) {
      readded[op.id] = static_cast<int>(inv.add_vertices.size());
      inv.add_vertices.push_back({op.vertex.p, op.vertex.kind, op.vertex.perimeter});
    }
  }
  for (const Op& op : record.ops) {
    if (op.type == Op::Type::kMoveVertex) {
      inv.move_vertices.push_back({op.id, op.vertex.p, op.vertex.perimeter});
    }
  }
  for (const Op& op : record.ops) {
    if (op.type != Op::Type::kRemoveEdge) continue;
    NewEdge ne;
    VertexRef* refs[2] = {&ne.a, &ne.b};
    for (int k = 0; k < 2; ++k) {
      const int v = op.edge.v[k];
      const auto it = readded.find(v);
      *refs[k] = it != readded.end() ? VertexRef::New(it->second) : VertexRef::Existing(v);
    }
    inv.add_edges.push_back(ne);
  }
  inv.flip_anchor = edit.flip_anchor;
  inv.region = edit.region;
  return inv;
}

bool Coloring::SameGraph(const Coloring& other) const {
  if (!(window_ == other.window_) || anchor_color_ != other.anchor_color_) return false;
  if (num_edges() != other.num_edges() || num_interior() != other.num_interior() ||
      num_boundary() != other.num_boundary()) {
    return false;
  }
  // Ids may differ after an edit and its inverse; compare geometry.
  using Key = std::tuple<double, double, double, double>;
  auto canonical = [](const Coloring& c) {
    std::vector<Key> keys;
    for (int e : c.edge_list_.items) {
      Point2 a = c.vertices_[c.edges_[e].v[0]].p;
      Point2 b = c.vertices_[c.edges_[e].v[1]].p;
      if (std::tie(b.x, b.y) < std::tie(a.x, a.y)) std::swap(a, b);
      keys.emplace_back(a.x, a.y, b.x, b.y);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  return canonical(*this) == canonical(other);
}

}  // namespace prf
