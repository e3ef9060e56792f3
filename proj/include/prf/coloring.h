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

#ifndef PRF_COLORING_H_
#define PRF_COLORING_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prf/edge_grid_index.h"
#include "prf/geometry.h"

namespace prf {

// Associated angles below this (or within it of pi) make a state invalid.
inline constexpr double kAngleEpsilon = 1e-6;
inline constexpr double kDefaultIndexCellSize = 0.5;

enum class Color : std::uint8_t { kWhite = 0, kBlack = 1 };

inline Color Flip(Color c) {
  return c == Color::kWhite ? Color::kBlack : Color::kWhite;
}

enum class VertexKind : std::uint8_t { kInterior, kBoundary };

struct Vertex {
  Point2 p;
  VertexKind kind = VertexKind::kInterior;
  // Perimeter coordinate, boundary vertices only.
  double perimeter = 0.0;
  int edges[2] = {-1, -1};

  int degree() const { return (edges[0] >= 0) + (edges[1] >= 0); }
  int required_degree() const { return kind == VertexKind::kInterior ? 2 : 1; }
  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.p == b.p && a.kind == b.kind && a.perimeter == b.perimeter &&
           a.edges[0] == b.edges[0] && a.edges[1] == b.edges[1];
  }
};

struct Edge {
  int v[2] = {-1, -1};
  friend bool operator==(const Edge& a, const Edge& b) {
    return a.v[0] == b.v[0] && a.v[1] == b.v[1];
  }
};

// Sufficient statistics of the Arak measure, maintained incrementally.
struct CachedStats {
  int edge_count = 0;
  double total_length = 0.0;
  double sum_log_length = 0.0;
  double sum_log_sin = 0.0;

  friend bool operator==(const CachedStats&, const CachedStats&) = default;
};

// Exact change in CachedStats contributed by the elements an edit touched.
struct StatsDelta {
  int edge_count = 0;
  double total_length = 0.0;
  double sum_log_length = 0.0;
  double sum_log_sin = 0.0;
};

// A vertex named either by existing id or by index into Edit::add_vertices.
struct VertexRef {
  int id = -1;
  int new_index = -1;

  static VertexRef Existing(int id) { return {id, -1}; }
  static VertexRef New(int index) { return {-1, index}; }
};

struct NewVertex {
  Point2 p;
  VertexKind kind = VertexKind::kInterior;
  double perimeter = 0.0;
};

struct VertexMove {
  int id = -1;
  Point2 to;
  double perimeter_to = 0.0;
};

struct NewEdge {
  VertexRef a;
  VertexRef b;
};

// One reversible change to a coloring. Applied in order: edge removals,
// vertex removals, vertex additions, vertex moves, edge additions. The region
// polygon is exactly the set of points whose color the edit flips (even-odd
// rule); the anchor color flips iff the anchor lies inside it.
struct Edit {
  std::vector<int> remove_edges;
  std::vector<int> remove_vertices;
  std::vector<NewVertex> add_vertices;
  std::vector<VertexMove> move_vertices;
  std::vector<NewEdge> add_edges;
  bool flip_anchor = false;
  std::vector<Point2> region;
};

// Undo log and change summary returned by Coloring::Apply.
struct ChangeRecord {
  struct UndoOp {
    enum class Type { kAddEdge, kRemoveEdge, kAddVertex, kRemoveVertex, kMoveVertex, kFlipAnchor };
    Type type;
    int id = -1;
    int dense_pos = -1;
    bool grew = false;
    Vertex vertex;
    Edge edge;
    int slot[2] = {-1, -1};
  };

  std::vector<UndoOp> ops;
  CachedStats stats_before;
  StatsDelta delta;
  std::vector<int> new_vertex_ids;
  std::vector<int> new_edge_ids;
  // Edges whose geometry changed (added or moved), and the vertices whose
  // associated angle may have changed.
  std::vector<int> touched_edges;
  std::vector<int> touched_vertices;
  // Geometry removed and added, moved edges appearing in both.
  std::vector<Segment> removed_segments;
  std::vector<Segment> added_segments;
};

struct Violation {
  enum class Kind { kDegree, kCrossing, kShortEdge, kPlacement, kAngle, kAnchorOnEdge, kIndex };
  Kind kind;
  int a = -1;
  int b = -1;
  std::string message;
};

struct VertexRecord {
  int id;
  Vertex vertex;
};

struct EdgeRecord {
  int id;
  Edge edge;
};

// Polygonal two-coloring of a rectangular window: a discontinuity graph plus
// the color of a fixed anchor at the window center.
class Coloring {
 public:
  explicit Coloring(const Rect& window,
                    double index_cell_size = kDefaultIndexCellSize,
                    Color anchor_color = Color::kWhite);

  // Builds a coloring from explicit ids. Does not validate.
  static Coloring FromGraph(const Rect& window, double index_cell_size,
                            Color anchor_color,
                            std::span<const VertexRecord> vertices,
                            std::span<const EdgeRecord> edges);

  const Rect& window() const { return window_; }
  Point2 anchor() const { return anchor_; }
  Color anchor_color() const { return anchor_color_; }
  double index_cell_size() const { return index_.grid().cell_size(); }

  bool HasVertex(int id) const;
  bool HasEdge(int id) const;
  const Vertex& vertex(int id) const { return vertices_[id]; }
  const Edge& edge(int id) const { return edges_[id]; }
  Segment EdgeSegment(int id) const;
  int OtherEnd(int edge_id, int vertex_id) const;
  // Neighbor of v across its k-th edge.
  int Neighbor(int v, int k) const { return OtherEnd(vertices_[v].edges[k], v); }

  std::span<const int> interior_vertices() const { return interior_.items; }
  std::span<const int> boundary_vertices() const { return boundary_.items; }
  std::span<const int> edge_ids() const { return edge_list_.items; }
  int num_interior() const { return static_cast<int>(interior_.items.size()); }
  int num_boundary() const { return static_cast<int>(boundary_.items.size()); }
  int num_edges() const { return static_cast<int>(edge_list_.items.size()); }

  const CachedStats& stats() const { return stats_; }
  const EdgeGridIndex& index() const { return index_; }

  // Color by crossing parity along a path from the anchor.
  Color ColorAt(Point2 q) const;
  // Crossing parity of the straight path a-b, perturbing around vertices.
  int CrossingParity(Point2 a, Point2 b) const;

  std::vector<Violation> Validate() const;
  CachedStats RecomputeStats() const;
  // log sin of the associated angle, -inf when degenerate.
  double VertexLogSin(int v) const;

  // Throws std::invalid_argument (state unchanged) if the edit names missing
  // elements or breaks vertex degree bookkeeping.
  ChangeRecord Apply(const Edit& edit);
  void Revert(ChangeRecord&& record);
  // Validity of everything the recorded edit touched: placement, lengths,
  // crossings, angles, anchor clearance.
  bool LocallyValid(const ChangeRecord& record) const;
  // The edit that undoes a recorded one.
  Edit InverseEdit(const Edit& edit, const ChangeRecord& record) const;

  // Equality of the edge geometry and anchor color, ignoring ids.
  bool SameGraph(const Coloring& other) const;

 private:
  struct DenseIdSet {
    std::vector<int> items;
    std::vector<int> pos;
    void Insert(int id);
    int Remove(int id);
    void UndoInsert(int id);
    void UndoRemove(int id, int at);
  };

  int AllocVertex(bool* grew);
  int AllocEdge(bool* grew);
  void LinkEdge(int e);
  void UnlinkEdge(int e);
  double EdgeLength(int e) const { return EdgeSegment(e).Length(); }

  Rect window_;
  Point2 anchor_;
  Color anchor_color_;
  std::vector<Vertex> vertices_;
  std::vector<char> vertex_alive_;
  std::vector<Edge> edges_;
  std::vector<char> edge_alive_;
  std::vector<int> vertex_free_;
  std::vector<int> edge_free_;
  DenseIdSet interior_;
  DenseIdSet boundary_;
  DenseIdSet edge_list_;
  CachedStats stats_;
  EdgeGridIndex index_;
};

}  // namespace prf

#endif  // PRF_COLORING_H_
