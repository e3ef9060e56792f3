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

#include "prf/moves.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace prf {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Upper limit of the slide fraction whose reverse is reachable.
constexpr double kSlideMax = 1.0 / 3.0;
constexpr double kSlideMin = -0.5;
constexpr double kSlideSpan = 1.5;

double WrapPerimeter(const Rect& w, double s) {
  const double per = w.Perimeter();
  s = std::fmod(s, per);
  return s < 0.0 ? s + per : s;
}

// Region cut off by a boundary-to-boundary path through the given interior
// points: whichever side of the window does not hold the anchor.
std::vector<Point2> SideRegion(const Coloring& c, double s1,
                               std::span<const Point2> via, double s2) {
  // via runs from the s1 end to the s2 end.
  std::vector<Point2> region(via.rbegin(), via.rend());
  const auto ccw = PerimeterPathCcw(c.window(), s2, s1);
  region.insert(region.end(), ccw.begin(), ccw.end());
  if (!PolygonContains(region, c.anchor())) return region;
  region.assign(via.begin(), via.end());
  const auto other = PerimeterPathCcw(c.window(), s1, s2);
  region.insert(region.end(), other.begin(), other.end());
  return region;
}

void SetFlip(const Coloring& c, Edit* e) {
  e->flip_anchor = PolygonContains(e->region, c.anchor());
}

bool Collinear(Point2 o, Point2 a, Point2 b) {
  const Point2 d = b - o;
  const double len = Norm(d);
  return len > 0.0 && std::abs(Cross(a - o, d)) <= 1e-9 * len * std::max(1.0, len);
}

// Kink coordinates of k relative to segment a-b: along-fraction and signed
// offset.
void KinkCoordinates(Point2 a, Point2 b, Point2 k, double* t, double* h) {
  const Point2 d = b - a;
  const double len = Norm(d);
  *t = Dot(k - a, d) / (len * len);
  *h = Cross(d, k - a) / len;
}

int OtherNeighbor(const Coloring& c, int v, int not_this) {
  const int n0 = c.Neighbor(v, 0);
  return n0 == not_this ? c.Neighbor(v, 1) : n0;
}

// ---- sampling ----

Edit TriangleBirth(const Coloring& c, Rng& rng) {
  const Rect& w = c.window();
  Edit e;
  for (int i = 0; i < 3; ++i) {
    e.add_vertices.push_back({{UniformReal(rng, w.min.x, w.max.x),
                               UniformReal(rng, w.min.y, w.max.y)}});
  }
  e.add_edges = {{VertexRef::New(0), VertexRef::New(1)},
                 {VertexRef::New(1), VertexRef::New(2)},
                 {VertexRef::New(2), VertexRef::New(0)}};
  e.region = {e.add_vertices[0].p, e.add_vertices[1].p, e.add_vertices[2].p};
  SetFlip(c, &e);
  return e;
}

// Triangle component through interior vertex v, if any.
bool TriangleComponent(const Coloring& c, int v, int* n1, int* n2) {
  if (c.vertex(v).kind != VertexKind::kInterior) return false;
  *n1 = c.Neighbor(v, 0);
  *n2 = c.Neighbor(v, 1);
  if (*n1 == *n2) return false;
  if (c.vertex(*n1).kind != VertexKind::kInterior ||
      c.vertex(*n2).kind != VertexKind::kInterior) {
    return false;
  }
  return OtherNeighbor(c, *n1, v) == *n2;
}

std::optional<Edit> TriangleDeath(const Coloring& c, Rng& rng) {
  if (c.num_interior() == 0) return std::nullopt;
  const int v = c.interior_vertices()[UniformIndex(rng, c.num_interior())];
  int n1, n2;
  if (!TriangleComponent(c, v, &n1, &n2)) return std::nullopt;
  Edit e;
  e.remove_vertices = {v, n1, n2};
  e.remove_edges = {c.vertex(v).edges[0], c.vertex(v).edges[1]};
  for (int k : c.vertex(n1).edges) {
    if (c.OtherEnd(k, n1) == n2) e.remove_edges.push_back(k);
  }
  e.region = {c.vertex(v).p, c.vertex(n1).p, c.vertex(n2).p};
  SetFlip(c, &e);
  return e;
}

Edit WedgeBirth(const Coloring& c, Rng& rng) {
  const Rect& w = c.window();
  const double s1 = UniformReal(rng, 0.0, w.Perimeter());
  const double s2 = UniformReal(rng, 0.0, w.Perimeter());
  const Point2 v{UniformReal(rng, w.min.x, w.max.x), UniformReal(rng, w.min.y, w.max.y)};
  Edit e;
  e.add_vertices = {{PerimeterPoint(w, s1), VertexKind::kBoundary, s1},
                    {v},
                    {PerimeterPoint(w, s2), VertexKind::kBoundary, s2}};
  e.add_edges = {{VertexRef::New(0), VertexRef::New(1)},
                 {VertexRef::New(1), VertexRef::New(2)}};
  const Point2 via[3] = {e.add_vertices[0].p, v, e.add_vertices[2].p};
  e.region = SideRegion(c, s1, via, s2);
  return e;
}

bool IsWedgeApex(const Coloring& c, int v) {
  if (c.vertex(v).kind != VertexKind::kInterior) return false;
  return c.vertex(c.Neighbor(v, 0)).kind == VertexKind::kBoundary &&
         c.vertex(c.Neighbor(v, 1)).kind == VertexKind::kBoundary;
}

Edit WedgeRemoval(const Coloring& c, int v) {
  const int b1 = c.Neighbor(v, 0), b2 = c.Neighbor(v, 1);
  Edit e;
  e.remove_edges = {c.vertex(v).edges[0], c.vertex(v).edges[1]};
  e.remove_vertices = {b1, v, b2};
  const Point2 via[3] = {c.vertex(b1).p, c.vertex(v).p, c.vertex(b2).p};
  e.region = SideRegion(c, c.vertex(b1).perimeter, via, c.vertex(b2).perimeter);
  return e;
}

std::optional<Edit> WedgeDeath(const Coloring& c, Rng& rng) {
  if (c.num_interior() == 0) return std::nullopt;
  const int v = c.interior_vertices()[UniformIndex(rng, c.num_interior())];
  if (!IsWedgeApex(c, v)) return std::nullopt;
  return WedgeRemoval(c, v);
}

Edit ChordBirth(const Coloring& c, Rng& rng) {
  const Rect& w = c.window();
  const double s1 = UniformReal(rng, 0.0, w.Perimeter());
  const double s2 = UniformReal(rng, 0.0, w.Perimeter());
  Edit e;
  e.add_vertices = {{PerimeterPoint(w, s1), VertexKind::kBoundary, s1},
                    {PerimeterPoint(w, s2), VertexKind::kBoundary, s2}};
  e.add_edges = {{VertexRef::New(0), VertexRef::New(1)}};
  const Point2 via[2] = {e.add_vertices[0].p, e.add_vertices[1].p};
  e.region = SideRegion(c, s1, via, s2);
  return e;
}

std::optional<Edit> ChordDeath(const Coloring& c, Rng& rng) {
  if (c.num_boundary() == 0) return std::nullopt;
  const int b = c.boundary_vertices()[UniformIndex(rng, c.num_boundary())];
  const int o = c.Neighbor(b, 0);
  if (c.vertex(o).kind != VertexKind::kBoundary) return std::nullopt;
  Edit e;
  e.remove_edges = {c.vertex(b).edges[0]};
  e.remove_vertices = {b, o};
  const Point2 via[2] = {c.vertex(b).p, c.vertex(o).p};
  e.region = SideRegion(c, c.vertex(b).perimeter, via, c.vertex(o).perimeter);
  return e;
}

std::optional<Edit> KinkBirth(const Coloring& c, const MoveParams& mp, Rng& rng) {
  if (c.num_edges() == 0) return std::nullopt;
  const int id = c.edge_ids()[UniformIndex(rng, c.num_edges())];
  const Edge& edge = c.edge(id);
  const Point2 a = c.vertex(edge.v[0]).p, b = c.vertex(edge.v[1]).p;
  const Point2 d = b - a;
  const Point2 n = (1.0 / Norm(d)) * Point2{-d.y, d.x};
  const double t = Uniform01(rng);
  const double h = UniformReal(rng, -mp.delta, mp.delta);
  const Point2 k = a + t * d + h * n;
  Edit e;
  e.remove_edges = {id};
  e.add_vertices = {{k}};
  e.add_edges = {{VertexRef::Existing(edge.v[0]), VertexRef::New(0)},
                 {VertexRef::New(0), VertexRef::Existing(edge.v[1])}};
  e.region = {a, k, b};
  SetFlip(c, &e);
  return e;
}

std::optional<Edit> KinkDeath(const Coloring& c, Rng& rng) {
  if (c.num_interior() == 0) return std::nullopt;
  const int k = c.interior_vertices()[UniformIndex(rng, c.num_interior())];
  const int a = c.Neighbor(k, 0), b = c.Neighbor(k, 1);
  if (a == b) return std::nullopt;
  Edit e;
  e.remove_edges = {c.vertex(k).edges[0], c.vertex(k).edges[1]};
  e.remove_vertices = {k};
  e.add_edges = {{VertexRef::Existing(a), VertexRef::Existing(b)}};
  e.region = {c.vertex(a).p, c.vertex(k).p, c.vertex(b).p};
  SetFlip(c, &e);
  return e;
}

Edit MoveInterior(const Coloring& c, int v, Point2 to) {
  Edit e;
  e.move_vertices = {{v, to, 0.0}};
  e.region = {c.vertex(c.Neighbor(v, 0)).p, c.vertex(v).p,
              c.vertex(c.Neighbor(v, 1)).p, to};
  SetFlip(c, &e);
  return e;
}

std::optional<Edit> Relocate(const Coloring& c, const MoveParams& mp, Rng& rng) {
  if (c.num_interior() == 0) return std::nullopt;
  const int v = c.interior_vertices()[UniformIndex(rng, c.num_interior())];
  const double r = mp.delta * std::sqrt(Uniform01(rng));
  const double th = UniformReal(rng, -std::numbers::pi, std::numbers::pi);
  return MoveInterior(c, v, c.vertex(v).p + r * UnitVector(th));
}

std::optional<Edit> BoundarySlide(const Coloring& c, const MoveParams& mp, Rng& rng) {
  if (c.num_boundary() == 0) return std::nullopt;
  const Rect& w = c.window();
  const int b = c.boundary_vertices()[UniformIndex(rng, c.num_boundary())];
  const double off = UniformReal(rng, -mp.delta, mp.delta);
  const double s = c.vertex(b).perimeter;
  const double s_to = WrapPerimeter(w, s + off);
  Edit e;
  e.move_vertices = {{b, PerimeterPoint(w, s_to), s_to}};
  std::vector<Point2> path = off >= 0.0 ? PerimeterPathCcw(w, s, s_to)
                                        : PerimeterPathCcw(w, s_to, s);
  if (off < 0.0) std::reverse(path.begin(), path.end());
  path.front() = c.vertex(b).p;
  path.back() = e.move_vertices[0].to;
  e.region = {c.vertex(c.Neighbor(b, 0)).p};
  e.region.insert(e.region.end(), path.begin(), path.end());
  SetFlip(c, &e);
  return e;
}

std::optional<Edit> SlideAlongEdge(const Coloring& c, Rng& rng) {
  if (c.num_interior() == 0) return std::nullopt;
  const int v = c.interior_vertices()[UniformIndex(rng, c.num_interior())];
  const int k = UniformIndex(rng, 2);
  const double t = UniformReal(rng, kSlideMin, 1.0);
  if (t > kSlideMax) return std::nullopt;
  const Point2 p = c.vertex(v).p;
  const Point2 w = c.vertex(c.Neighbor(v, k)).p;
  const Point2 to = p + t * (w - p);
  Edit e;
  e.move_vertices = {{v, to, 0.0}};
  e.region = {c.vertex(c.Neighbor(v, 1 - k)).p, p, to};
  SetFlip(c, &e);
  return e;
}

// Exchanges edges e and f for the pairing selected by r.
std::optional<Edit> Reconnect(const Coloring& c, int e_id, int f_id, int r) {
  const Edge& e = c.edge(e_id);
  const Edge& f = c.edge(f_id);
  const int a = e.v[0], b = e.v[1];
  const int cc = r == 0 ? f.v[0] : f.v[1];
  const int d = r == 0 ? f.v[1] : f.v[0];
  if (a == cc || a == d || b == cc || b == d) return std::nullopt;
  Edit out;
  out.remove_edges = {e_id, f_id};
  out.add_edges = {{VertexRef::Existing(a), VertexRef::Existing(cc)},
                   {VertexRef::Existing(b), VertexRef::Existing(d)}};
  out.region = {c.vertex(a).p, c.vertex(b).p, c.vertex(d).p, c.vertex(cc).p};
  SetFlip(c, &out);
  return out;
}

std::optional<Edit> Recolor(const Coloring& c, Rng& rng) {
  const int n = c.num_edges();
  if (n < 2) return std::nullopt;
  const int i = UniformIndex(rng, n);
  int j = UniformIndex(rng, n - 1);
  if (j >= i) ++j;
  return Reconnect(c, c.edge_ids()[i], c.edge_ids()[j], UniformIndex(rng, 2));
}

std::optional<Edit> LocalRecolor(const Coloring& c, Rng& rng) {
  if (c.num_edges() < 2) return std::nullopt;
  const int e = c.edge_ids()[UniformIndex(rng, c.num_edges())];
  const std::vector<int> co = c.index().CoIndexed(e);
  if (co.empty()) return std::nullopt;
  const int f = co[UniformIndex(rng, static_cast<int>(co.size()))];
  return Reconnect(c, e, f, UniformIndex(rng, 2));
}

// ---- densities ----

bool OnlyAdds(const Edit& e) {
  return e.remove_edges.empty() && e.remove_vertices.empty() && e.move_vertices.empty();
}

bool OnlyRemoves(const Edit& e) {
  return e.add_vertices.empty() && e.add_edges.empty() && e.move_vertices.empty();
}

int Resolve(const VertexRef& r) { return r.id; }

// Two added edges forming the pairs {a,c},{b,d} for removed edges ab, cd.
bool IsReconnection(const Coloring& c, const Edit& e) {
  if (e.remove_edges.size() != 2 || e.add_edges.size() != 2 ||
      !e.remove_vertices.empty() || !e.add_vertices.empty() || !e.move_vertices.empty()) {
    return false;
  }
  for (const NewEdge& ne : e.add_edges) {
    if (ne.a.id < 0 || ne.b.id < 0) return false;
  }
  for (int id : e.remove_edges) {
    if (!c.HasEdge(id)) return false;
  }
  const Edge& x = c.edge(e.remove_edges[0]);
  const Edge& y = c.edge(e.remove_edges[1]);
  const int ends[4] = {x.v[0], x.v[1], y.v[0], y.v[1]};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (ends[i] == ends[j]) return false;
    }
  }
  // Each added edge joins one endpoint of x to one endpoint of y, and the two
  // added edges use all four endpoints.
  std::vector<int> used;
  for (const NewEdge& ne : e.add_edges) {
    const int p = Resolve(ne.a), q = Resolve(ne.b);
    const bool px = p == x.v[0] || p == x.v[1], qx = q == x.v[0] || q == x.v[1];
    const bool py = p == y.v[0] || p == y.v[1], qy = q == y.v[0] || q == y.v[1];
    if (!((px && qy) || (py && qx))) return false;
    used.push_back(p);
    used.push_back(q);
  }
  std::sort(used.begin(), used.end());
  return std::unique(used.begin(), used.end()) == used.end();
}

double TriangleBirthDensity(const Coloring& c, const Edit& e, double lw) {
  if (!OnlyAdds(e) || e.add_vertices.size() != 3 || e.add_edges.size() != 3) return kNegInf;
  for (const NewVertex& v : e.add_vertices) {
    if (v.kind != VertexKind::kInterior || !c.window().Contains(v.p)) return kNegInf;
  }
  const double area = c.window().Area();
  return lw + std::log(6.0) - 3.0 * std::log(area);
}

double TriangleDeathDensity(const Coloring& c, const Edit& e, double lw) {
  if (!OnlyRemoves(e) || e.remove_vertices.size() != 3 || e.remove_edges.size() != 3) return kNegInf;
  const int v = e.remove_vertices[0];
  int n1, n2;
  if (!c.HasVertex(v) || !TriangleComponent(c, v, &n1, &n2)) return kNegInf;
  std::vector<int> want{v, n1, n2}, got = e.remove_vertices;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got) return kNegInf;
  return lw + std::log(3.0) - std::log(static_cast<double>(c.num_interior()));
}

double WedgeBirthDensity(const Coloring& c, const Edit& e, double lw) {
  if (!OnlyAdds(e) || e.add_vertices.size() != 3 || e.add_edges.size() != 2) return kNegInf;
  int boundary = 0;
  for (const NewVertex& v : e.add_vertices) boundary += v.kind == VertexKind::kBoundary;
  if (boundary != 2) return kNegInf;
  const Rect& w = c.window();
  return lw + std::log(2.0) - 2.0 * std::log(w.Perimeter()) - std::log(w.Area());
}

double WedgeDeathDensity(const Coloring& c, const Edit& e, double lw) {
  if (!OnlyRemoves(e) || e.remove_vertices.size() != 3 || e.remove_edges.size() != 2) return kNegInf;
  int apex = -1;
  for (int v : e.remove_vertices) {
    if (c.HasVertex(v) && c.vertex(v).kind == VertexKind::kInterior) apex = v;
  }
  if (apex < 0 || !IsWedgeApex(c, apex)) return kNegInf;
  return lw - std::log(static_cast<double>(c.num_interior()));
}

double ChordBirthDensity(const Coloring& c, const Edit& e, double lw) {
  if (!OnlyAdds(e) || e.add_vertices.size() != 2 || e.add_edges.size() != 1) return kNegInf;
  for (const NewVertex& v : e.add_vertices) {
    if (v.kind != VertexKind::kBoundary) return kNegInf;
  }
  return lw + std::log(2.0) - 2.0 * std::log(c.window().Perimeter());
}

double ChordDeathDensity(const Coloring& c, const Edit& e, double lw) {
  if (!OnlyRemoves(e) || e.remove_vertices.size() != 2 || e.remove_edges.size() != 1) return kNegInf;
  for (int v : e.remove_vertices) {
    if (!c.HasVertex(v) || c.vertex(v).kind != VertexKind::kBoundary) return kNegInf;
  }
  return lw + std::log(2.0) - std::log(static_cast<double>(c.num_boundary()));
}

bool InKinkNeighborhood(Point2 a, Point2 b, Point2 k, double half_height) {
  double t, h;
  KinkCoordinates(a, b, k, &t, &h);
  return t >= 0.0 && t <= 1.0 && std::abs(h) <= half_height;
}

double KinkBirthDensity(const Coloring& c, const Edit& e, const MoveParams& mp, double lw) {
  if (e.remove_edges.size() != 1 || !e.remove_vertices.empty() || e.add_vertices.size() != 1 ||
      e.add_edges.size() != 2 || !e.move_vertices.empty()) {
    return kNegInf;
  }
  if (!c.HasEdge(e.remove_edges[0]) || e.add_vertices[0].kind != VertexKind::kInterior) return kNegInf;
  const Segment s = c.EdgeSegment(e.remove_edges[0]);
  if (!InKinkNeighborhood(s.a, s.b, e.add_vertices[0].p, mp.delta)) return kNegInf;
  return lw - std::log(static_cast<double>(c.num_edges())) - std::log(2.0 * mp.delta) -
         std::log(s.Length());
}

double KinkDeathDensity(const Coloring& c, const Edit& e, const MoveParams& mp, double lw) {
  if (e.remove_edges.size() != 2 || e.remove_vertices.size() != 1 || !e.add_vertices.empty() ||
      e.add_edges.size() != 1 || !e.move_vertices.empty()) {
    return kNegInf;
  }
  const int k = e.remove_vertices[0];
  if (!c.HasVertex(k) || c.vertex(k).kind != VertexKind::kInterior) return kNegInf;
  const int a = c.Neighbor(k, 0), b = c.Neighbor(k, 1);
  if (a == b) return kNegInf;
  if (!InKinkNeighborhood(c.vertex(a).p, c.vertex(b).p, c.vertex(k).p, mp.delta)) return kNegInf;
  return lw - std::log(static_cast<double>(c.num_interior()));
}

double RelocateDensity(const Coloring& c, const Edit& e, const MoveParams& mp, double lw) {
  if (e.move_vertices.size() != 1 || !e.add_edges.empty() || !e.remove_edges.empty()) return kNegInf;
  const VertexMove& m = e.move_vertices[0];
  if (!c.HasVertex(m.id) || c.vertex(m.id).kind != VertexKind::kInterior) return kNegInf;
  if (Distance(c.vertex(m.id).p, m.to) > mp.delta) return kNegInf;
  return lw - std::log(static_cast<double>(c.num_interior())) -
         std::log(std::numbers::pi * mp.delta * mp.delta);
}

double BoundarySlideDensity(const Coloring& c, const Edit& e, const MoveParams& mp, double lw) {
  if (e.move_vertices.size() != 1 || !e.add_edges.empty() || !e.remove_edges.empty()) return kNegInf;
  const VertexMove& m = e.move_vertices[0];
  if (!c.HasVertex(m.id) || c.vertex(m.id).kind != VertexKind::kBoundary) return kNegInf;
  const double per = c.window().Perimeter();
  double d = std::abs(WrapPerimeter(c.window(), m.perimeter_to) - c.vertex(m.id).perimeter);
  d = std::min(d, per - d);
  if (d > mp.delta) return kNegInf;
  return lw - std::log(static_cast<double>(c.num_boundary())) - std::log(2.0 * mp.delta);
}

double SlideAlongEdgeDensity(const Coloring& c, const Edit& e, double lw) {
  if (e.move_vertices.size() != 1 || !e.add_edges.empty() || !e.remove_edges.empty()) return kNegInf;
  const VertexMove& m = e.move_vertices[0];
  if (!c.HasVertex(m.id) || c.vertex(m.id).kind != VertexKind::kInterior) return kNegInf;
  const Point2 p = c.vertex(m.id).p;
  for (int k = 0; k < 2; ++k) {
    const Point2 w = c.vertex(c.Neighbor(m.id, k)).p;
    if (!Collinear(p, m.to, w)) continue;
    const Point2 d = w - p;
    const double t = Dot(m.to - p, d) / Dot(d, d);
    // Rounding slack at the ends of the reachable interval.
    if (t < kSlideMin - 1e-9 || t > kSlideMax + 1e-9) continue;
    return lw - std::log(static_cast<double>(c.num_interior())) - std::log(2.0) -
           std::log(kSlideSpan);
  }
  return kNegInf;
}

double RecolorDensity(const Coloring& c, const Edit& e, double lw) {
  if (!IsReconnection(c, e)) return kNegInf;
  const double n = c.num_edges();
  return lw - std::log(0.5 * n * (n - 1.0)) - std::log(2.0);
}

double LocalRecolorDensity(const Coloring& c, const Edit& e, double lw) {
  if (!IsReconnection(c, e)) return kNegInf;
  const int x = e.remove_edges[0], y = e.remove_edges[1];
  const std::vector<int> cx = c.index().CoIndexed(x);
  if (!std::binary_search(cx.begin(), cx.end(), y)) return kNegInf;
  const double nx = static_cast<double>(cx.size());
  const double ny = c.index().CoIndexedCount(y);
  return lw - std::log(static_cast<double>(c.num_edges())) - std::log(2.0) +
         std::log(1.0 / nx + 1.0 / ny);
}

}  // namespace

MoveKind InverseKind(MoveKind kind) {
  switch (kind) {
    case MoveKind::kTriangleBirth: return MoveKind::kTriangleDeath;
    case MoveKind::kTriangleDeath: return MoveKind::kTriangleBirth;
    case MoveKind::kWedgeBirth: return MoveKind::kWedgeDeath;
    case MoveKind::kWedgeDeath: return MoveKind::kWedgeBirth;
    case MoveKind::kChordBirth: return MoveKind::kChordDeath;
    case MoveKind::kChordDeath: return MoveKind::kChordBirth;
    case MoveKind::kKinkBirth: return MoveKind::kKinkDeath;
    case MoveKind::kKinkDeath: return MoveKind::kKinkBirth;
    default: return kind;
  }
}

std::string_view MoveKindName(MoveKind kind) {
  static constexpr std::string_view kNames[kNumMoveKinds] = {
      "triangle-birth", "triangle-death", "wedge-birth", "wedge-death",
      "chord-birth", "chord-death", "kink-birth", "kink-death",
      "vertex-relocate", "boundary-vertex-slide", "vertex-slide-along-edge",
      "recolor-quadrilateral", "local-recolor"};
  return kNames[static_cast<int>(kind)];
}

void CheckMoveParams(const MoveParams& params) {
  double sum = 0.0;
  for (double w : params.weights.w) {
    if (!(w >= 0.0)) throw std::invalid_argument("move weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("move weights must sum to 1");
  for (int k = 0; k < kNumMoveKinds; ++k) {
    const auto kind = static_cast<MoveKind>(k);
    if (params.weights[kind] != params.weights[InverseKind(kind)]) {
      throw std::invalid_argument("paired birth/death weights must be equal");
    }
  }
  if (!(params.delta > 0.0)) throw std::invalid_argument("delta must be positive");
}

std::optional<Edit> SampleEdit(MoveKind kind, const Coloring& c,
                               const MoveParams& params, Rng& rng) {
  switch (kind) {
    case MoveKind::kTriangleBirth: return TriangleBirth(c, rng);
    case MoveKind::kTriangleDeath: return TriangleDeath(c, rng);
    case MoveKind::kWedgeBirth: return WedgeBirth(c, rng);
    case MoveKind::kWedgeDeath: return WedgeDeath(c, rng);
    case MoveKind::kChordBirth: return ChordBirth(c, rng);
    case MoveKind::kChordDeath: return ChordDeath(c, rng);
    case MoveKind::kKinkBirth: return KinkBirth(c, params, rng);
    case MoveKind::kKinkDeath: return KinkDeath(c, rng);
    case MoveKind::kRelocate: return Relocate(c, params, rng);
    case MoveKind::kBoundarySlide: return BoundarySlide(c, params, rng);
    case MoveKind::kSlideAlongEdge: return SlideAlongEdge(c, rng);
    case MoveKind::kRecolor: return Recolor(c, rng);
    case MoveKind::kLocalRecolor: return LocalRecolor(c, rng);
  }
  return std::nullopt;
}

double LogProposalDensity(MoveKind kind, const Coloring& c, const Edit& edit,
                          const MoveParams& params) {
  const double weight = params.weights[kind];
  if (!(weight > 0.0)) return kNegInf;
  const double lw = std::log(weight);
  switch (kind) {
    case MoveKind::kTriangleBirth: return TriangleBirthDensity(c, edit, lw);
    case MoveKind::kTriangleDeath: return TriangleDeathDensity(c, edit, lw);
    case MoveKind::kWedgeBirth: return WedgeBirthDensity(c, edit, lw);
    case MoveKind::kWedgeDeath: return WedgeDeathDensity(c, edit, lw);
    case MoveKind::kChordBirth: return ChordBirthDensity(c, edit, lw);
    case MoveKind::kChordDeath: return ChordDeathDensity(c, edit, lw);
    case MoveKind::kKinkBirth: return KinkBirthDensity(c, edit, params, lw);
    case MoveKind::kKinkDeath: return KinkDeathDensity(c, edit, params, lw);
    case MoveKind::kRelocate: return RelocateDensity(c, edit, params, lw);
    case MoveKind::kBoundarySlide: return BoundarySlideDensity(c, edit, params, lw);
    case MoveKind::kSlideAlongEdge: return SlideAlongEdgeDensity(c, edit, lw);
    case MoveKind::kRecolor: return RecolorDensity(c, edit, lw);
    case MoveKind::kLocalRecolor: return LocalRecolorDensity(c, edit, lw);
  }
  return kNegInf;
}

MoveKind SampleKind(const MoveParams& params, Rng& rng) {
  double u = Uniform01(rng);
  for (int k = 0; k < kNumMoveKinds; ++k) {
    u -= params.weights.w[k];
    if (u < 0.0) return static_cast<MoveKind>(k);
  }
  for (int k = kNumMoveKinds - 1; k >= 0; --k) {
    if (params.weights.w[k] > 0.0) return static_cast<MoveKind>(k);
  }
  return MoveKind::kRelocate;
}

std::optional<AppliedProposal> ProposeAndApplyKind(MoveKind kind, Coloring& c,
                                                   const MoveParams& params,
                                                   Rng& rng) {
  std::optional<Edit> edit = SampleEdit(kind, c, params, rng);
  if (!edit) return std::nullopt;
  AppliedProposal out;
  out.proposal.kind = kind;
  out.proposal.log_forward = LogProposalDensity(kind, c, *edit, params);
  if (!std::isfinite(out.proposal.log_forward)) return std::nullopt;
  out.record = c.Apply(*edit);
  if (!c.LocallyValid(out.record)) {
    c.Revert(std::move(out.record));
    return std::nullopt;
  }
  const Edit inverse = c.InverseEdit(*edit, out.record);
  out.proposal.log_reverse = LogProposalDensity(InverseKind(kind), c, inverse, params);
  if (!std::isfinite(out.proposal.log_reverse)) {
    c.Revert(std::move(out.record));
    return std::nullopt;
  }
  out.proposal.edit = std::move(*edit);
  return out;
}

std::optional<AppliedProposal> ProposeAndApply(Coloring& c,
                                               const MoveParams& params,
                                               Rng& rng, MoveKind* drawn_kind) {
  const MoveKind kind = SampleKind(params, rng);
  if (drawn_kind) *drawn_kind = kind;
  return ProposeAndApplyKind(kind, c, params, rng);
}

double AcceptanceLogRatio(double prior_delta, double likelihood_delta,
                          const MoveProposal& proposal, double temperature) {
  if (prior_delta == kNegInf || likelihood_delta == kNegInf) return kNegInf;
  return (prior_delta + likelihood_delta) / temperature + proposal.log_reverse -
         proposal.log_forward;
}

double AcceptanceLogRatio(double measure_delta, double potential_delta,
                          double likelihood_delta, const MoveProposal& proposal,
                          double temperature) {
  if (measure_delta == kNegInf || likelihood_delta == kNegInf) return kNegInf;
  return measure_delta + (likelihood_delta - potential_delta) / temperature +
         proposal.log_reverse - proposal.log_forward;
}

}  // namespace prf
