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

#ifndef PRF_GEOMETRY_H_
#define PRF_GEOMETRY_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace prf {

// Contacts nearer than this are degenerate.
inline constexpr double kGeomEpsilon = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2 a, Point2 b) = default;
};

inline double Dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double Cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double Norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double Distance(Point2 a, Point2 b) { return Norm(b - a); }
inline Point2 UnitVector(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

struct Segment {
  Point2 a;
  Point2 b;

  double Length() const { return Distance(a, b); }
  Point2 Direction() const { return b - a; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Axis-aligned rectangle, min/max corners in meters.
struct Rect {
  Point2 min;
  Point2 max;

  double Width() const { return max.x - min.x; }
  double Height() const { return max.y - min.y; }
  double Area() const { return Width() * Height(); }
  double Perimeter() const { return 2.0 * (Width() + Height()); }
  Point2 Center() const { return 0.5 * (min + max); }
  bool Contains(Point2 p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
  // Distance from an inside point to the nearest side.
  double InteriorMargin(Point2 p) const {
    return std::min(std::min(p.x - min.x, max.x - p.x),
                    std::min(p.y - min.y, max.y - p.y));
  }
  friend bool operator==(const Rect&, const Rect&) = default;
};

struct Cone {
  Point2 apex;
  double heading = 0.0;
  double half_angle = 0.0;
  double max_range = 0.0;
};

struct CellIndex {
  int ix = 0;
  int iy = 0;
  friend bool operator==(CellIndex, CellIndex) = default;
  friend auto operator<=>(CellIndex, CellIndex) = default;
};

// A uniform grid laid over a window.
class GridSpec {
 public:
  GridSpec() = default;
  GridSpec(const Rect& window, double cell_size);

  const Rect& window() const { return window_; }
  double cell_size() const { return cell_size_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int num_cells() const { return nx_ * ny_; }
  int Flat(CellIndex c) const { return c.iy * nx_ + c.ix; }
  CellIndex Unflat(int flat) const { return {flat % nx_, flat / nx_}; }
  bool InBounds(CellIndex c) const {
    return c.ix >= 0 && c.iy >= 0 && c.ix < nx_ && c.iy < ny_;
  }
  Rect CellBox(CellIndex c) const;
  Point2 CellCenter(CellIndex c) const;
  // Cell containing p, clamped to the grid.
  CellIndex CellOf(Point2 p) const;
  // Inclusive index range of closed columns/rows touching [lo, hi].
  void ColumnRange(double lo, double hi, int* first, int* last) const;
  void RowRange(double lo, double hi, int* first, int* last) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  Rect window_;
  double cell_size_ = 1.0;
  int nx_ = 0;
  int ny_ = 0;
};

// True iff the open interiors meet, or an endpoint of one segment lies in the
// interior of the other. Segments that only share an endpoint do not
// intersect.
bool SegmentsProperlyIntersect(const Segment& s1, const Segment& s2);

double PointSegmentDistance(Point2 p, const Segment& s);
double SegmentDistance(const Segment& s1, const Segment& s2);

// True iff the closed segment meets the closed box.
bool SegmentIntersectsBox(const Segment& s, const Rect& box);

// Supercover of s: every grid cell whose closed region meets s, ordered along
// the segment direction, without duplicates.
std::vector<CellIndex> GridTraceSegment(const Segment& s, const GridSpec& g);

// Distance t >= 0 along the unit direction at which the ray meets the closed
// segment, if it does.
std::optional<double> RaySegmentIntersection(Point2 origin, Point2 direction,
                                             const Segment& s);

// Distance from an inside point to the rectangle boundary along direction.
double RayExitDistance(const Rect& r, Point2 origin, Point2 direction);

// Even-odd rule containment.
bool PolygonContains(std::span<const Point2> polygon, Point2 q);

// Cells whose closed region meets the closed (even-odd) polygon.
std::vector<int> CellsOverlappingPolygon(std::span<const Point2> polygon,
                                         const GridSpec& g);

// Perimeter parameterization of a window, counter-clockwise from min corner.
Point2 PerimeterPoint(const Rect& r, double s);
double PerimeterCoordinate(const Rect& r, Point2 p);
// Unit tangent of the boundary at perimeter coordinate s.
Point2 PerimeterTangent(const Rect& r, double s);
// Distance from perimeter coordinate s to the nearest window corner.
double DistanceToCorner(const Rect& r, double s);
// Boundary path from s_from to s_to walking counter-clockwise, including both
// endpoints and any corners passed.
std::vector<Point2> PerimeterPathCcw(const Rect& r, double s_from, double s_to);

// Wraps an angle to (-pi, pi].
double WrapAngle(double a);

}  // namespace prf

#endif  // PRF_GEOMETRY_H_
