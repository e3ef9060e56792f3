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

#include "prf/geometry.h"

#include <limits>
#include <numbers>

namespace prf {
namespace {

double Orient(Point2 a, Point2 b, Point2 c) { return Cross(b - a, c - a); }

int Sign(double v) { return (v > 0.0) - (v < 0.0); }

// c collinear with a-b and strictly between them.
bool StrictlyInside(Point2 a, Point2 b, Point2 c) {
  if (c == a || c == b) return false;
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

// Liang-Barsky clip of a closed segment against a closed box.
std::optional<Segment> ClipToBox(const Segment& s, const Rect& box) {
  const Point2 d = s.Direction();
  double t0 = 0.0;
  double t1 = 1.0;
  const double p[4] = {-d.x, d.x, -d.y, d.y};
  const double q[4] = {s.a.x - box.min.x, box.max.x - s.a.x,
                       s.a.y - box.min.y, box.max.y - s.a.y};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return std::nullopt;
      continue;
    }
    const double r = q[i] / p[i];
    if (p[i] < 0.0) {
      if (r > t1) return std::nullopt;
      t0 = std::max(t0, r);
    } else {
      if (r < t0) return std::nullopt;
      t1 = std::min(t1, r);
    }
  }
  Segment out{t0 == 0.0 ? s.a : s.a + t0 * d, t1 == 1.0 ? s.b : s.a + t1 * d};
  return out;
}

}  // namespace

GridSpec::GridSpec(const Rect& window, double cell_size)
    : window_(window), cell_size_(cell_size) {
  nx_ = std::max(1, static_cast<int>(std::ceil(window.Width() / cell_size - 1e-9)));
  ny_ = std::max(1, static_cast<int>(std::ceil(window.Height() / cell_size - 1e-9)));
}

Rect GridSpec::CellBox(CellIndex c) const {
  const Point2 lo{window_.min.x + c.ix * cell_size_,
                  window_.min.y + c.iy * cell_size_};
  return {lo, {lo.x + cell_size_, lo.y + cell_size_}};
}

Point2 GridSpec::CellCenter(CellIndex c) const {
  return {window_.min.x + (c.ix + 0.5) * cell_size_,
          window_.min.y + (c.iy + 0.5) * cell_size_};
}

CellIndex GridSpec::CellOf(Point2 p) const {
  int ix = static_cast<int>(std::floor((p.x - window_.min.x) / cell_size_));
  int iy = static_cast<int>(std::floor((p.y - window_.min.y) / cell_size_));
  return {std::clamp(ix, 0, nx_ - 1), std::clamp(iy, 0, ny_ - 1)};
}

void GridSpec::ColumnRange(double lo, double hi, int* first, int* last) const {
  *first = std::max(0, static_cast<int>(std::ceil((lo - window_.min.x) / cell_size_ - 1.0)));
  *last = std::min(nx_ - 1, static_cast<int>(std::floor((hi - window_.min.x) / cell_size_)));
}

void GridSpec::RowRange(double lo, double hi, int* first, int* last) const {
  *first = std::max(0, static_cast<int>(std::ceil((lo - window_.min.y) / cell_size_ - 1.0)));
  *last = std::min(ny_ - 1, static_cast<int>(std::floor((hi - window_.min.y) / cell_size_)));
}

bool SegmentsProperlyIntersect(const Segment& s1, const Segment& s2) {
  const Point2 a = s1.a, b = s1.b, c = s2.a, d = s2.b;
  if ((a == c && b == d) || (a == d && b == c)) return true;
  const int o1 = Sign(Orient(a, b, c));
  const int o2 = Sign(Orient(a, b, d));
  const int o3 = Sign(Orient(c, d, a));
  const int o4 = Sign(Orient(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && StrictlyInside(a, b, c)) return true;
  if (o2 == 0 && StrictlyInside(a, b, d)) return true;
  if (o3 == 0 && StrictlyInside(c, d, a)) return true;
  if (o4 == 0 && StrictlyInside(c, d, b)) return true;
  return false;
}

double PointSegmentDistance(Point2 p, const Segment& s) {
  const Point2 d = s.Direction();
  const double len2 = Dot(d, d);
  if (len2 == 0.0) return Distance(p, s.a);
  const double t = std::clamp(Dot(p - s.a, d) / len2, 0.0, 1.0);
  return Distance(p, s.a + t * d);
}

double SegmentDistance(const Segment& s1, const Segment& s2) {
  const int o1 = Sign(Orient(s1.a, s1.b, s2.a));
  const int o2 = Sign(Orient(s1.a, s1.b, s2.b));
  const int o3 = Sign(Orient(s2.a, s2.b, s1.a));
  const int o4 = Sign(Orient(s2.a, s2.b, s1.b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return 0.0;
  return std::min(std::min(PointSegmentDistance(s1.a, s2),
                           PointSegmentDistance(s1.b, s2)),
                  std::min(PointSegmentDistance(s2.a, s1),
                           PointSegmentDistance(s2.b, s1)));
}

bool SegmentIntersectsBox(const Segment& s, const Rect& box) {
  return ClipToBox(s, box).has_value();
}

std::vector<CellIndex> GridTraceSegment(const Segment& s, const GridSpec& g) {
  std::vector<CellIndex> cells;
  const auto clipped = ClipToBox(s, g.window());
  if (!clipped) return cells;
  const Segment c = *clipped;
  const Point2 d = c.Direction();
  const double cs = g.cell_size();
  const double x0 = g.window().min.x;
  int col_first, col_last;
  g.ColumnRange(std::min(c.a.x, c.b.x), std::max(c.a.x, c.b.x), &col_first,
                &col_last);
  const int col_step = d.x < 0.0 ? -1 : 1;
  int col = col_step > 0 ? col_first : col_last;
  const int col_end = col_step > 0 ? col_last + col_step : col_first + col_step;
  for (; col != col_end; col += col_step) {
    double ylo, yhi;
    if (d.x == 0.0) {
      ylo = std::min(c.a.y, c.b.y);
      yhi = std::max(c.a.y, c.b.y);
    } else {
      const double xl = std::max(x0 + col * cs, std::min(c.a.x, c.b.x));
      const double xr = std::min(x0 + (col + 1) * cs, std::max(c.a.x, c.b.x));
      const double slope = d.y / d.x;
      const double y1 = xl == c.a.x ? c.a.y : (xl == c.b.x ? c.b.y : c.a.y + (xl - c.a.x) * slope);
      const double y2 = xr == c.a.x ? c.a.y : (xr == c.b.x ? c.b.y : c.a.y + (xr - c.a.x) * slope);
      ylo = std::min(y1, y2);
      yhi = std::max(y1, y2);
    }
    int row_first, row_last;
    g.RowRange(ylo, yhi, &row_first, &row_last);
    if (d.y < 0.0) {
      for (int row = row_last; row >= row_first; --row) cells.push_back({col, row});
    } else {
      for (int row = row_first; row <= row_last; ++row) cells.push_back({col, row});
    }
  }
  return cells;
}

std::optional<double> RaySegmentIntersection(Point2 origin, Point2 direction,
                                             const Segment& s) {
  const Point2 e = s.Direction();
  const Point2 ao = s.a - origin;
  const double denom = Cross(direction, e);
  if (denom == 0.0) {
    if (Cross(ao, direction) != 0.0) return std::nullopt;
    const double ta = Dot(ao, direction);
    const double tb = Dot(s.b - origin, direction);
    if (std::max(ta, tb) < 0.0) return std::nullopt;
    return std::max(0.0, std::min(ta, tb));
  }
  const double t = Cross(ao, e) / denom;
  const double u = Cross(ao, direction) / denom;
  if (t < 0.0 || u < 0.0 || u > 1.0) return std::nullopt;
  return t;
}

double RayExitDistance(const Rect& r, Point2 origin, Point2 direction) {
  double t = std::numeric_limits<double>::infinity();
  if (direction.x > 0.0) t = std::min(t, (r.max.x - origin.x) / direction.x);
  if (direction.x < 0.0) t = std::min(t, (r.min.x - origin.x) / direction.x);
  if (direction.y > 0.0) t = std::min(t, (r.max.y - origin.y) / direction.y);
  if (direction.y < 0.0) t = std::min(t, (r.min.y - origin.y) / direction.y);
  return std::max(0.0, t);
}

bool PolygonContains(std::span<const Point2> polygon, Point2 q) {
  bool inside = false;
  const size_t n = polygon.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 pi = polygon[i], pj = polygon[j];
    if ((pi.y > q.y) != (pj.y > q.y)) {
      const double x = pj.x + (q.y - pj.y) * (pi.x - pj.x) / (pi.y - pj.y);
      if (q.x < x) inside = !inside;
    }
  }
  return inside;
}

std::vector<int> CellsOverlappingPolygon(std::span<const Point2> polygon,
                                         const GridSpec& g) {
  std::vector<int> out;
  if (polygon.empty()) return out;
  double xlo = polygon[0].x, xhi = xlo, ylo = polygon[0].y, yhi = ylo;
  for (const Point2& p : polygon) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  int c0, c1, r0, r1;
  g.ColumnRange(xlo, xhi, &c0, &c1);
  g.RowRange(ylo, yhi, &r0, &r1);
  if (c0 > c1 || r0 > r1) return out;
  // The edge traces may round onto a neighboring cell.
  c0 = std::max(0, c0 - 1);
  r0 = std::max(0, r0 - 1);
  c1 = std::min(g.nx() - 1, c1 + 1);
  r1 = std::min(g.ny() - 1, r1 + 1);
  const int w = c1 - c0 + 1;
  std::vector<char> mark(static_cast<size_t>(w) * (r1 - r0 + 1), 0);
  const size_t n = polygon.size();
  for (size_t i = 0; i < n; ++i) {
    for (const CellIndex c :
         GridTraceSegment({polygon[i], polygon[(i + 1) % n]}, g)) {
      if (c.ix >= c0 && c.ix <= c1 && c.iy >= r0 && c.iy <= r1) {
        mark[(c.iy - r0) * w + (c.ix - c0)] = 1;
      }
    }
  }
  for (int row = r0; row <= r1; ++row) {
    for (int col = c0; col <= c1; ++col) {
      char& m = mark[(row - r0) * w + (col - c0)];
      if (!m && PolygonContains(polygon, g.CellCenter({col, row}))) m = 1;
      if (m) out.push_back(g.Flat({col, row}));
    }
  }
  return out;
}

Point2 PerimeterPoint(const Rect& r, double s) {
  const double w = r.Width(), h = r.Height(), per = r.Perimeter();
  s = std::fmod(s, per);
  if (s < 0.0) s += per;
  if (s < w) return {r.min.x + s, r.min.y};
  if (s < w + h) return {r.max.x, r.min.y + (s - w)};
  if (s < 2 * w + h) return {r.max.x - (s - w - h), r.max.y};
  return {r.min.x, r.max.y - (s - 2 * w - h)};
}

double PerimeterCoordinate(const Rect& r, Point2 p) {
  const double w = r.Width(), h = r.Height();
  const double db = std::abs(p.y - r.min.y), dr = std::abs(p.x - r.max.x);
  const double dt = std::abs(p.y - r.max.y), dl = std::abs(p.x - r.min.x);
  const double m = std::min(std::min(db, dr), std::min(dt, dl));
  if (m == db) return std::clamp(p.x - r.min.x, 0.0, w);
  if (m == dr) return w + std::clamp(p.y - r.min.y, 0.0, h);
  if (m == dt) return w + h + std::clamp(r.max.x - p.x, 0.0, w);
  return 2 * w + h + std::clamp(r.max.y - p.y, 0.0, h);
}

Point2 PerimeterTangent(const Rect& r, double s) {
  const double w = r.Width(), h = r.Height(), per = r.Perimeter();
  s = std::fmod(s, per);
  if (s < 0.0) s += per;
  if (s < w) return {1.0, 0.0};
  if (s < w + h) return {0.0, 1.0};
  if (s < 2 * w + h) return {-1.0, 0.0};
  return {0.0, -1.0};
}

double DistanceToCorner(const Rect& r, double s) {
  const double w = r.Width(), h = r.Height(), per = r.Perimeter();
  s = std::fmod(s, per);
  if (s < 0.0) s += per;
  const double corners[5] = {0.0, w, w + h, 2 * w + h, per};
  double best = per;
  for (double c : corners) best = std::min(best, std::abs(s - c));
  return best;
}

std::vector<Point2> PerimeterPathCcw(const Rect& r, double s_from,
                                     double s_to) {
  const double w = r.Width(), h = r.Height(), per = r.Perimeter();
  auto wrap = [per](double s) {
    s = std::fmod(s, per);
    return s < 0.0 ? s + per : s;
  };
  s_from = wrap(s_from);
  double span = wrap(s_to) - s_from;
  if (span < 0.0) span += per;
  std::vector<Point2> path{PerimeterPoint(r, s_from)};
  const double corners[4] = {0.0, w, w + h, 2 * w + h};
  std::vector<double> passed;
  for (double c : corners) {
    double off = c - s_from;
    if (off <= 0.0) off += per;
    if (off < span) passed.push_back(off);
  }
  std::sort(passed.begin(), passed.end());
  for (double off : passed) path.push_back(PerimeterPoint(r, s_from + off));
  path.push_back(PerimeterPoint(r, s_from + span));
  return path;
}

double WrapAngle(double a) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  a = std::fmod(a, kTwoPi);
  if (a <= -std::numbers::pi) a += kTwoPi;
  if (a > std::numbers::pi) a -= kTwoPi;
  return a;
}

}  // namespace prf
