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

#include "prf/visibility.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <set>

namespace prf {
namespace {

constexpr double kMinSubtended = 1e-12;

// Segment clipped to the cone, in the apex frame with x along the heading.
struct Clipped {
  Point2 a;
  Point2 b;
  double theta_a = 0.0;
  double theta_b = 0.0;
  int source = 0;
};

Point2 ToLocal(const Cone& cone, Point2 p) {
  const Point2 d = p - cone.apex;
  const double c = std::cos(cone.heading), s = std::sin(cone.heading);
  return {c * d.x + s * d.y, -s * d.x + c * d.y};
}

Point2 ToWorld(const Cone& cone, Point2 p) {
  const double c = std::cos(cone.heading), s = std::sin(cone.heading);
  return {cone.apex.x + c * p.x - s * p.y, cone.apex.y + s * p.x + c * p.y};
}

// Clips local segment a-b to the wedge |angle| <= half_angle and the disk of
// radius r.
std::optional<std::pair<Point2, Point2>> ClipToSector(Point2 a, Point2 b,
                                                      double half_angle,
                                                      double r) {
  const Point2 d = b - a;
  double t0 = 0.0, t1 = 1.0;
  // Half-planes through the apex: n . p >= 0.
  const Point2 normals[2] = {
      {-std::sin(-half_angle), std::cos(-half_angle)},  // left of lower ray
      {std::sin(half_angle), -std::cos(half_angle)},     // right of upper ray
  };
  for (const Point2& n : normals) {
    const double fa = Dot(n, a);
    const double fd = Dot(n, d);
    if (fd == 0.0) {
      if (fa < 0.0) return std::nullopt;
      continue;
    }
    const double t = -fa / fd;
    if (fd > 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return std::nullopt;
  }
  // |a + t d|^2 <= r^2.
  const double qa = Dot(d, d);
  const double qb = 2.0 * Dot(a, d);
  const double qc = Dot(a, a) - r * r;
  if (qa == 0.0) return std::nullopt;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) return std::nullopt;
  const double sq = std::sqrt(disc);
  t0 = std::max(t0, (-qb - sq) / (2.0 * qa));
  t1 = std::min(t1, (-qb + sq) / (2.0 * qa));
  if (t0 >= t1) return std::nullopt;
  return std::make_pair(t0 == 0.0 ? a : a + t0 * d, t1 == 1.0 ? b : a + t1 * d);
}

// Distance from the origin to the supporting line of a-b along angle theta.
double DepthAlong(const Point2& a, const Point2& b, double theta) {
  const Point2 u = UnitVector(theta);
  const Point2 e = b - a;
  const double denom = Cross(u, e);
  if (denom == 0.0) return std::min(Norm(a), Norm(b));
  return Cross(a, e) / denom;
}

}  // namespace

std::vector<VisibleFeature> VisibilitySweep(std::span<const SweepSegment> edges,
                                            const Cone& cone) {
  const double alpha = cone.half_angle;
  std::vector<Clipped> clipped;
  clipped.reserve(edges.size());
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const Point2 a = ToLocal(cone, edges[i].segment.a);
    const Point2 b = ToLocal(cone, edges[i].segment.b);
    if (PointSegmentDistance({0.0, 0.0}, {a, b}) <= kGeomEpsilon) continue;
    const auto c = ClipToSector(a, b, alpha, cone.max_range);
    if (!c) continue;
    Clipped item{c->first, c->second, std::atan2(c->first.y, c->first.x),
                 std::atan2(c->second.y, c->second.x), i};
    if (item.theta_a > item.theta_b) {
      std::swap(item.a, item.b);
      std::swap(item.theta_a, item.theta_b);
    }
    item.theta_a = std::max(item.theta_a, -alpha);
    item.theta_b = std::min(item.theta_b, alpha);
    if (item.theta_b - item.theta_a <= kMinSubtended) continue;
    clipped.push_back(item);
  }

  std::vector<double> events{-alpha, alpha};
  for (const Clipped& c : clipped) {
    events.push_back(c.theta_a);
    events.push_back(c.theta_b);
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<int> by_start(clipped.size()), by_end(clipped.size());
  for (size_t i = 0; i < clipped.size(); ++i) by_start[i] = by_end[i] = static_cast<int>(i);
  std::sort(by_start.begin(), by_start.end(), [&](int l, int r) {
    return clipped[l].theta_a < clipped[r].theta_a;
  });
  std::sort(by_end.begin(), by_end.end(), [&](int l, int r) {
    return clipped[l].theta_b < clipped[r].theta_b;
  });

  // The active set is ordered by depth along the current sweep angle; since
  // the segments do not cross, that order stays valid as the sweep advances.
  double sweep_angle = 0.0;
  auto closer = [&](int l, int r) {
    const double dl = DepthAlong(clipped[l].a, clipped[l].b, sweep_angle);
    const double dr = DepthAlong(clipped[r].a, clipped[r].b, sweep_angle);
    if (dl != dr) return dl < dr;
    return l < r;
  };
  std::set<int, decltype(closer)> active(closer);
  std::vector<std::set<int, decltype(closer)>::iterator> handle(clipped.size());

  // Nearest segment over each elementary interval, -1 if none.
  const int num_intervals = static_cast<int>(events.size()) - 1;
  std::vector<int> nearest(std::max(0, num_intervals), -1);
  size_t next_start = 0, next_end = 0;
  for (int k = 0; k < num_intervals; ++k) {
    const double lo = events[k], hi = events[k + 1];
    while (next_end < by_end.size() && clipped[by_end[next_end]].theta_b <= lo) {
      const int id = by_end[next_end++];
      if (clipped[id].theta_a < lo) active.erase(handle[id]);
    }
    sweep_angle = 0.5 * (lo + hi);
    while (next_start < by_start.size() &&
           clipped[by_start[next_start]].theta_a <= lo) {
      const int id = by_start[next_start++];
      if (clipped[id].theta_b > lo) handle[id] = active.insert(id).first;
    }
    if (!active.empty()) nearest[k] = *active.begin();
  }

  // Slivers are rounding artifacts at shared endpoints; fold them into a
  // neighbor.
  constexpr double kSliver = 1e-12;
  auto sliver = [&](int k) { return events[k + 1] - events[k] <= kSliver; };
  int first = 0;
  while (first < num_intervals && sliver(first)) ++first;
  if (first < num_intervals) {
    for (int k = 0; k < first; ++k) nearest[k] = nearest[first];
    for (int k = first + 1; k < num_intervals; ++k) {
      if (sliver(k)) nearest[k] = nearest[k - 1];
    }
  }

  std::vector<VisibleFeature> features;
  for (int k = 0; k < num_intervals;) {
    const int id = nearest[k];
    int end = k + 1;
    while (end < num_intervals && nearest[end] == id) ++end;
    if (id >= 0) {
      const Clipped& c = clipped[id];
      const double th_lo = events[k], th_hi = events[end];
      const Point2 pa = DepthAlong(c.a, c.b, th_lo) * UnitVector(th_lo);
      const Point2 pb = DepthAlong(c.a, c.b, th_hi) * UnitVector(th_hi);
      VisibleFeature f;
      f.kind = FeatureKind::kFace;
      f.edge_id = edges[c.source].edge_id;
      f.face = {ToWorld(cone, pa), ToWorld(cone, pb)};
      const Segment local{pa, pb};
      f.depth = PointSegmentDistance({0.0, 0.0}, local);
      const Point2 dir = local.Direction();
      const double len2 = Dot(dir, dir);
      const double t = len2 > 0.0 ? std::clamp(-Dot(pa, dir) / len2, 0.0, 1.0) : 0.0;
      const Point2 closest = pa + t * dir;
      const double cosine = std::abs(Dot(closest, dir)) /
                            std::max(Norm(closest) * std::sqrt(len2), 1e-300);
      f.projection_angle = std::acos(std::min(1.0, cosine));
      f.subtended_angle = th_hi - th_lo;
      f.angle_lo = th_lo;
      f.angle_hi = th_hi;
      features.push_back(f);
    }
    k = end;
  }

  // Nearest depth along theta from the elementary intervals.
  auto nearest_depth = [&](double theta) {
    double best = std::numeric_limits<double>::infinity();
    if (num_intervals <= 0) return best;
    const auto it = std::upper_bound(events.begin(), events.end(), theta);
    const int k = static_cast<int>(it - events.begin()) - 1;
    auto consider = [&](int interval) {
      if (interval < 0 || interval >= num_intervals || nearest[interval] < 0) return;
      const Clipped& c = clipped[nearest[interval]];
      best = std::min(best, DepthAlong(c.a, c.b, theta));
    };
    consider(k);
    if (k >= 0 && k < static_cast<int>(events.size()) && events[k] == theta) {
      consider(k - 1);
    }
    return best;
  };

  std::vector<int> seen_vertices;
  std::vector<Point2> seen_points;
  for (const SweepSegment& s : edges) {
    for (int end = 0; end < 2; ++end) {
      if (!(end == 0 ? s.a_is_corner : s.b_is_corner)) continue;
      const Point2 p = end == 0 ? s.segment.a : s.segment.b;
      const int vid = end == 0 ? s.vertex_a : s.vertex_b;
      if (vid >= 0) {
        if (std::find(seen_vertices.begin(), seen_vertices.end(), vid) != seen_vertices.end()) continue;
      } else if (std::find(seen_points.begin(), seen_points.end(), p) != seen_points.end()) {
        continue;
      }
      const Point2 local = ToLocal(cone, p);
      const double dist = Norm(local);
      if (dist <= kGeomEpsilon || dist > cone.max_range) continue;
      const double theta = std::atan2(local.y, local.x);
      if (theta < -alpha || theta > alpha) continue;
      if (nearest_depth(theta) < dist - 1e-9 * std::max(1.0, dist)) continue;
      if (vid >= 0) {
        seen_vertices.push_back(vid);
      } else {
        seen_points.push_back(p);
      }
      VisibleFeature f;
      f.kind = FeatureKind::kCorner;
      f.face = {p, p};
      f.vertex_id = vid;
      f.depth = dist;
      f.angle_lo = f.angle_hi = theta;
      features.push_back(f);
    }
  }

  std::stable_sort(features.begin(), features.end(),
                   [](const VisibleFeature& l, const VisibleFeature& r) {
                     return l.depth < r.depth;
                   });
  return features;
}

}  // namespace prf
