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

#include "prf/sim.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace prf {
namespace {

struct Polygon {
  std::vector<Point2> pts;
};

Coloring FromPolygons(const Rect& window, const std::vector<Polygon>& polys) {
  std::vector<VertexRecord> vertices;
  std::vector<EdgeRecord> edges;
  for (const Polygon& poly : polys) {
    const int base = static_cast<int>(vertices.size());
    const int n = static_cast<int>(poly.pts.size());
    for (int i = 0; i < n; ++i) {
      Vertex v;
      v.p = poly.pts[i];
      vertices.push_back({base + i, v});
    }
    for (int i = 0; i < n; ++i) {
      Edge e;
      e.v[0] = base + i;
      e.v[1] = base + (i + 1) % n;
      edges.push_back({static_cast<int>(edges.size()), e});
    }
  }
  Coloring c = Coloring::FromGraph(window, kDefaultIndexCellSize, Color::kWhite, vertices, edges);
  // The anchor sits in free space only if it is inside an odd number of the
  // polygons' complements; recolor so that free space is white.
  int inside = 0;
  for (const Polygon& poly : polys) inside += PolygonContains(poly.pts, c.anchor());
  if (inside % 2 == 0) {
    throw std::invalid_argument("window center must lie in free space");
  }
  const auto violations = c.Validate();
  if (!violations.empty()) {
    throw std::invalid_argument("world is not a valid coloring: " + violations[0].message);
  }
  return c;
}

Polygon Box(double x0, double y0, double x1, double y1) {
  return {{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

double Jitter(Rng& rng, double amount) { return UniformReal(rng, -amount, amount); }

// Rooms-off-hallway dimensions.
constexpr double kRoomsWidth = 12.0;
constexpr double kRoomDepth = 2.5;
constexpr double kHallWidth = 1.6;
constexpr int kRoomsPerSide = 3;

struct RoomsGeometry {
  double t, hall_y0, hall_y1, room_w;
  Rect window;
  std::vector<double> door_lo_below, door_hi_below, door_lo_above, door_hi_above;
  double RoomX0(int i) const { return t + i * (room_w + t); }
};

RoomsGeometry Rooms(const WorldSpec& spec) {
  RoomsGeometry g;
  g.t = spec.wall_thickness;
  const double height = 4.0 * g.t + 2.0 * kRoomDepth + kHallWidth;
  g.window = {{0.0, 0.0}, {kRoomsWidth, height}};
  g.hall_y0 = 2.0 * g.t + kRoomDepth;
  g.hall_y1 = g.hall_y0 + kHallWidth;
  g.room_w = (kRoomsWidth - 2.0 * g.t - (kRoomsPerSide - 1) * g.t) / kRoomsPerSide;
  if (spec.door_width <= 0.0 || spec.door_width >= g.room_w - 0.2) {
    throw std::invalid_argument("door width does not fit the rooms");
  }
  Rng rng(StreamSeed(spec.seed, 7));
  for (int i = 0; i < kRoomsPerSide; ++i) {
    const double mid = g.RoomX0(i) + 0.5 * g.room_w;
    const double below = mid + Jitter(rng, 0.05), above = mid + Jitter(rng, 0.05);
    g.door_lo_below.push_back(below - 0.5 * spec.door_width);
    g.door_hi_below.push_back(below + 0.5 * spec.door_width);
    g.door_lo_above.push_back(above - 0.5 * spec.door_width);
    g.door_hi_above.push_back(above + 0.5 * spec.door_width);
  }
  return g;
}

Coloring RoomsWorld(const WorldSpec& spec) {
  const RoomsGeometry g = Rooms(spec);
  const double t = g.t, right = kRoomsWidth - t;
  Polygon p;
  p.pts.push_back({t, g.hall_y0});
  for (int i = 0; i < kRoomsPerSide; ++i) {
    const double x0 = g.RoomX0(i), x1 = x0 + g.room_w;
    const double d0 = g.door_lo_below[i], d1 = g.door_hi_below[i];
    const double wall = g.hall_y0 - t, floor = wall - kRoomDepth;
    p.pts.insert(p.pts.end(), {{d0, g.hall_y0}, {d0, wall}, {x0, wall}, {x0, floor},
                               {x1, floor}, {x1, wall}, {d1, wall}, {d1, g.hall_y0}});
  }
  p.pts.push_back({right, g.hall_y0});
  p.pts.push_back({right, g.hall_y1});
  for (int i = kRoomsPerSide - 1; i >= 0; --i) {
    const double x0 = g.RoomX0(i), x1 = x0 + g.room_w;
    const double d0 = g.door_lo_above[i], d1 = g.door_hi_above[i];
    const double wall = g.hall_y1 + t, ceil = wall + kRoomDepth;
    p.pts.insert(p.pts.end(), {{d1, g.hall_y1}, {d1, wall}, {x1, wall}, {x1, ceil},
                               {x0, ceil}, {x0, wall}, {d0, wall}, {d0, g.hall_y1}});
  }
  p.pts.push_back({t, g.hall_y1});
  return FromPolygons(g.window, {p});
}

}  // namespace

Layout ParseLayout(const std::string& name) {
  if (name == "corridor") return Layout::kCorridor;
  if (name == "lobby") return Layout::kLobby;
  if (name == "rooms-off-hallway") return Layout::kRoomsOffHallway;
  throw std::invalid_argument("unknown layout: " + name);
}

std::string LayoutName(Layout layout) {
  switch (layout) {
    case Layout::kCorridor: return "corridor";
    case Layout::kLobby: return "lobby";
    case Layout::kRoomsOffHallway: return "rooms-off-hallway";
  }
  return "";
}

Coloring MakeWorld(const WorldSpec& spec) {
  const double t = spec.wall_thickness;
  if (!(t > 0.0) || t > 1.0) throw std::invalid_argument("wall thickness must be in (0, 1]");
  switch (spec.layout) {
    case Layout::kCorridor: {
      const Rect w{{0.0, 0.0}, {12.0, 3.0}};
      return FromPolygons(w, {Box(t, t, 12.0 - t, 3.0 - t)});
    }
    case Layout::kLobby: {
      const Rect w{{0.0, 0.0}, {8.0, 6.0}};
      Rng rng(StreamSeed(spec.seed, 3));
      std::vector<Polygon> polys{Box(t, t, 8.0 - t, 6.0 - t)};
      for (Point2 c : {Point2{2.5, 2.0}, Point2{5.5, 2.0}, Point2{2.5, 4.0}, Point2{5.5, 4.0}}) {
        c = c + Point2{Jitter(rng, 0.05), Jitter(rng, 0.05)};
        polys.push_back(Box(c.x - 0.2, c.y - 0.2, c.x + 0.2, c.y + 0.2));
      }
      return FromPolygons(w, polys);
    }
    case Layout::kRoomsOffHallway:
      return RoomsWorld(spec);
  }
  throw std::invalid_argument("unknown layout");
}

std::vector<Point2> DefaultRoute(const WorldSpec& spec) {
  const double t = spec.wall_thickness;
  switch (spec.layout) {
    case Layout::kCorridor:
      return {{1.0, 1.5}, {11.0, 1.5}};
    case Layout::kLobby:
      return {{1.2, 1.2}, {6.8, 1.2}, {6.8, 3.0}, {1.2, 3.0}, {1.2, 4.8}, {6.8, 4.8}};
    case Layout::kRoomsOffHallway: {
      const RoomsGeometry g = Rooms(spec);
      const double mid = 0.5 * (g.hall_y0 + g.hall_y1);
      std::vector<Point2> route{{t + 0.6, mid}};
      for (int i = 0; i < kRoomsPerSide; ++i) {
        const double below = 0.5 * (g.door_lo_below[i] + g.door_hi_below[i]);
        const double above = 0.5 * (g.door_lo_above[i] + g.door_hi_above[i]);
        const double room_below = g.hall_y0 - t - 0.5 * kRoomDepth;
        const double room_above = g.hall_y1 + t + 0.5 * kRoomDepth;
        route.insert(route.end(), {{below, mid}, {below, room_below}, {below, mid},
                                   {above, mid}, {above, room_above}, {above, mid}});
      }
      route.push_back({kRoomsWidth - t - 0.6, mid});
      return route;
    }
  }
  return {};
}

std::vector<Pose> SamplePoses(std::span<const Point2> waypoints, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("pose spacing must be positive");
  std::vector<Pose> out;
  double carry = 0.0;
  for (size_t i = 0; i + 1 < waypoints.size(); ++i) {
    const Point2 a = waypoints[i], b = waypoints[i + 1];
    const double len = Distance(a, b);
    if (len == 0.0) continue;
    const double heading = std::atan2(b.y - a.y, b.x - a.x);
    for (double s = carry; s < len; s += spacing) {
      out.push_back({a + (s / len) * (b - a), heading});
      carry = s + spacing - len;
    }
  }
  if (!waypoints.empty()) {
    const size_t n = waypoints.size();
    const double heading = n > 1 ? std::atan2(waypoints[n - 1].y - waypoints[n - 2].y,
                                              waypoints[n - 1].x - waypoints[n - 2].x)
                                 : 0.0;
    out.push_back({waypoints.back(), heading});
  }
  return out;
}

std::vector<LaserObs> SimulateLaser(const Coloring& world, const Pose& pose,
                                    int beams, double fov, double max_range,
                                    const LaserParams& params, Rng& rng) {
  if (world.ColorAt(pose.p) == Color::kBlack) {
    throw std::invalid_argument("laser pose lies in occupied space");
  }
  std::vector<LaserObs> out;
  for (int k = 0; k < beams; ++k) {
    LaserObs o;
    o.pose = pose;
    o.bearing = -0.5 * fov + (k + 0.5) * fov / beams;
    o.max_range = max_range;
    bool hit;
    const double expected = ExpectedLaserRange(o, world, &hit);
    const double u = Uniform01(rng);
    if (u < params.w_gauss) {
      if (hit) {
        o.range = expected + params.Sigma(expected) * StandardNormal(rng);
        o.max_flag = o.range >= max_range;
      } else {
        o.max_flag = true;
      }
    } else if (u < params.w_gauss + params.w_uniform) {
      o.range = max_range * (1.0 - Uniform01(rng));
    } else {
      o.max_flag = true;
    }
    if (o.max_flag) o.range = max_range;
    o.range = std::max(o.range, 1e-6);
    out.push_back(o);
  }
  return out;
}

SonarObs SimulateSonar(const Coloring& world, const Pose& pose, double bearing,
                       double half_angle, double max_range,
                       const SonarParams& params, Rng& rng) {
  if (world.ColorAt(pose.p) == Color::kBlack) {
    throw std::invalid_argument("sonar pose lies in occupied space");
  }
  SonarObs o;
  o.pose = pose;
  o.bearing = bearing;
  o.half_angle = half_angle;
  o.max_range = max_range;
  const auto features = SonarFeatures(o, world, params);
  double u = Uniform01(rng);
  const SonarFeature* source = nullptr;
  for (const SonarFeature& f : features) {
    if (u < f.r) {
      source = &f;
      break;
    }
    u -= f.r;
  }
  if (source) {
    o.range = source->feature.depth + params.sigma * StandardNormal(rng);
    o.max_flag = o.range >= max_range;
  } else {
    const double v = Uniform01(rng);
    if (v < params.w_uniform) {
      o.range = max_range * (1.0 - Uniform01(rng));
    } else if (v < params.w_uniform + params.w_exponential) {
      // Inverse CDF of the exponential truncated to (0, max_range].
      const double norm = -std::expm1(-params.beta * max_range);
      o.range = -std::log1p(-(1.0 - Uniform01(rng)) * norm) / params.beta;
    } else {
      o.max_flag = true;
    }
  }
  if (o.max_flag) o.range = max_range;
  o.range = std::clamp(o.range, 1e-6, max_range);
  return o;
}

ObservationSet SimulateScans(const Coloring& world, const TrajectorySpec& traj,
                             const SensorModel& model, Rng& rng) {
  ObservationSet data;
  for (const Pose& pose : SamplePoses(traj.waypoints, traj.spacing)) {
    if (traj.laser) {
      const auto scan = SimulateLaser(world, pose, traj.laser_beams, traj.laser_fov,
                                      traj.laser_max_range, model.laser, rng);
      data.lasers.insert(data.lasers.end(), scan.begin(), scan.end());
    }
    if (traj.sonar) {
      for (int k = 0; k < traj.sonar_count; ++k) {
        const double bearing = 2.0 * std::numbers::pi * k / traj.sonar_count;
        data.sonars.push_back(SimulateSonar(world, pose, bearing, traj.sonar_half_angle,
                                            traj.sonar_max_range, model.sonar, rng));
      }
    }
  }
  return data;
}

double ClassificationAccuracy(std::span<const double> p_black,
                              const GridSpec& grid, const Coloring& truth,
                              double threshold) {
  if (static_cast<int>(p_black.size()) != grid.num_cells()) {
    throw std::invalid_argument("estimate raster does not match the grid");
  }
  const double margin = 0.5 * grid.cell_size();
  std::vector<Segment> edges;
  for (int e : truth.edge_ids()) edges.push_back(truth.EdgeSegment(e));
  int counted = 0, correct = 0;
  for (int i = 0; i < grid.num_cells(); ++i) {
    const Point2 center = grid.CellCenter(grid.Unflat(i));
    bool straddles = false;
    for (const Segment& s : edges) {
      if (PointSegmentDistance(center, s) <= margin) {
        straddles = true;
        break;
      }
    }
    if (straddles) continue;
    ++counted;
    const bool occupied = p_black[i] > threshold;
    correct += occupied == (truth.ColorAt(center) == Color::kBlack);
  }
  return counted > 0 ? static_cast<double>(correct) / counted : 1.0;
}

}  // namespace prf
