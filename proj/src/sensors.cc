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

#include "prf/sensors.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "prf/edge_grid_index.h"

namespace prf {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLogSqrt2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

double NormalLogPdf(double x, double mean, double sigma) {
  const double z = (x - mean) / sigma;
  return -0.5 * z * z - std::log(sigma) - kLogSqrt2Pi;
}

// P(N(mean, sigma) >= x).
double NormalUpperTail(double x, double mean, double sigma) {
  return 0.5 * std::erfc((x - mean) / (sigma * std::numbers::sqrt2));
}

double LogAddExp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

double Logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

void CheckWeights(std::initializer_list<double> w, const char* what) {
  double sum = 0.0;
  for (double x : w) {
    if (!(x >= 0.0)) throw std::invalid_argument(std::string(what) + " weights must be non-negative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument(std::string(what) + " weights must sum to 1");
}

}  // namespace

void CheckLaserParams(const LaserParams& p) {
  CheckWeights({p.w_gauss, p.w_uniform, p.w_maxrange}, "laser");
  if (!(p.sigma_floor > 0.0) || !(p.sigma_relative >= 0.0)) {
    throw std::invalid_argument("laser sigma must be positive");
  }
}

void CheckSonarParams(const SonarParams& p) {
  CheckWeights({p.w_uniform, p.w_exponential, p.w_maxrange}, "sonar outlier");
  if (!(p.sigma > 0.0)) throw std::invalid_argument("sonar sigma must be positive");
  if (!(p.beta > 0.0)) throw std::invalid_argument("sonar beta must be positive");
}

double ExpectedLaserRange(const LaserObs& o, const Coloring& c, bool* hit) {
  const auto h = RayCast(c.index(), o.pose.p, o.direction(), o.max_range);
  if (h) {
    *hit = true;
    return h->distance;
  }
  *hit = false;
  return std::min(o.max_range,
                  RayExitDistance(c.window(), o.pose.p, UnitVector(o.direction())));
}

double LaserReadingLogDensity(const LaserObs& o, double expected, bool hit,
                              const LaserParams& p) {
  if (o.max_flag) {
    const double gauss = hit ? NormalUpperTail(o.max_range, expected, p.Sigma(expected)) : 1.0;
    return std::log(p.w_maxrange + p.w_gauss * gauss);
  }
  const double uniform = std::log(p.w_uniform / o.max_range);
  if (!hit) return uniform;
  return LogAddExp(std::log(p.w_gauss) + NormalLogPdf(o.range, expected, p.Sigma(expected)),
                   uniform);
}

double LaserLogLikelihood(const LaserObs& o, const Coloring& c, const LaserParams& p) {
  if (c.ColorAt(o.pose.p) == Color::kBlack) return kNegInf;
  bool hit;
  const double expected = ExpectedLaserRange(o, c, &hit);
  return LaserReadingLogDensity(o, expected, hit, p);
}

double ReturnProbability(const VisibleFeature& f, const SonarParams& p) {
  if (f.kind == FeatureKind::kCorner) {
    return Logistic(p.corner_intercept + p.corner_depth * f.depth);
  }
  return Logistic(p.face_intercept + p.face_depth * f.depth +
                  p.face_angle * (0.5 * std::numbers::pi - f.projection_angle) +
                  p.face_subtended * f.subtended_angle);
}

std::vector<double> SequentialReturnProbabilities(std::span<const double> q) {
  std::vector<double> r(q.size());
  double none_yet = 1.0;
  for (size_t i = 0; i < q.size(); ++i) {
    r[i] = q[i] * none_yet;
    none_yet *= 1.0 - q[i];
  }
  return r;
}

std::vector<SonarFeature> SonarFeatures(const SonarObs& o, const Coloring& c,
                                        const SonarParams& p) {
  const Cone cone = o.cone();
  // Candidate edges from the index cells under the cone.
  const int steps = 8;
  const double step = 2.0 * cone.half_angle / steps;
  const double reach = cone.max_range / std::cos(0.5 * step);
  std::vector<Point2> sector{cone.apex};
  for (int k = 0; k <= steps; ++k) {
    sector.push_back(cone.apex + reach * UnitVector(cone.heading - cone.half_angle + k * step));
  }
  std::vector<int> ids;
  for (int cell : CellsOverlappingPolygon(sector, c.index().grid())) {
    for (int e : c.index().EdgesInCell(cell)) ids.push_back(e);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<SweepSegment> segs;
  segs.reserve(ids.size());
  for (int e : ids) {
    const Edge& edge = c.edge(e);
    segs.push_back({c.EdgeSegment(e), e, edge.v[0], edge.v[1],
                    c.vertex(edge.v[0]).kind == VertexKind::kInterior,
                    c.vertex(edge.v[1]).kind == VertexKind::kInterior});
  }
  std::vector<SonarFeature> out;
  for (const VisibleFeature& f : VisibilitySweep(segs, cone)) {
    out.push_back({f, ReturnProbability(f, p), 0.0});
  }
  double none_yet = 1.0;
  for (SonarFeature& f : out) {
    f.r = f.q * none_yet;
    none_yet *= 1.0 - f.q;
  }
  return out;
}

double SonarReadingLogDensity(const SonarObs& o,
                              std::span<const SonarFeature> features,
                              const SonarParams& p) {
  double total_r = 0.0;
  double density = 0.0;
  for (const SonarFeature& f : features) {
    total_r += f.r;
    if (o.max_flag) {
      density += f.r * NormalUpperTail(o.max_range, f.feature.depth, p.sigma);
    } else {
      density += f.r * std::exp(NormalLogPdf(o.range, f.feature.depth, p.sigma));
    }
  }
  const double outlier_weight = std::max(0.0, 1.0 - total_r);
  double outlier;
  if (o.max_flag) {
    outlier = p.w_maxrange;
  } else {
    const double norm = -std::expm1(-p.beta * o.max_range);
    outlier = p.w_uniform / o.max_range +
              p.w_exponential * p.beta * std::exp(-p.beta * o.range) / norm;
  }
  return std::log(density + outlier_weight * outlier);
}

double SonarLogLikelihood(const SonarObs& o, const Coloring& c, const SonarParams& p) {
  if (c.ColorAt(o.pose.p) == Color::kBlack) return kNegInf;
  const auto features = SonarFeatures(o, c, p);
  return SonarReadingLogDensity(o, features, p);
}

double PointLogLikelihood(const PointColorObs& o, Color color) {
  const double mu = color == Color::kBlack ? o.mu_black : o.mu_white;
  const double z = (o.value - mu) / o.sigma;
  return -0.5 * z * z;
}

double PointLogLikelihood(const PointColorObs& o, const Coloring& c) {
  return PointLogLikelihood(o, c.ColorAt(o.q));
}

}  // namespace prf
