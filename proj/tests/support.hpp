#pragma once

// Fixtures and independent reference computations for the test suites. Nothing
// here calls into the solver or formula code paths it is used to check.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "ftpoint/geom.hpp"

namespace ftpoint::testing {

inline const std::array<Point3, 4> kRegular{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
inline const std::array<Point3, 4> kRightCorner{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
inline const std::array<Point3, 4> kFlatVertex{{{0, 0, 0.1}, {1, 0, 0}, {-0.5, 0.8660254, 0}, {-0.5, -0.8660254, 0}}};
inline const std::array<Point3, 4> kNeedle{{{0.1, 0, 0}, {-0.05, 0.08660254, 0}, {-0.05, -0.08660254, 0}, {0, 0, 100}}};

inline const double kRegularAngle = std::acos(-1.0 / 3.0);

inline Directions regular_directions() {
  const double s = 1.0 / std::sqrt(3.0);
  return {UnitVector3::from_unit({s, s, s}), UnitVector3::from_unit({s, -s, -s}),
          UnitVector3::from_unit({-s, s, -s}), UnitVector3::from_unit({-s, -s, s})};
}

/// Sum of distances written out longhand.
inline double distance_sum(const std::array<Point3, 4>& v, const Point3& p) {
  double s = 0.0;
  for (const auto& a : v)
    s += std::sqrt((p.x - a.x) * (p.x - a.x) + (p.y - a.y) * (p.y - a.y) + (p.z - a.z) * (p.z - a.z));
  return s;
}

/// Smallest distance sum over `n` points drawn uniformly from the solid tetrahedron
/// (rejection sampling in the bounding box, barycentric test by determinants).
inline double probe_cloud_min(const std::array<Point3, 4>& v, int n, std::uint64_t seed) {
  auto det3 = [](const Vec3& a, const Vec3& b, const Vec3& c) {
    return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) + a.z * (b.x * c.y - b.y * c.x);
  };
  Vec3 lo = v[0], hi = v[0];
  for (const auto& p : v) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  const double full = det3(v[1] - v[0], v[2] - v[0], v[3] - v[0]);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y), uz(lo.z, hi.z);
  double best = std::numeric_limits<double>::infinity();
  for (int accepted = 0; accepted < n;) {
    const Point3 p{ux(rng), uy(rng), uz(rng)};
    const double l1 = det3(p - v[0], v[2] - v[0], v[3] - v[0]) / full;
    const double l2 = det3(v[1] - v[0], p - v[0], v[3] - v[0]) / full;
    const double l3 = det3(v[1] - v[0], v[2] - v[0], p - v[0]) / full;
    if (l1 < 0 || l2 < 0 || l3 < 0 || l1 + l2 + l3 > 1) continue;
    ++accepted;
    best = std::min(best, distance_sum(v, p));
  }
  return best;
}

/// det of the 3x3 Gram matrix of three vectors.
inline double gram_det(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double g[3][3] = {{dot(a, a), dot(a, b), dot(a, c)},
                          {dot(b, a), dot(b, b), dot(b, c)},
                          {dot(c, a), dot(c, b), dot(c, c)}};
  return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
         g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
         g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
}

inline double deg(double d) { return d * std::numbers::pi / 180.0; }

}  // namespace ftpoint::testing
