#pragma once

// 3D primitives shared by the solver and the verification modules: vectors,
// unit vectors, validated tetrahedra and the canonical spherical frame in
// which the four solution directions are expressed.

#include <array>
#include <cmath>
#include <cstddef>

#include "ftpoint/error.hpp"

namespace ftpoint {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator/(const Vec3& a, double s) {
    return {a.x / s, a.y / s, a.z / s};
  }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

/// A location in space. Points and displacements share a representation.
using Point3 = Vec3;

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline double distance(const Point3& a, const Point3& b) { return norm(a - b); }

/// a . (b x c)
constexpr double triple(const Vec3& a, const Vec3& b, const Vec3& c) {
  return dot(a, cross(b, c));
}

inline bool is_finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Relative thresholds for degeneracy tests.
struct GeomTolerances {
  double coincident = 1e-12;  // |to - from| relative to the coordinate scale
  double volume = 1e-12;      // |det| relative to (max edge)^3
  double unit_norm = 1e-12;
};

inline constexpr GeomTolerances kDefaultGeomTolerances{};

/// Direction of norm one. Only constructible through normalization or from
/// components that are already unit within `unit_norm`.
class UnitVector3 {
 public:
  constexpr UnitVector3() : v_{1.0, 0.0, 0.0} {}

  /// Normalizes `v`; throws CoincidentPoints when `v` is (numerically) zero.
  static UnitVector3 normalize(const Vec3& v);

  /// Accepts `v` as-is if |v| = 1 within `tol`; throws otherwise.
  static UnitVector3 from_unit(const Vec3& v,
                               double tol = kDefaultGeomTolerances.unit_norm);

  constexpr const Vec3& vec() const { return v_; }
  constexpr double x() const { return v_.x; }
  constexpr double y() const { return v_.y; }
  constexpr double z() const { return v_.z; }

  constexpr operator const Vec3&() const { return v_; }

  friend constexpr bool operator==(const UnitVector3&,
                                   const UnitVector3&) = default;

 private:
  explicit constexpr UnitVector3(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

/// Unit vector pointing from `from` towards `to`.
UnitVector3 unit_vector(const Point3& from, const Point3& to,
                        const GeomTolerances& tol = kDefaultGeomTolerances);

/// arccos of the clamped inner product, in [0, pi].
double angle_between(const UnitVector3& u, const UnitVector3& v);

/// Four labelled, non-coplanar vertices A1..A4 (stored 0-based).
class Tetrahedron {
 public:
  /// Validates finiteness and the relative volume threshold.
  static Tetrahedron create(const std::array<Point3, 4>& vertices,
                            const GeomTolerances& tol = kDefaultGeomTolerances);

  const std::array<Point3, 4>& vertices() const { return v_; }
  const Point3& operator[](std::size_t i) const { return v_[i]; }

  /// det[A2-A1, A3-A1, A4-A1], i.e. six times the signed volume.
  double signed_det() const;
  double volume() const { return std::abs(signed_det()) / 6.0; }
  double max_edge() const;
  Point3 centroid() const;

 private:
  explicit Tetrahedron(const std::array<Point3, 4>& v) : v_(v) {}
  std::array<Point3, 4> v_;
};

/// Four directions in an arbitrary frame.
using Directions = std::array<UnitVector3, 4>;

/// Four directions expressed in the canonical frame:
///   u1 = (1, 0, 0)
///   u2 = (cos a102, sin a102, 0), sin a102 >= 0
///   uk = (cos ak cos wk, cos ak sin wk, sin ak) for k = 3, 4
/// with sin a3 >= 0 (or sin a4 >= 0 when u3 lies in the xy-plane).
struct DirectionConfig {
  Directions u;
  double alpha102 = 0.0;
  double a3 = 0.0;
  double omega3 = 0.0;
  double a4 = 0.0;
  double omega4 = 0.0;
  // True when the map into the frame needed a mirror (z -> -z) to satisfy the
  // sign convention on sin a3. Pairwise angles are unaffected.
  bool mirrored = false;
};

/// Point on the unit sphere at elevation `a` and azimuth `omega`.
Vec3 spherical_direction(double a, double omega);

/// Maps u1 to the x-axis and u2 into the upper half of the xy-plane, then
/// extracts the spherical parameters of u3 and u4.
DirectionConfig canonical_frame(const Directions& u);

}  // namespace ftpoint
