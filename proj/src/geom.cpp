#include "ftpoint/geom.hpp"

#include <algorithm>
#include <string>

namespace ftpoint {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::DegenerateTetrahedron: return "DegenerateTetrahedron";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::ClassificationConflict: return "ClassificationConflict";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::UnrealizableTriple: return "UnrealizableTriple";
    case ErrorCode::NearPlanarA102: return "NearPlanarA102";
    case ErrorCode::InvalidAngle: return "InvalidAngle";
    case ErrorCode::InfeasiblePair: return "InfeasiblePair";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

UnitVector3 UnitVector3::normalize(const Vec3& v) {
  if (!is_finite(v)) throw Error(ErrorCode::NonFiniteInput, "non-finite vector");
  const double n = norm(v);
  if (!(n > 0.0)) throw Error(ErrorCode::CoincidentPoints, "cannot normalize a zero vector");
  return UnitVector3(v / n);
}

UnitVector3 UnitVector3::from_unit(const Vec3& v, double tol) {
  if (!is_finite(v)) throw Error(ErrorCode::NonFiniteInput, "non-finite vector");
  if (std::abs(norm(v) - 1.0) > tol)
    throw Error(ErrorCode::InvalidArgument, "vector is not of unit length");
  return UnitVector3(v);
}

UnitVector3 unit_vector(const Point3& from, const Point3& to, const GeomTolerances& tol) {
  if (!is_finite(from) || !is_finite(to))
    throw Error(ErrorCode::NonFiniteInput, "non-finite point");
  const Vec3 d = to - from;
  const double len = norm(d);
  const double scale = std::max(norm(from), norm(to));
  if (len == 0.0 || len <= tol.coincident * scale)
    throw Error(ErrorCode::CoincidentPoints, "points coincide");
  return UnitVector3::normalize(d);
}

double angle_between(const UnitVector3& u, const UnitVector3& v) {
  return std::acos(std::clamp(dot(u.vec(), v.vec()), -1.0, 1.0));
}

Tetrahedron Tetrahedron::create(const std::array<Point3, 4>& vertices, const GeomTolerances& tol) {
  for (const auto& p : vertices)
    if (!is_finite(p)) throw Error(ErrorCode::NonFiniteInput, "tetrahedron vertex is not finite");
  Tetrahedron t(vertices);
  const double edge = t.max_edge();
  if (edge == 0.0)
    throw Error(ErrorCode::DegenerateTetrahedron, "all vertices coincide");
  if (!(std::abs(t.signed_det()) > tol.volume * edge * edge * edge))
    throw Error(ErrorCode::DegenerateTetrahedron, "vertices are collinear or coplanar");
  return t;
}

double Tetrahedron::signed_det() const {
  return triple(v_[1] - v_[0], v_[2] - v_[0], v_[3] - v_[0]);
}

double Tetrahedron::max_edge() const {
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) m = std::max(m, distance(v_[i], v_[j]));
  return m;
}

Point3 Tetrahedron::centroid() const {
  return (v_[0] + v_[1] + v_[2] + v_[3]) * 0.25;
}

Vec3 spherical_direction(double a, double omega) {
  return {std::cos(a) * std::cos(omega), std::cos(a) * std::sin(omega), std::sin(a)};
}

namespace {

constexpr double kParallelEps = 1e-12;
constexpr double kInPlaneEps = 1e-12;

struct Spherical {
  double a;
  double omega;
};

Spherical to_spherical(const Vec3& v) {
  return {std::atan2(v.z, std::hypot(v.x, v.y)), std::atan2(v.y, v.x)};
}

}  // namespace

DirectionConfig canonical_frame(const Directions& u) {
  const Vec3& u1 = u[0].vec();
  const Vec3& u2 = u[1].vec();
  if (std::abs(dot(u1, u2)) >= 1.0 - kParallelEps)
    throw Error(ErrorCode::DegenerateFrame, "u1 and u2 are parallel or anti-parallel");

  // Rows of the rotation: e1 = u1, e2 = in-plane part of u2, e3 = e1 x e2.
  const Vec3 e1 = u1;
  const Vec3 e2 = UnitVector3::normalize(u2 - dot(u2, e1) * e1).vec();
  const Vec3 e3 = cross(e1, e2);
  auto rotate = [&](const Vec3& v) { return Vec3{dot(v, e1), dot(v, e2), dot(v, e3)}; };

  Vec3 r3 = rotate(u[2].vec());
  Vec3 r4 = rotate(u[3].vec());

  DirectionConfig cfg;
  const bool u3_in_plane = std::abs(r3.z) < kInPlaneEps;
  cfg.mirrored = u3_in_plane ? r4.z < 0.0 : r3.z < 0.0;
  if (cfg.mirrored) {
    r3.z = -r3.z;
    r4.z = -r4.z;
  }

  const double c = dot(u2, e1);
  const double s = dot(u2, e2);
  cfg.alpha102 = std::atan2(s, c);
  cfg.u[0] = UnitVector3::from_unit({1.0, 0.0, 0.0});
  cfg.u[1] = UnitVector3::normalize({c, s, 0.0});
  cfg.u[2] = UnitVector3::normalize(r3);
  cfg.u[3] = UnitVector3::normalize(r4);

  const auto s3 = to_spherical(cfg.u[2].vec());
  const auto s4 = to_spherical(cfg.u[3].vec());
  cfg.a3 = s3.a;
  cfg.omega3 = s3.omega;
  cfg.a4 = s4.a;
  cfg.omega4 = s4.omega;
  return cfg;
}

}  // namespace ftpoint
