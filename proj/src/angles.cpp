#include "ftpoint/angles.hpp"

#include <algorithm>
#include <cmath>

namespace ftpoint {

AngleSextuple angle_sextuple(const Directions& u) {
  return {angle_between(u[0], u[1]), angle_between(u[0], u[2]), angle_between(u[0], u[3]),
          angle_between(u[1], u[2]), angle_between(u[1], u[3]), angle_between(u[2], u[3])};
}

Directions directions_from(const std::array<Point3, 4>& vertices, const Point3& apex) {
  Directions u;
  for (std::size_t i = 0; i < 4; ++i) u[i] = unit_vector(apex, vertices[i]);
  return u;
}

OppositeAngleCheck check_opposite_angles(const AngleSextuple& s, double tol) {
  using std::cos;
  OppositeAngleCheck c;
  c.residuals = {std::abs(cos(s.a102) - cos(s.a304)), std::abs(cos(s.a203) - cos(s.a104)),
                 std::abs(cos(s.a103) - cos(s.a204))};
  c.pass = std::all_of(c.residuals.begin(), c.residuals.end(), [tol](double v) { return v <= tol; });
  return c;
}

CosineSumCheck check_cosine_sum(const AngleSextuple& s, double tol) {
  const double r = std::abs(1.0 + std::cos(s.a102) + std::cos(s.a103) + std::cos(s.a104));
  return {r, r <= tol};
}

BisectorSet bisectors(const Directions& u) {
  const Vec3 &u1 = u[0], &u2 = u[1], &u3 = u[2], &u4 = u[3];
  return {u1 + u2, u1 + u3, u1 + u4, u2 + u3, u2 + u4, u3 + u4};
}

namespace {

// |a.b / (|a||b|) + 1|; flags instead of dividing by a vanishing length.
double antiparallel_residual(const Vec3& a, const Vec3& b, bool& degenerate) {
  const double na = norm(a);
  const double nb = norm(b);
  if (na < kDegenerateBisector || nb < kDegenerateBisector) {
    degenerate = true;
    return 0.0;
  }
  return std::abs(dot(a, b) / (na * nb) + 1.0);
}

}  // namespace

PropertyReport verify_fundamental_property(const Directions& u, double tol) {
  const AngleSextuple s = angle_sextuple(u);
  const BisectorSet d = bisectors(u);

  PropertyReport r;
  r.opposite_angle_residuals = check_opposite_angles(s, tol).residuals;
  r.cosine_sum_residual = check_cosine_sum(s, tol).residual;
  r.bisector_dot_residuals = {std::abs(dot(d.d102, d.d203)), std::abs(dot(d.d102, d.d103)),
                              std::abs(dot(d.d203, d.d103))};
  r.antiparallel_residuals = {antiparallel_residual(d.d102, d.d304, r.degenerate_bisector),
                              antiparallel_residual(d.d203, d.d104, r.degenerate_bisector),
                              antiparallel_residual(d.d103, d.d204, r.degenerate_bisector)};

  auto within = [tol](double v) { return v <= tol; };
  r.pass = !r.degenerate_bisector && std::all_of(r.opposite_angle_residuals.begin(), r.opposite_angle_residuals.end(), within) &&
           within(r.cosine_sum_residual) &&
           std::all_of(r.bisector_dot_residuals.begin(), r.bisector_dot_residuals.end(), within) &&
           std::all_of(r.antiparallel_residuals.begin(), r.antiparallel_residuals.end(), within);
  return r;
}

}  // namespace ftpoint
