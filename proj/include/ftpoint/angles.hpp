#pragma once

// Angles subtended at the solution point and the checks that hold there:
// opposite edges subtend equal angles, the cosine sum vanishes, the bisectors
// of alpha102, alpha203 and alpha103 are mutually orthogonal, and each opposite
// pair of bisectors is anti-parallel.

#include <array>

#include "ftpoint/geom.hpp"

namespace ftpoint {

/// The six angles alpha_{i0j} = angle A_i A_0 A_j, in radians.
struct AngleSextuple {
  double a102 = 0.0;
  double a103 = 0.0;
  double a104 = 0.0;
  double a203 = 0.0;
  double a204 = 0.0;
  double a304 = 0.0;

  friend bool operator==(const AngleSextuple&, const AngleSextuple&) = default;
};

/// Unnormalized bisector directions delta_{i0j} = u_i + u_j.
struct BisectorSet {
  Vec3 d102, d103, d104, d203, d204, d304;
};

struct PropertyReport {
  std::array<double, 3> opposite_angle_residuals{};  // |cos a102 - cos a304|, |cos a203 - cos a104|, |cos a103 - cos a204|
  double cosine_sum_residual = 0.0;                  // |1 + cos a102 + cos a103 + cos a104|
  std::array<double, 3> bisector_dot_residuals{};    // |d102.d203|, |d102.d103|, |d203.d103|
  std::array<double, 3> antiparallel_residuals{};    // |n102.n304 + 1|, |n203.n104 + 1|, |n103.n204 + 1|
  bool degenerate_bisector = false;                  // some |delta| < 1e-12
  bool pass = false;

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

inline constexpr double kDefaultVerifyTol = 1e-6;
inline constexpr double kDegenerateBisector = 1e-12;

AngleSextuple angle_sextuple(const Directions& u);
inline AngleSextuple angle_sextuple(const DirectionConfig& c) { return angle_sextuple(c.u); }

/// Directions from `apex` towards the four vertices.
Directions directions_from(const std::array<Point3, 4>& vertices, const Point3& apex);

struct OppositeAngleCheck {
  std::array<double, 3> residuals{};  // |cos a102 - cos a304|, |cos a203 - cos a104|, |cos a103 - cos a204|
  bool pass = false;
};

struct CosineSumCheck {
  double residual = 0.0;  // |1 + cos a102 + cos a103 + cos a104|
  bool pass = false;
};

OppositeAngleCheck check_opposite_angles(const AngleSextuple& s, double tol = kDefaultVerifyTol);
CosineSumCheck check_cosine_sum(const AngleSextuple& s, double tol = kDefaultVerifyTol);

BisectorSet bisectors(const Directions& u);
inline BisectorSet bisectors(const DirectionConfig& c) { return bisectors(c.u); }

/// Residuals of every identity above; `pass` iff all are within `tol`.
PropertyReport verify_fundamental_property(const Directions& u, double tol = kDefaultVerifyTol);
inline PropertyReport verify_fundamental_property(const DirectionConfig& c,
                                                  double tol = kDefaultVerifyTol) {
  return verify_fundamental_property(c.u, tol);
}

}  // namespace ftpoint
