#include "ftpoint/formula.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ftpoint/angles.hpp"

namespace ftpoint {

double gram_factor(double a, double b, double c) {
  using std::cos;
  return 1.0 + cos(2.0 * a) + cos(2.0 * b) + cos(2.0 * c) - 4.0 * cos(a) * cos(b) * cos(c);
}

void validate(const FiveAngles& fa) {
  for (double a : {fa.a102, fa.a103, fa.a104, fa.a203, fa.a204}) {
    if (!std::isfinite(a) || a <= kAngleMargin || a >= std::numbers::pi - kAngleMargin)
      throw Error(ErrorCode::InvalidAngle, "angles must lie strictly inside (0, pi)");
  }
  if (std::sin(fa.a102) <= kAngleMargin)
    throw Error(ErrorCode::NearPlanarA102, "sin(alpha102) is too small");
  if (gram_factor(fa.a102, fa.a103, fa.a203) > kGramSlack)
    throw Error(ErrorCode::UnrealizableTriple, "angles (a102, a103, a203) are not realizable");
  if (gram_factor(fa.a102, fa.a104, fa.a204) > kGramSlack)
    throw Error(ErrorCode::UnrealizableTriple, "angles (a102, a104, a204) are not realizable");
}

SixthAngleResult sixth_angle(const FiveAngles& fa) {
  validate(fa);
  using std::cos;
  const double c102 = cos(fa.a102);
  const double c103 = cos(fa.a103);
  const double c104 = cos(fa.a104);
  const double c203 = cos(fa.a203);
  const double c204 = cos(fa.a204);
  const double s = std::sin(fa.a102);
  const double csc2 = 1.0 / (s * s);

  SixthAngleResult r;
  r.gram3 = gram_factor(fa.a102, fa.a103, fa.a203);
  r.gram4 = gram_factor(fa.a102, fa.a104, fa.a204);
  // Factors within the slack of zero may have the wrong sign from rounding.
  r.b_magnitude = std::sqrt(std::max(0.0, r.gram3 * r.gram4));

  auto evaluate = [&](double b) {
    return 0.25 *
           (4.0 * c103 * (c104 - c102 * c204) + 2.0 * (b + 2.0 * c203 * (-c102 * c104 + c204))) *
           csc2;
  };
  r.cos_plus = evaluate(r.b_magnitude);
  r.cos_minus = evaluate(-r.b_magnitude);
  r.realizable_plus = std::abs(r.cos_plus) <= 1.0 + kRealizableSlack;
  r.realizable_minus = std::abs(r.cos_minus) <= 1.0 + kRealizableSlack;
  return r;
}

int resolve_branch(const Directions& u) {
  const double p = triple(u[0], u[1], u[2]) * triple(u[0], u[1], u[3]);
  if (std::abs(p) < kBranchZero) return 0;
  return p > 0.0 ? 1 : -1;
}

FiveAngles five_angles(const Directions& u) {
  const AngleSextuple s = angle_sextuple(u);
  return {s.a102, s.a103, s.a104, s.a203, s.a204};
}

DirectionConfig config_from_five_angles(const FiveAngles& fa, int branch) {
  if (branch != 1 && branch != -1)
    throw Error(ErrorCode::InvalidArgument, "branch must be +1 or -1");
  validate(fa);

  const double c = std::cos(fa.a102);
  const double s = std::sin(fa.a102);

  // u_k = (x, y, z) with u1.u_k = cos a10k and u2.u_k = cos a20k.
  auto place = [&](double a1k, double a2k) {
    const double x = std::cos(a1k);
    const double y = (std::cos(a2k) - c * x) / s;
    const double zz = 1.0 - x * x - y * y;
    if (zz < -kGramSlack)
      throw Error(ErrorCode::UnrealizableTriple, "no unit vector has the requested angles");
    return Vec3{x, y, std::sqrt(std::max(0.0, zz))};
  };

  Vec3 u3 = place(fa.a103, fa.a203);
  Vec3 u4 = place(fa.a104, fa.a204);
  // With u3 in the plane the branch is void and u4 takes the sign convention.
  if (u3.z >= kBranchZero && branch < 0) u4.z = -u4.z;

  const Directions u{UnitVector3::from_unit({1.0, 0.0, 0.0}), UnitVector3::normalize({c, s, 0.0}),
                     UnitVector3::normalize(u3), UnitVector3::normalize(u4)};
  return canonical_frame(u);
}

double ft_substitution_residual(double a102, double a203) {
  for (double a : {a102, a203})
    if (!std::isfinite(a) || a <= 0.0 || a >= std::numbers::pi)
      throw Error(ErrorCode::InfeasiblePair, "angles must lie strictly inside (0, pi)");

  const double c103 = -(1.0 + std::cos(a102) + std::cos(a203));
  if (!(std::abs(c103) < 1.0))
    throw Error(ErrorCode::InfeasiblePair, "cosine-sum identity leaves no alpha103");
  const double a103 = std::acos(c103);

  SixthAngleResult r;
  try {
    r = sixth_angle({a102, a103, a203, a203, a103});
  } catch (const Error& e) {
    throw Error(ErrorCode::InfeasiblePair, std::string("substituted angles are infeasible: ") + e.what());
  }
  const double c102 = std::cos(a102);
  return std::min(std::abs(r.cos_plus - c102), std::abs(r.cos_minus - c102));
}

}  // namespace ftpoint
