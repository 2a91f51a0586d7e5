#pragma once

// Four rays from a common apex are fixed up to rotation by five of their six
// pairwise angles. The sixth angle follows from a closed form containing a
// square root of two Gram factors, so it has two branches; geometry picks one
// through the sides of the (u1, u2)-plane on which u3 and u4 lie.

#include "ftpoint/geom.hpp"

namespace ftpoint {

struct FiveAngles {
  double a102 = 0.0;
  double a103 = 0.0;
  double a104 = 0.0;
  double a203 = 0.0;
  double a204 = 0.0;
};

struct SixthAngleResult {
  double b_magnitude = 0.0;  // sqrt of the product of the two Gram factors
  double gram3 = 0.0;        // factor for {u1, u2, u3}
  double gram4 = 0.0;        // factor for {u1, u2, u4}
  double cos_plus = 0.0;     // evaluated with +b
  double cos_minus = 0.0;    // evaluated with -b
  bool realizable_plus = false;
  bool realizable_minus = false;

  /// Cosine of alpha304 on the given branch (+1 or -1; 0 picks +1, the
  /// branches coincide there).
  double cos_for(int branch) const { return branch < 0 ? cos_minus : cos_plus; }
};

inline constexpr double kAngleMargin = 1e-9;
inline constexpr double kGramSlack = 1e-9;
inline constexpr double kRealizableSlack = 1e-9;
inline constexpr double kBranchZero = 1e-12;

/// 1 + cos 2a + cos 2b + cos 2c - 4 cos a cos b cos c, which equals
/// -2 det Gram of three unit vectors with pairwise angles a, b, c.
double gram_factor(double a, double b, double c);

/// Throws InvalidAngle, NearPlanarA102 or UnrealizableTriple.
void validate(const FiveAngles& fa);

/// cos alpha304 on both branches of the radical.
SixthAngleResult sixth_angle(const FiveAngles& fa);

/// sign([u1.(u2 x u3)] [u1.(u2 x u4)]), zero below 1e-12.
int resolve_branch(const Directions& u);
inline int resolve_branch(const DirectionConfig& c) { return resolve_branch(c.u); }

/// The five inputs measured from a direction quadruple.
FiveAngles five_angles(const Directions& u);

/// Canonical directions realizing `fa`; `branch` = +1 puts u3 and u4 on the
/// same side of the (u1, u2)-plane, -1 on opposite sides.
DirectionConfig config_from_five_angles(const FiveAngles& fa, int branch);

/// Substitutes alpha304 = alpha102, alpha104 = alpha203, alpha204 = alpha103
/// (alpha103 from the cosine-sum identity) and returns the smaller of the two
/// branch gaps |cos_branch - cos alpha102|. Throws InfeasiblePair.
double ft_substitution_residual(double a102, double a203);

}  // namespace ftpoint
