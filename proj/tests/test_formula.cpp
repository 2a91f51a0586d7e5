#include "doctest.h"

#include <numbers>

#include "ftpoint/angles.hpp"
#include "ftpoint/formula.hpp"
#include "ftpoint/sampling.hpp"
#include "support.hpp"

using namespace ftpoint;
using doctest::Approx;
using testing::deg;

namespace {

FiveAngles regular_five() {
  const double a = testing::kRegularAngle;
  return {a, a, a, a, a};
}

// u1..u4 = x, y, z, (1/2, 1/2, sqrt(1/2)).
Directions right_quadruple() {
  return {UnitVector3::from_unit({1, 0, 0}), UnitVector3::from_unit({0, 1, 0}),
          UnitVector3::from_unit({0, 0, 1}), UnitVector3::from_unit({0.5, 0.5, std::sqrt(0.5)})};
}

template <class F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("expected ", to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("sixth_angle examples") {
  SUBCASE("regular angles pick the minus branch") {
    const auto u = testing::regular_directions();
    const double measured = dot(u[2].vec(), u[3].vec());
    const auto r = sixth_angle(five_angles(u));
    CHECK(std::abs(r.cos_minus - measured) <= 1e-12);
    CHECK(std::abs(r.cos_minus - (-1.0 / 3.0)) <= 1e-12);
    CHECK(std::abs(r.cos_plus - 1.0) <= 1e-12);
    CHECK(r.realizable_plus);
    CHECK(r.realizable_minus);
    CHECK(r.cos_plus >= r.cos_minus);
    // b = 32/27 exactly: each Gram factor is -32/27.
    CHECK(r.b_magnitude == Approx(32.0 / 27.0).epsilon(1e-12));
  }
  SUBCASE("right angles pick the plus branch") {
    const auto u = right_quadruple();
    const FiveAngles fa{deg(90), deg(90), deg(60), deg(90), deg(60)};
    const auto r = sixth_angle(fa);
    CHECK(std::abs(r.cos_plus - dot(u[2].vec(), u[3].vec())) <= 1e-12);
    CHECK(r.cos_plus == Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(std::acos(r.cos_plus) == Approx(std::numbers::pi / 4).epsilon(1e-12));
  }
  SUBCASE("coplanar u1 u2 u3 collapse the branches") {
    // u1 = (1,0,0), u2 = (-1/2, sqrt3/2, 0), u3 = (-1/2, -sqrt3/2, 0) and any u4
    // with equal angles to u1 and u2: u4 = (c, sqrt3 c, z) after rotation.
    const double c = 0.2;
    const Vec3 u4raw{c, std::sqrt(3.0) * c, std::sqrt(1 - 4 * c * c)};
    const Directions u{UnitVector3::from_unit({1, 0, 0}),
                       UnitVector3::from_unit({-0.5, std::sqrt(3.0) / 2, 0}),
                       UnitVector3::from_unit({-0.5, -std::sqrt(3.0) / 2, 0}), UnitVector3::from_unit(u4raw)};
    const auto fa = five_angles(u);
    CHECK(fa.a102 == Approx(2 * std::numbers::pi / 3));
    const auto r = sixth_angle(fa);
    CHECK(r.b_magnitude <= 1e-7);
    CHECK(r.cos_plus == Approx(-2 * std::cos(fa.a104)).epsilon(1e-7));
    CHECK(r.cos_minus == Approx(-2 * std::cos(fa.a104)).epsilon(1e-7));
    CHECK(r.cos_minus == Approx(dot(u[2].vec(), u[3].vec())).epsilon(1e-7));
  }
  SUBCASE("narrow realizable set") {
    // Both triples are realizable (Gram factors negative), so this is valid input.
    const auto r = sixth_angle({deg(10), deg(170), deg(10), deg(170), deg(10)});
    CHECK(r.gram3 < 0.0);
    CHECK(r.gram4 < 0.0);
    CHECK(r.realizable_plus);
  }
  SUBCASE("b squared equals the product under the radical") {
    Rng rng(4);
    for (int k = 0; k < 200; ++k) {
      const auto u = random_directions(rng);
      const auto fa = five_angles(u);
      const auto r = sixth_angle(fa);
      const double prod = r.gram3 * r.gram4;
      CHECK(std::abs(r.b_magnitude * r.b_magnitude - prod) <= 1e-9 * std::max(1.0, std::abs(prod)));
    }
  }
}

TEST_CASE("sixth_angle errors") {
  expect_error(ErrorCode::UnrealizableTriple, [] { sixth_angle({deg(10), deg(170), deg(10), deg(10), deg(10)}); });
  expect_error(ErrorCode::UnrealizableTriple, [] { sixth_angle({deg(90), deg(90), deg(10), deg(90), deg(120)}); });
  expect_error(ErrorCode::InvalidAngle, [] { sixth_angle({0.0, 1.0, 1.0, 1.0, 1.0}); });
  expect_error(ErrorCode::InvalidAngle, [] { sixth_angle({1.0, std::numbers::pi, 1.0, 1.0, 1.0}); });
  expect_error(ErrorCode::InvalidAngle, [] { sixth_angle({1.0, std::nan(""), 1.0, 1.0, 1.0}); });
}

TEST_CASE("gram factor identity") {
  Rng rng(13);
  for (int k = 0; k < 500; ++k) {
    const auto u = random_directions(rng);
    const auto s = angle_sextuple(u);
    CHECK(std::abs(gram_factor(s.a102, s.a103, s.a203) + 2 * testing::gram_det(u[0], u[1], u[2])) <= 1e-10);
    CHECK(std::abs(gram_factor(s.a102, s.a104, s.a204) + 2 * testing::gram_det(u[0], u[1], u[3])) <= 1e-10);
  }
}

TEST_CASE("resolve_branch") {
  CHECK(resolve_branch(testing::regular_directions()) == -1);
  CHECK(resolve_branch(canonical_frame(testing::regular_directions())) == -1);
  CHECK(resolve_branch(right_quadruple()) == 1);
  const Directions flat{UnitVector3::from_unit({1, 0, 0}), UnitVector3::from_unit({0, 1, 0}),
                        UnitVector3::normalize({1, 1, 0}), UnitVector3::from_unit({0, 0, 1})};
  CHECK(resolve_branch(flat) == 0);
}

TEST_CASE("sixth angle reproduces the geometry") {
  Rng rng(101);
  int balanced = 0;
  int unbalanced = 0;
  for (int k = 0; k < 2000; ++k) {
    const bool want_balanced = k % 2 == 0;
    std::optional<Directions> u = want_balanced ? balanced_directions(rng) : random_directions(rng);
    if (!u) continue;
    const auto& d = *u;
    if (std::abs(dot(d[0].vec(), d[1].vec())) > 0.99) continue;
    if (testing::gram_det(d[0], d[1], d[2]) < 1e-6 || testing::gram_det(d[0], d[1], d[3]) < 1e-6) continue;
    const auto r = sixth_angle(five_angles(d));
    const int branch = resolve_branch(d);
    CHECK(std::abs(r.cos_for(branch) - dot(d[2].vec(), d[3].vec())) <= 1e-8);
    if (want_balanced) {
      CHECK(branch == -1);
      ++balanced;
    } else {
      ++unbalanced;
    }
  }
  CHECK(balanced > 900);
  CHECK(unbalanced > 900);
}

TEST_CASE("config_from_five_angles") {
  SUBCASE("regular set, minus branch") {
    const auto c = config_from_five_angles(regular_five(), -1);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        CHECK(dot(c.u[i].vec(), c.u[j].vec()) == Approx(-1.0 / 3.0).epsilon(1e-12));
    CHECK(norm(c.u[0].vec() + c.u[1].vec() + c.u[2].vec() + c.u[3].vec()) < 1e-9);
  }
  SUBCASE("right-angle set, plus branch") {
    const auto c = config_from_five_angles({deg(90), deg(90), deg(60), deg(90), deg(60)}, 1);
    const auto s = angle_sextuple(c);
    CHECK(s.a304 == Approx(std::numbers::pi / 4).epsilon(1e-12));
    CHECK(norm(c.u[3].vec() - Vec3{0.5, 0.5, std::sqrt(0.5)}) <= 1e-12);
  }
  SUBCASE("errors") {
    expect_error(ErrorCode::InvalidArgument, [] { config_from_five_angles(regular_five(), 0); });
    expect_error(ErrorCode::UnrealizableTriple,
                 [] { config_from_five_angles({deg(10), deg(170), deg(10), deg(10), deg(10)}, 1); });
  }
  SUBCASE("round trip on canonical configurations") {
    Rng rng(55);
    int tested = 0;
    while (tested < 500) {
      const auto u = random_directions(rng);
      if (std::abs(dot(u[0].vec(), u[1].vec())) > 0.99) continue;
      const auto frame = canonical_frame(u);
      const int branch = resolve_branch(frame);
      if (branch == 0) continue;
      ++tested;
      const auto rebuilt = config_from_five_angles(five_angles(frame.u), branch);
      for (std::size_t i = 0; i < 4; ++i) CHECK(norm(rebuilt.u[i].vec() - frame.u[i].vec()) <= 1e-9);
    }
  }
}

TEST_CASE("ft_substitution_residual") {
  const double a = testing::kRegularAngle;
  CHECK(ft_substitution_residual(a, a) < 1e-9);
  expect_error(ErrorCode::InfeasiblePair, [] { ft_substitution_residual(std::numbers::pi / 2, std::numbers::pi / 2); });
  expect_error(ErrorCode::InfeasiblePair, [] { ft_substitution_residual(0.1, 0.1); });
  expect_error(ErrorCode::InfeasiblePair, [] { ft_substitution_residual(0.0, 1.0); });

  SUBCASE("balanced quadruples satisfy the relation") {
    Rng rng(77);
    int tested = 0;
    while (tested < 300) {
      const auto u = balanced_directions(rng);
      if (!u) continue;
      const auto s = angle_sextuple(*u);
      if (std::sin(s.a102) < 0.1) continue;
      ++tested;
      CHECK(ft_substitution_residual(s.a102, s.a203) < 1e-6);
    }
  }
  SUBCASE("vanishes on every feasible pair") {
    // With cos a104 = cos a203 and the cosine sum, |u1 + u2 + u3|^2 = 1, so
    // u4 = -(u1 + u2 + u3) always completes a balanced quadruple.
    int feasible = 0;
    for (int i = 1; i < 90; ++i) {
      for (int j = 1; j < 90; ++j) {
        const double a102 = deg(2.0 * i);
        const double a203 = deg(2.0 * j);
        try {
          const double r = ft_substitution_residual(a102, a203);
          CHECK(r < 1e-9);
          ++feasible;
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::InfeasiblePair);
        }
      }
    }
    CHECK(feasible > 1000);
  }
}
