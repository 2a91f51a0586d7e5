#include "ftpoint/sampling.hpp"

#include <array>

namespace ftpoint {

Rng instance_rng(std::uint64_t base_seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(base_seed), static_cast<std::uint32_t>(base_seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Tetrahedron random_cube_tetrahedron(Rng& rng, double min_volume) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    std::array<Point3, 4> v;
    for (auto& p : v) p = {unit(rng), unit(rng), unit(rng)};
    try {
      auto t = Tetrahedron::create(v);
      if (t.volume() >= min_volume) return t;
    } catch (const Error&) {
    }
  }
}

UnitVector3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> normal;
  for (;;) {
    const Vec3 v{normal(rng), normal(rng), normal(rng)};
    if (norm(v) > 1e-6) return UnitVector3::normalize(v);
  }
}

Directions random_directions(Rng& rng) {
  return {random_unit_vector(rng), random_unit_vector(rng), random_unit_vector(rng),
          random_unit_vector(rng)};
}

std::optional<Directions> balanced_directions(Rng& rng, double tol, int max_iter) {
  Directions u = random_directions(rng);
  for (int it = 0; it < max_iter; ++it) {
    const Vec3 sum = u[0].vec() + u[1].vec() + u[2].vec() + u[3].vec();
    if (norm(sum) < tol) return u;
    const Vec3 mean = 0.25 * sum;
    for (auto& v : u) {
      const Vec3 shifted = v.vec() - mean;
      if (norm(shifted) < 1e-8) return std::nullopt;
      v = UnitVector3::normalize(shifted);
    }
  }
  return std::nullopt;
}

Rotation random_rotation(Rng& rng) {
  std::normal_distribution<double> normal;
  double w = 0, x = 0, y = 0, z = 0, n = 0;
  while (n < 1e-6) {
    w = normal(rng);
    x = normal(rng);
    y = normal(rng);
    z = normal(rng);
    n = std::sqrt(w * w + x * x + y * y + z * z);
  }
  w /= n;
  x /= n;
  y /= n;
  z /= n;
  return {{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
          {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
          {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
}

Point3 random_point_in(const Tetrahedron& t, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::array<double, 4> w;
  double sum = 0.0;
  for (auto& wi : w) sum += (wi = expo(rng));
  Point3 p;
  for (std::size_t i = 0; i < 4; ++i) p += (w[i] / sum) * t[i];
  return p;
}

}  // namespace ftpoint
