#pragma once

// Seeded generators for test corpora. Every instance draws from its own
// engine seeded by (base seed, index) so corpora do not depend on the order
// in which instances are processed.

#include <cstdint>
#include <optional>
#include <random>

#include "ftpoint/geom.hpp"

namespace ftpoint {

using Rng = std::mt19937_64;

Rng instance_rng(std::uint64_t base_seed, std::uint64_t index);

/// Vertices uniform in the unit cube, redrawn until the volume reaches `min_volume`.
Tetrahedron random_cube_tetrahedron(Rng& rng, double min_volume = 1e-3);

UnitVector3 random_unit_vector(Rng& rng);
Directions random_directions(Rng& rng);

/// Four unit vectors summing to zero: repeatedly subtract the mean and
/// renormalize. Returns nullopt if the sum does not drop below `tol`.
std::optional<Directions> balanced_directions(Rng& rng, double tol = 1e-13, int max_iter = 500);

/// Rotation matrix rows drawn uniformly from SO(3).
struct Rotation {
  Vec3 r0, r1, r2;
  Vec3 apply(const Vec3& v) const { return {dot(r0, v), dot(r1, v), dot(r2, v)}; }
};

Rotation random_rotation(Rng& rng);

/// Uniform point of the solid tetrahedron.
Point3 random_point_in(const Tetrahedron& t, Rng& rng);

}  // namespace ftpoint
