#pragma once

// Fermat-Torricelli point of a tetrahedron: the point minimizing the sum of
// the four vertex distances. Either the minimizer is a vertex (its pull norm
// is at most one) or it is the unique interior point where the four unit
// vectors towards the vertices balance.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ftpoint/geom.hpp"

namespace ftpoint {

struct SolverConfig {
  double grad_tol = 1e-10;
  int max_iter = 10000;
  double vertex_eps = 1e-9;    // relative to the longest edge
  double boundary_eps = 1e-9;  // slack on the pull-norm test
  double tie_band = 1e-6;      // |pull_norm - 1| below this raises the near-boundary flag
  std::uint64_t seed = 0;      // oracle restarts
  bool record_trace = false;   // keep the per-iteration objective values
  // Each iteration also tries a Newton step on the objective and keeps it when
  // it beats the Weiszfeld update. Without it convergence crawls whenever the
  // minimizer sits close to a vertex.
  bool newton_acceleration = true;
  std::optional<Point3> start;  // defaults to the centroid

  void validate() const;
};

enum class SolutionKind { Interior, Vertex };

struct Classification {
  SolutionKind kind = SolutionKind::Interior;
  std::optional<int> vertex_index;  // 1..4
  std::array<double, 4> pull_norms{};
  bool near_boundary = false;
};

struct FermatSolution {
  SolutionKind kind = SolutionKind::Interior;
  Point3 point;
  std::optional<int> vertex_index;  // 1..4, present iff kind == Vertex
  double residual = 0.0;            // |sum_i u(point, A_i)|, zero for vertex solutions
  int iterations = 0;
  double objective_value = 0.0;
  bool near_boundary = false;
  std::vector<double> trace;  // objective per iterate, when requested

  friend bool operator==(const FermatSolution&, const FermatSolution&) = default;
};

/// Thrown when the iteration budget is exhausted; carries the best iterate.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const Point3& best, double residual, int iterations);

  const Point3& best_point() const { return best_; }
  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  Point3 best_;
  double residual_;
  int iterations_;
};

/// Sum of the four vertex distances from `p`.
double objective(const Tetrahedron& t, const Point3& p);

/// |sum_{j != i} u(A_j, A_i)| for the vertex labelled `i` (1..4).
double pull_norm(const Tetrahedron& t, int i);

/// |sum_i u(p, A_i)|; `p` must not coincide with a vertex.
double balancing_residual(const Tetrahedron& t, const Point3& p);

/// Barycentric coordinates of `p` with respect to A1..A4.
std::array<double, 4> barycentric(const Tetrahedron& t, const Point3& p);

/// True when every barycentric coordinate is strictly positive.
bool strictly_inside(const Tetrahedron& t, const Point3& p);

/// Interior/vertex case split. Throws ClassificationConflict if more than one
/// vertex passes the vertex test.
Classification classify(const Tetrahedron& t, double boundary_eps = 1e-9,
                        double tie_band = 1e-6);

/// One Weiszfeld update; `y` must not coincide with a vertex.
Point3 weiszfeld_step(const Tetrahedron& t, const Point3& y);

/// Full Newton step on the objective from `y`; nullopt if the Hessian is singular.
std::optional<Point3> newton_step(const Tetrahedron& t, const Point3& y);

FermatSolution solve(const Tetrahedron& t, const SolverConfig& cfg = {});

/// Derivative-free reference minimizer: Nelder-Mead restarted from seeded
/// random points inside the hull. Independent of the Weiszfeld path.
Point3 oracle_solve(const Tetrahedron& t, std::uint64_t seed, int restarts = 20);

}  // namespace ftpoint
