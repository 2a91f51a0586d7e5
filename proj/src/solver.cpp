#include "ftpoint/solver.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "ftpoint/nelder_mead.hpp"

namespace ftpoint {

void SolverConfig::validate() const {
  if (!(grad_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "grad_tol must be positive");
  if (max_iter < 1) throw Error(ErrorCode::InvalidArgument, "max_iter must be at least 1");
  if (!(vertex_eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "vertex_eps must be positive");
  if (!(boundary_eps >= 0.0)) throw Error(ErrorCode::InvalidArgument, "boundary_eps must be non-negative");
}

NonConvergenceError::NonConvergenceError(const Point3& best, double residual, int iterations)
    : Error(ErrorCode::NonConvergence,
            "no convergence after " + std::to_string(iterations) +
                " iterations (residual " + std::to_string(residual) + ")"),
      best_(best),
      residual_(residual),
      iterations_(iterations) {}

double objective(const Tetrahedron& t, const Point3& p) {
  double sum = 0.0;
  for (const auto& a : t.vertices()) sum += distance(p, a);
  return sum;
}

namespace {

// sum_{j != i} u(A_j, A_i), i zero-based
Vec3 pull_vector(const Tetrahedron& t, std::size_t i) {
  Vec3 sum;
  for (std::size_t j = 0; j < 4; ++j)
    if (j != i) sum += unit_vector(t[j], t[i]).vec();
  return sum;
}

void check_label(int i) {
  if (i < 1 || i > 4) throw Error(ErrorCode::InvalidArgument, "vertex label must be in 1..4");
}

}  // namespace

double pull_norm(const Tetrahedron& t, int i) {
  check_label(i);
  return norm(pull_vector(t, static_cast<std::size_t>(i - 1)));
}

double balancing_residual(const Tetrahedron& t, const Point3& p) {
  Vec3 sum;
  for (const auto& a : t.vertices()) sum += unit_vector(p, a).vec();
  return norm(sum);
}

std::array<double, 4> barycentric(const Tetrahedron& t, const Point3& p) {
  const Vec3 e1 = t[1] - t[0];
  const Vec3 e2 = t[2] - t[0];
  const Vec3 e3 = t[3] - t[0];
  const Vec3 q = p - t[0];
  const double det = triple(e1, e2, e3);
  const double l2 = triple(q, e2, e3) / det;
  const double l3 = triple(e1, q, e3) / det;
  const double l4 = triple(e1, e2, q) / det;
  return {1.0 - l2 - l3 - l4, l2, l3, l4};
}

bool strictly_inside(const Tetrahedron& t, const Point3& p) {
  const auto l = barycentric(t, p);
  return std::all_of(l.begin(), l.end(), [](double v) { return v > 0.0; });
}

Classification classify(const Tetrahedron& t, double boundary_eps, double tie_band) {
  Classification c;
  for (int i = 1; i <= 4; ++i) {
    const double pn = pull_norm(t, i);
    c.pull_norms[static_cast<std::size_t>(i - 1)] = pn;
    if (pn <= 1.0 + boundary_eps) {
      if (c.vertex_index)
        throw Error(ErrorCode::ClassificationConflict,
                    "vertices " + std::to_string(*c.vertex_index) + " and " +
                        std::to_string(i) + " both pass the vertex test");
      c.kind = SolutionKind::Vertex;
      c.vertex_index = i;
    }
    if (std::abs(pn - 1.0) < tie_band) c.near_boundary = true;
  }
  return c;
}

Point3 weiszfeld_step(const Tetrahedron& t, const Point3& y) {
  Vec3 num;
  double den = 0.0;
  for (const auto& a : t.vertices()) {
    const double w = 1.0 / distance(y, a);
    num += w * a;
    den += w;
  }
  return num / den;
}

std::optional<Point3> newton_step(const Tetrahedron& t, const Point3& y) {
  // gradient g = -sum u_i, Hessian H = sum (I - u_i u_i^T) / d_i
  Vec3 g;
  double h[3][3] = {};
  for (const auto& a : t.vertices()) {
    const Vec3 diff = a - y;
    const double d = norm(diff);
    const Vec3 u = diff / d;
    g -= u;
    const double c[3] = {u.x, u.y, u.z};
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k) h[r][k] += ((r == k ? 1.0 : 0.0) - c[r] * c[k]) / d;
  }
  const Vec3 c0{h[0][0], h[1][0], h[2][0]};
  const Vec3 c1{h[0][1], h[1][1], h[2][1]};
  const Vec3 c2{h[0][2], h[1][2], h[2][2]};
  const double det = triple(c0, c1, c2);
  if (!(std::abs(det) > 0.0) || !std::isfinite(det)) return std::nullopt;
  // Cramer's rule for H s = g.
  const Vec3 step{triple(g, c1, c2) / det, triple(c0, g, c2) / det, triple(c0, c1, g) / det};
  if (!is_finite(step)) return std::nullopt;
  return y - step;
}

FermatSolution solve(const Tetrahedron& t, const SolverConfig& cfg) {
  cfg.validate();
  const Classification cls = classify(t, cfg.boundary_eps, cfg.tie_band);

  FermatSolution sol;
  sol.near_boundary = cls.near_boundary;
  if (cls.kind == SolutionKind::Vertex) {
    sol.kind = SolutionKind::Vertex;
    sol.vertex_index = cls.vertex_index;
    sol.point = t[static_cast<std::size_t>(*cls.vertex_index - 1)];
    sol.objective_value = objective(t, sol.point);
    if (cfg.record_trace) sol.trace.push_back(sol.objective_value);
    return sol;
  }

  const double scale = t.max_edge();
  const double snap = cfg.vertex_eps * scale;
  Point3 y = cfg.start.value_or(t.centroid());
  Point3 best = y;
  double best_residual = std::numeric_limits<double>::infinity();

  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < 4; ++i)
      if (distance(y, t[i]) < distance(y, t[nearest])) nearest = i;

    if (distance(y, t[nearest]) <= snap) {
      // The iterate sits on a vertex where Weiszfeld is undefined. Either the
      // vertex is optimal or the descent direction leads back out.
      const Vec3 pull = pull_vector(t, nearest);
      if (norm(pull) <= 1.0 + cfg.boundary_eps) {
        sol.kind = SolutionKind::Vertex;
        sol.vertex_index = static_cast<int>(nearest) + 1;
        sol.point = t[nearest];
        sol.iterations = iter;
        sol.objective_value = objective(t, sol.point);
        return sol;
      }
      y = t[nearest] - (10.0 * snap) * UnitVector3::normalize(pull).vec();
      continue;
    }

    const double residual = balancing_residual(t, y);
    if (cfg.record_trace) sol.trace.push_back(objective(t, y));
    if (residual < best_residual) {
      best_residual = residual;
      best = y;
    }
    if (residual <= cfg.grad_tol) {
      sol.kind = SolutionKind::Interior;
      sol.point = y;
      sol.residual = residual;
      sol.iterations = iter;
      sol.objective_value = objective(t, y);
      return sol;
    }
    Point3 next = weiszfeld_step(t, y);
    if (cfg.newton_acceleration) {
      if (const auto candidate = newton_step(t, y);
          candidate && objective(t, *candidate) < objective(t, next))
        next = *candidate;
    }
    y = next;
  }
  throw NonConvergenceError(best, best_residual, cfg.max_iter);
}

Point3 oracle_solve(const Tetrahedron& t, std::uint64_t seed, int restarts) {
  const double scale = t.max_edge();
  auto f = [&](const std::array<double, 3>& x) { return objective(t, {x[0], x[1], x[2]}); };

  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);

  NelderMeadOptions coarse;
  coarse.initial_step = 0.1 * scale;
  coarse.x_tol = 1e-12 * scale;
  coarse.f_tol = 1e-15 * scale;
  coarse.max_evals = 4000;

  Point3 best_x;
  double best_f = std::numeric_limits<double>::infinity();
  auto consider = [&](const Point3& p) {
    const double fp = objective(t, p);
    if (fp < best_f) {
      best_f = fp;
      best_x = p;
    }
  };

  for (int r = 0; r < std::max(restarts, 1); ++r) {
    // Uniform point of the solid simplex: normalized exponential weights.
    std::array<double, 4> w;
    double wsum = 0.0;
    for (auto& wi : w) wsum += (wi = expo(rng));
    Point3 start;
    for (std::size_t i = 0; i < 4; ++i) start += (w[i] / wsum) * t[i];

    auto res = nelder_mead<3>(f, {start.x, start.y, start.z}, coarse);
    // Restarting from the collapsed simplex guards against premature stalls.
    for (int polish = 0; polish < 3; ++polish) {
      NelderMeadOptions fine = coarse;
      fine.initial_step = std::max(1e-4 * scale * std::pow(1e-2, polish), 1e-10 * scale);
      auto again = nelder_mead<3>(f, res.x, fine);
      if (again.f <= res.f) res = again;
    }
    consider({res.x[0], res.x[1], res.x[2]});
  }
  // The minimizer may be a vertex, where the simplex only approaches a kink.
  for (const auto& a : t.vertices()) consider(a);
  return best_x;
}

}  // namespace ftpoint
