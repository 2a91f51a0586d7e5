#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace ftpoint {

struct NelderMeadOptions {
  double initial_step = 0.1;
  double x_tol = 1e-12;  // simplex diameter
  double f_tol = 1e-15;  // spread of function values
  int max_evals = 5000;
};

template <std::size_t N>
struct NelderMeadResult {
  std::array<double, N> x{};
  double f = 0.0;
  int evals = 0;
};

/// Plain Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink 1/2)
/// from an axis-aligned initial simplex around `x0`.
template <std::size_t N, class F>
NelderMeadResult<N> nelder_mead(F&& f, const std::array<double, N>& x0,
                                const NelderMeadOptions& opt = {}) {
  using Point = std::array<double, N>;
  struct Vertex {
    Point x;
    double f;
  };

  int evals = 0;
  auto eval = [&](const Point& x) {
    ++evals;
    return f(x);
  };

  std::array<Vertex, N + 1> s;
  s[0] = {x0, eval(x0)};
  for (std::size_t k = 0; k < N; ++k) {
    Point x = x0;
    x[k] += opt.initial_step;
    s[k + 1] = {x, eval(x)};
  }

  auto lerp = [](const Point& a, const Point& b, double t) {
    // a + t (b - a)
    Point r;
    for (std::size_t k = 0; k < N; ++k) r[k] = a[k] + t * (b[k] - a[k]);
    return r;
  };

  while (evals < opt.max_evals) {
    std::stable_sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });

    double diam = 0.0;
    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t k = 0; k < N; ++k) diam = std::max(diam, std::abs(s[i].x[k] - s[0].x[k]));
    if (diam <= opt.x_tol && s[N].f - s[0].f <= opt.f_tol) break;

    Point centroid{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) centroid[k] += s[i].x[k] / static_cast<double>(N);

    const Point xr = lerp(centroid, s[N].x, -1.0);
    const double fr = eval(xr);
    if (fr < s[0].f) {
      const Point xe = lerp(centroid, s[N].x, -2.0);
      const double fe = eval(xe);
      s[N] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < s[N - 1].f) {
      s[N] = {xr, fr};
    } else {
      const bool outside = fr < s[N].f;
      const Point xc = outside ? lerp(centroid, xr, 0.5) : lerp(centroid, s[N].x, 0.5);
      const double fc = eval(xc);
      if (fc < (outside ? fr : s[N].f)) {
        s[N] = {xc, fc};
      } else {
        for (std::size_t i = 1; i <= N; ++i) {
          s[i].x = lerp(s[0].x, s[i].x, 0.5);
          s[i].f = eval(s[i].x);
        }
      }
    }
  }

  const auto best = std::min_element(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  return {best->x, best->f, evals};
}

}  // namespace ftpoint
