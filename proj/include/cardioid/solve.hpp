#pragma once

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cardioid {

inline constexpr double default_root_tol = 1e-12;
inline constexpr double default_refine_tol = 1e-8;
inline constexpr std::size_t default_subdivisions = 512;

struct Bracket {
  double lo, hi, f_lo, f_hi;
};

struct RootResult {
  double x;
  double residual;
  std::size_t iterations;
};

template <class Location>
struct MaxResult {
  Location location;
  double value;
  double cell_size;
};

using Max1d = MaxResult<double>;
using Max2d = MaxResult<std::pair<double, double>>;

struct Rect {
  double x_lo, x_hi, y_lo, y_hi;
};

template <class F>
Bracket make_bracket(F&& f, double lo, double hi) {
  return {lo, hi, f(lo), f(hi)};
}

/// Bracketed root by TOMS 748; the result never leaves [lo, hi].
template <class F>
RootResult find_root(F&& f, const Bracket& b, double tol = default_root_tol) {
  if (!(b.lo < b.hi) || !(tol > 0.0) || !std::isfinite(b.f_lo) || !std::isfinite(b.f_hi) ||
      b.f_lo * b.f_hi > 0.0)
    throw std::invalid_argument("find_root: invalid bracket");
  if (b.f_lo == 0.0) return {b.lo, 0.0, 0};
  if (b.f_hi == 0.0) return {b.hi, 0.0, 0};

  std::uintmax_t iters = 200;
  auto width_tol = [tol](double a, double c) { return std::abs(c - a) <= tol; };
  const auto [a, c] =
      boost::math::tools::toms748_solve(f, b.lo, b.hi, b.f_lo, b.f_hi, width_tol, iters);

  double best = a, best_f = f(a);
  for (double x : {c, 0.5 * (a + c)}) {
    const double fx = f(x);
    if (std::abs(fx) < std::abs(best_f)) best = x, best_f = fx;
  }
  return {best, best_f, static_cast<std::size_t>(iters)};
}

/// One root per sign change of f on a uniform grid, ascending.
template <class F>
std::vector<RootResult> find_all_roots(F&& f, double lo, double hi,
                                       std::size_t subdivisions = default_subdivisions,
                                       double tol = default_root_tol) {
  if (subdivisions < 2) throw std::invalid_argument("find_all_roots: need at least 2 subdivisions");
  std::vector<double> xs(subdivisions + 1), fs(subdivisions + 1);
  for (std::size_t i = 0; i <= subdivisions; ++i) {
    xs[i] = i == subdivisions ? hi : lo + (hi - lo) * static_cast<double>(i) / subdivisions;
    fs[i] = f(xs[i]);
  }
  std::vector<RootResult> roots;
  for (std::size_t i = 0; i <= subdivisions; ++i) {
    if (fs[i] == 0.0) {
      roots.push_back({xs[i], 0.0, 0});
      continue;
    }
    if (i == subdivisions || !std::isfinite(fs[i]) || !std::isfinite(fs[i + 1]) || fs[i + 1] == 0.0)
      continue;
    if ((fs[i] < 0.0) != (fs[i + 1] < 0.0))
      roots.push_back(find_root(f, Bracket{xs[i], xs[i + 1], fs[i], fs[i + 1]}, tol));
  }
  return roots;
}

/// Grid scan followed by Brent refinement of the best cell.
template <class F>
Max1d maximize_1d(F&& f, double lo, double hi, std::size_t grid = 256,
                  double refine_tol = default_refine_tol) {
  if (grid < 16) throw std::invalid_argument("maximize_1d: grid must be at least 16");
  const double h = (hi - lo) / static_cast<double>(grid);
  std::size_t best = 0;
  double best_v = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= grid; ++i) {
    const double v = f(i == grid ? hi : lo + h * static_cast<double>(i));
    if (v > best_v) best_v = v, best = i;
  }
  const double a = best == 0 ? lo : lo + h * static_cast<double>(best - 1);
  const double c = best == grid ? hi : lo + h * static_cast<double>(best + 1);
  std::uintmax_t iters = 500;
  const auto [x, neg] = boost::math::tools::brent_find_minima(
      [&f](double t) { return -f(t); }, a, c, std::numeric_limits<double>::digits / 2, iters);
  const double node_x = best == grid ? hi : lo + h * static_cast<double>(best);
  if (-neg >= best_v) return {x, -neg, refine_tol};
  return {node_x, best_v, refine_tol};
}

namespace detail {

template <class F>
std::pair<std::size_t, std::size_t> scan_2d(F& f, const Rect& r, std::size_t grid, double& best_v) {
  std::pair<std::size_t, std::size_t> best{0, 0};
  best_v = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= grid; ++i) {
    const double x = r.x_lo + (r.x_hi - r.x_lo) * static_cast<double>(i) / grid;
    for (std::size_t j = 0; j <= grid; ++j) {
      const double y = r.y_lo + (r.y_hi - r.y_lo) * static_cast<double>(j) / grid;
      const double v = f(x, y);
      if (v > best_v) best_v = v, best = {i, j};
    }
  }
  return best;
}

}  // namespace detail

/// Grid scan over a rectangle, then repeated re-scans of a shrinking window
/// around the incumbent. Strict improvement keeps the lexicographically
/// smallest node among ties.
template <class F>
Max2d maximize_2d(F&& f, const Rect& rect, std::size_t grid = 64,
                  double refine_tol = default_refine_tol) {
  if (grid < 64) throw std::invalid_argument("maximize_2d: grid must be at least 64");
  if (!(rect.x_lo < rect.x_hi) || !(rect.y_lo < rect.y_hi))
    throw std::invalid_argument("maximize_2d: empty rectangle");
  Rect win = rect;
  double best_v = -std::numeric_limits<double>::infinity();
  double bx = rect.x_lo, by = rect.y_lo;
  double hx = 0.0, hy = 0.0;
  for (int pass = 0; pass < 64; ++pass) {
    double v = 0.0;
    const auto [i, j] = detail::scan_2d(f, win, grid, v);
    hx = (win.x_hi - win.x_lo) / grid;
    hy = (win.y_hi - win.y_lo) / grid;
    if (v > best_v) {
      best_v = v;
      bx = win.x_lo + hx * static_cast<double>(i);
      by = win.y_lo + hy * static_cast<double>(j);
    }
    if (std::max(hx, hy) <= refine_tol) break;
    win = {std::max(rect.x_lo, bx - 2 * hx), std::min(rect.x_hi, bx + 2 * hx),
           std::max(rect.y_lo, by - 2 * hy), std::min(rect.y_hi, by + 2 * hy)};
  }
  return {{bx, by}, best_v, std::max(hx, hy)};
}

}  // namespace cardioid
