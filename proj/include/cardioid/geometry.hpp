#pragma once

#include "series.hpp"
#include "solve.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cardioid {

inline constexpr double e = std::numbers::e;
inline constexpr double inv_e = 1.0 / std::numbers::e;
inline constexpr double pi = std::numbers::pi;

/// Left and right ends of the real trace of the domain.
inline constexpr double left_vertex = 1.0 - inv_e;
inline constexpr double right_vertex = 1.0 + e;

inline cplx wp(cplx z) { return 1.0 + z * std::exp(z); }

inline double polar_angle(double theta) { return theta + std::sin(theta); }
inline double polar_radius(double theta) { return std::exp(std::cos(theta)); }

inline cplx boundary_point(double theta) {
  const double r = polar_radius(theta), psi = polar_angle(theta);
  return {1.0 + r * std::cos(psi), r * std::sin(psi)};
}
inline double boundary_re(double theta) { return boundary_point(theta).real(); }
inline double boundary_im(double theta) { return boundary_point(theta).imag(); }

/// theta in [0, pi] with theta + sin(theta) = phi, for phi in [0, pi].
inline double profile_theta(double phi) {
  if (phi <= 0.0) return 0.0;
  if (phi >= pi) return pi;
  auto g = [phi](double t) { return polar_angle(t) - phi; };
  return find_root(g, make_bracket(g, 0.0, pi)).x;
}

/// Signed radial gap between w and the boundary along the ray from 1 through w.
inline double clearance(cplx w) {
  const cplx d = w - 1.0;
  const double rho = std::abs(d);
  if (rho == 0.0) return inv_e;
  return polar_radius(profile_theta(std::abs(std::arg(d)))) - rho;
}

/// Closed-domain membership with radial clearance at least `margin`.
/// A negative margin admits points up to |margin| outside the boundary.
inline bool contains(cplx w, double margin = 0.0) {
  if (w == cplx{1.0, 0.0}) return margin <= inv_e;
  return clearance(w) >= margin;
}

struct FunctionBounds {
  double min_re, max_re, max_im, max_arg;
  double theta_re, theta_im, theta_arg;
};

inline FunctionBounds function_bounds() {
  auto re_eq = [](double t) { return 1.5 * t + std::sin(t) - pi; };
  auto im_eq = [](double t) { return 1.5 * t + std::sin(t) - pi / 2; };
  const double t_re = find_root(re_eq, make_bracket(re_eq, 0.0, pi)).x;
  const double t_im = find_root(im_eq, make_bracket(im_eq, 0.0, pi)).x;
  auto arg_abs = [](double t) {
    const cplx w = boundary_point(t);
    return std::abs(std::atan2(w.imag(), w.real()));
  };
  const Max1d m = maximize_1d(arg_abs, 0.0, pi, 1024);
  return {boundary_re(t_re), right_vertex, boundary_im(t_im), m.value, t_re, t_im, m.location};
}

inline double modulus_bound(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("modulus_bound: r must lie in (0, 1]");
  return 1.0 + r * std::exp(r);
}

struct DiskFit {
  double center;
  double radius;
  std::optional<double> theta_a;
};

/// Squared distance from a to the boundary point at angle theta.
inline double disk_distance_sq(double a, double theta) {
  const double r = polar_radius(theta);
  return r * r - 2.0 * (a - 1.0) * r * std::cos(polar_angle(theta)) + (a - 1.0) * (a - 1.0);
}

/// Roots in (0, pi) of e^{cos t} sin(t/2) + (1-a) sin(3t/2 + sin t), the stationary
/// points of disk_distance_sq.
inline std::vector<double> disk_stationary_angles(double a) {
  auto h = [a](double t) {
    return std::exp(std::cos(t)) * std::sin(0.5 * t) + (1.0 - a) * std::sin(1.5 * t + std::sin(t));
  };
  std::vector<double> out;
  for (const RootResult& r : find_all_roots(h, 1e-9, pi - 1e-9, 256)) out.push_back(r.x);
  return out;
}

namespace detail {
inline void require_disk_center(double a) {
  if (!(a > left_vertex && a < right_vertex))
    throw std::domain_error("disk center must lie in (1-1/e, 1+e)");
}
}  // namespace detail

inline DiskFit inner_disk(double a) {
  detail::require_disk_center(a);
  const double split = 1.0 + (e - inv_e) / 2.0;
  if (a <= split) return {a, (a - 1.0) + inv_e, std::nullopt};
  return {a, e - (a - 1.0), std::nullopt};
}

inline DiskFit outer_disk(double a) {
  detail::require_disk_center(a);
  if (a <= (e + inv_e) / 2.0) return {a, 1.0 + e - a, std::nullopt};
  double best = std::max(disk_distance_sq(a, 0.0), disk_distance_sq(a, pi));
  std::optional<double> where;
  for (double t : disk_stationary_angles(a)) {
    const double d = disk_distance_sq(a, t);
    if (d > best) best = d, where = t;
  }
  return {a, std::sqrt(best), where};
}

struct ParabolaThreshold {
  double b;
  double theta_0;
};

inline double parabola_ratio(double theta) {
  const double r = polar_radius(theta), s = std::sin(polar_angle(theta));
  return r * r * s * s / (4.0 * (1.0 + r * std::cos(polar_angle(theta))));
}

/// Stationarity condition whose root in (0, pi) locates the parabola maximum.
inline double parabola_stationarity(double theta) {
  const double r = polar_radius(theta);
  return std::cos(1.5 * theta + std::sin(theta)) * (2.0 + r * std::cos(polar_angle(theta))) +
         r * std::cos(0.5 * theta);
}

inline ParabolaThreshold parabola_threshold() {
  const Max1d m = maximize_1d(parabola_ratio, 0.0, pi, 1024);
  return {m.value, m.location};
}

/// Absolute slack used when a curve is expected to touch the boundary exactly.
inline constexpr double boundary_tol = 1e-12;

inline bool kst_ellipse_included(double k) {
  if (!(k > 1.0)) return false;
  const double k2 = k * k;
  const double x0 = k2 / (k2 - 1.0), u = k / (k2 - 1.0), v = 1.0 / std::sqrt(k2 - 1.0);
  if (x0 - u < left_vertex - boundary_tol || x0 + u > right_vertex + boundary_tol) return false;
  constexpr int samples = 1024;
  for (int j = 0; j < samples; ++j) {
    const double t = 2.0 * pi * j / samples;
    if (!contains({x0 + u * std::cos(t), v * std::sin(t)}, -boundary_tol)) return false;
  }
  return true;
}

struct CurvePoint {
  double t, re, im;
};

inline const std::vector<std::string>& curve_names() {
  static const std::vector<std::string> names{"gamma0", "gamma1", "gamma2", "gamma3", "gamma4",
                                              "gamma5", "gamma6", "gamma7", "gamma8", "gamma9"};
  return names;
}

/// Plot samples of the comparison curves around the cardioid.
inline std::vector<CurvePoint> sample_curve(const std::string& name, std::size_t samples) {
  if (samples < 16) throw std::invalid_argument("sample_curve: need at least 16 samples");
  std::vector<CurvePoint> out;
  out.reserve(samples);
  auto param = [samples](std::size_t j, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(samples - 1);
  };
  auto ellipse = [&](double cx, double ax, double ay) {
    for (std::size_t j = 0; j < samples; ++j) {
      const double t = param(j, -pi, pi);
      out.push_back({t, cx + ax * std::cos(t), ay * std::sin(t)});
    }
  };
  constexpr double span = 3.0;
  if (name == "gamma0") {
    for (std::size_t j = 0; j < samples; ++j) {
      const double t = param(j, -pi, pi);
      const cplx w = boundary_point(t);
      out.push_back({t, w.real(), w.imag()});
    }
  } else if (name == "gamma1" || name == "gamma2") {
    const double x = name == "gamma1" ? function_bounds().min_re : right_vertex;
    for (std::size_t j = 0; j < samples; ++j) {
      const double t = param(j, -span, span);
      out.push_back({t, x, t});
    }
  } else if (name == "gamma3") {
    const double phi = function_bounds().max_arg;
    for (std::size_t j = 0; j < samples; ++j) {
      const double t = param(j, -1.0, 1.0);
      const double s = 4.0 * std::abs(t), ang = t < 0 ? -phi : phi;
      out.push_back({t, s * std::cos(ang), s * std::sin(ang)});
    }
  } else if (name == "gamma4") {
    const double b = parabola_threshold().b;
    for (std::size_t j = 0; j < samples; ++j) {
      const double y = param(j, -span, span);
      out.push_back({y, y * y / (4.0 * b), y});
    }
  } else if (name == "gamma5") {
    const double k = e - 1.0, k2 = k * k;
    ellipse(k2 / (k2 - 1.0), k / (k2 - 1.0), 1.0 / std::sqrt(k2 - 1.0));
  } else if (name == "gamma6") {
    ellipse(1.0 + (e * e - 1.0) / (2.0 * e), (e * e + 1.0) / (2.0 * e), (e * e + 1.0) / (2.0 * e));
  } else if (name == "gamma7") {
    const double r = 1.0 + (e * e - 1.0) / (2.0 * e);
    ellipse((e * e + 1.0) / (2.0 * e), r, r);
  } else if (name == "gamma8") {
    ellipse(1.7052, 2.1074, 1.0731);
  } else if (name == "gamma9") {
    const double B = 1.0 + e, C = 1.0 - inv_e;
    ellipse(B / 2.0, B / 2.0, (e + B * C) / 2.0);
  } else {
    throw std::invalid_argument("sample_curve: unknown curve '" + name + "'");
  }
  return out;
}

}  // namespace cardioid
