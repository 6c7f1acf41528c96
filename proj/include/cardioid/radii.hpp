#pragma once

#include "geometry.hpp"
#include "solve.hpp"
#include "subordination.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cardioid {

struct RadiusQuery {
  std::string name;
  std::map<std::string, double> params{};
};

struct RadiusResult {
  double value = 0.0;
  double residual = 0.0;
  std::optional<double> closed_form;
  bool sharp = false;
  bool saturated = false;
  std::string branch{};
};

struct CatalogEntry {
  std::string name;
  std::string ref;
  std::vector<std::string> params;
  std::map<std::string, double> defaults;
};

inline const std::vector<CatalogEntry>& radius_catalog() {
  static const std::vector<CatalogEntry> entries{
      {"convexity-of-p", "radius of convexity of 1+ze^z", {}, {}},
      {"starlike-alpha-stmt", "S*(alpha) radius, root of 1-re^{-r}=alpha", {"alpha"}, {{"alpha", 0.9}}},
      {"starlike-alpha-proof", "S*(alpha) radius, root of 1-re^{r}=alpha", {"alpha"}, {{"alpha", 0.5}}},
      {"M-beta", "M(beta) radius, root of 1+re^r=beta", {"beta"}, {{"beta", 2.0}}},
      {"strong-gamma", "strongly starlike radius of order gamma", {"gamma"}, {{"gamma", 0.5}}},
      {"convex-alpha", "convex of order alpha radius", {"alpha"}, {{"alpha", 0.0}}},
      {"convexity-numeric", "numerical convexity radius of z exp(e^z-1)", {}, {}},
      {"F-class", "radius of F_n = {f/z in P_n}", {"n"}, {{"n", 1.0}}},
      {"CSn-alpha", "radius of close-to-starlike CS_n(alpha)", {"n", "alpha"}, {{"n", 1.0}, {"alpha", 0.0}}},
      {"Sn-AB", "radius of Janowski starlike S*_n[A,B]", {"n", "A", "B"}, {{"n", 1.0}, {"A", 1.0}, {"B", -1.0}}},
      {"Mn-beta", "radius of M*_n(beta)", {"n", "beta"}, {{"n", 1.0}, {"beta", 2.0}}},
      {"SL-radius", "radius of S*_L (sqrt(1+z))", {}, {}},
      {"SRL-radius", "radius of S*_RL", {}, {}},
      {"Se-radius", "radius of S*_e (e^z)", {}, {}},
      {"SC-radius", "radius of S*_C (1+4z/3+2z^2/3)", {}, {}},
      {"Ss-radius", "radius of S*_s (1+sin z)", {}, {}},
      {"Delta-radius", "radius of Delta* (z+sqrt(1+z^2))", {}, {}},
      {"F1-zero", "radius of F_1(0), ratio class", {"n"}, {{"n", 1.0}}},
      {"F1-half", "radius of F_1(1/2), ratio class", {"n"}, {{"n", 1.0}}},
      {"F2", "radius of F_2, ratio class", {"n"}, {{"n", 1.0}}},
      {"F3", "radius of F_3, ratio class", {"n"}, {{"n", 1.0}}},
      {"S-star-into", "radius of S* (z/(1-z)^2 extremal)", {}, {}},
  };
  return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : radius_catalog())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown radius entry '" + name + "'");
}

/// Lower end of the admissible alpha range for the statement variant.
inline double starlike_alpha_min() {
  const double r = (std::sqrt(5.0) - 3.0) / 2.0;
  return 1.0 + r * std::exp(r);
}

/// The numerical convexity function Re(1 + z f1''/f1') at z = r e^{i theta}.
inline double convexity_function(double r, double theta) {
  const double R = r * std::exp(r * std::cos(theta));
  const double t1 = theta + r * std::sin(theta);
  const double num = 1.0 + r * std::cos(theta) + R * std::cos(t1) + r * R * std::cos(t1 - theta);
  const double den = 1.0 + 2.0 * R * std::cos(t1) + R * R;
  return -num / den + 2.0 + r * std::cos(theta) + R * std::cos(t1);
}

inline double strong_gamma_residual(double r, double gamma) {
  const double s = std::sin(gamma * pi / 2.0);
  const double L = std::log(r / s);
  if (!(r > 0.0) || std::abs(L) > r) return std::numeric_limits<double>::quiet_NaN();
  return std::asin(L / r) + std::sqrt(r * r + L * L) - gamma * pi / 2.0;
}

namespace detail {

struct Spec {
  std::function<double(double)> residual;
  std::optional<double> closed_form;
  bool saturates = false;  // value 1 when the residual has no root in (0, 1]
  std::string branch{};
  std::function<cplx(cplx)> extremal{};
  double contact_angle = pi;
};

inline double param(const RadiusQuery& q, const std::string& key) {
  const auto it = q.params.find(key);
  if (it != q.params.end()) return it->second;
  const auto& d = catalog_entry(q.name).defaults;
  const auto jt = d.find(key);
  if (jt == d.end()) throw std::domain_error(q.name + ": missing parameter " + key);
  return jt->second;
}

inline int fold_param(const RadiusQuery& q) {
  const double n = param(q, "n");
  if (!(n >= 1.0) || n != std::floor(n) || n > 64) throw std::domain_error(q.name + ": n must be a positive integer");
  return static_cast<int>(n);
}

inline void require(bool ok, const RadiusQuery& q, const char* what) {
  if (!ok) throw std::domain_error(q.name + ": " + what);
}

inline Spec spec_for(const RadiusQuery& q) {
  const std::string& name = q.name;
  const double ie = inv_e;
  if (name == "convexity-of-p")
    return {[](double r) { return ((r - 4.0) * r + 4.0) * r - 1.0; }, (3.0 - std::sqrt(5.0)) / 2.0};
  if (name == "starlike-alpha-stmt") {
    const double a = param(q, "alpha");
    require(a > starlike_alpha_min() && a < 1.0, q, "alpha must lie in (alpha_0, 1)");
    return {[a](double r) { return 1.0 - r * std::exp(-r) - a; }, std::nullopt};
  }
  if (name == "starlike-alpha-proof") {
    const double a = param(q, "alpha");
    require(a >= 0.0 && a < 1.0, q, "alpha must lie in [0, 1)");
    return {[a](double r) { return 1.0 - r * std::exp(r) - a; }, std::nullopt};
  }
  if (name == "M-beta") {
    const double b = param(q, "beta");
    require(b > 1.0, q, "beta must exceed 1");
    return {[b](double r) { return 1.0 + r * std::exp(r) - b; }, std::nullopt, true};
  }
  if (name == "strong-gamma") {
    const double g = param(q, "gamma");
    require(g > 0.0 && g <= 1.0, q, "gamma must lie in (0, 1]");
    return {[g](double r) { return strong_gamma_residual(r, g); }, std::nullopt, true};
  }
  if (name == "convex-alpha") {
    const double a = param(q, "alpha");
    require(a >= 0.0 && a < 1.0, q, "alpha must lie in [0, 1)");
    return {[a](double r) {
              const double u = r * std::exp(r);
              return (1.0 - r) * (1.0 - u) * (1.0 - u - a) - u;
            },
            std::nullopt};
  }
  if (name == "F-class") {
    const int n = fold_param(q);
    const double ne = n * e;
    return {[n, ne](double r) {
              const double s = std::pow(r, n);
              return s * s + 2.0 * ne * s - 1.0;
            },
            std::pow(std::sqrt(1.0 + ne * ne) - ne, 1.0 / n), false, "",
            [n](cplx z) {
              const cplx s = std::pow(z, n);
              return 1.0 + 2.0 * double(n) * s / (1.0 - s * s);
            },
            pi / n};
  }
  if (name == "CSn-alpha") {
    const int n = fold_param(q);
    const double a = param(q, "alpha");
    require(a >= 0.0 && a < 1.0, q, "alpha must lie in [0, 1)");
    const double b = 1.0 + n - a;
    const double closed = std::pow(ie / (std::sqrt(b * b - ie * (2.0 * (1.0 - a) - ie)) + b), 1.0 / n);
    return {[n, a, b, ie](double r) {
              const double s = std::pow(r, n);
              return (2.0 - 2.0 * a - ie) * s * s - 2.0 * b * s + ie;
            },
            closed, false, "",
            [n, a](cplx z) {
              const cplx s = std::pow(z, n);
              return (1.0 + 2.0 * (1.0 + n - a) * s + (1.0 - 2.0 * a) * s * s) / (1.0 - s * s);
            },
            pi / n};
  }
  if (name == "Sn-AB") {
    const int n = fold_param(q);
    const double A = param(q, "A"), B = param(q, "B");
    require(B >= -1.0 && B < A && A <= 1.0, q, "need -1 <= B < A <= 1");
    require(B >= 0.0 || A >= 0.0, q, "negative B requires A >= 0");
    auto extremal = [n, A, B](cplx z) {
      const cplx s = std::pow(z, n);
      return (1.0 + A * s) / (1.0 + B * s);
    };
    auto center = [A, B](double s) { return (1.0 - A * B * s * s) / (1.0 - B * B * s * s); };
    auto radius = [A, B](double s) { return (A - B) * s / (1.0 - B * B * s * s); };
    auto left = [n, center, radius, ie](double r) {
      const double s = std::pow(r, n);
      return radius(s) - ((center(s) - 1.0) + ie);
    };
    const double R1 = std::min(1.0, std::pow(ie / (A - (1.0 - ie) * B), 1.0 / n));
    if (B >= 0.0) return {left, R1, true, "R1", extremal, pi / n};
    const double r1 = std::pow(((e * e - 1.0) / (2.0 * e)) / (((e * e + 2.0 * e - 1.0) / (2.0 * e)) * B * B - A * B),
                               1.0 / (2.0 * n));
    if (R1 <= r1) return {left, R1, true, "R1", extremal, pi / n};
    const double R2 = std::min(1.0, std::pow(e / (A - (e + 1.0) * B), 1.0 / n));
    auto right = [n, center, radius](double r) {
      const double s = std::pow(r, n);
      return radius(s) - (e - (center(s) - 1.0));
    };
    return {right, R2, true, "R2", extremal, 0.0};
  }
  if (name == "Mn-beta") {
    const int n = fold_param(q);
    const double b = param(q, "beta");
    require(b > 1.0, q, "beta must exceed 1");
    return {[n, b, ie](double r) {
              const double s = std::pow(r, n);
              return (b - 1.0) * 2.0 * s - (1.0 + (1.0 - 2.0 * b) * s * s) - (ie - 1.0) * (1.0 - s * s);
            },
            std::pow(2.0 * e * (b - 1.0) + 1.0, -1.0 / n), false, "",
            [n, b](cplx z) {
              const cplx s = std::pow(z, n);
              return (1.0 + (1.0 - 2.0 * b) * s) / (1.0 - s);
            },
            0.0};
  }
  if (name == "SL-radius")
    return {[ie](double r) { return 1.0 - std::sqrt(1.0 - r) - ie; }, (2.0 * e - 1.0) / (e * e), false, "",
            [](cplx z) { return std::sqrt(1.0 + z); }};
  if (name == "SRL-radius") {
    const double c = std::sqrt(2.0) - 1.0;
    const double closed = (1.0 + 2.0 * c * e) / (e * e * c * (c + 2.0 * (c + ie) * (c + ie)));
    return {[c, ie](double r) { return 1.0 - std::sqrt(2.0) + c * std::sqrt((1.0 + r) / (1.0 - 2.0 * c * r)) - ie; },
            closed, false, "",
            [c](cplx z) { return std::sqrt(2.0) - c * std::sqrt((1.0 - z) / (1.0 + 2.0 * c * z)); }};
  }
  if (name == "Se-radius")
    return {[ie](double r) { return (1.0 - ie) - std::exp(-r); }, 1.0 - std::log(e - 1.0), false, "",
            [](cplx z) { return std::exp(z); }};
  if (name == "SC-radius")
    return {[ie](double r) { return 4.0 * r / 3.0 - 2.0 * r * r / 3.0 - ie; }, 1.0 - std::sqrt(1.0 - 3.0 / (2.0 * e)),
            false, "", [](cplx z) { return 1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0; }};
  if (name == "Ss-radius")
    return {[ie](double r) { return std::sin(r) - ie; }, std::asin(ie), false, "",
            [](cplx z) { return 1.0 + std::sin(z); }};
  if (name == "Delta-radius")
    return {[ie](double r) { return (1.0 - ie) - (std::sqrt(1.0 + r * r) - r); },
            (2.0 * e - 1.0) / (2.0 * e * (e - 1.0)), false, "",
            [](cplx z) { return z + std::sqrt(1.0 + z * z); }};
  if (name == "F1-zero") {
    const int n = fold_param(q);
    return {[n, ie](double r) {
              const double s = std::pow(r, n);
              return 4.0 * n * s / (1.0 - s * s) - ie;
            },
            std::pow(std::sqrt(4.0 * n * n * e * e + 1.0) - 2.0 * n * e, 1.0 / n), false, "",
            [n](cplx z) {
              const cplx s = std::pow(z, n);
              return 1.0 + 4.0 * double(n) * s / (1.0 - s * s);
            },
            pi / n};
  }
  if (name == "F1-half" || name == "F2") {
    const int n = fold_param(q);
    const double ne = n * e;
    const double closed = std::pow(2.0 / (std::sqrt((3.0 * ne + 2.0) * (3.0 * ne + 2.0) - 8.0 * ne) + 3.0 * ne), 1.0 / n);
    auto residual = [n, ie](double r) {
      const double s = std::pow(r, n);
      return (3.0 * n * s + n * s * s) / (1.0 - s * s) - ie;
    };
    if (name == "F1-half")
      return {residual, closed, false, "",
              [n](cplx z) {
                const cplx s = std::pow(z, n);
                return 1.0 + (3.0 * n * s + double(n) * s * s) / (1.0 - s * s);
              },
              0.0};
    return {residual, closed, false, "",
            [n](cplx z) {
              const cplx s = std::pow(z, n);
              return 1.0 + (3.0 * n * s - double(n) * s * s) / (1.0 - s * s);
            },
            pi / n};
  }
  if (name == "F3") {
    const int n = fold_param(q);
    const double c = n - 1.0 + ie;
    const double closed = std::pow((std::sqrt((n + 1.0) * (n + 1.0) + 4.0 * c * ie) - (1.0 + n)) / (2.0 * c), 1.0 / n);
    return {[n, c, ie](double r) {
              const double s = std::pow(r, n);
              return c * s * s + (n + 1.0) * s - ie;
            },
            closed, false, "",
            [n](cplx z) {
              const cplx s = std::pow(z, n);
              return 1.0 + ((n + 1.0) * s + (1.0 - n) * s * s) / (1.0 - s * s);
            },
            pi / n};
  }
  if (name == "S-star-into")
    return {[ie](double r) { return (1.0 - r) / (1.0 + r) - (1.0 - ie); }, 1.0 / (2.0 * e - 1.0), false, "",
            [](cplx z) { return (1.0 + z) / (1.0 - z); }};
  throw std::invalid_argument("unknown radius entry '" + name + "'");
}

/// Smallest sign change of min over a 720-cell theta grid of the convexity function.
inline RadiusResult convexity_numeric() {
  auto g = [](double r) {
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= 720; ++j) m = std::min(m, convexity_function(r, pi * j / 720.0));
    return m;
  };
  const auto roots = find_all_roots(g, 0.0, 1.0, 100, 1e-6);
  if (roots.empty()) throw std::domain_error("convexity-numeric: no sign change in (0, 1)");
  return {roots.front().x, g(roots.front().x), std::nullopt, false, false, ""};
}

inline RadiusResult solve_value(const RadiusQuery& q, const Spec& s) {
  if (q.name == "convexity-numeric") return convexity_numeric();
  for (const RootResult& r : find_all_roots(s.residual, 0.0, 1.0)) {
    if (r.x > 0.0) return {r.x, r.residual, s.closed_form, false, false, s.branch};
  }
  const double at_one = s.residual(1.0);
  if (s.saturates && std::isfinite(at_one)) return {1.0, at_one, s.closed_form, false, true, s.branch};
  throw std::domain_error(q.name + ": no root in (0, 1]");
}

}  // namespace detail

struct SharpnessReport {
  bool supported = false;
  bool contact_ok = false;
  bool violation_ok = false;
  double radius = 0.0;
  double min_clearance = 0.0;
  double contact_theta = 0.0;
  cplx contact_point{};
};

inline SharpnessReport radius_sharpness(const RadiusQuery& q, double epsilon = 1e-3) {
  if (!(epsilon > 0.0 && epsilon <= 1e-2)) throw std::invalid_argument("radius_sharpness: epsilon must lie in (0, 1e-2]");
  if (q.name == "convexity-numeric") return {};
  const detail::Spec s = detail::spec_for(q);
  if (!s.extremal) return {};
  const RadiusResult r = detail::solve_value(q, s);
  if (r.saturated || r.value >= 1.0) return {};
  const ContactReport c = contact_check(s.extremal, r.value, {s.contact_angle, -s.contact_angle}, epsilon);
  return {true, c.contact_ok, c.violation_ok, r.value, c.min_clearance, c.contact_theta, c.contact_point};
}

inline RadiusResult solve_radius(const RadiusQuery& q) {
  if (q.name == "convexity-numeric") return detail::convexity_numeric();
  const detail::Spec s = detail::spec_for(q);
  RadiusResult r = detail::solve_value(q, s);
  if (s.extremal && !r.saturated) {
    const ContactReport c = contact_check(s.extremal, r.value, {s.contact_angle, -s.contact_angle}, 1e-3);
    r.sharp = c.contact_ok && c.violation_ok;
  }
  return r;
}

struct InclusionThresholds {
  double omega_0, beta_min, gamma_0, parabola_b, ellipse_k;
};

inline InclusionThresholds inclusion_thresholds() {
  const FunctionBounds fb = function_bounds();
  return {fb.min_re, fb.max_re, fb.max_arg / (pi / 2.0), parabola_threshold().b, e - 1.0};
}

/// Sufficient conditions for S*[A,B] to sit inside the cardioid class.
inline bool janowski_included(double A, double B) {
  if (!(B < A) || A > 1.0 || B < -1.0) throw std::domain_error("janowski_included: need -1 < B < A <= 1");
  if (B == -1.0) return false;
  const double w = 1.0 - B * B, u = 1.0 - A * B;
  const bool first = 2.0 * (e - 1.0) * w < 2.0 * e * u && 2.0 * e * u <= (e * e + 2.0 * e - 1.0) * w &&
                     e * (A - B) <= 1.0 - B;
  const bool second = (e * e + 2.0 * e - 1.0) * w <= 2.0 * e * u && 2.0 * e * u < 2.0 * e * (1.0 + e) * w &&
                      A - B <= e * (1.0 + B);
  return first || second;
}

struct GrowthCovering {
  double lower, upper, covering, distortion_upper, modulus_sup;
};

inline GrowthCovering growth_covering(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("growth_covering: r must lie in [0, 1]");
  auto f1 = [](double x) { return x * std::exp(std::exp(x) - 1.0); };
  return {-f1(-r), f1(r), std::exp(inv_e - 1.0), std::exp(std::exp(r) - 1.0) * (1.0 + r * std::exp(r)),
          std::exp(e - 1.0)};
}

enum class SingleCoeffKind { slit_map, one_term, exp_map };

struct SingleCoeffDisk {
  double center, radius;
};

/// Image disk of z f'/f over the unit disk for the single-parameter example maps.
inline SingleCoeffDisk single_coeff_disk(SingleCoeffKind kind, double A, int k = 2) {
  const double a = std::abs(A);
  switch (kind) {
    case SingleCoeffKind::slit_map:
      return {(1.0 + a * a) / (1.0 - a * a), 2.0 * a / (1.0 - a * a)};
    case SingleCoeffKind::one_term:
      return {(1.0 - k * a * a) / (1.0 - a * a), (k - 1.0) * a / (1.0 - a * a)};
    case SingleCoeffKind::exp_map:
      return {1.0, a};
  }
  throw std::invalid_argument("single_coeff_disk: invalid kind");
}

inline double single_coeff_threshold(SingleCoeffKind kind, int k = 2) {
  switch (kind) {
    case SingleCoeffKind::slit_map:
      return 1.0 / (2.0 * e - 1.0);
    case SingleCoeffKind::one_term:
      if (k < 2) throw std::invalid_argument("single_coeff_threshold: k must be at least 2");
      return 1.0 / (e * (k - 1.0) + 1.0);
    case SingleCoeffKind::exp_map:
      return inv_e;
  }
  throw std::invalid_argument("single_coeff_threshold: invalid kind");
}

}  // namespace cardioid
