#pragma once

#include "geometry.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cardioid {

/// Samples theta -> q(rho e^{i theta}) on a uniform grid of [-pi, pi).
struct BoundarySampler {
  std::function<cplx(cplx)> q;
  double rho = 1.0;
  std::size_t samples = 512;
  std::vector<double> extra_angles{};

  cplx eval(double theta) const { return q(std::polar(rho, theta)); }

  std::vector<double> angles() const {
    std::vector<double> out;
    out.reserve(samples + extra_angles.size());
    for (std::size_t j = 0; j < samples; ++j)
      out.push_back(-pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(samples));
    out.insert(out.end(), extra_angles.begin(), extra_angles.end());
    return out;
  }
};

inline bool is_conjugate_symmetric(const BoundarySampler& s, double tol = 1e-12) {
  for (double t : s.angles()) {
    const cplx a = s.eval(t), b = s.eval(-t);
    if (std::abs(a - std::conj(b)) > tol * std::max(1.0, std::abs(a))) return false;
  }
  return true;
}

struct ImageClearance {
  double min_clearance;
  double theta;
  cplx w;
};

/// Smallest radial clearance of the sampled image; non-finite values count as outside.
inline ImageClearance image_clearance(const BoundarySampler& s) {
  ImageClearance out{std::numeric_limits<double>::infinity(), 0.0, {}};
  for (double t : s.angles()) {
    const cplx w = s.eval(t);
    const double c = std::isfinite(w.real()) && std::isfinite(w.imag())
                         ? clearance(w)
                         : -std::numeric_limits<double>::infinity();
    if (c < out.min_clearance) out = {c, t, w};
  }
  return out;
}

inline bool subordinate_to_cardioid(const BoundarySampler& s, double margin = 0.0) {
  if (s.samples < 512) throw std::invalid_argument("subordinate_to_cardioid: need at least 512 samples");
  if (!(s.rho > 0.0 && s.rho <= 1.0)) throw std::invalid_argument("subordinate_to_cardioid: rho must lie in (0, 1]");
  if (std::abs(s.q(0.0) - 1.0) > 1e-12)
    throw std::domain_error("subordinate_to_cardioid: candidate does not fix 1");
  if (!contains(s.q(0.0), margin)) return false;
  return image_clearance(s).min_clearance >= margin;
}

inline double max_argument(const BoundarySampler& s) {
  double m = 0.0;
  for (double t : s.angles()) m = std::max(m, std::abs(std::arg(s.eval(t))));
  return m;
}

struct ContactReport {
  bool contact_ok;
  bool violation_ok;
  double min_clearance;
  double contact_theta;
  cplx contact_point;
  double violation_clearance;
};

/// Boundary contact at rho and escape at rho (1 + epsilon).
inline ContactReport contact_check(const std::function<cplx(cplx)>& q, double rho,
                                   std::vector<double> contact_angles, double epsilon,
                                   std::size_t samples = 4096, double contact_tol = 1e-6) {
  if (!(epsilon > 0.0 && epsilon <= 1e-2)) throw std::invalid_argument("contact_check: epsilon must lie in (0, 1e-2]");
  BoundarySampler at{q, rho, samples, contact_angles};
  const ImageClearance c = image_clearance(at);
  BoundarySampler beyond{q, rho * (1.0 + epsilon), samples, std::move(contact_angles)};
  const ImageClearance v = image_clearance(beyond);
  return {c.min_clearance >= -contact_tol && c.min_clearance <= contact_tol, v.min_clearance < 0.0,
          c.min_clearance, c.theta, c.w, v.min_clearance};
}

/// min over theta of Re wp(r e^{i theta}) on a uniform grid of [0, pi].
inline double min_re_image(double r, std::size_t grid = 2048) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j <= grid; ++j)
    m = std::min(m, wp(std::polar(r, pi * static_cast<double>(j) / grid)).real());
  return m;
}

/// max over theta of |arg wp(r e^{i theta})| on a uniform grid of [0, pi].
inline double max_arg_image(double r, std::size_t grid = 2048) {
  double m = 0.0;
  for (std::size_t j = 0; j <= grid; ++j)
    m = std::max(m, std::abs(std::arg(wp(std::polar(r, pi * static_cast<double>(j) / grid)))));
  return m;
}

/// sup { r in [0, 1] : min_re_of_image(r) >= alpha } by bisection to 1e-8.
template <class F>
double sharp_radius_oracle(F&& min_re_of_image, double alpha, double tol = 1e-8) {
  if (min_re_of_image(1.0) >= alpha) return 1.0;
  if (min_re_of_image(0.0) < alpha) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (min_re_of_image(mid) >= alpha ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace cardioid
