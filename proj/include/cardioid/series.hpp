#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cardioid {

using cplx = std::complex<double>;

inline constexpr std::size_t default_order = 16;

/// Truncated power series c_0 + c_1 z + ... + c_N z^N with complex coefficients.
class PowerSeries {
public:
  explicit PowerSeries(std::size_t order = default_order) : c_(order + 1) {}

  PowerSeries(std::size_t order, std::initializer_list<cplx> head) : c_(order + 1) {
    if (head.size() > c_.size())
      throw std::invalid_argument("PowerSeries: more coefficients than order+1");
    std::size_t k = 0;
    for (const cplx& v : head) c_[k++] = v;
  }

  static PowerSeries from_coeffs(std::span<const cplx> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("PowerSeries: empty coefficient list");
    PowerSeries s(coeffs.size() - 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) s.c_[k] = coeffs[k];
    return s;
  }

  static PowerSeries identity(std::size_t order) {
    PowerSeries s(order);
    if (order >= 1) s.c_[1] = 1.0;
    return s;
  }

  std::size_t order() const noexcept { return c_.size() - 1; }
  std::span<const cplx> coeffs() const noexcept { return c_; }

  const cplx& operator[](std::size_t k) const { return c_.at(k); }
  cplx& operator[](std::size_t k) { return c_.at(k); }

  /// Copy truncated (or zero-extended) to a new order.
  PowerSeries resized(std::size_t order) const {
    PowerSeries s(order);
    for (std::size_t k = 0; k <= std::min(order, this->order()); ++k) s.c_[k] = c_[k];
    return s;
  }

  cplx evaluate(cplx z) const {
    cplx acc = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    require_same(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    require_same(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  PowerSeries& operator*=(cplx s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  void require_same(const PowerSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("PowerSeries: mismatched orders");
  }

private:
  std::vector<cplx> c_;
};

inline PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
inline PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
inline PowerSeries operator*(PowerSeries a, cplx s) { return a *= s; }
inline PowerSeries operator*(cplx s, PowerSeries a) { return a *= s; }

/// Cauchy product truncated at the shared order.
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  a.require_same(b);
  const std::size_t n = a.order();
  PowerSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == cplx{}) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

namespace detail {

inline constexpr double normalization_tol = 1e-12;

inline void require_normalized(const PowerSeries& f, const char* who) {
  if (f.order() < 1 || std::abs(f[0]) > normalization_tol || std::abs(f[1] - 1.0) > normalization_tol)
    throw std::domain_error(std::string(who) + ": series is not normalized (f0=0, f1=1)");
}

}  // namespace detail

/// exp(a) for a_0 = 0, from k E_k = sum_{j=1..k} j a_j E_{k-j}.
inline PowerSeries exp_series(const PowerSeries& a) {
  if (std::abs(a[0]) != 0.0) throw std::domain_error("exp_series: nonzero constant term");
  const std::size_t n = a.order();
  PowerSeries e(n);
  e[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    cplx s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * e[k - j];
    e[k] = s / static_cast<double>(k);
  }
  return e;
}

/// log(a) for a_0 = 1.
inline PowerSeries log_series(const PowerSeries& a) {
  if (std::abs(a[0] - 1.0) > detail::normalization_tol)
    throw std::domain_error("log_series: constant term must be 1");
  const std::size_t n = a.order();
  PowerSeries l(n);
  for (std::size_t k = 1; k <= n; ++k) {
    cplx s = static_cast<double>(k) * a[k];
    for (std::size_t j = 1; j < k; ++j) s -= static_cast<double>(j) * l[j] * a[k - j];
    l[k] = s / static_cast<double>(k);
  }
  return l;
}

/// a / b; rejects b_0 = 0.
inline PowerSeries divide(const PowerSeries& a, const PowerSeries& b) {
  a.require_same(b);
  if (b[0] == cplx{}) throw std::domain_error("divide: divisor has zero constant term");
  const std::size_t n = a.order();
  PowerSeries q(n);
  for (std::size_t k = 0; k <= n; ++k) {
    cplx s = a[k];
    for (std::size_t j = 1; j <= k; ++j) s -= b[j] * q[k - j];
    q[k] = s / b[0];
  }
  return q;
}

/// f(g(z)) through the shared order; needs g_0 = 0.
inline PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  f.require_same(g);
  if (g[0] != cplx{}) throw std::domain_error("compose: inner series has nonzero constant term");
  const std::size_t n = f.order();
  PowerSeries r(n);
  r[0] = f[n];
  for (std::size_t k = n; k-- > 0;) {
    r = r * g;
    r[0] += f[k];
  }
  return r;
}

/// f(z^m), truncated to the order of f.
inline PowerSeries substitute_power(const PowerSeries& f, std::size_t m) {
  if (m == 0) throw std::invalid_argument("substitute_power: exponent must be positive");
  PowerSeries r(f.order());
  for (std::size_t k = 0; k * m <= f.order(); ++k) r[k * m] = f[k];
  return r;
}

/// z f'(z) / f(z) for normalized f; the result has order N-1.
inline PowerSeries log_derivative(const PowerSeries& f) {
  detail::require_normalized(f, "log_derivative");
  const std::size_t n = f.order() - 1;
  PowerSeries num(n), den(n);
  for (std::size_t k = 0; k <= n; ++k) {
    num[k] = static_cast<double>(k + 1) * f[k + 1];
    den[k] = f[k + 1];
  }
  return divide(num, den);
}

/// f = z exp(int_0^z (p(t)-1)/t dt); the result has order N+1.
inline PowerSeries from_caratheodory(const PowerSeries& p) {
  if (std::abs(p[0] - 1.0) > detail::normalization_tol)
    throw std::domain_error("from_caratheodory: p0 must be 1");
  const std::size_t n = p.order();
  PowerSeries integral(n);
  for (std::size_t k = 1; k <= n; ++k) integral[k] = p[k] / static_cast<double>(k);
  const PowerSeries g = exp_series(integral);
  PowerSeries f(n + 1);
  for (std::size_t k = 0; k <= n; ++k) f[k + 1] = g[k];
  return f;
}

/// Compositional inverse of a normalized f, solved degree by degree.
inline PowerSeries reversion(const PowerSeries& f) {
  detail::require_normalized(f, "reversion");
  const std::size_t n = f.order();
  PowerSeries g = PowerSeries::identity(n);
  for (std::size_t k = 2; k <= n; ++k) {
    const PowerSeries fg = compose(f, g);
    g[k] = -fg[k];
  }
  return g;
}

/// d_k with log(f(z)/z) = 2 sum d_k z^k; d_k sits at index k, order N-1.
inline PowerSeries log_coefficients(const PowerSeries& f) {
  detail::require_normalized(f, "log_coefficients");
  const std::size_t n = f.order() - 1;
  PowerSeries g(n);
  for (std::size_t k = 0; k <= n; ++k) g[k] = f[k + 1];
  PowerSeries d = log_series(g);
  d *= 0.5;
  return d;
}

/// (f(z^m))^{1/m} for normalized f: the m-fold symmetric companion of f.
inline PowerSeries fold_transform(const PowerSeries& f, std::size_t m) {
  detail::require_normalized(f, "fold_transform");
  if (m == 0) throw std::invalid_argument("fold_transform: fold must be positive");
  const std::size_t n = f.order();
  PowerSeries g(n);
  for (std::size_t k = 0; k < n; ++k) g[k] = f[k + 1];
  PowerSeries l = log_series(substitute_power(g, m));
  l *= 1.0 / static_cast<double>(m);
  const PowerSeries h = exp_series(l);
  PowerSeries r(n);
  for (std::size_t k = 0; k < n; ++k) r[k + 1] = h[k];
  return r;
}

}  // namespace cardioid
