#pragma once

#include "geometry.hpp"
#include "series.hpp"
#include "solve.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cardioid {

struct BellTable {
  std::vector<std::uint64_t> values;
};

inline BellTable bell_numbers(int n_max) {
  if (n_max < 0 || n_max > 20) throw std::invalid_argument("bell_numbers: n_max must lie in [0, 20]");
  std::vector<std::uint64_t> B{1};
  std::vector<std::uint64_t> row{1};  // binomial row C(n, .)
  for (int n = 0; n < n_max; ++n) {
    std::uint64_t next = 0;
    for (int k = 0; k <= n; ++k) next += row[k] * B[k];
    B.push_back(next);
    std::vector<std::uint64_t> up(row.size() + 1, 1);
    for (std::size_t k = 1; k < row.size(); ++k) up[k] = row[k - 1] + row[k];
    row = std::move(up);
  }
  return {B};
}

/// Series of wp(z^n) = 1 + z^n exp(z^n) through the given order.
inline PowerSeries wp_power_series(std::size_t n, std::size_t order) {
  PowerSeries p(order);
  p[0] = 1.0;
  double fact = 1.0;
  for (std::size_t j = 0; n * (j + 1) <= order; ++j) {
    if (j > 0) fact *= static_cast<double>(j);
    p[n * (j + 1)] = 1.0 / fact;
  }
  return p;
}

/// Coefficients of f_n(z) = z exp((e^{z^n} - 1)/n), the fold-n extremal.
inline PowerSeries extremal_coeffs(int n, std::size_t order) {
  if (n < 1) throw std::invalid_argument("extremal_coeffs: fold must be positive");
  if (order < static_cast<std::size_t>(n) + 1) throw std::invalid_argument("extremal_coeffs: order must be at least n+1");
  return from_caratheodory(wp_power_series(static_cast<std::size_t>(n), order - 1));
}

using Carath4 = std::array<cplx, 4>;
using Coeffs5 = std::array<cplx, 5>;

/// b_1..b_5 from p_1..p_4 for z f'/f = wp((p-1)/(p+1)).
inline Coeffs5 caratheodory_to_coeffs(const Carath4& p) {
  const cplx p1 = p[0], p2 = p[1], p3 = p[2], p4 = p[3];
  return {1.0, p1 / 2.0, (p2 + p1 * p1 / 2.0) / 4.0, (p3 + 3.0 * p1 * p2 / 4.0) / 6.0,
          (std::pow(p1, 4) / 48.0 + p2 * p2 / 4.0 + 2.0 * p1 * p3 / 3.0 - p1 * p1 * p2 / 8.0 + p4) / 8.0};
}

/// p_1..p_4 of a Caratheodory function from (p_1, zeta, eta, xi).
inline Carath4 caratheodory_tuple(double p1, cplx zeta, cplx eta, cplx xi) {
  const double t = 4.0 - p1 * p1;
  const double a = 1.0 - std::norm(zeta);
  const cplx p2 = (p1 * p1 + zeta * t) / 2.0;
  const cplx p3 = (p1 * p1 * p1 + 2.0 * p1 * zeta * t - p1 * zeta * zeta * t + 2.0 * t * a * eta) / 4.0;
  const cplx p4 = (std::pow(p1, 4) + t * zeta * (p1 * p1 * (zeta * zeta - 3.0 * zeta + 3.0) + 4.0 * zeta) -
                   4.0 * t * a * (p1 * (zeta - 1.0) * eta + std::conj(zeta) * eta * eta - (1.0 - std::norm(eta)) * xi)) /
                  8.0;
  return {p1, p2, p3, p4};
}

inline double fekete_szego_bound(double mu) { return 0.5 * std::max(1.0, 2.0 * std::abs(mu - 1.0)); }

/// Piecewise inverse-coefficient bound in its original form: 3-mu, 1/2, mu-3.
inline double inverse_fs_bound(double mu) {
  if (mu <= 2.5) return 3.0 - mu;
  if (mu <= 3.5) return 0.5;
  return mu - 3.0;
}

/// Bound from the identity |A_3 - mu A_2^2| = |b_3 - (2-mu) b_2^2|.
inline double inverse_fs_sharp_bound(double mu) { return fekete_szego_bound(2.0 - mu); }

/// Sharp bounds on |b_k| for k = 1..5.
inline double coefficient_bound(int k) {
  switch (k) {
    case 1: case 2: case 3: return 1.0;
    case 4: return 5.0 / 6.0;
    case 5: return 5.0 / 8.0;
    default: throw std::invalid_argument("coefficient_bound: k must lie in [1, 5]");
  }
}

inline constexpr double hankel22_bound = 0.25;

/// q x q Hankel determinant of b_n .. b_{n+2(q-1)}, with b_1 read as 1.
inline cplx hankel(const PowerSeries& coeffs, int q, int n) {
  if (q < 1 || n < 1) throw std::invalid_argument("hankel: q and n must be positive");
  if (static_cast<std::size_t>(n + 2 * (q - 1)) > coeffs.order())
    throw std::invalid_argument("hankel: not enough coefficients");
  auto b = [&](int k) { return k == 1 ? cplx{1.0} : coeffs[static_cast<std::size_t>(k)]; };
  std::vector<std::vector<cplx>> m(q, std::vector<cplx>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) m[i][j] = b(n + i + j);
  cplx det = 1.0;
  for (int c = 0; c < q; ++c) {
    int piv = c;
    for (int r = c + 1; r < q; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (m[piv][c] == cplx{}) return 0.0;
    if (piv != c) std::swap(m[piv], m[c]), det = -det;
    det *= m[c][c];
    for (int r = c + 1; r < q; ++r) {
      const cplx f = m[r][c] / m[c][c];
      for (int j = c; j < q; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

inline PowerSeries coeffs_series(const Coeffs5& b) {
  PowerSeries s(5);
  for (std::size_t k = 0; k < 5; ++k) s[k + 1] = b[k];
  return s;
}

inline bool in_psi_region(double mu, double nu) {
  const double m = std::abs(mu);
  const bool d8 = m >= 0.5 && m <= 2.0 && nu >= -2.0 / 3.0 * (m + 1.0) &&
                  nu <= 4.0 / 27.0 * std::pow(m + 1.0, 3) - (m + 1.0);
  const bool d9 = m >= 2.0 && nu >= -2.0 / 3.0 * (m + 1.0) && nu <= 2.0 * m * (m + 1.0) / (mu * mu + 2.0 * m + 4.0);
  return d8 || d9;
}

inline double psi_bound(double mu, double nu) {
  if (!in_psi_region(mu, nu)) throw std::domain_error("psi_bound: (mu, nu) outside the disclosed regions");
  const double m = std::abs(mu);
  return 2.0 / 3.0 * (m + 1.0) * std::sqrt((m + 1.0) / (3.0 * (1.0 + nu + m)));
}

struct FunctionalResult {
  double value;
  double bound;
  std::string attained_at;
};

/// f with z f'/f = wp(omega) through the given order (omega has order-1).
inline PowerSeries from_schwarz(const PowerSeries& omega) {
  return from_caratheodory(compose(wp_power_series(1, omega.order()), omega));
}

inline FunctionalResult b2b3_minus_b4(std::size_t order = default_order) {
  const double s = std::sqrt(0.4);
  PowerSeries num(order), den(order);
  num[1] = s;
  num[2] = -1.0;
  den[0] = 1.0;
  den[1] = -s;
  const PowerSeries f = from_schwarz(divide(num, den));
  const double value = std::abs(f[2] * f[3] - f[4]);
  return {value, psi_bound(2.0, -0.5) / 3.0, "omega(z) = z(sqrt(2/5) - z)/(1 - sqrt(2/5) z)"};
}

/// The four coefficient functions of H_3(1) after substituting the parametrized Caratheodory tuple,
/// re-derived so that their sum matches the direct determinant.
struct Upsilon {
  cplx u1, u2, u3, u4;
};

inline Upsilon h3_upsilon(double p, cplx z, cplx eta) {
  const double t = 4.0 - p * p, p2 = p * p, p4 = p2 * p2;
  const double a = 1.0 - std::norm(z);
  const cplx z2 = z * z, z3 = z2 * z, z4 = z3 * z;
  const cplx u1 = -4.0 * p4 * p2 + t * (t * (-25.0 * p2 * z2 - 5.0 * p2 * z3 + 2.0 * p2 * z4 + 36.0 * z3) +
                                        5.0 * p4 * z - 16.0 * p4 * z2);
  const cplx u2 = t * a * (t * (-8.0 * p * z2 - 8.0 * p * z) + 32.0 * p2 * p);
  const cplx u3 = -t * t * a * (64.0 + 8.0 * std::norm(z));
  const cplx u4 = 72.0 * t * t * a * (1.0 - std::norm(eta)) * z;
  return {u1, u2, u3, u4};
}

inline cplx h3_components(double p1, cplx zeta, cplx eta, cplx xi) {
  if (!(p1 >= 0.0 && p1 <= 2.0) || std::abs(zeta) > 1.0 || std::abs(eta) > 1.0 || std::abs(xi) > 1.0)
    throw std::domain_error("h3_components: parameters outside their domains");
  const Upsilon u = h3_upsilon(p1, zeta, eta);
  return (u.u1 + u.u2 * eta + u.u3 * eta * eta + u.u4 * xi) / 9216.0;
}

/// H_3(1) through the Caratheodory tuple, the coefficient relations and the determinant.
inline cplx h3_direct(double p1, cplx zeta, cplx eta, cplx xi) {
  return hankel(coeffs_series(caratheodory_to_coeffs(caratheodory_tuple(p1, zeta, eta, xi))), 3, 1);
}

/// Majorant terms of the rectangle maximization in their original form.
struct Majorant {
  double f1, f2, f3, f4;
};

inline Majorant h3_majorant(double p, double x) {
  const double t = 4.0 - p * p, p2 = p * p, p4 = p2 * p2;
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  return {4.0 * p4 * p2 + t * (t * (25.0 * p2 * x2 + 19.0 * p2 * x3 + 2.0 * p2 * x4 + 36.0 * x3) + 5.0 * p4 * x +
                               16.0 * p4 * x2 + 24.0 * p2 * x3),
          t * (1.0 - x2) * (t * (80.0 * p * x + 64.0 * p * x2) + 32.0 * p2 * p), t * t * (1.0 - x2) * (64.0 + 8.0 * x2),
          72.0 * t * t * x * (1.0 - x2) * (1.0 - x2)};
}

inline double h3_F(double p, double x, double y) {
  const Majorant m = h3_majorant(p, x);
  return m.f1 + m.f2 * y + m.f3 * y * y + m.f4;
}

inline double h3_G(double p, double x) { return h3_F(p, x, 1.0); }

inline double h3_g1(double p) {
  return 1024.0 - 512.0 * p * p + 128.0 * std::pow(p, 3) + 64.0 * std::pow(p, 4) - 32.0 * std::pow(p, 5) +
         4.0 * std::pow(p, 6);
}
inline double h3_g2(double p) { return 576.0 + 544.0 * p * p - 272.0 * std::pow(p, 4) + 29.0 * std::pow(p, 6); }
inline double h3_g3(double x) { return 1024.0 - 896.0 * x * x + 576.0 * std::pow(x, 3) - 128.0 * std::pow(x, 4); }

/// Triangle-inequality majorant of the re-derived Upsilon terms, maximized over |eta| = y.
inline double h3_corrected_majorant(double p, double x) {
  const double t = 4.0 - p * p, p2 = p * p, p4 = p2 * p2;
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  const double f1 = 4.0 * p4 * p2 + t * (t * (25.0 * p2 * x2 + 5.0 * p2 * x3 + 2.0 * p2 * x4 + 36.0 * x3) +
                                         5.0 * p4 * x + 16.0 * p4 * x2);
  const double f2 = t * (1.0 - x2) * (t * (8.0 * p * x2 + 8.0 * p * x) + 32.0 * p2 * p);
  const double f3 = t * t * (1.0 - x2) * (64.0 + 8.0 * x2);
  const double f4 = 72.0 * t * t * x * (1.0 - x2);
  auto F = [&](double y) { return f1 + f2 * y + f3 * y * y + f4 * (1.0 - y * y); };
  double best = std::max(F(0.0), F(1.0));
  const double curv = f3 - f4;
  if (curv < 0.0) {
    const double y = -f2 / (2.0 * curv);
    if (y > 0.0 && y < 1.0) best = std::max(best, F(y));
  }
  return best;
}

struct H3CaseReport {
  double g1_max, g1_argmax;
  double g2_max, g2_argmax, g2_p0_closed, g2_at_p0_closed;
  double g3_max, g3_argmax;
  double g_p0_max, g_p0_argmax;  // max over x of G(0, x)
  double g_p2_max;               // max over x of G(2, x)
  double interior_max, interior_p, interior_x;
};

struct H3Bound {
  double bound;
  double g_max;
  double p, x;
  H3CaseReport cases;
  double corrected_majorant_bound;
};

inline H3Bound h3_upper_bound(std::size_t grid = 256, double refine_tol = default_refine_tol) {
  if (grid < 64) throw std::invalid_argument("h3_upper_bound: grid must be at least 64");
  const Max2d g = maximize_2d(h3_G, Rect{0.0, 2.0, 0.0, 1.0}, grid, refine_tol);
  H3CaseReport c{};
  const Max1d m1 = maximize_1d(h3_g1, 0.0, 2.0, grid, refine_tol);
  c.g1_max = m1.value, c.g1_argmax = m1.location;
  const Max1d m2 = maximize_1d(h3_g2, 0.0, 2.0, grid, refine_tol);
  c.g2_max = m2.value, c.g2_argmax = m2.location;
  c.g2_p0_closed = 2.0 * std::sqrt((68.0 - 7.0 * std::sqrt(34.0)) / 87.0);
  c.g2_at_p0_closed = h3_g2(c.g2_p0_closed);
  const Max1d m3 = maximize_1d(h3_g3, 0.0, 1.0, grid, refine_tol);
  c.g3_max = m3.value, c.g3_argmax = m3.location;
  const Max1d m0 = maximize_1d([](double x) { return h3_G(0.0, x); }, 0.0, 1.0, grid, refine_tol);
  c.g_p0_max = m0.value, c.g_p0_argmax = m0.location;
  c.g_p2_max = maximize_1d([](double x) { return h3_G(2.0, x); }, 0.0, 1.0, grid, refine_tol).value;
  const Max2d in = maximize_2d(h3_G, Rect{1e-9, 2.0 - 1e-9, 1e-9, 1.0 - 1e-9}, grid, refine_tol);
  c.interior_max = in.value, c.interior_p = in.location.first, c.interior_x = in.location.second;
  const Max2d cm = maximize_2d(h3_corrected_majorant, Rect{0.0, 2.0, 0.0, 1.0}, grid, refine_tol);
  return {g.value / 9216.0, g.value, g.location.first, g.location.second, c, cm.value / 9216.0};
}

inline FunctionalResult nfold_h3(int fold, std::size_t order = default_order) {
  if (fold != 2 && fold != 3) throw std::invalid_argument("nfold_h3: fold must be 2 or 3");
  const PowerSeries f1 = extremal_coeffs(1, order);
  const PowerSeries w = fold_transform(f1, static_cast<std::size_t>(fold));
  const double value = std::abs(hankel(w, 3, 1));
  if (fold == 3) {
    const double b2 = coefficient_bound(2);
    return {value, b2 * b2 / 9.0, "(f1(z^3))^(1/3)"};
  }
  auto g = [](double p) { return (3.0 * p * p * p - 4.0 * p * p + 4.0 * p) / 256.0; };
  return {value, maximize_1d(g, 0.0, 2.0, 256).value, "(f1(z^2))^(1/2)"};
}

struct SumInequality {
  double lhs, rhs;
  bool ok;
  bool tail_ok;
};

inline SumInequality sum_inequality_check(const PowerSeries& f) {
  detail::require_normalized(f, "sum_inequality_check");
  if (f.order() < 8) throw std::invalid_argument("sum_inequality_check: order must be at least 8");
  const double alpha = (1.0 + e) * (1.0 + e);
  double lhs = 0.0;
  bool cor = true;
  for (std::size_t k = 2; k <= f.order(); ++k) {
    const double k2 = static_cast<double>(k * k);
    lhs += (k2 - alpha) * std::norm(f[k]);
    if (k >= 4 && std::abs(f[k]) > std::sqrt((alpha - 1.0) / (k2 - alpha))) cor = false;
  }
  return {lhs, alpha - 1.0, lhs <= alpha - 1.0, cor};
}

inline double h3_triangle_bound() {
  const double b3 = fekete_szego_bound(0.0);
  const double b4 = coefficient_bound(4), b5 = coefficient_bound(5);
  return b3 * hankel22_bound + b4 * b2b3_minus_b4().bound + b5 * fekete_szego_bound(1.0);
}

/// Deterministic uniform doubles in [0, 1) from a 64-bit Mersenne twister.
class UniformSource {
public:
  explicit UniformSource(std::uint64_t seed) : gen_(seed) {}
  double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  cplx in_disk() {
    const double r = std::sqrt(next()), a = 2.0 * pi * next();
    return std::polar(r, a);
  }

private:
  std::mt19937_64 gen_;
};

struct AuditLine {
  std::string functional;
  double max_observed;
  double bound;
  bool asserted;  // false for monitored conjectures and informational lines
};

struct AuditReport {
  std::uint64_t seed;
  std::size_t samples;
  std::vector<AuditLine> lines;
};

/// Seeded sample of the class: parametrized Caratheodory tuples for b_2..b_5 functionals, and
/// Schwarz functions lambda z B(z) with B a random Blaschke product for the
/// higher coefficients and logarithmic coefficients.
inline AuditReport coefficient_audit(std::uint64_t seed, std::size_t samples = 10000) {
  UniformSource u(seed);
  double mb[6] = {}, h22 = 0, b2b3 = 0, fs = 0, h3 = 0, a2 = 0, a3 = 0, a4 = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double p1 = 2.0 * u.next();
    const cplx z = u.in_disk(), eta = u.in_disk(), xi = u.in_disk();
    const Coeffs5 b = caratheodory_to_coeffs(caratheodory_tuple(p1, z, eta, xi));
    for (int k = 2; k <= 5; ++k) mb[k] = std::max(mb[k], std::abs(b[k - 1]));
    h22 = std::max(h22, std::abs(b[1] * b[3] - b[2] * b[2]));
    b2b3 = std::max(b2b3, std::abs(b[1] * b[2] - b[3]));
    fs = std::max(fs, std::abs(b[2] - b[1] * b[1]));
    h3 = std::max(h3, std::abs(hankel(coeffs_series(b), 3, 1)));
    a2 = std::max(a2, std::abs(b[1]));
    a3 = std::max(a3, std::abs(2.0 * b[1] * b[1] - b[2]));
    a4 = std::max(a4, std::abs(5.0 * std::pow(b[1], 3) - 5.0 * b[1] * b[2] + b[3]));
  }

  constexpr std::size_t order = 8;
  const BellTable bell = bell_numbers(static_cast<int>(order));
  double mk[order + 1] = {}, dk = 0.0;
  double fact = 1.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const cplx lambda = u.in_disk();
    const int factors = static_cast<int>(u.next() * 4.0);
    PowerSeries blaschke(order);
    blaschke[0] = lambda;
    for (int j = 0; j < factors; ++j) {
      const cplx a = 0.95 * u.in_disk();
      PowerSeries num(order), den(order);
      num[0] = -a;
      num[1] = 1.0;
      den[0] = 1.0;
      den[1] = -std::conj(a);
      blaschke = blaschke * divide(num, den);
    }
    PowerSeries omega(order - 1);
    for (std::size_t k = 1; k < order; ++k) omega[k] = blaschke[k - 1];
    const PowerSeries f = from_schwarz(omega);
    for (std::size_t k = 2; k <= order; ++k) mk[k] = std::max(mk[k], std::abs(f[k]));
    const PowerSeries d = log_coefficients(f);
    for (std::size_t k = 1; k <= d.order(); ++k) dk = std::max(dk, std::abs(d[k]));
  }

  AuditReport r{seed, samples, {}};
  r.lines.push_back({"|b2|", mb[2], coefficient_bound(2), true});
  r.lines.push_back({"|b3|", mb[3], coefficient_bound(3), true});
  r.lines.push_back({"|b4|", mb[4], coefficient_bound(4), true});
  r.lines.push_back({"|b5|", mb[5], coefficient_bound(5), true});
  r.lines.push_back({"|H2(2)|", h22, hankel22_bound, true});
  r.lines.push_back({"|b2b3-b4|", b2b3, b2b3_minus_b4().bound, true});
  r.lines.push_back({"|b3-b2^2|", fs, fekete_szego_bound(1.0), true});
  r.lines.push_back({"|H3(1)|", h3, h3_upper_bound(64).bound, true});
  r.lines.push_back({"|H3(1)| vs 1/9", h3, 1.0 / 9.0, false});
  r.lines.push_back({"|A2|", a2, 1.0, true});
  r.lines.push_back({"|A3|", a3, 1.0, true});
  r.lines.push_back({"|A4|", a4, 5.0 / 6.0, false});
  r.lines.push_back({"|d_k|", dk, 0.5, true});
  for (std::size_t k = 2; k <= order; ++k) {
    fact *= static_cast<double>(k - 1);
    r.lines.push_back({"|b" + std::to_string(k) + "| vs B_" + std::to_string(k - 1) + "/" + std::to_string(k - 1) + "!",
                       mk[k], static_cast<double>(bell.values[k - 1]) / fact, false});
  }
  return r;
}

}  // namespace cardioid
