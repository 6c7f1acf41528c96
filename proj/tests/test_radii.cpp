#include "oracles.hpp"

#include <cardioid/radii.hpp>
#include <cardioid/subordination.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace cardioid;

namespace {

RadiusResult solve(const std::string& name, std::map<std::string, double> params = {}) {
  return solve_radius({name, std::move(params)});
}

/// Disk {|w - c| < rho} inside the cardioid, judged by dense boundary distance.
bool disk_inside_oracle(double c, double rho) {
  if (!(c > left_vertex && c < right_vertex)) return false;
  return rho <= oracle::boundary_distance(c, 20000).min;
}

}  // namespace

TEST(RadiusCatalog, NamesAndLookup) {
  EXPECT_EQ(radius_catalog().size(), 22u);
  EXPECT_EQ(catalog_entry("Sn-AB").params.size(), 3u);
  EXPECT_THROW(catalog_entry("nope"), std::invalid_argument);
  EXPECT_THROW(solve("nope"), std::invalid_argument);
}

TEST(RadiusCatalog, ReferenceConstants) {
  EXPECT_NEAR(solve("convexity-of-p").value, 0.381966, 1e-6);
  EXPECT_NEAR(solve("convex-alpha", {{"alpha", 0.0}}).value, 0.256707, 1e-6);
  EXPECT_NEAR(solve("F-class", {{"n", 1}}).value, 0.178105, 1e-6);
  EXPECT_NEAR(solve("SL-radius").value, 0.600423, 1e-6);
  EXPECT_NEAR(solve("SRL-radius").value, 0.648826, 1e-6);
  EXPECT_NEAR(solve("Se-radius").value, 0.458675, 1e-6);
  EXPECT_NEAR(solve("SC-radius").value, 0.330536, 1e-6);
  EXPECT_NEAR(solve("Ss-radius").value, 0.376727, 1e-6);
  EXPECT_NEAR(solve("Delta-radius").value, 0.474928, 1e-6);
  EXPECT_NEAR(solve("convexity-numeric").value, 0.599547, 1e-5);
}

TEST(RadiusCatalog, ExactForms) {
  EXPECT_NEAR(solve("convexity-of-p").value, (3 - std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_NEAR(solve("F-class").value, std::sqrt(1 + e * e) - e, 1e-12);
  EXPECT_NEAR(solve("SL-radius").value, (2 * e - 1) / (e * e), 1e-12);
  EXPECT_NEAR(solve("Se-radius").value, 1 - std::log(e - 1), 1e-12);
  EXPECT_NEAR(solve("SC-radius").value, 1 - std::sqrt(1 - 3 / (2 * e)), 1e-12);
  EXPECT_NEAR(solve("Ss-radius").value, std::asin(inv_e), 1e-12);
  EXPECT_NEAR(solve("Delta-radius").value, (2 * e - 1) / (2 * e * (e - 1)), 1e-12);
  EXPECT_NEAR(solve("S-star-into").value, 1 / (2 * e - 1), 1e-12);
  EXPECT_NEAR(solve("Mn-beta", {{"n", 1}, {"beta", 2}}).value, 1 / (2 * e + 1), 1e-12);
  EXPECT_NEAR(solve("F1-zero", {{"n", 1}}).value, std::sqrt(4 * e * e + 1) - 2 * e, 1e-12);
  EXPECT_NEAR(solve("F1-zero", {{"n", 1}}).value, 0.091205, 1e-6);
}

TEST(RadiusCatalog, StarlikeInsertionMatchesDiskCriterion) {
  // (1+z)/(1-z) on |z| = r: real minimum (1-r)/(1+r) reaches 1-1/e at r = 1/(2e-1).
  const double r = solve("S-star-into").value;
  EXPECT_NEAR((1 - r) / (1 + r), 1 - inv_e, 1e-12);
  EXPECT_NEAR(r, 0.225400, 1e-6);
}

TEST(RadiusCatalog, ResidualsVanishAtRoots) {
  for (const CatalogEntry& c : radius_catalog()) {
    const RadiusResult r = solve(c.name);
    if (r.saturated) continue;
    if (c.name == "convexity-numeric")
      EXPECT_LT(std::abs(r.residual), 1e-5) << c.name;
    else
      EXPECT_LT(std::abs(r.residual), 1e-10) << c.name;
    EXPECT_GT(r.value, 0.0);
    EXPECT_LE(r.value, 1.0);
  }
}

TEST(RadiusCatalog, ClosedFormAgreementProperty) {
  for (int n = 1; n <= 5; ++n) {
    for (int j = 0; j < 5; ++j) {
      const double a = 0.18 * j, beta = 1.1 + 0.6 * j;
      const std::map<std::string, std::map<std::string, double>> queries{
          {"F-class", {{"n", n}}},         {"CSn-alpha", {{"n", n}, {"alpha", a}}},
          {"Mn-beta", {{"n", n}, {"beta", beta}}}, {"F1-zero", {{"n", n}}},
          {"F1-half", {{"n", n}}},         {"F2", {{"n", n}}},
          {"F3", {{"n", n}}},              {"Sn-AB", {{"n", n}, {"A", 1.0 - 0.15 * j}, {"B", -0.5 + 0.2 * j}}}};
      for (const auto& [name, params] : queries) {
        const RadiusResult r = solve(name, params);
        ASSERT_TRUE(r.closed_form.has_value()) << name;
        EXPECT_NEAR(r.value, *r.closed_form, 1e-10) << name << " n=" << n << " j=" << j;
      }
    }
  }
}

TEST(RadiusCatalog, JanowskiBranches) {
  const RadiusResult r1 = solve("Sn-AB", {{"n", 1}, {"A", 1}, {"B", -1}});
  EXPECT_EQ(r1.branch, "R1");
  EXPECT_NEAR(r1.value, 1 / (2 * e - 1), 1e-12);
  // With -1 <= B < 0 <= A <= 1 the crossover never falls below R1, so the R2 branch is unreachable.
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j < 20; ++j) {
      const double A = i / 20.0, B = -1.0 + j / 20.0;
      const double R1 = inv_e / (A - (1 - inv_e) * B);
      const double r1 = std::sqrt(((e * e - 1) / (2 * e)) / ((e * e + 2 * e - 1) / (2 * e) * B * B - A * B));
      EXPECT_LT(R1, r1) << A << ' ' << B;
      const RadiusResult r = solve("Sn-AB", {{"n", 1}, {"A", A}, {"B", B}});
      EXPECT_EQ(r.branch, "R1") << A << ' ' << B;
      EXPECT_NEAR(r.value, std::min(1.0, R1), 1e-10);
    }
  const RadiusResult pos = solve("Sn-AB", {{"n", 2}, {"A", 0.9}, {"B", 0.1}});
  EXPECT_EQ(pos.branch, "R1");
  EXPECT_THROW(solve("Sn-AB", {{"A", -0.5}, {"B", -0.9}}), std::domain_error);
  EXPECT_THROW(solve("Sn-AB", {{"A", 0.1}, {"B", 0.5}}), std::domain_error);
}

TEST(RadiusCatalog, SaturationRules) {
  const RadiusResult m = solve("M-beta", {{"beta", 1.0 + e + 0.5}});
  EXPECT_TRUE(m.saturated);
  EXPECT_EQ(m.value, 1.0);
  EXPECT_NEAR(solve("M-beta", {{"beta", 1.0 + e - 1e-9}}).value, 1.0, 1e-8);
  EXPECT_TRUE(solve("strong-gamma", {{"gamma", 0.9}}).saturated);
  EXPECT_FALSE(solve("strong-gamma", {{"gamma", 0.5}}).saturated);
}

TEST(RadiusCatalog, DomainErrors) {
  EXPECT_THROW(solve("M-beta", {{"beta", 1.0}}), std::domain_error);
  EXPECT_THROW(solve("starlike-alpha-stmt", {{"alpha", 0.5}}), std::domain_error);
  EXPECT_THROW(solve("starlike-alpha-proof", {{"alpha", 1.0}}), std::domain_error);
  EXPECT_THROW(solve("F-class", {{"n", 0}}), std::domain_error);
  EXPECT_THROW(solve("F-class", {{"n", 1.5}}), std::domain_error);
  EXPECT_THROW(solve("strong-gamma", {{"gamma", 0.0}}), std::domain_error);
  const double r = (std::sqrt(5.0) - 3.0) / 2.0;
  EXPECT_NEAR(starlike_alpha_min(), 1.0 + r * std::exp(r), 1e-15);
  EXPECT_NEAR(starlike_alpha_min(), 0.739301, 1e-6);
}

TEST(RadiusCatalog, MonotonicityProperty) {
  double prev = 0.0;
  for (int j = 0; j < 25; ++j) {
    const double v = solve("M-beta", {{"beta", 1.05 + 0.12 * j}}).value;
    EXPECT_GE(v, prev);
    prev = v;
  }
  prev = 2.0;
  for (int j = 0; j < 25; ++j) {
    const double v = solve("starlike-alpha-stmt", {{"alpha", 0.745 + 0.01 * j}}).value;
    EXPECT_LE(v, prev);
    prev = v;
  }
  prev = 2.0;
  for (int j = 0; j < 25; ++j) {
    const double v = solve("starlike-alpha-proof", {{"alpha", 0.02 + 0.039 * j}}).value;
    EXPECT_LE(v, prev);
    prev = v;
  }
  prev = 0.0;
  for (int j = 0; j < 25; ++j) {
    const double v = solve("strong-gamma", {{"gamma", 0.2 + 0.032 * j}}).value;
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(RadiusCatalog, StarlikeAlphaOracleProperty) {
  for (int j = 0; j < 25; ++j) {
    const double a = 0.75 + 0.0096 * j;
    const double oracle_r = sharp_radius_oracle([](double r) { return min_re_image(r); }, a);
    EXPECT_NEAR(solve("starlike-alpha-stmt", {{"alpha", a}}).value, oracle_r, 2e-6) << a;
  }
  for (int j = 0; j < 25; ++j) {
    const double a = 0.02 + 0.039 * j;
    const double oracle_r = sharp_radius_oracle([](double r) { return min_re_image(r); }, a);
    EXPECT_GE(oracle_r + 1e-8, solve("starlike-alpha-proof", {{"alpha", a}}).value) << a;
  }
}

TEST(RadiusCatalog, StrongGammaOverestimatesArgumentOracle) {
  // sup r with max |arg wp(r e^{it})| <= gamma pi/2, by bisection.
  auto arg_oracle = [](double gamma) {
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-9) {
      const double mid = 0.5 * (lo + hi);
      (max_arg_image(mid, 4096) <= gamma * pi / 2 ? lo : hi) = mid;
    }
    return lo;
  };
  const double radius = solve("strong-gamma", {{"gamma", 0.5}}).value;
  // Independent Brent solve of the same residual.
  EXPECT_NEAR(radius, 0.733851, 1e-6);
  EXPECT_NEAR(arg_oracle(0.5), 0.65170, 1e-4);
  EXPECT_GT(radius, arg_oracle(0.5) + 0.05);
  EXPECT_NEAR(solve("strong-gamma", {{"gamma", 0.3}}).value, 0.456954, 1e-6);
  EXPECT_NEAR(arg_oracle(0.3), 0.42784, 1e-4);
}

TEST(RadiusCatalog, ConvexityFunctionSignChange) {
  const double r0 = solve("convexity-numeric").value;
  double below = 1e9, above = 1e9;
  for (int j = 0; j <= 2000; ++j) {
    below = std::min(below, convexity_function(r0 - 1e-3, pi * j / 2000.0));
    above = std::min(above, convexity_function(r0 + 1e-3, pi * j / 2000.0));
  }
  EXPECT_GT(below, 0.0);
  EXPECT_LT(above, 0.0);
}

TEST(Sharpness, NamedClasses) {
  for (const char* name : {"SL-radius", "SRL-radius", "Se-radius", "SC-radius", "Ss-radius", "Delta-radius",
                           "S-star-into", "F-class", "F1-zero", "F2", "F3", "Mn-beta", "CSn-alpha"}) {
    const SharpnessReport s = radius_sharpness({name, {}});
    EXPECT_TRUE(s.supported) << name;
    EXPECT_TRUE(s.contact_ok) << name << " clearance " << s.min_clearance;
    EXPECT_TRUE(s.violation_ok) << name;
  }
}

TEST(Sharpness, ContactPoints) {
  const SharpnessReport sl = radius_sharpness({"SL-radius", {}});
  EXPECT_LT(std::abs(sl.contact_point - (1.0 - inv_e)), 1e-6);
  const SharpnessReport ss = radius_sharpness({"Ss-radius", {}});
  EXPECT_LT(std::abs(ss.contact_point - (1.0 - inv_e)), 1e-6);
  const SharpnessReport fc = radius_sharpness({"F-class", {}});
  EXPECT_LT(std::abs(fc.contact_point - (1.0 - inv_e)), 1e-6);
  EXPECT_NEAR(std::abs(fc.contact_theta), pi, 1e-12);
  for (int n = 2; n <= 4; ++n) {
    const SharpnessReport f = radius_sharpness({"F-class", {{"n", n}}});
    EXPECT_TRUE(f.contact_ok && f.violation_ok) << n;
  }
}

TEST(Sharpness, RatioClassHalfHasNoContact) {
  const SharpnessReport s = radius_sharpness({"F1-half", {}});
  EXPECT_TRUE(s.supported);
  EXPECT_FALSE(s.contact_ok);
  EXPECT_GT(s.min_clearance, 1e-3);
}

TEST(Sharpness, Unsupported) {
  EXPECT_FALSE(radius_sharpness({"convexity-numeric", {}}).supported);
  EXPECT_FALSE(radius_sharpness({"convexity-of-p", {}}).supported);
  EXPECT_FALSE(radius_sharpness({"M-beta", {{"beta", 5.0}}}).supported);
  EXPECT_THROW(radius_sharpness({"SL-radius", {}}, 0.0), std::invalid_argument);
  EXPECT_THROW(radius_sharpness({"SL-radius", {}}, 0.02), std::invalid_argument);
}

TEST(InclusionThresholds, Values) {
  const InclusionThresholds t = inclusion_thresholds();
  EXPECT_NEAR(t.gamma_0, 0.897828, 1e-5);
  EXPECT_NEAR(t.omega_0, 0.136038, 1e-5);
  EXPECT_EQ(t.ellipse_k, e - 1.0);
  EXPECT_EQ(t.beta_min, 1.0 + e);
  EXPECT_NEAR(t.parabola_b, 1.58405, 1e-5);
}

TEST(Janowski, Examples) {
  EXPECT_TRUE(janowski_included(inv_e, 0.0));
  EXPECT_FALSE(janowski_included(inv_e + 1e-3, 0.0));
  EXPECT_FALSE(janowski_included(1.0, -1.0));
  EXPECT_THROW(janowski_included(0.1, 0.2), std::domain_error);
  EXPECT_THROW(janowski_included(1.2, 0.2), std::domain_error);
}

TEST(Janowski, CorrectedFirstConditionCounterexample) {
  // (A, B) = (0.9, 0): the disk |w - 1| < 0.9 pokes out past 1 - 1/e.
  EXPECT_FALSE(disk_inside_oracle(1.0, 0.9));
  EXPECT_FALSE(janowski_included(0.9, 0.0));
  // The uncorrected form B - 1 <= e(1 - A) would accept it.
  EXPECT_TRUE(0.0 - 1.0 <= e * (1.0 - 0.9));
}

TEST(Janowski, GeometricOracleProperty) {
  oracle::Rng rng(99);
  int agree = 0, included = 0;
  for (int i = 0; i < 200; ++i) {
    const double B = rng.uniform(-0.999, 0.99);
    const double A = rng.uniform(B + 1e-3, 1.0);
    const double c = (1 - A * B) / (1 - B * B), rho = (A - B) / (1 - B * B);
    const bool want = disk_inside_oracle(c, rho);
    included += want;
    agree += janowski_included(A, B) == want;
    if (c > left_vertex && c < right_vertex) {
      EXPECT_EQ(rho <= inner_disk(c).radius, want) << A << ' ' << B;
    }
  }
  EXPECT_EQ(agree, 200);
  EXPECT_GT(included, 10);
}

TEST(GrowthCovering, Values) {
  const GrowthCovering g = growth_covering(0.5);
  auto f1 = [](double x) { return x * std::exp(std::exp(x) - 1); };
  EXPECT_NEAR(g.lower, -f1(-0.5), 1e-15);
  EXPECT_NEAR(g.upper, f1(0.5), 1e-15);
  const double h = 1e-6;
  EXPECT_NEAR(g.distortion_upper, (f1(0.5 + h) - f1(0.5 - h)) / (2 * h), 1e-7);
  EXPECT_NEAR(g.covering, 0.5314, 1e-4);
  EXPECT_NEAR(g.covering, std::exp(inv_e - 1), 1e-15);
  EXPECT_NEAR(growth_covering(1.0 - 1e-12).upper, std::exp(e - 1), 1e-10);
  EXPECT_NEAR(g.modulus_sup, std::exp(e - 1), 1e-15);
  EXPECT_NEAR(growth_covering(1e-12).lower, 0.0, 1e-11);
  EXPECT_THROW(growth_covering(1.5), std::domain_error);
}

TEST(SingleCoefficient, Thresholds) {
  EXPECT_NEAR(single_coeff_threshold(SingleCoeffKind::slit_map), 1 / (2 * e - 1), 1e-15);
  EXPECT_NEAR(single_coeff_threshold(SingleCoeffKind::one_term, 2), 0.268941, 1e-6);
  EXPECT_NEAR(single_coeff_threshold(SingleCoeffKind::exp_map), inv_e, 1e-15);
  EXPECT_THROW(single_coeff_threshold(SingleCoeffKind::one_term, 1), std::invalid_argument);
}

TEST(SingleCoefficient, ThresholdDiskTouchesBoundary) {
  for (auto [kind, k] : {std::pair{SingleCoeffKind::slit_map, 2}, std::pair{SingleCoeffKind::one_term, 2},
                         std::pair{SingleCoeffKind::one_term, 5}, std::pair{SingleCoeffKind::exp_map, 2}}) {
    const double A = single_coeff_threshold(kind, k);
    const SingleCoeffDisk d = single_coeff_disk(kind, A, k);
    EXPECT_NEAR(d.radius, oracle::boundary_distance(d.center, 200000).min, 1e-8);
    const SingleCoeffDisk over = single_coeff_disk(kind, A * 1.01, k);
    EXPECT_FALSE(disk_inside_oracle(over.center, over.radius));
  }
}
