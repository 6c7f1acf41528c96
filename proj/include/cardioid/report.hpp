#pragma once

#include "coefficients.hpp"
#include "geometry.hpp"
#include "radii.hpp"
#include "subordination.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace cardioid {

using json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so the shortest round-trip print is stable.
inline double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline std::string fmt12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline json num(double x) { return std::isfinite(x) ? json(round12(x)) : json(nullptr); }

struct ConstantRow {
  std::string name;
  double value;
  std::string ref;
  std::optional<double> residual;
  std::optional<double> closed_form;
};

inline std::vector<ConstantRow> constant_rows() {
  std::vector<ConstantRow> rows;
  for (const CatalogEntry& c : radius_catalog()) {
    const RadiusResult r = solve_radius({c.name, {}});
    rows.push_back({c.name, r.value, c.ref, r.residual, r.closed_form});
  }
  const FunctionBounds fb = function_bounds();
  const InclusionThresholds it = inclusion_thresholds();
  const ParabolaThreshold pt = parabola_threshold();
  rows.push_back({"min-re-wp", fb.min_re, "min Re 1+ze^z on the closed disk", std::nullopt, std::nullopt});
  rows.push_back({"max-im-wp", fb.max_im, "max |Im| of 1+ze^z on the closed disk", std::nullopt, std::nullopt});
  rows.push_back({"gamma-0", it.gamma_0, "max |arg| of 1+ze^z divided by pi/2", std::nullopt, std::nullopt});
  rows.push_back({"beta-min", it.beta_min, "max Re 1+ze^z", std::nullopt, right_vertex});
  rows.push_back({"parabola-b", pt.b, "parabolic region threshold", std::nullopt, std::nullopt});
  rows.push_back({"parabola-theta", pt.theta_0, "parabola tangency angle", parabola_stationarity(pt.theta_0),
                  std::nullopt});
  rows.push_back({"ellipse-k", it.ellipse_k, "conic region threshold e-1", std::nullopt, e - 1.0});
  rows.push_back({"covering", growth_covering(1.0).covering, "covering radius -f1(-1)", std::nullopt, std::nullopt});
  rows.push_back({"modulus-sup", growth_covering(1.0).modulus_sup, "sup |f| = e^{e-1}", std::nullopt, std::nullopt});
  rows.push_back({"b2b3-b4-bound", b2b3_minus_b4().bound, "sharp bound on |b2 b3 - b4|", std::nullopt,
                  2.0 / 3.0 * std::sqrt(0.4)});
  rows.push_back({"h3-triangle-bound", h3_triangle_bound(), "triangle-inequality bound on |H3(1)|", std::nullopt,
                  std::nullopt});
  rows.push_back({"h3-bound", h3_upper_bound(64).bound, "rectangle-maximization bound on |H3(1)|", std::nullopt,
                  std::nullopt});
  return rows;
}

inline json constants_json() {
  json out = json::array();
  for (const ConstantRow& r : constant_rows()) {
    json row;
    row["name"] = r.name;
    row["value"] = num(r.value);
    row["ref"] = r.ref;
    row["residual"] = r.residual ? num(*r.residual) : json(nullptr);
    row["closed_form"] = r.closed_form ? num(*r.closed_form) : json(nullptr);
    out.push_back(row);
  }
  return out;
}

inline std::string constants_csv() {
  std::ostringstream os;
  os << "name,value,residual,closed_form,ref\n";
  for (const ConstantRow& r : constant_rows())
    os << r.name << ',' << fmt12(r.value) << ',' << (r.residual ? fmt12(*r.residual) : "") << ','
       << (r.closed_form ? fmt12(*r.closed_form) : "") << ",\"" << r.ref << "\"\n";
  return os.str();
}

inline json radius_json(const RadiusQuery& q, const RadiusResult& r) {
  json out;
  out["name"] = q.name;
  json params = json::object();
  for (const auto& k : catalog_entry(q.name).params) params[k] = num(detail::param(q, k));
  out["params"] = params;
  out["value"] = num(r.value);
  out["residual"] = num(r.residual);
  out["closed_form"] = r.closed_form ? num(*r.closed_form) : json(nullptr);
  out["sharp"] = r.sharp;
  out["saturated"] = r.saturated;
  if (!r.branch.empty()) out["branch"] = r.branch;
  out["ref"] = catalog_entry(q.name).ref;
  return out;
}

inline json curve_json(const std::string& name, std::size_t samples) {
  json pts = json::array();
  for (const CurvePoint& p : sample_curve(name, samples)) pts.push_back({num(p.t), num(p.re), num(p.im)});
  return {{"name", name}, {"columns", {"t", "re", "im"}}, {"points", pts}};
}

inline std::string curve_csv(const std::string& name, std::size_t samples) {
  std::ostringstream os;
  os << "t,re,im\n";
  for (const CurvePoint& p : sample_curve(name, samples))
    os << fmt12(p.t) << ',' << fmt12(p.re) << ',' << fmt12(p.im) << '\n';
  return os.str();
}

inline json coeffs_json(int fold, std::size_t order) {
  const PowerSeries f = extremal_coeffs(fold, order);
  json c = json::array();
  for (std::size_t k = 1; k <= f.order(); ++k) c.push_back(num(f[k].real()));
  return {{"function", "f" + std::to_string(fold)}, {"order", order}, {"coefficients", c}};
}

inline json hankel_bound_json(std::size_t grid, double tol) {
  const H3Bound h = h3_upper_bound(grid, tol);
  const H3CaseReport& c = h.cases;
  return {{"bound", num(h.bound)},
          {"G_max", num(h.g_max)},
          {"argmax", {{"p", num(h.p)}, {"x", num(h.x)}}},
          {"cases",
           {{"g1", {{"max", num(c.g1_max)}, {"p", num(c.g1_argmax)}}},
            {"g2", {{"max", num(c.g2_max)}, {"p", num(c.g2_argmax)}, {"p0_closed", num(c.g2_p0_closed)},
                    {"g2_at_p0_closed", num(c.g2_at_p0_closed)}}},
            {"g3", {{"max", num(c.g3_max)}, {"x", num(c.g3_argmax)}}},
            {"G_at_p0", {{"max", num(c.g_p0_max)}, {"x", num(c.g_p0_argmax)}}},
            {"G_at_p2", {{"max", num(c.g_p2_max)}}},
            {"interior", {{"max", num(c.interior_max)}, {"p", num(c.interior_p)}, {"x", num(c.interior_x)}}}}},
          {"corrected_majorant_bound", num(h.corrected_majorant_bound)},
          {"triangle_bound", num(h3_triangle_bound())}};
}

/// Winding number of the sampled boundary around w.
inline int boundary_winding(cplx w, std::size_t samples = 4096) {
  double total = 0.0;
  cplx prev = boundary_point(-pi) - w;
  for (std::size_t j = 1; j <= samples; ++j) {
    const cplx cur = boundary_point(-pi + 2.0 * pi * static_cast<double>(j) / samples) - w;
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2.0 * pi)));
}

struct Check {
  std::string name;
  double value;
  double expected;
  double tol;
  bool pass;
};

inline Check near(std::string name, double value, double expected, double tol) {
  return {std::move(name), value, expected, tol, std::abs(value - expected) <= tol};
}

inline Check at_most(std::string name, double value, double bound, double tol) {
  return {std::move(name), value, bound, tol, value <= bound + tol};
}

inline Check holds(std::string name, bool ok) { return {std::move(name), ok ? 1.0 : 0.0, 1.0, 0.0, ok}; }

inline std::vector<Check> geometry_checks(std::uint64_t seed) {
  std::vector<Check> out;
  const FunctionBounds fb = function_bounds();
  out.push_back(near("min Re wp", fb.min_re, 0.136038, 1e-5));
  out.push_back(near("min Re wp theta", fb.theta_re, 1.43396, 1e-4));
  out.push_back(near("max |Im wp|", fb.max_im, 2.10743, 1e-5));
  out.push_back(near("max |Im wp| theta", fb.theta_im, 0.645913, 1e-4));
  out.push_back(near("max |arg wp| / (pi/2)", fb.max_arg / (pi / 2.0), 0.89782, 1e-5));
  const DiskFit dl = inner_disk(1.0 + (e - inv_e) / 2.0);
  const DiskFit ds = outer_disk((e + inv_e) / 2.0);
  out.push_back(near("inner disk radius", dl.radius, (e + inv_e) / 2.0, 1e-15));
  out.push_back(near("outer disk radius", ds.radius, 1.0 + (e - inv_e) / 2.0, 1e-15));
  const ParabolaThreshold pt = parabola_threshold();
  out.push_back(near("parabola b", pt.b, 1.58405, 1e-5));
  out.push_back(near("parabola theta", pt.theta_0, 1.23442, 1e-4));
  out.push_back(holds("ellipse k = e-1 included", kst_ellipse_included(e - 1.0)));
  out.push_back(holds("ellipse k = e-1.01 excluded", !kst_ellipse_included(e - 1.01)));

  UniformSource u(seed);
  std::size_t total = 0, agree = 0;
  while (total < 2000) {
    const cplx w{-0.5 + 4.5 * u.next(), -2.5 + 5.0 * u.next()};
    if (std::abs(clearance(w)) < 1e-9) continue;
    ++total;
    if (contains(w) == (boundary_winding(w) != 0)) ++agree;
  }
  out.push_back(near("membership vs winding number agreement", static_cast<double>(agree),
                     static_cast<double>(total), 0.0));
  return out;
}

inline const std::vector<std::pair<std::string, double>>& reference_radii() {
  static const std::vector<std::pair<std::string, double>> r{
      {"convexity-of-p", 0.381966}, {"convex-alpha", 0.256707}, {"F-class", 0.178105},
      {"SL-radius", 0.600423},      {"SRL-radius", 0.648826},   {"Se-radius", 0.458675},
      {"SC-radius", 0.330536},      {"Ss-radius", 0.376727},    {"Delta-radius", 0.474928},
      {"S-star-into", 1.0 / (2.0 * e - 1.0)},    {"convexity-numeric", 0.599547}};
  return r;
}

inline const std::vector<std::string>& named_class_radii() {
  static const std::vector<std::string> n{"SL-radius", "SRL-radius", "Se-radius",  "SC-radius",
                                          "Ss-radius", "Delta-radius", "S-star-into"};
  return n;
}

inline std::vector<Check> radii_checks() {
  std::vector<Check> out;
  for (const auto& [name, expected] : reference_radii())
    out.push_back(near(name, solve_radius({name, {}}).value, expected, name == "convexity-numeric" ? 1e-4 : 1e-5));
  for (const CatalogEntry& c : radius_catalog()) {
    const RadiusResult r = solve_radius({c.name, {}});
    if (r.closed_form && !r.saturated) out.push_back(near(c.name + " closed form", r.value, *r.closed_form, 1e-10));
  }
  for (const std::string& name : named_class_radii()) {
    const SharpnessReport s = radius_sharpness({name, {}});
    out.push_back(holds(name + " contact", s.contact_ok));
    out.push_back(holds(name + " violation", s.violation_ok));
  }
  const InclusionThresholds it = inclusion_thresholds();
  out.push_back(near("gamma_0", it.gamma_0, 0.897828, 1e-5));
  out.push_back(near("covering", growth_covering(1.0).covering, 0.531464, 1e-6));
  return out;
}

inline std::vector<Check> coefficient_checks(std::uint64_t seed, std::size_t samples = 10000) {
  std::vector<Check> out;
  const AuditReport a = coefficient_audit(seed, samples);
  for (const AuditLine& l : a.lines)
    if (l.asserted) out.push_back(at_most("audit " + l.functional, l.max_observed, l.bound, 1e-9));
  const PowerSeries f1 = extremal_coeffs(1, 12), f2 = extremal_coeffs(2, 12);
  out.push_back(near("|b4| attained by f1", std::abs(f1[4]), 5.0 / 6.0, 1e-12));
  out.push_back(near("|b5| attained by f1", std::abs(f1[5]), 5.0 / 8.0, 1e-12));
  out.push_back(near("|H2(2)| attained by f2", std::abs(hankel(f2, 2, 2)), 0.25, 1e-12));
  out.push_back(near("|b3-b2^2| attained by f2", std::abs(f2[3] - f2[2] * f2[2]), 0.5, 1e-12));
  const FunctionalResult w = b2b3_minus_b4();
  out.push_back(near("|b2b3-b4| attained by Schwarz witness", w.value, w.bound, 1e-6));
  const H3Bound h = h3_upper_bound(256);
  out.push_back(near("H3 bound", h.bound, 0.150627, 1e-5));
  out.push_back(near("H3 triangle bound", h3_triangle_bound(), 0.913864, 1e-6));
  for (int fold : {2, 3}) {
    const FunctionalResult n = nfold_h3(fold);
    out.push_back(near("fold " + std::to_string(fold) + " H3 witness", n.value, n.bound, 1e-12));
  }
  return out;
}

inline json checks_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const Check& c : checks)
    arr.push_back({{"name", c.name},
                   {"value", num(c.value)},
                   {"expected", num(c.expected)},
                   {"tol", num(c.tol)},
                   {"margin", num(c.tol - std::abs(c.value - c.expected))},
                   {"pass", c.pass}});
  return arr;
}

inline json audit_json(const AuditReport& a) {
  json lines = json::array();
  for (const AuditLine& l : a.lines)
    lines.push_back({{"functional", l.functional},
                     {"max_observed", num(l.max_observed)},
                     {"bound", num(l.bound)},
                     {"margin", num(l.bound - l.max_observed)},
                     {"asserted", l.asserted}});
  return {{"seed", a.seed}, {"samples", a.samples}, {"lines", lines}};
}

struct VerifyOutcome {
  json report;
  bool ok;
};

inline VerifyOutcome verify_suite(const std::string& suite, std::uint64_t seed) {
  if (suite != "geometry" && suite != "radii" && suite != "coefficients" && suite != "all")
    throw std::invalid_argument("unknown suite '" + suite + "'");
  json report;
  report["suite"] = suite;
  report["seed"] = seed;
  bool ok = true;
  auto run = [&](const std::string& name, const std::vector<Check>& checks) {
    bool pass = true;
    for (const Check& c : checks) pass = pass && c.pass;
    ok = ok && pass;
    report[name] = {{"pass", pass}, {"checks", checks_json(checks)}};
  };
  if (suite == "geometry" || suite == "all") run("geometry", geometry_checks(seed));
  if (suite == "radii" || suite == "all") run("radii", radii_checks());
  if (suite == "coefficients" || suite == "all") {
    run("coefficients", coefficient_checks(seed));
    report["audit"] = audit_json(coefficient_audit(seed));
  }
  report["pass"] = ok;
  return {report, ok};
}

}  // namespace cardioid
