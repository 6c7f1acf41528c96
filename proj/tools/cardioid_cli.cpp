#include <cardioid/cardioid.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 2;
constexpr int exit_usage = 3;

void emit(const cardioid::json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  using namespace cardioid;
  CLI::App app{"Constants, radii, curves and coefficient bounds of the cardioid domain 1+ze^z"};
  app.require_subcommand(1);

  std::string format = "json";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* constants = app.add_subcommand("constants", "Every catalog constant with its residual");
  add_format(constants);

  std::string radius_name;
  std::optional<double> alpha, beta, gamma, A, B;
  std::optional<int> fold;
  auto* radius = app.add_subcommand("radius", "Solve one catalog radius");
  radius->add_option("name", radius_name, "Catalog entry")->required();
  radius->add_option("--alpha", alpha);
  radius->add_option("--beta", beta);
  radius->add_option("--gamma", gamma);
  radius->add_option("--n", fold);
  radius->add_option("--A", A);
  radius->add_option("--B", B);
  radius->add_flag("--sharpness", "Also run the boundary-contact check");

  std::string curve_name;
  std::size_t samples = 256;
  auto* curve = app.add_subcommand("curve", "Plot samples of a comparison curve");
  curve->add_option("name", curve_name, "gamma0 .. gamma9")->required();
  curve->add_option("--samples", samples)->check(CLI::Range(std::size_t{16}, std::size_t{1} << 20));
  add_format(curve);

  std::string function = "f1";
  std::size_t order = 12;
  auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients of the extremal functions");
  coeffs->add_option("--function", function)->check(CLI::IsMember({"f1", "f2", "f3"}));
  coeffs->add_option("--order", order)->check(CLI::Range(std::size_t{4}, std::size_t{64}));
  add_format(coeffs);

  std::size_t grid = 256;
  double tol = default_refine_tol;
  auto* hankel = app.add_subcommand("hankel-bound", "Rectangle maximization bounding |H3(1)|");
  hankel->add_option("--grid", grid)->check(CLI::Range(std::size_t{64}, std::size_t{4096}));
  hankel->add_option("--tol", tol)->check(CLI::PositiveNumber);

  std::string suite = "all";
  std::uint64_t seed = 42;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"geometry", "radii", "coefficients", "all"}));
  verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (constants->parsed()) {
      if (format == "csv")
        std::cout << constants_csv();
      else
        emit(constants_json());
    } else if (radius->parsed()) {
      RadiusQuery q{radius_name, {}};
      catalog_entry(radius_name);
      if (alpha) q.params["alpha"] = *alpha;
      if (beta) q.params["beta"] = *beta;
      if (gamma) q.params["gamma"] = *gamma;
      if (fold) q.params["n"] = *fold;
      if (A) q.params["A"] = *A;
      if (B) q.params["B"] = *B;
      json out = radius_json(q, solve_radius(q));
      if (radius->count("--sharpness")) {
        const SharpnessReport s = radius_sharpness(q);
        out["sharpness"] = {{"supported", s.supported},
                            {"contact_ok", s.contact_ok},
                            {"violation_ok", s.violation_ok},
                            {"min_clearance", num(s.min_clearance)},
                            {"contact_theta", num(s.contact_theta)}};
      }
      emit(out);
    } else if (curve->parsed()) {
      if (format == "csv")
        std::cout << curve_csv(curve_name, samples);
      else
        emit(curve_json(curve_name, samples));
    } else if (coeffs->parsed()) {
      const int n = function[1] - '0';
      if (format == "csv") {
        const PowerSeries f = extremal_coeffs(n, order);
        std::cout << "k,b_k\n";
        for (std::size_t k = 1; k <= f.order(); ++k) std::cout << k << ',' << fmt12(f[k].real()) << '\n';
      } else {
        emit(coeffs_json(n, order));
      }
    } else if (hankel->parsed()) {
      emit(hankel_bound_json(grid, tol));
    } else if (verify->parsed()) {
      const VerifyOutcome v = verify_suite(suite, seed);
      emit(v.report);
      return v.ok ? exit_ok : exit_verify_failed;
    }
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return exit_usage;
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return exit_usage;
  }
  return exit_ok;
}
