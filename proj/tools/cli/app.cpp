#include "cli/app.hpp"

#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/io.hpp"
#include "cli/version.hpp"
#include "kinkfac/error.hpp"

namespace kinkfac::cli {
namespace {

// "auto" or a real number
std::optional<double> parse_alpha(const std::string& text) {
  if (text == "auto") return std::nullopt;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw Error(ErrorCode::Range, "--alpha must be 'auto' or a number, got '" + text + "'");
  }
  return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorized traveling kinks of the damped cubic wave equation", "kinkfac"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::function<Json()> action;
  // recorded in the manifest; the program name is not part of the replay
  const std::vector<std::string> argv(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::string alpha_text = "auto";

  FactorOptions factor;
  auto* sub_factor = app.add_subcommand("factor", "Enumerate constant-beta factorizations of a cubic g(f)");
  sub_factor->add_option("--g", factor.g, "Coefficients of g, constant term first (e.g. 0,1,0,-1)")
      ->required()
      ->delimiter(',');
  sub_factor->add_option("--out", factor.out_dir, "Output directory")->capture_default_str();
  sub_factor->callback([&] { action = [&] { return cmd_factor(factor, argv); }; });

  KinkOptions kink;
  auto* sub_kink = app.add_subcommand("kink", "Sample the exact traveling kink as CSV (tau,f,fprime)");
  sub_kink->add_option("--lambda0", kink.lambda0, "Damping coefficient")->required();
  sub_kink->add_option("--alpha", alpha_text, "Kink velocity on the exact curve, or 'auto'")->capture_default_str();
  sub_kink->add_option("--tau-min", kink.tau_min)->capture_default_str();
  sub_kink->add_option("--tau-max", kink.tau_max)->capture_default_str();
  sub_kink->add_option("--n", kink.n, "Number of samples")->capture_default_str();
  sub_kink->add_option("--out", kink.out_dir, "Output directory")->capture_default_str();
  sub_kink->callback([&] {
    action = [&] {
      kink.alpha = parse_alpha(alpha_text);
      return cmd_kink(kink, argv);
    };
  });

  CurvesOptions curves;
  std::string model_text = "paper";
  auto* sub_curves = app.add_subcommand("curves", "Sweep the admissible (lambda0, alpha) curves");
  sub_curves->add_option("--model", model_text, "paper or exact")
      ->check(CLI::IsMember({"paper", "exact"}))
      ->capture_default_str();
  sub_curves->add_option("--min", curves.lambda0_min)->capture_default_str();
  sub_curves->add_option("--max", curves.lambda0_max)->capture_default_str();
  sub_curves->add_option("--n", curves.n, "Samples per branch")->capture_default_str();
  sub_curves->add_option("--out", curves.out_dir, "Output directory")->capture_default_str();
  sub_curves->callback([&] {
    action = [&] {
      curves.model = model_text == "exact" ? CurveModel::Exact : CurveModel::Paper;
      return cmd_curves(curves, argv);
    };
  });

  VerifyOdeOptions verify;
  auto* sub_verify = app.add_subcommand("verify-ode", "Integrate the traveling-frame ODE and compare to the kink");
  sub_verify->add_option("--lambda0", verify.lambda0, "Damping coefficient")->required();
  sub_verify->add_option("--alpha", alpha_text, "Frame velocity, or 'auto'")->capture_default_str();
  sub_verify->add_option("--step", verify.step, "RK4 step")->capture_default_str();
  sub_verify->add_option("--span", verify.span, "Integration length from the kink midpoint")->capture_default_str();
  sub_verify->add_option("--out", verify.out_dir, "Output directory")->capture_default_str();
  sub_verify->callback([&] {
    action = [&] {
      verify.alpha = parse_alpha(alpha_text);
      return cmd_verify_ode(verify, argv);
    };
  });

  SimulateOptions sim;
  auto* sub_sim = app.add_subcommand("simulate", "Run the 1+1D wave simulation and fit the front speed");
  sub_sim->add_option("--lambda0", sim.grid.lambda0, "Damping coefficient")->required();
  sub_sim->add_option("--alpha", alpha_text, "Initial kink velocity, or 'auto' (exact branch)")
      ->capture_default_str();
  sub_sim->add_option("--x-min", sim.grid.x_min)->capture_default_str();
  sub_sim->add_option("--x-max", sim.grid.x_max)->capture_default_str();
  sub_sim->add_option("--dx", sim.grid.dx)->capture_default_str();
  sub_sim->add_option("--dt", sim.grid.dt)->capture_default_str();
  sub_sim->add_option("--t-max", sim.grid.t_max)->capture_default_str();
  sub_sim->add_option("--output-every", sim.grid.output_every, "Steps between snapshots")->capture_default_str();
  sub_sim->add_option("--front-at", sim.front_at, "Initial front position")->capture_default_str();
  sub_sim->add_option("--out", sim.out_dir, "Output directory")->capture_default_str();
  sub_sim->callback([&] {
    action = [&] {
      sim.alpha = parse_alpha(alpha_text);
      return cmd_simulate(sim, argv);
    };
  });

  try {
    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    out << action().dump(2) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_numerical(e.code()) ? kExitNumerical : kExitDomain;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace kinkfac::cli
