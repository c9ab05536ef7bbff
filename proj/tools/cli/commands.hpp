#pragma once

// The five subcommands as library calls. Each writes its files plus
// manifest.json into out_dir and returns the JSON report printed on stdout.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kinkfac/frame.hpp"
#include "kinkfac/pde_sim.hpp"

namespace kinkfac::cli {

using Json = nlohmann::ordered_json;

/// 17 significant digits, '.' decimal point.
std::string format_real(double v);

struct FactorOptions {
  std::vector<double> g;  // constant coefficient first
  std::filesystem::path out_dir = "out";
};

struct KinkOptions {
  double lambda0 = 0.0;
  std::optional<double> alpha;  // empty: exact_plus at lambda0
  double tau_min = -20.0;
  double tau_max = 20.0;
  int n = 401;
  std::filesystem::path out_dir = "out";
};

struct CurvesOptions {
  CurveModel model = CurveModel::Paper;
  double lambda0_min = 0.0;
  double lambda0_max = 10.0;
  int n = 401;
  std::filesystem::path out_dir = "out";
};

struct VerifyOdeOptions {
  double lambda0 = 0.0;
  std::optional<double> alpha;
  double step = 1e-3;
  double span = 20.0;
  std::filesystem::path out_dir = "out";
};

struct SimulateOptions {
  GridConfig grid{.output_every = 25};
  std::optional<double> alpha;
  double front_at = 0.0;
  std::filesystem::path out_dir = "out";
};

Json cmd_factor(const FactorOptions& opt, const std::vector<std::string>& argv);
Json cmd_kink(const KinkOptions& opt, const std::vector<std::string>& argv);
Json cmd_curves(const CurvesOptions& opt, const std::vector<std::string>& argv);
Json cmd_verify_ode(const VerifyOdeOptions& opt, const std::vector<std::string>& argv);
Json cmd_simulate(const SimulateOptions& opt, const std::vector<std::string>& argv);

}  // namespace kinkfac::cli
