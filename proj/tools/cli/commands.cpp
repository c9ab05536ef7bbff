#include "cli/commands.hpp"

#include <cmath>
#include <string>
#include <utility>

#include <fmt/format.h>

#include "cli/io.hpp"
#include "cli/manifest.hpp"
#include "cli/version.hpp"
#include "kinkfac/error.hpp"
#include "kinkfac/factorizer.hpp"
#include "kinkfac/ode_verify.hpp"

namespace kinkfac::cli {
namespace {

// Collects output files, then writes them and the manifest in one go.
class OutputSet {
 public:
  OutputSet(std::string command, Json parameters, std::vector<std::string> argv)
      : manifest_{std::move(command), std::move(parameters), std::move(argv), kVersion, {}} {}

  void add(std::string name, std::string bytes) { files_.emplace_back(std::move(name), std::move(bytes)); }

  void write(const std::filesystem::path& dir) {
    ensure_dir(dir);
    for (const auto& [name, bytes] : files_) {
      write_file(dir / name, bytes);
      manifest_.outputs.push_back({name, sha256_hex(bytes)});
    }
    write_manifest(dir, manifest_);
  }

 private:
  RunManifest manifest_;
  std::vector<std::pair<std::string, std::string>> files_;
};

Json optional_alpha(const std::optional<double>& alpha) {
  return alpha ? Json(*alpha) : Json("auto");
}

Json kink_json(const KinkSolution& k) {
  Json j;
  j["r_target"] = k.r_target;
  j["kappa"] = k.kappa;
  j["tau0"] = k.tau0;
  j["beta"] = k.beta;
  j["closed_form"] = fmt::format("f(tau) = {} / (1 + exp({} * (tau - {})))", format_real(k.r_target),
                                 format_real(k.kappa), format_real(k.tau0));
  return j;
}

std::string curve_csv(const std::vector<CurvePoint>& pts) {
  std::string csv = "branch,lambda0,alpha,residual\n";
  for (const auto& p : pts) {
    csv += fmt::format("{},{},{},{}\n", to_string(p.branch), format_real(p.lambda0), format_real(p.alpha),
                       format_real(p.residual));
  }
  return csv;
}

std::vector<CurvePoint> branches(const std::vector<CurvePoint>& pts, Branch a, Branch b) {
  std::vector<CurvePoint> out;
  for (const auto& p : pts) {
    if (p.branch == a || p.branch == b) out.push_back(p);
  }
  return out;
}

// exact-branch velocity with the sign of alpha (plus for alpha >= 0)
double reference_alpha(double lambda0, double alpha) {
  const auto pts = exact_alphas(lambda0);
  return alpha < 0.0 ? pts[1].alpha : pts[0].alpha;
}

}  // namespace

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

Json cmd_factor(const FactorOptions& opt, const std::vector<std::string>& argv) {
  if (opt.g.size() != 4) {
    throw Error(ErrorCode::UnsupportedNonlinearity, "--g needs exactly 4 coefficients, constant term first");
  }
  const Poly g(std::span<const double>(opt.g));
  const SplitCubic split = split_cubic(g);
  const auto facts = enumerate_factorizations(split);

  Json report;
  report["g"] = opt.g;
  report["split"] = {{"c", split.c}, {"r1", split.r1}, {"r2", split.r2}};
  auto list = Json::array();
  for (const auto& f : facts) {
    Json entry;
    entry["a"] = f.a;
    entry["r1"] = f.r1;
    entry["r2"] = f.r2;
    entry["c"] = f.c;
    entry["beta"] = f.beta;
    const Poly phi1 = f.phi1();
    const Poly phi2 = f.phi2();
    entry["phi1"] = std::vector<double>(phi1.coeffs().begin(), phi1.coeffs().end());
    entry["phi2"] = std::vector<double>(phi2.coeffs().begin(), phi2.coeffs().end());
    if (f.r1 != 0.0) {
      entry["kink"] = kink_json(kink_from(f));
    } else {
      entry["kink"] = nullptr;
    }
    list.push_back(entry);
  }
  report["factorizations"] = list;

  OutputSet out("factor", {{"g", opt.g}}, argv);
  out.add("factor.json", report.dump(2) + "\n");
  out.write(opt.out_dir);
  return report;
}

Json cmd_kink(const KinkOptions& opt, const std::vector<std::string>& argv) {
  if (opt.n < 2 || !(opt.tau_min < opt.tau_max)) {
    throw Error(ErrorCode::Range, "kink: need tau_min < tau_max and n >= 2");
  }
  const double alpha = opt.alpha ? *opt.alpha : reference_alpha(opt.lambda0, 0.0);
  const KinkSolution k = exact_kink(alpha, opt.lambda0);

  std::string csv = "tau,f,fprime\n";
  for (int i = 0; i < opt.n; ++i) {
    const double tau = opt.tau_min + (opt.tau_max - opt.tau_min) * static_cast<double>(i) / (opt.n - 1);
    const KinkSample s = kink_eval(k, tau);
    csv += fmt::format("{},{},{}\n", format_real(tau), format_real(s.f), format_real(s.df));
  }

  Json report;
  report["lambda0"] = opt.lambda0;
  report["alpha"] = alpha;
  report["kink"] = kink_json(k);

  Json params{{"lambda0", opt.lambda0}, {"alpha", optional_alpha(opt.alpha)}, {"tau_min", opt.tau_min},
              {"tau_max", opt.tau_max}, {"n", opt.n}};
  OutputSet out("kink", params, argv);
  out.add("kink.csv", csv);
  out.write(opt.out_dir);
  return report;
}

Json cmd_curves(const CurvesOptions& opt, const std::vector<std::string>& argv) {
  const auto pts = sweep_curves(opt.model, opt.lambda0_min, opt.lambda0_max, opt.n);
  Json params{{"model", to_string(opt.model)}, {"min", opt.lambda0_min}, {"max", opt.lambda0_max}, {"n", opt.n}};
  OutputSet out("curves", params, argv);
  Json report;
  report["model"] = to_string(opt.model);
  if (opt.model == CurveModel::Paper) {
    out.add("fig1.csv", curve_csv(branches(pts, Branch::Alpha1, Branch::Alpha2)));
    out.add("fig2.csv", curve_csv(branches(pts, Branch::Alpha3, Branch::Alpha4)));
    report["files"] = {"fig1.csv", "fig2.csv"};
  } else {
    out.add("exact.csv", curve_csv(pts));
    report["files"] = {"exact.csv"};
  }
  double worst = 0.0;
  for (const auto& p : pts) worst = std::max(worst, p.residual);
  report["points"] = pts.size();
  report["max_residual"] = worst;
  out.write(opt.out_dir);
  return report;
}

Json cmd_verify_ode(const VerifyOdeOptions& opt, const std::vector<std::string>& argv) {
  if (!(opt.span > 0.0)) throw Error(ErrorCode::Range, "verify-ode: span must be positive");
  const double ref = reference_alpha(opt.lambda0, opt.alpha.value_or(0.0));
  const double alpha = opt.alpha.value_or(ref);
  const double beta = beta_of(alpha, opt.lambda0);
  const KinkSolution k = exact_kink(ref, opt.lambda0);

  double max_residual = 0.0;
  for (int i = 0; i <= 400; ++i) {
    max_residual = std::max(max_residual, std::abs(traveling_residual(ref, opt.lambda0, k, -20.0 + 0.1 * i)));
  }

  const KinkSample mid = kink_eval(k, 0.0);
  const Trajectory traj = integrate(alpha, opt.lambda0, mid.f, mid.df, {0.0, opt.span}, opt.step);
  const Classification cls = classify(traj);

  Json report;
  report["lambda0"] = opt.lambda0;
  report["alpha"] = alpha;
  report["beta"] = beta;
  report["reference_alpha"] = ref;
  report["curve_defect"] = std::abs(alpha - ref);
  report["max_residual"] = max_residual;
  report["kink_deviation"] = traj.diverged ? Json(nullptr) : Json(compare_to_kink(traj, k));
  report["classification"] = to_string(cls);
  report["step"] = opt.step;
  report["span"] = opt.span;

  Json params{{"lambda0", opt.lambda0}, {"alpha", optional_alpha(opt.alpha)}, {"step", opt.step}, {"span", opt.span}};
  OutputSet out("verify-ode", params, argv);
  out.add("verify_ode.json", report.dump(2) + "\n");
  out.write(opt.out_dir);
  return report;
}

Json cmd_simulate(const SimulateOptions& opt, const std::vector<std::string>& argv) {
  const GridConfig& cfg = opt.grid;
  cfg.validate();

  double alpha = 0.0;
  KinkSolution k{};
  if (!opt.alpha) {
    alpha = reference_alpha(cfg.lambda0, 0.0);
    k = exact_kink(alpha, cfg.lambda0, opt.front_at);
  } else {
    alpha = *opt.alpha;
    k = comoving_kink(alpha, cfg.lambda0);
    k.tau0 = opt.front_at;
  }

  const RunResult result = run(cfg, k, alpha);
  const auto window = default_window(cfg);
  const SpeedFit fit = measure_speed(result.crossings, window);

  std::string snapshots = "t,x,u\n";
  for (const auto& snap : result.snapshots) {
    const std::string t = format_real(snap.t);
    for (std::size_t i = 0; i < snap.u.size(); ++i) {
      snapshots += fmt::format("{},{},{}\n", t, format_real(cfg.x(i)), format_real(snap.u[i]));
    }
  }
  std::string crossings = "t,x_cross\n";
  for (const auto& c : result.crossings) crossings += fmt::format("{},{}\n", format_real(c.t), format_real(c.x));

  const auto paper = paper_alphas(cfg.lambda0);
  Json report;
  report["lambda0"] = cfg.lambda0;
  report["alpha"] = alpha;
  report["speed"] = fit.speed;
  report["rms"] = fit.rms_residual;
  report["speed_stderr"] = fit.speed_stderr;
  report["crossings_used"] = fit.crossings.size();
  report["window"] = {window.first, window.second};
  report["predicted_exact"] = cfg.lambda0 > 0.0 ? Json(reference_alpha(cfg.lambda0, alpha)) : Json(nullptr);
  report["predicted_paper"] = alpha < 0.0 ? paper[3].alpha : paper[0].alpha;

  Json params{{"lambda0", cfg.lambda0}, {"alpha", optional_alpha(opt.alpha)}, {"x_min", cfg.x_min},
              {"x_max", cfg.x_max},     {"dx", cfg.dx},                       {"dt", cfg.dt},
              {"t_max", cfg.t_max},     {"output_every", cfg.output_every},   {"front_at", opt.front_at}};
  OutputSet out("simulate", params, argv);
  out.add("snapshots.csv", snapshots);
  out.add("crossings.csv", crossings);
  out.add("speed_fit.json", report.dump(2) + "\n");
  out.write(opt.out_dir);
  return report;
}

}  // namespace kinkfac::cli
