#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tsboot/block_length.hpp"
#include "tsboot/bound.hpp"
#include "tsboot/crossval.hpp"
#include "tsboot/dgp.hpp"
#include "tsboot/errors.hpp"
#include "tsboot/harness.hpp"
#include "tsboot/io.hpp"

namespace {

// Exit codes: 0 success, 2 usage error, 3 data error, 4 numerical degeneracy.
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitDegenerate = 4;

struct CommonOptions {
  std::uint64_t seed = 12345;
  int threads = 0;
};

struct DgpOptions {
  std::string kind;  // arma | ararch | ms
  std::size_t n = 1000;
  std::size_t burnin = tsboot::kDefaultBurnin;
  // arma (comma-separated coefficient lists; empty string = no terms)
  std::string phi = "0.5,0.5";
  std::string theta = "0.5,0.25";
  double noise_sd = 1.0;
  std::string arma_check = "warn";
  // ar(1)-arch(1)
  double phi1 = 0.8;
  double omega = 1.0;
  double alpha1 = 0.99;
  // markov switching: per-regime lists separated by ';', numbers by ','
  std::string ms_phi = "1.5;0.9;";
  std::string ms_theta = "0.6;-1.2;0.7";
  std::string ms_e0 = "1;1;0";
  std::string ms_trans = "0,0.2,0.8;0.7,0,0.3;0.5,0,0.5";
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<double> parse_numbers(const std::string& s, const std::string& what) {
  std::vector<double> out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ',')) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw tsboot::InputError(what + ": not a number: '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

tsboot::StationarityPolicy parse_policy(const std::string& s) {
  if (s == "warn") return tsboot::StationarityPolicy::warn;
  if (s == "error") return tsboot::StationarityPolicy::error;
  return tsboot::StationarityPolicy::ignore;
}

tsboot::DgpSpec build_dgp(const DgpOptions& o) {
  if (o.kind == "arma") {
    tsboot::ArmaSpec s;
    s.phi = parse_numbers(o.phi, "--phi");
    s.theta = parse_numbers(o.theta, "--theta");
    s.noise_sd = o.noise_sd;
    s.on_nonstationary = parse_policy(o.arma_check);
    s.validate();
    return s;
  }
  if (o.kind == "ararch") {
    tsboot::ArArchSpec s;
    s.phi1 = o.phi1;
    s.omega = o.omega;
    s.alpha1 = o.alpha1;
    s.validate();
    return s;
  }
  if (o.kind == "ms") {
    const auto phis = split(o.ms_phi, ';');
    const auto thetas = split(o.ms_theta, ';');
    const auto e0s = split(o.ms_e0, ';');
    const auto rows = split(o.ms_trans, ';');
    if (phis.size() != thetas.size() || phis.size() != e0s.size() || phis.size() != rows.size()) {
      throw tsboot::InputError("ms: --ms-phi, --ms-theta, --ms-e0 and --ms-trans must describe "
                               "the same number of regimes");
    }
    tsboot::MarkovSwitchSpec s;
    s.noise_sd = o.noise_sd;
    for (std::size_t r = 0; r < phis.size(); ++r) {
      tsboot::Regime reg;
      reg.phi = parse_numbers(phis[r], "--ms-phi");
      reg.theta = parse_numbers(thetas[r], "--ms-theta");
      const auto e0 = parse_numbers(e0s[r], "--ms-e0");
      if (e0.size() != 1) throw tsboot::InputError("--ms-e0: one value per regime");
      reg.e0 = e0[0];
      s.regimes.push_back(std::move(reg));
      s.transition.push_back(parse_numbers(rows[r], "--ms-trans"));
    }
    s.validate();
    return s;
  }
  throw tsboot::InputError("unknown --dgp '" + o.kind + "' (expected arma, ararch or ms)");
}

std::string describe_dgp(const DgpOptions& o) {
  if (o.kind == "arma") {
    return "dgp=arma phi=" + o.phi + " theta=" + o.theta +
           " noise_sd=" + tsboot::format_full(o.noise_sd);
  }
  if (o.kind == "ararch") {
    return "dgp=ararch phi1=" + tsboot::format_full(o.phi1) + " omega=" + tsboot::format_full(o.omega) +
           " alpha1=" + tsboot::format_full(o.alpha1);
  }
  return "dgp=ms regimes_phi=" + o.ms_phi + " regimes_theta=" + o.ms_theta + " regimes_e0=" + o.ms_e0 +
         " transition=" + o.ms_trans + " noise_sd=" + tsboot::format_full(o.noise_sd);
}

void add_common_options(CLI::App* cmd, CommonOptions& c) {
  cmd->add_option("--seed", c.seed, "Base RNG seed (env: TSBOOT_SEED)")
      ->envname("TSBOOT_SEED")
      ->capture_default_str();
  cmd->add_option("--threads", c.threads, "Worker thread cap, 0 = all available")
      ->capture_default_str();
}

void add_dgp_options(CLI::App* cmd, DgpOptions& o, bool with_n) {
  cmd->add_option("--dgp", o.kind, "Simulated process: arma, ararch or ms");
  if (with_n) cmd->add_option("--n", o.n, "Simulated series length")->capture_default_str();
  cmd->add_option("--burnin", o.burnin, "Discarded warm-up steps")->capture_default_str();
  cmd->add_option("--phi", o.phi, "ARMA AR coefficients, comma separated ('' = none)")
      ->capture_default_str();
  cmd->add_option("--theta", o.theta, "ARMA MA coefficients, comma separated ('' = none)")
      ->capture_default_str();
  cmd->add_option("--noise-sd", o.noise_sd, "Innovation standard deviation")->capture_default_str();
  cmd->add_option("--arma-check", o.arma_check, "Stationarity check: warn, error or ignore")
      ->check(CLI::IsMember({"warn", "error", "ignore"}))
      ->capture_default_str();
  cmd->add_option("--phi1", o.phi1, "AR-ARCH autoregressive coefficient")->capture_default_str();
  cmd->add_option("--omega", o.omega, "AR-ARCH baseline variance")->capture_default_str();
  cmd->add_option("--alpha1", o.alpha1, "ARCH coefficient")->capture_default_str();
  cmd->add_option("--ms-phi", o.ms_phi, "Per-regime AR coefficients (';' between regimes)")
      ->capture_default_str();
  cmd->add_option("--ms-theta", o.ms_theta, "Per-regime MA coefficients")->capture_default_str();
  cmd->add_option("--ms-e0", o.ms_e0, "Per-regime weight on the current shock")->capture_default_str();
  cmd->add_option("--ms-trans", o.ms_trans, "Transition matrix rows (';' between rows)")
      ->capture_default_str();
}

void apply_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

tsboot::Series obtain_series(const std::string& input_path, const DgpOptions& dgp,
                             const CommonOptions& common) {
  if (!input_path.empty() && !dgp.kind.empty()) {
    throw tsboot::InputError("--input and --dgp are mutually exclusive");
  }
  if (!input_path.empty()) return tsboot::read_series_file(input_path);
  if (dgp.kind.empty()) {
    throw tsboot::InputError("either --input or --dgp is required");
  }
  return tsboot::simulate(build_dgp(dgp), dgp.n, dgp.burnin, tsboot::RngStream(common.seed).child(0));
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

struct BoundArgs {
  CommonOptions common;
  DgpOptions dgp;
  std::string input;
  std::string out;
  std::size_t d = 0;
  std::size_t B = 500;
  double alpha = 0.1;
  std::size_t ell = 0;  // 0 = data-driven
};

void run_bound(const BoundArgs& a) {
  apply_threads(a.common.threads);
  const tsboot::Series series = obtain_series(a.input, a.dgp, a.common);

  tsboot::BoundConfig cfg;
  cfg.d = a.d;
  cfg.n_bootstrap = a.B;
  cfg.alpha = a.alpha;
  if (a.ell > 0) cfg.ell = a.ell;

  const tsboot::BoundResult r =
      tsboot::gen_error_bound(series, cfg, tsboot::RngStream(a.common.seed).child(1));
  if (!a.out.empty()) tsboot::write_bound_csv(a.out, r);

  std::cout << "train_error   " << tsboot::format_human(r.train_error) << "\n"
            << "eta_quantile  " << tsboot::format_human(r.eta_quantile) << "  (level "
            << tsboot::format_human(1.0 - r.alpha) << ")\n"
            << "upper_bound   " << tsboot::format_human(r.upper_bound) << "\n"
            << "ell           " << r.ell_used << "\n"
            << "B             " << a.B << "  (" << r.n_failed << " failed)\n"
            << "seed          " << r.seed << "\n";
}

struct SimulateArgs {
  CommonOptions common;
  DgpOptions dgp;
  std::string out;
};

void run_simulate(const SimulateArgs& a) {
  if (a.dgp.kind.empty()) throw tsboot::InputError("simulate: --dgp is required");
  const tsboot::Series series =
      tsboot::simulate(build_dgp(a.dgp), a.dgp.n, a.dgp.burnin, tsboot::RngStream(a.common.seed).child(0));
  const std::vector<std::string> comments = {
      describe_dgp(a.dgp),
      "n=" + std::to_string(a.dgp.n) + " burnin=" + std::to_string(a.dgp.burnin) +
          " seed=" + std::to_string(a.common.seed),
  };
  tsboot::write_series_file(a.out, series, comments);
  std::cout << "wrote " << series.size() << " observations to " << a.out << "\n";
}

struct CoverageArgs {
  CommonOptions common;
  DgpOptions dgp;
  std::string out;
  std::size_t d = 0;
  std::vector<std::size_t> sizes{50, 145, 240, 335, 430, 525, 620, 715, 810, 905, 1000};
  std::size_t n_outer = 500;
  std::size_t B = 500;
  double alpha = 0.1;
  std::size_t ell = 0;
  std::size_t oracle_horizon = 1000;
  std::string oracle_mode = "continuation";
};

void run_coverage(const CoverageArgs& a) {
  apply_threads(a.common.threads);
  if (a.dgp.kind.empty()) throw tsboot::InputError("coverage: --dgp is required");

  tsboot::CoverageConfig cfg;
  cfg.dgp = build_dgp(a.dgp);
  cfg.d = a.d;
  cfg.sample_sizes = a.sizes;
  cfg.n_outer = a.n_outer;
  cfg.n_bootstrap = a.B;
  cfg.alpha = a.alpha;
  if (a.ell > 0) cfg.ell = a.ell;
  cfg.oracle_horizon = a.oracle_horizon;
  cfg.oracle_mode = (a.oracle_mode == "independent") ? tsboot::OracleMode::independent
                                                     : tsboot::OracleMode::continuation;
  cfg.burnin = a.dgp.burnin;

  const tsboot::CoverageReport report =
      tsboot::coverage_experiment(cfg, tsboot::RngStream(a.common.seed));
  tsboot::write_coverage_csv(a.out, report);
  for (std::size_t i = 0; i < report.sample_sizes.size(); ++i) {
    std::cout << report.dgp << "  n=" << report.sample_sizes[i]
              << "  coverage=" << tsboot::format_human(report.coverage[i])
              << "  failures=" << report.failures[i] << "\n";
  }
}

struct CvArgs {
  CommonOptions common;
  DgpOptions dgp;
  std::string input;
  std::string out;
  std::size_t d = 0;
  std::size_t k = 5;
  bool normality = false;
  std::size_t n_runs = 2000;
};

void run_cv(const CvArgs& a) {
  apply_threads(a.common.threads);
  if (!a.normality) {
    const tsboot::Series series = obtain_series(a.input, a.dgp, a.common);
    const tsboot::RiskEstimate r = tsboot::kfold_cv_risk(series, a.d, a.k);
    std::cout << "cv_risk " << tsboot::format_full(r.value) << "\n";
    return;
  }
  if (a.dgp.kind.empty()) throw tsboot::InputError("cv --normality: --dgp is required");
  if (a.out.empty()) throw tsboot::InputError("cv --normality: --out is required");
  const tsboot::CvNormalitySamples samples =
      tsboot::cv_normality_samples(build_dgp(a.dgp), a.dgp.n, a.d, a.k, a.n_runs, a.dgp.burnin,
                                   tsboot::RngStream(a.common.seed));
  const auto points = tsboot::qq_data(samples.standardized);
  const std::vector<std::string> comments = {
      describe_dgp(a.dgp),
      "n=" + std::to_string(a.dgp.n) + " d=" + std::to_string(a.d) + " k=" + std::to_string(a.k) +
          " n_runs=" + std::to_string(a.n_runs) + " seed=" + std::to_string(a.common.seed),
      "mean=" + tsboot::format_full(samples.mean) + " sd=" + tsboot::format_full(samples.sd) +
          " failed=" + std::to_string(samples.n_failed),
  };
  tsboot::write_qq_csv(a.out, points, comments);
  std::cout << "cv normality: " << samples.standardized.size() << " runs (" << samples.n_failed
            << " failed), mean=" << tsboot::format_human(samples.mean)
            << " sd=" << tsboot::format_human(samples.sd) << ", qq data in " << a.out << "\n";
}

struct BlockLengthArgs {
  CommonOptions common;
  DgpOptions dgp;
  std::string input;
};

void run_blocklength(const BlockLengthArgs& a) {
  const tsboot::Series series = obtain_series(a.input, a.dgp, a.common);
  std::cout << tsboot::block_length(series) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tsboot: bootstrap confidence bounds on time-series forecasting risk"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a flat key=value file");
  app.allow_config_extras(false);

  BoundArgs bound;
  auto* cmd_bound = app.add_subcommand("bound", "Bootstrap upper bound on prediction risk");
  add_common_options(cmd_bound, bound.common);
  add_dgp_options(cmd_bound, bound.dgp, true);
  cmd_bound->add_option("--input", bound.input, "Series file (one value per line, '#' comments)");
  cmd_bound->add_option("--d", bound.d, "Chunk width: AR order + 1")->required();
  cmd_bound->add_option("--B", bound.B, "Bootstrap replicates")->capture_default_str();
  cmd_bound->add_option("--alpha", bound.alpha, "Miss probability of the bound")->capture_default_str();
  cmd_bound->add_option("--ell", bound.ell, "Block length, 0 = data-driven")->capture_default_str();
  cmd_bound->add_option("--out", bound.out, "Write eta samples and summary CSV here");
  cmd_bound->callback([&] { run_bound(bound); });

  SimulateArgs sim;
  auto* cmd_sim = app.add_subcommand("simulate", "Simulate a process realization to a series file");
  add_common_options(cmd_sim, sim.common);
  add_dgp_options(cmd_sim, sim.dgp, true);
  cmd_sim->add_option("--out", sim.out, "Output series file")->required();
  cmd_sim->callback([&] { run_simulate(sim); });

  CoverageArgs cov;
  auto* cmd_cov = app.add_subcommand("coverage", "Empirical coverage of the bootstrap bound");
  add_common_options(cmd_cov, cov.common);
  add_dgp_options(cmd_cov, cov.dgp, false);
  cmd_cov->add_option("--d", cov.d, "Chunk width: AR order + 1")->required();
  cmd_cov->add_option("--sizes", cov.sizes, "Training sample sizes")->delimiter(',')->capture_default_str();
  cmd_cov->add_option("--n-outer", cov.n_outer, "Outer replications per size")->capture_default_str();
  cmd_cov->add_option("--B", cov.B, "Bootstrap replicates per bound")->capture_default_str();
  cmd_cov->add_option("--alpha", cov.alpha, "Miss probability")->capture_default_str();
  cmd_cov->add_option("--ell", cov.ell, "Block length, 0 = data-driven")->capture_default_str();
  cmd_cov->add_option("--oracle-horizon", cov.oracle_horizon, "Steps used to estimate the risk")
      ->capture_default_str();
  cmd_cov->add_option("--oracle", cov.oracle_mode, "Risk oracle: continuation or independent")
      ->check(CLI::IsMember({"continuation", "independent"}))
      ->capture_default_str();
  cmd_cov->add_option("--out", cov.out, "Output CSV")->required();
  cmd_cov->callback([&] { run_coverage(cov); });

  CvArgs cv;
  auto* cmd_cv = app.add_subcommand("cv", "k-fold cross-validated risk (contiguous folds)");
  add_common_options(cmd_cv, cv.common);
  add_dgp_options(cmd_cv, cv.dgp, true);
  cmd_cv->add_option("--input", cv.input, "Series file");
  cmd_cv->add_option("--d", cv.d, "Chunk width: AR order + 1")->required();
  cmd_cv->add_option("--k", cv.k, "Number of folds")->capture_default_str();
  cmd_cv->add_flag("--normality", cv.normality, "Run the CV normality experiment, emit Q-Q CSV");
  cmd_cv->add_option("--n-runs", cv.n_runs, "Runs for --normality")->capture_default_str();
  cmd_cv->add_option("--out", cv.out, "Q-Q CSV path for --normality");
  cmd_cv->callback([&] { run_cv(cv); });

  BlockLengthArgs bl;
  auto* cmd_bl = app.add_subcommand("blocklength", "Data-driven block length of a series");
  add_common_options(cmd_bl, bl.common);
  add_dgp_options(cmd_bl, bl.dgp, true);
  cmd_bl->add_option("--input", bl.input, "Series file");
  cmd_bl->callback([&] { run_blocklength(bl); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const tsboot::DegenerateDesignError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const tsboot::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const tsboot::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tsboot::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}
