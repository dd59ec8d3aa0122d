// Acceptance suite: one self-contained check per criterion, each printing a
// single PASS/FAIL line.  Run with no arguments for the full suite or with a
// criterion number (1-8) for one check.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "support/test_oracles.hpp"
#include "tsboot/block_length.hpp"
#include "tsboot/bound.hpp"
#include "tsboot/crossval.hpp"
#include "tsboot/dgp.hpp"
#include "tsboot/harness.hpp"
#include "tsboot/rng.hpp"

using namespace tsboot;

namespace {

constexpr std::uint64_t kSeed = 20240817;

struct Outcome {
  bool pass = false;
  std::string detail;
};

ArmaSpec paper_arma() {
  ArmaSpec s;
  s.phi = {0.5, 0.5};
  s.theta = {0.5, 0.25};
  s.noise_sd = 1.0;
  return s;
}

ArArchSpec paper_ar_arch() {
  ArArchSpec s;
  s.phi1 = 0.8;
  s.omega = 1.0;
  s.alpha1 = 0.99;
  return s;
}

MarkovSwitchSpec paper_markov_switching() {
  MarkovSwitchSpec s;
  s.regimes = {{{1.5}, {0.6}, 1.0}, {{0.9}, {-1.2}, 1.0}, {{}, {0.7}, 0.0}};
  s.transition = {{0.0, 0.2, 0.8}, {0.7, 0.0, 0.3}, {0.5, 0.0, 0.5}};
  s.noise_sd = 1.0;
  return s;
}

CoverageConfig desk_config(DgpSpec dgp, std::size_t d, std::vector<std::size_t> sizes) {
  CoverageConfig cfg;
  cfg.dgp = std::move(dgp);
  cfg.d = d;
  cfg.sample_sizes = std::move(sizes);
  cfg.n_outer = 200;
  cfg.n_bootstrap = 200;
  cfg.alpha = 0.1;
  cfg.oracle_horizon = 1000;
  cfg.oracle_mode = OracleMode::continuation;
  cfg.burnin = 1000;
  return cfg;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

// -- 1: coverage at n=1000 sits in the nominal band for all three processes.
Outcome criterion1() {
  struct Row {
    const char* name;
    DgpSpec dgp;
    std::size_t d;
    double lo, hi;
  };
  std::vector<Row> rows;
  rows.push_back({"arma", paper_arma(), 2, 0.84, 0.96});
  rows.push_back({"ar_arch", paper_ar_arch(), 4, 0.80, 0.96});
  rows.push_back({"markov_switching", paper_markov_switching(), 3, 0.80, 0.96});

  Outcome out;
  out.pass = true;
  for (auto& row : rows) {
    const CoverageConfig cfg = desk_config(row.dgp, row.d, {1000});
    const CoverageReport rep = coverage_experiment(cfg, RngStream(kSeed, 1));
    const double cov = rep.coverage[0];
    out.detail += std::string(row.name) + "=" + fmt(cov) + " (band " + fmt(row.lo) + ".." +
                  fmt(row.hi) + ", failures " + std::to_string(rep.failures[0]) + ")  ";
    if (!(cov >= row.lo && cov <= row.hi)) out.pass = false;
  }
  return out;
}

// -- 2: the hard processes really are worse at n=50 than at n=1000.
Outcome criterion2() {
  Outcome out;
  out.pass = true;
  const std::pair<const char*, std::pair<DgpSpec, std::size_t>> rows[] = {
      {"ar_arch", {paper_ar_arch(), 4}},
      {"markov_switching", {paper_markov_switching(), 3}},
  };
  for (const auto& [name, spec_d] : rows) {
    const CoverageConfig cfg = desk_config(spec_d.first, spec_d.second, {50, 1000});
    const CoverageReport rep = coverage_experiment(cfg, RngStream(kSeed, 2));
    out.detail += std::string(name) + ": n50=" + fmt(rep.coverage[0]) +
                  " n1000=" + fmt(rep.coverage[1]) + "  ";
    if (!(rep.coverage[0] < rep.coverage[1])) out.pass = false;
  }
  return out;
}

// -- 3: bootstrap eta* distribution tracks the true eta sampling distribution.
Outcome criterion3() {
  const std::size_t n = 1000;
  const auto ks_for = [&](const DgpSpec& dgp, std::size_t* ell_out) {
    const Series realization = simulate(dgp, n, 1000, RngStream(kSeed, 30));
    BoundConfig bc;
    bc.d = 2;
    bc.n_bootstrap = 2000;
    bc.alpha = 0.1;
    const BoundResult bound = gen_error_bound(realization, bc, RngStream(kSeed, 31));
    const std::vector<double> truth =
        sampling_distribution_eta(dgp, n, 2, 2000, 1000, RngStream(kSeed, 32));
    if (ell_out) *ell_out = bound.ell_used;
    return testing::ks_two_sample(bound.eta_samples, truth);
  };

  std::size_t ell = 0;
  const double ks = ks_for(paper_arma(), &ell);

  // Control on a stationary ARMA(2,2) satisfying the consistency theorem's
  // mixing hypotheses, which the unit-root coefficients above do not.
  ArmaSpec stationary = paper_arma();
  stationary.phi = {0.5, 0.2};
  const double ks_control = ks_for(stationary, nullptr);

  Outcome out;
  out.pass = ks <= 0.1;
  out.detail = "ks_distance=" + fmt(ks) + " (limit 0.1, ell=" + std::to_string(ell) +
               "); stationary-arma control ks=" + fmt(ks_control);
  return out;
}

// -- 4: exact CBB identities by full enumeration of start combinations.
Outcome criterion4() {
  Outcome out;
  out.pass = true;
  double worst_gap = 0.0;
  for (std::size_t t = 2; t <= 6; ++t) {
    std::vector<double> values(t);
    RngStream vrng(kSeed, 40 + t);
    for (auto& v : values) v = vrng.normal();

    for (std::size_t ell = 1; ell <= 3; ++ell) {
      for (const bool truncate : {false, true}) {
        // Two blocks of full length check the mean identity; the truncated
        // shape (n_rows_out = t) checks inclusion only.
        const std::size_t b = truncate ? (t + ell - 1) / ell : 2;
        const std::size_t n_rows = truncate ? t : b * ell;

        std::vector<std::size_t> starts(b, 0);
        std::vector<std::size_t> inclusion(t, 0);
        double mean_of_means = 0.0;
        std::size_t combos = 0;
        for (;;) {
          double sum = 0.0;
          std::size_t emitted = 0;
          for (std::size_t blk = 0; blk < b && emitted < n_rows; ++blk) {
            for (std::size_t o = 0; o < ell && emitted < n_rows; ++o) {
              const std::size_t idx = (starts[blk] + o) % t;
              sum += values[idx];
              ++inclusion[idx];
              ++emitted;
            }
          }
          mean_of_means += sum / static_cast<double>(n_rows);
          ++combos;

          std::size_t pos = 0;
          while (pos < b && ++starts[pos] == t) starts[pos++] = 0;
          if (pos == b) break;
        }

        if (!truncate) {
          mean_of_means /= static_cast<double>(combos);
          double chunk_mean = 0.0;
          for (double v : values) chunk_mean += v;
          chunk_mean /= static_cast<double>(t);
          worst_gap = std::max(worst_gap, std::abs(mean_of_means - chunk_mean));
          if (std::abs(mean_of_means - chunk_mean) > 1e-12) out.pass = false;
        }
        for (std::size_t i = 1; i < t; ++i) {
          if (inclusion[i] != inclusion[0]) out.pass = false;
        }
      }
    }
  }
  out.detail = "max |E*[resample mean] - chunk mean| = " + fmt(worst_gap) +
               " over t=2..6, ell=1..3; inclusion exactly uniform";
  return out;
}

// -- 5: the fit agrees with an independent normal-equations solver.
Outcome criterion5() {
  RngStream rng(kSeed, 50);
  double worst_rel = 0.0, worst_orth = 0.0;
  for (int inst = 0; inst < 100; ++inst) {
    RngStream r = rng.child(static_cast<std::uint64_t>(inst));
    const std::size_t p = 1 + r.uniform_below(5);
    const std::size_t d = p + 1;
    const std::size_t n_rows = p + 2 + r.uniform_below(39 - p);

    std::vector<double> flat(n_rows * d);
    for (auto& v : flat) v = r.normal();
    const Series s(std::move(flat));
    std::vector<std::size_t> row_ids(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i) row_ids[i] = i * d;
    const ChunkMatrix design = embed(s, d, EmbedMode::linear).take_rows(row_ids);

    const ArModel fitted = fit_ar(design);
    const auto oracle = testing::ols_normal_equations(testing::to_rows(design));

    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      num += (fitted.theta[j] - oracle[j]) * (fitted.theta[j] - oracle[j]);
      den += oracle[j] * oracle[j];
    }
    worst_rel = std::max(worst_rel, std::sqrt(num) / (std::sqrt(den) + 1e-300));

    std::vector<double> xtr(p, 0.0), xty(p, 0.0);
    for (std::size_t i = 0; i < design.rows(); ++i) {
      double pred = 0.0;
      for (std::size_t j = 0; j < p; ++j) pred += fitted.theta[j] * design(i, j);
      const double resid = design(i, p) - pred;
      for (std::size_t j = 0; j < p; ++j) {
        xtr[j] += design(i, j) * resid;
        xty[j] += design(i, j) * design(i, p);
      }
    }
    double norm_r = 0.0, norm_y = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      norm_r += xtr[j] * xtr[j];
      norm_y += xty[j] * xty[j];
    }
    worst_orth = std::max(worst_orth, std::sqrt(norm_r) / (1e-8 * std::sqrt(norm_y)));
  }
  Outcome out;
  out.pass = worst_rel <= 1e-10 && worst_orth <= 1.0;
  out.detail = "max relative gap = " + fmt(worst_rel) + " (limit 1e-10), max ||X'r||/(1e-8 ||X'y||) = " +
               fmt(worst_orth) + " over 100 instances";
  return out;
}

// -- 6: standardized cross-validated risk approaches normality with n.
Outcome criterion6() {
  const auto qq_corr = [&](std::size_t n, std::uint64_t stream) {
    const CvNormalitySamples s =
        cv_normality_samples(paper_arma(), n, 3, 5, 2000, 1000, RngStream(kSeed, stream));
    const auto points = qq_data(s.standardized);
    std::vector<double> theo(points.size()), samp(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      theo[i] = points[i].theoretical;
      samp[i] = points[i].sample;
    }
    return testing::pearson(theo, samp);
  };
  const double corr_small = qq_corr(100, 60);
  const double corr_large = qq_corr(1000, 61);
  Outcome out;
  out.pass = corr_large >= 0.98 && corr_large > corr_small;
  out.detail = "qq_corr(n=100)=" + fmt(corr_small) + " qq_corr(n=1000)=" + fmt(corr_large) +
               " (need >= 0.98 and increasing)";
  return out;
}

// -- 7: block length equals the independent transcription on 20 seeded series.
Outcome criterion7() {
  std::size_t matched = 0;
  std::string mism;
  std::size_t case_id = 0;
  const auto check = [&](const Series& s) {
    const std::size_t got = block_length(s);
    const std::size_t want = testing::block_length_reference(s.values());
    ++case_id;
    if (got == want) {
      ++matched;
    } else {
      mism += " case" + std::to_string(case_id) + ":" + std::to_string(got) + "!=" +
              std::to_string(want);
    }
  };

  ArmaSpec wn;
  wn.phi = {};
  wn.theta = {};
  for (std::uint64_t s = 0; s < 10; ++s) check(simulate_arma(wn, 1000, 200, RngStream(kSeed, 700 + s)));
  ArmaSpec ar;
  ar.theta = {};
  ar.phi = {0.5};
  for (std::uint64_t s = 0; s < 5; ++s) check(simulate_arma(ar, 1000, 200, RngStream(kSeed, 720 + s)));
  ar.phi = {0.9};
  for (std::uint64_t s = 0; s < 5; ++s) check(simulate_arma(ar, 1000, 200, RngStream(kSeed, 740 + s)));

  Outcome out;
  out.pass = matched == 20;
  out.detail = std::to_string(matched) + "/20 exact integer matches" + mism;
  return out;
}

// -- 8: the coverage command is byte-deterministic, including across threads.
Outcome criterion8() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "tsboot_acceptance_c8";
  fs::create_directories(dir);
  const std::string base = std::string(TSBOOT_CLI_PATH) +
                           " coverage --dgp arma --d 2 --sizes 60,90 --n-outer 12 --B 25 "
                           "--alpha 0.1 --oracle-horizon 150 --burnin 100 --seed 2718 --out ";
  const fs::path a = dir / "a.csv", b = dir / "b.csv", c = dir / "c.csv";
  const auto run = [](const std::string& cmd) {
    return WEXITSTATUS(std::system((cmd + " >/dev/null 2>/dev/null").c_str()));
  };
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  };

  Outcome out;
  const int r1 = run(base + a.string() + " --threads 1");
  const int r2 = run(base + b.string() + " --threads 4");
  const int r3 = run(base + c.string() + " --threads 4");
  const std::string ca = slurp(a), cb = slurp(b), cc = slurp(c);
  out.pass = r1 == 0 && r2 == 0 && r3 == 0 && !ca.empty() && ca == cb && cb == cc;
  out.detail = out.pass ? "identical CSV bytes for threads {1,4,4}"
                        : "outputs differ or command failed";
  std::error_code ec;
  fs::remove_all(dir, ec);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria = {
      {1, {"coverage reproduction at n=1000", criterion1}},
      {2, {"small-sample coverage degradation", criterion2}},
      {3, {"bootstrap vs truth distribution match", criterion3}},
      {4, {"CBB exactness by enumeration", criterion4}},
      {5, {"least-squares oracle equivalence", criterion5}},
      {6, {"cross-validated risk normality", criterion6}},
      {7, {"block-length reference match", criterion7}},
      {8, {"coverage command determinism", criterion8}},
  };

  std::vector<int> selected;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  } else {
    for (const auto& [id, entry] : criteria) selected.push_back(id);
  }

  int failures = 0;
  for (int id : selected) {
    const auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::cerr << "unknown criterion " << id << "\n";
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = it->second.second();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const auto secs =
        std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - start)
            .count();
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " C" << id << " " << it->second.first << ": "
              << out.detail << " [" << fmt(secs) << "s]" << std::endl;
    if (!out.pass) ++failures;
  }
  return failures;
}
