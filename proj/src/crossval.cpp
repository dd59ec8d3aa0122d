#include "tsboot/crossval.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "tsboot/errors.hpp"

namespace tsboot {

FoldAssignment FoldAssignment::contiguous(std::size_t t0, std::size_t k) {
  if (k < 2) throw InputError("FoldAssignment: k must be at least 2");
  if (t0 < k) throw InputError("FoldAssignment: fewer chunks than folds");
  FoldAssignment fa;
  fa.k = k;
  fa.fold_of_chunk.resize(t0);
  const std::size_t base = t0 / k;
  const std::size_t rem = t0 % k;
  std::size_t pos = 0;
  for (std::size_t f = 0; f < k; ++f) {
    const std::size_t len = base + (f < rem ? 1 : 0);
    for (std::size_t i = 0; i < len; ++i) fa.fold_of_chunk[pos++] = f;
  }
  return fa;
}

std::pair<std::size_t, std::size_t> FoldAssignment::fold_range(std::size_t fold) const {
  const std::size_t t0 = fold_of_chunk.size();
  const std::size_t base = t0 / k;
  const std::size_t rem = t0 % k;
  const std::size_t begin = fold * base + std::min(fold, rem);
  const std::size_t len = base + (fold < rem ? 1 : 0);
  return {begin, begin + len};
}

RiskEstimate kfold_cv_risk(const Series& series, std::size_t d, std::size_t k) {
  if (d < 2) throw InputError("kfold_cv_risk: d must be at least 2");
  if (series.size() < d) throw DimensionError("kfold_cv_risk: series shorter than chunk width");
  const ChunkMatrix chunks = embed(series, d, EmbedMode::linear);
  const std::size_t t0 = chunks.rows();
  if (k < 2) throw InputError("kfold_cv_risk: k must be at least 2");
  if (t0 < 2 * k) {
    throw InputError("kfold_cv_risk: need t0 >= 2k chunks (t0=" + std::to_string(t0) +
                     ", k=" + std::to_string(k) + ")");
  }

  const FoldAssignment folds = FoldAssignment::contiguous(t0, k);
  double acc = 0.0;
  std::vector<std::size_t> train_rows;
  train_rows.reserve(t0);
  for (std::size_t f = 0; f < k; ++f) {
    const auto [begin, end] = folds.fold_range(f);
    train_rows.clear();
    for (std::size_t i = 0; i < t0; ++i) {
      if (i < begin || i >= end) train_rows.push_back(i);
    }
    const ArModel fold_model = fit_ar(chunks.take_rows(train_rows));
    const ChunkMatrix held_out = chunks.slice_rows(begin, end - begin);
    acc += empirical_risk(held_out, fold_model).value;
  }
  return {acc / static_cast<double>(k), k};
}

CvNormalitySamples cv_normality_samples(const DgpSpec& dgp, std::size_t n, std::size_t d,
                                        std::size_t k, std::size_t n_runs, std::size_t burnin,
                                        RngStream rng) {
  if (n_runs < 100) throw InputError("cv_normality_samples: need at least 100 runs");

  std::vector<double> risk(n_runs, 0.0);
  std::vector<unsigned char> ok(n_runs, 0);

#pragma omp parallel for schedule(dynamic, 8)
  for (long long r = 0; r < static_cast<long long>(n_runs); ++r) {
    const auto idx = static_cast<std::size_t>(r);
    try {
      const Series s = simulate(dgp, n, burnin, rng.child(idx));
      risk[idx] = kfold_cv_risk(s, d, k).value;
      ok[idx] = 1;
    } catch (const Error&) {
      ok[idx] = 0;
    }
  }

  CvNormalitySamples out;
  std::vector<double> kept;
  kept.reserve(n_runs);
  for (std::size_t i = 0; i < n_runs; ++i) {
    if (ok[i]) kept.push_back(risk[i]);
  }
  out.n_failed = n_runs - kept.size();
  if (kept.size() < 2) throw DegenerateDesignError("cv_normality_samples: nearly all runs failed");

  const double mean = std::accumulate(kept.begin(), kept.end(), 0.0) / static_cast<double>(kept.size());
  double ss = 0.0;
  for (double v : kept) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(kept.size() - 1));
  if (!(sd > 0.0)) throw DegenerateDesignError("cv_normality_samples: zero variance across runs");

  out.mean = mean;
  out.sd = sd;
  out.standardized.reserve(kept.size());
  for (double v : kept) out.standardized.push_back((v - mean) / sd);
  return out;
}

}  // namespace tsboot
