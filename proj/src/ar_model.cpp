#include "tsboot/ar_model.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "tsboot/errors.hpp"

namespace tsboot {

namespace {
constexpr double kRcondFloor = 1e-12;
}

ArModel fit_ar(const ChunkMatrix& chunks) {
  const std::size_t d = chunks.cols();
  if (d < 2) throw DimensionError("fit_ar: chunks must have at least 2 columns (lags plus response)");
  const std::size_t p = d - 1;
  const std::size_t n = chunks.rows();
  if (n == 0) throw InputError("fit_ar: empty chunk matrix");

  // Accumulate the Gram matrix X'X and moment vector X'y in row order.
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
  Eigen::VectorXd moment = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p));
  Eigen::VectorXd x(static_cast<Eigen::Index>(p));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) x(static_cast<Eigen::Index>(j)) = chunks(i, j);
    const double y = chunks(i, p);
    for (std::size_t a = 0; a < p; ++a) {
      const auto ia = static_cast<Eigen::Index>(a);
      for (std::size_t b = 0; b <= a; ++b) {
        const auto ib = static_cast<Eigen::Index>(b);
        gram(ia, ib) += x(ia) * x(ib);
      }
      moment(ia) += x(ia) * y;
    }
  }
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a + 1; b < p; ++b)
      gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          gram(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  if (es.info() != Eigen::Success) throw DegenerateDesignError("fit_ar: eigendecomposition failed");
  const Eigen::VectorXd& lambda = es.eigenvalues();  // ascending
  const double lmax = lambda(lambda.size() - 1);
  const double lmin = lambda(0);
  if (!(lmax > 0.0) || !(lmin > lmax * kRcondFloor)) {
    throw DegenerateDesignError("fit_ar: Gram matrix reciprocal condition below " +
                                std::to_string(kRcondFloor));
  }

  const Eigen::VectorXd theta =
      es.eigenvectors() * (es.eigenvectors().transpose() * moment).cwiseQuotient(lambda);
  return ArModel{std::vector<double>(theta.data(), theta.data() + theta.size())};
}

double loss(std::span<const double> z, const ArModel& model) {
  if (z.size() != model.chunk_width()) {
    throw DimensionError("loss: chunk width " + std::to_string(z.size()) +
                         " does not match model width " + std::to_string(model.chunk_width()));
  }
  const std::size_t p = model.order();
  double pred = 0.0;
  for (std::size_t j = 0; j < p; ++j) pred += model.theta[j] * z[j];
  const double r = z[p] - pred;
  return r * r;
}

RiskEstimate empirical_risk(const ChunkMatrix& chunks, const ArModel& model) {
  if (chunks.rows() == 0) throw InputError("empirical_risk: empty chunk matrix");
  if (chunks.cols() != model.chunk_width()) {
    throw DimensionError("empirical_risk: chunk width does not match model width");
  }
  const std::size_t p = model.order();
  double sum = 0.0;
  for (std::size_t i = 0; i < chunks.rows(); ++i) {
    double pred = 0.0;
    for (std::size_t j = 0; j < p; ++j) pred += model.theta[j] * chunks(i, j);
    const double r = chunks(i, p) - pred;
    sum += r * r;
  }
  return {sum / static_cast<double>(chunks.rows()), chunks.rows()};
}

}  // namespace tsboot
