// stats/ols.cc

// Copyright 2026  The para-rank Authors

// See ../../COPYING for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "stats/ols.h"

#include <cmath>

#include <Eigen/Dense>

#include "base/pararank-error.h"
#include "base/text-utils.h"
#include "stats/t-distribution.h"

namespace pararank {

OlsFit OlsRegression(const std::vector<std::vector<double>> &x,
                     const std::vector<double> &y,
                     const std::vector<std::string> &names) {
  const size_t n = y.size(), k = names.size();
  if (x.size() != n) throw Error("OLS: design and response lengths differ");
  if (n <= k + 1)
    throw Error("OLS: need more than " + std::to_string(k + 1) +
                " observations, got " + std::to_string(n));
  Eigen::MatrixXd a(n, k + 1);
  Eigen::VectorXd b(n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].size() != k) throw Error("OLS: ragged design matrix");
    a(i, 0) = 1.0;
    for (size_t j = 0; j < k; ++j) a(i, j + 1) = x[i][j];
    b(i) = y[i];
  }
  if (!a.allFinite() || !b.allFinite()) throw Error("OLS: non-finite input");

  std::vector<std::string> all_names{"(Intercept)"};
  all_names.insert(all_names.end(), names.begin(), names.end());

  // Scale columns to unit norm so the rank threshold is relative.
  Eigen::VectorXd norms = a.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < norms.size(); ++j)
    if (norms(j) == 0.0) throw Error("OLS: column " + all_names[j] + " is all zero");
  Eigen::MatrixXd as = a * norms.cwiseInverse().asDiagonal();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(as);
  qr.setThreshold(1e-10);
  if (qr.rank() < as.cols()) {
    // Each trailing pivoted column is R11^{-1} R12 in terms of the leading
    // ones; report it together with every column it depends on.
    const Eigen::Index rank = qr.rank(), p = as.cols();
    const auto &perm = qr.colsPermutation().indices();
    Eigen::MatrixXd r = qr.matrixR().topLeftCorner(p, p);
    Eigen::MatrixXd z = r.topLeftCorner(rank, rank)
                            .triangularView<Eigen::Upper>()
                            .solve(r.topRightCorner(rank, p - rank));
    std::vector<bool> involved(p, false);
    for (Eigen::Index m = 0; m < p - rank; ++m) {
      involved[perm(rank + m)] = true;
      for (Eigen::Index i = 0; i < rank; ++i)
        if (std::abs(z(i, m)) > 1e-8) involved[perm(i)] = true;
    }
    std::vector<std::string> cols;
    for (Eigen::Index j = 0; j < p; ++j)
      if (involved[j]) cols.push_back(all_names[j]);
    throw Error("OLS: design matrix is rank deficient; collinear columns: " +
                JoinStrings(cols, ", "));
  }
  Eigen::VectorXd beta = qr.solve(b).cwiseQuotient(norms);
  Eigen::VectorXd resid = b - a * beta;

  OlsFit fit;
  fit.residual_df = static_cast<double>(n - k - 1);
  double rss = resid.squaredNorm();
  double tss = (b.array() - b.mean()).matrix().squaredNorm();
  fit.r_squared = tss > 0.0 ? 1.0 - rss / tss : 1.0;
  double sigma2 = rss / fit.residual_df;
  fit.sigma = std::sqrt(sigma2);

  // (A^T A)^{-1} = P R^{-1} R^{-T} P^T in the scaled basis.
  const Eigen::Index p = as.cols();
  Eigen::MatrixXd r = qr.matrixR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
  Eigen::MatrixXd rinv = r.triangularView<Eigen::Upper>().solve(
      Eigen::MatrixXd::Identity(p, p));
  Eigen::MatrixXd cov_perm = rinv * rinv.transpose();
  Eigen::MatrixXd cov = qr.colsPermutation() * cov_perm *
                        qr.colsPermutation().transpose();

  for (Eigen::Index j = 0; j < p; ++j) {
    OlsCoefficient c;
    c.name = all_names[j];
    c.estimate = beta(j);
    c.std_error = std::sqrt(sigma2 * cov(j, j)) / norms(j);
    if (c.std_error > 0.0) {
      c.t_value = c.estimate / c.std_error;
      c.p_value = TTwoSidedP(c.t_value, fit.residual_df);
    } else {
      // Exact fit: any non-zero coefficient is infinitely significant.
      c.t_value = c.estimate == 0.0 ? 0.0
                                    : std::copysign(INFINITY, c.estimate);
      c.p_value = c.estimate == 0.0 ? 1.0 : 0.0;
    }
    fit.coefficients.push_back(c);
  }
  fit.residuals.assign(resid.data(), resid.data() + n);
  return fit;
}

}  // namespace pararank
