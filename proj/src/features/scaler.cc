// features/scaler.cc

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

#include "features/scaler.h"

#include <cmath>

#include "base/pararank-error.h"

namespace pararank {

Scaler::Scaler(std::vector<std::string> names, std::vector<double> mean,
               std::vector<double> std)
    : names_(std::move(names)), mean_(std::move(mean)), std_(std::move(std)) {
  if (names_.size() != mean_.size() || mean_.size() != std_.size())
    throw Error("scaler parameter sizes differ");
  for (size_t j = 0; j < std_.size(); ++j)
    if (!(std::isfinite(std_[j]) && std_[j] > 0.0) ||
        !std::isfinite(mean_[j]))
      throw Error("invalid scaler parameters for " + names_[j]);
}

Scaler Scaler::Fit(const std::vector<std::vector<double>> &rows,
                   const std::vector<std::string> &names) {
  if (rows.size() < 2) throw Error("scaler needs at least 2 rows");
  const size_t d = names.size();
  std::vector<double> mean(d, 0.0), sd(d, 0.0);
  for (const auto &r : rows) {
    if (r.size() != d) throw Error("scaler rows have inconsistent width");
    for (size_t j = 0; j < d; ++j) mean[j] += r[j];
  }
  const double n = static_cast<double>(rows.size());
  for (double &m : mean) m /= n;
  for (const auto &r : rows)
    for (size_t j = 0; j < d; ++j) sd[j] += (r[j] - mean[j]) * (r[j] - mean[j]);
  for (size_t j = 0; j < d; ++j) {
    sd[j] = std::sqrt(sd[j] / n);
    // Relative test: a column of equal values can leave rounding residue.
    if (!(sd[j] > 1e-12 * std::max(1.0, std::abs(mean[j]))))
      throw Error("zero variance in feature " + names[j]);
  }
  return Scaler(names, mean, sd);
}

std::vector<double> Scaler::Transform(const std::vector<double> &row) const {
  if (row.size() != dim()) throw Error("scaler dimension mismatch");
  std::vector<double> out(row.size());
  for (size_t j = 0; j < row.size(); ++j) out[j] = (row[j] - mean_[j]) / std_[j];
  return out;
}

std::vector<std::vector<double>> Scaler::Transform(
    const std::vector<std::vector<double>> &rows) const {
  std::vector<std::vector<double>> out;
  out.reserve(rows.size());
  for (const auto &r : rows) out.push_back(Transform(r));
  return out;
}

}  // namespace pararank
