// features/scaler.h

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

#ifndef PARARANK_FEATURES_SCALER_H_
#define PARARANK_FEATURES_SCALER_H_

#include <string>
#include <vector>

namespace pararank {

// Per-column z-scoring with the population standard deviation (divide by
// n), so {1, 3} maps to {-1, 1}.
class Scaler {
 public:
  Scaler() = default;
  Scaler(std::vector<std::string> names, std::vector<double> mean,
         std::vector<double> std);

  // Needs at least two rows; a constant column throws naming it.
  static Scaler Fit(const std::vector<std::vector<double>> &rows,
                    const std::vector<std::string> &names);

  std::vector<double> Transform(const std::vector<double> &row) const;
  std::vector<std::vector<double>> Transform(
      const std::vector<std::vector<double>> &rows) const;

  size_t dim() const { return mean_.size(); }
  const std::vector<std::string> &names() const { return names_; }
  const std::vector<double> &mean() const { return mean_; }
  const std::vector<double> &std() const { return std_; }

 private:
  std::vector<std::string> names_;
  std::vector<double> mean_;
  std::vector<double> std_;
};

}  // namespace pararank

#endif  // PARARANK_FEATURES_SCALER_H_
