// ranker/rank-svm.cc

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

#include "ranker/rank-svm.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "base/pararank-error.h"

namespace pararank {

namespace {

using Vec = std::vector<double>;

double Dot(const Vec &a, const Vec &b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void Axpy(double a, const Vec &x, Vec *y) {
  for (size_t i = 0; i < x.size(); ++i) (*y)[i] += a * x[i];
}

// Minimum over theta in [0, 1]^K of |base - c sum_k theta_k delta_k| by
// cyclic coordinate descent; returns the minimizing vector.
Vec MinNormSubgradient(const Vec &base, const std::vector<const Vec *> &kinks,
                       const std::vector<double> &theta0, double c) {
  Vec g = base;
  std::vector<double> theta = theta0;
  for (size_t k = 0; k < kinks.size(); ++k) Axpy(-c * theta[k], *kinks[k], &g);
  for (int sweep = 0; sweep < 2000; ++sweep) {
    double biggest = 0.0;
    for (size_t k = 0; k < kinks.size(); ++k) {
      const Vec &d = *kinks[k];
      double a = c * c * Dot(d, d);
      if (a == 0.0) continue;
      double t = std::clamp(theta[k] + c * Dot(d, g) / a, 0.0, 1.0);
      double step = t - theta[k];
      if (step != 0.0) {
        Axpy(-c * step, d, &g);
        theta[k] = t;
        biggest = std::max(biggest, std::abs(step));
      }
    }
    if (biggest < 1e-15) break;
  }
  return g;
}

// argmin_{t >= 0} f(w + t d) for the convex piecewise quadratic f.
double ExactLineSearch(const Vec &w, const Vec &d,
                       const std::vector<std::vector<double>> &deltas,
                       double c) {
  const double a = Dot(w, d), b = Dot(d, d);
  double active = 0.0;  // sum of s_i over hinge terms active just after t
  std::vector<std::pair<double, double>> events;  // (t_i, s_i)
  for (const auto &delta : deltas) {
    double r = 1.0 - Dot(w, delta), s = Dot(d, delta);
    if (r > 0.0 || (r == 0.0 && s < 0.0)) active += s;
    if (s != 0.0) {
      double t = r / s;
      if (t > 0.0) events.emplace_back(t, s);
    }
  }
  std::sort(events.begin(), events.end());
  double t_prev = 0.0;
  for (const auto &[t_event, s] : events) {
    double t_zero = (c * active - a) / b;
    if (t_zero <= t_event) return std::max(t_zero, t_prev);
    // s > 0: term switches off as t grows; s < 0: switches on.
    active -= s > 0.0 ? s : -s;
    t_prev = t_event;
  }
  return std::max((c * active - a) / b, t_prev);
}

}  // namespace

double RankSvmObjective(const std::vector<double> &w,
                        const std::vector<std::vector<double>> &deltas,
                        double c) {
  double f = 0.5 * Dot(w, w);
  for (const auto &d : deltas) f += c * std::max(0.0, 1.0 - Dot(w, d));
  return f;
}

SvmSolution SolveRankSvm(const std::vector<std::vector<double>> &deltas,
                         double c, int max_iterations) {
  if (deltas.empty()) throw Error("ranking SVM needs at least one pair");
  if (!(c > 0.0) || !std::isfinite(c)) throw Error("ranking SVM needs C > 0");
  const size_t dim = deltas[0].size();
  if (dim == 0) throw Error("ranking SVM needs at least one feature");
  for (const auto &d : deltas) {
    if (d.size() != dim) throw Error("ranking SVM: ragged difference vectors");
    for (double x : d)
      if (!std::isfinite(x)) throw Error("ranking SVM: non-finite feature");
  }

  SvmSolution sol;
  Vec w(dim, 0.0);
  double f = RankSvmObjective(w, deltas, c);
  sol.history.push_back(f);
  const double eps_min = 1e-10;
  double eps = 1e-2;
  std::vector<const Vec *> kinks;
  std::vector<double> theta0;
  for (int it = 0; it < max_iterations; ++it) {
    sol.iterations = it + 1;
    Vec base = w;
    kinks.clear();
    theta0.clear();
    for (const auto &delta : deltas) {
      double r = 1.0 - Dot(w, delta);
      if (r > eps) {
        Axpy(-c, delta, &base);
      } else if (r >= -eps) {
        kinks.push_back(&delta);
        theta0.push_back(r > 0.0 ? 1.0 : 0.0);
      }
    }
    Vec g = MinNormSubgradient(base, kinks, theta0, c);
    double gnorm = std::sqrt(Dot(g, g));
    bool progressed = false;
    if (gnorm > 1e-14 * (1.0 + std::sqrt(Dot(w, w)))) {
      Vec d(dim);
      for (size_t j = 0; j < dim; ++j) d[j] = -g[j];
      double t = ExactLineSearch(w, d, deltas, c);
      Vec w_new = w;
      Axpy(t, d, &w_new);
      double f_new = RankSvmObjective(w_new, deltas, c);
      if (t > 0.0 && f_new < f) {
        progressed = f - f_new > 1e-15 * std::max(1.0, std::abs(f));
        w = std::move(w_new);
        f = f_new;
        sol.history.push_back(f);
      }
    }
    if (!progressed) {
      if (eps <= eps_min) {
        sol.converged = true;
        break;
      }
      eps = std::max(eps / 10.0, eps_min);
    }
  }
  sol.weights = w;
  sol.objective = f;
  return sol;
}

}  // namespace pararank
