// stats/stats-test.cc

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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "base/pararank-error.h"
#include "base/random.h"
#include "stats/ols.h"
#include "stats/t-distribution.h"
#include "stats/t-test.h"

namespace pararank {
namespace {

// Closed forms of the t CDF for df = 1 (Cauchy) and df = 2.
double Cdf1(double t) { return 0.5 + std::atan(t) / std::numbers::pi; }
double Cdf2(double t) { return 0.5 + t / (2.0 * std::sqrt(2.0 + t * t)); }

double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

TEST(TDistribution, Symmetry) {
  for (double df : {0.5, 1.0, 3.7, 30.0, 1e4}) EXPECT_EQ(TCdf(0.0, df), 0.5);
  EXPECT_NEAR(TCdf(-1.3, 5) + TCdf(1.3, 5), 1.0, 1e-15);
}

TEST(TDistribution, ClosedForms) {
  for (double t : {-20.0, -2.5, -0.3, 0.1, 1.0, 4.0, 55.0}) {
    EXPECT_NEAR(TCdf(t, 1), Cdf1(t), 1e-12) << t;
    EXPECT_NEAR(TCdf(t, 2), Cdf2(t), 1e-12) << t;
  }
}

TEST(TDistribution, PublishedTableValues) {
  EXPECT_NEAR(TCdf(1.812, 10), 0.95, 1e-3);
  EXPECT_NEAR(TQuantile(0.975, 10), 2.228, 1e-3);
  EXPECT_NEAR(TQuantile(0.975, 9), 2.262, 1e-3);
  EXPECT_NEAR(TQuantile(0.975, 1), 12.706, 1e-3);
  EXPECT_NEAR(TQuantile(0.95, 10), 1.812, 1e-3);
  EXPECT_NEAR(TQuantile(0.995, 20), 2.845, 1e-3);
}

TEST(TDistribution, NormalLimit) {
  for (double x : {-3.0, -1.0, 0.5, 1.96, 2.5})
    EXPECT_NEAR(TCdf(x, 10000), NormalCdf(x), 1e-4);
}

TEST(TDistribution, QuantileInvertsCdf) {
  for (double df : {1.0, 2.5, 9.0, 100.0})
    for (double p : {0.01, 0.3, 0.5, 0.975})
      EXPECT_NEAR(TCdf(TQuantile(p, df), df), p, 1e-12);
}

TEST(TDistribution, Errors) {
  EXPECT_THROW(TCdf(1.0, 0.0), Error);
  EXPECT_THROW(TCdf(1.0, -2.0), Error);
  EXPECT_THROW(TQuantile(1.0, 3.0), Error);
  EXPECT_EQ(TTwoSidedP(INFINITY, 3.0), 0.0);
  EXPECT_EQ(TTwoSidedP(0.0, 3.0), 1.0);
}

TEST(OneSampleTTest, SymmetricSampleGivesZero) {
  TTestResult r = OneSampleTTest({-2, -1, 0, 1, 2, 3, 4}, 1.0);
  EXPECT_NEAR(r.statistic, 0.0, 1e-15);
  EXPECT_NEAR(r.p_value, 1.0, 1e-15);
}

TEST(OneSampleTTest, HandComputed) {
  // {1, 2, 6} vs 0: mean 3, s^2 = 14/2 = 7, t = 3 / sqrt(7/3), df = 2.
  TTestResult r = OneSampleTTest({1, 2, 6}, 0.0);
  double t = 3.0 / std::sqrt(7.0 / 3.0);
  EXPECT_NEAR(r.statistic, t, 1e-12);
  EXPECT_EQ(r.df, 2.0);
  EXPECT_NEAR(r.p_value, 2.0 * (1.0 - Cdf2(t)), 1e-9);
}

TEST(OneSampleTTest, SmallPositiveMeanIsSignificant) {
  Rng rng(1);
  std::vector<double> xs;
  for (int i = 0; i < 300; ++i) xs.push_back(0.039 + 0.01 * rng.Gaussian());
  TTestResult r = OneSampleTTest(xs, 0.0);
  EXPECT_GT(r.statistic, 0.0);
  EXPECT_LT(r.p_value, 0.001);
}

TEST(OneSampleTTest, Errors) {
  EXPECT_THROW(OneSampleTTest({1.0}, 0.0), Error);
  EXPECT_THROW(OneSampleTTest({0.2, 0.2, 0.2}, 0.0), Error);
}

TEST(WelchTTest, IdenticalSamples) {
  TTestResult r = WelchTTest({1, 4, 2, 8}, {1, 4, 2, 8});
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_NEAR(r.p_value, 1.0, 1e-15);
}

TEST(WelchTTest, HandComputed) {
  // xs: mean 2.5, var 5/3, n 4; ys: mean 7, var 14, n 6.
  TTestResult r = WelchTTest({1, 2, 3, 4}, {2, 4, 6, 8, 10, 12});
  double vx = 5.0 / 12, vy = 14.0 / 6;
  EXPECT_NEAR(r.statistic, -4.5 / std::sqrt(vx + vy), 1e-12);
  double df = (vx + vy) * (vx + vy) / (vx * vx / 3 + vy * vy / 5);
  EXPECT_NEAR(r.df, df, 1e-9);
  EXPECT_NEAR(r.df, 16335.0 / 2477, 1e-9);  // exact rational df
  EXPECT_GT(r.p_value, 0.0);
  EXPECT_LT(r.p_value, 0.05);
}

TEST(WelchTTest, EqualVarianceReducesToPooled) {
  std::vector<double> xs{1, 3, 5, 7}, ys{2, 6, 8, 4};
  EXPECT_NEAR(WelchTTest(xs, ys).statistic, PooledTTest(xs, ys).statistic,
              1e-9);
  EXPECT_NEAR(WelchTTest(xs, ys).df, 6.0, 1e-9);
}

TEST(WelchTTest, Antisymmetric) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> xs, ys;
    for (int i = 0; i < 5 + t; ++i) xs.push_back(rng.Gaussian());
    for (int i = 0; i < 12; ++i) ys.push_back(0.5 + 2 * rng.Gaussian());
    TTestResult a = WelchTTest(xs, ys), b = WelchTTest(ys, xs);
    EXPECT_EQ(a.statistic, -b.statistic);
    EXPECT_EQ(a.df, b.df);
    EXPECT_EQ(a.p_value, b.p_value);
    EXPECT_GE(a.p_value, 0.0);
    EXPECT_LE(a.p_value, 1.0);
  }
}

TEST(WelchTTest, Errors) {
  EXPECT_THROW(WelchTTest({1.0}, {1.0, 2.0}), Error);
  EXPECT_THROW(WelchTTest({1.0, 1.0}, {2.0, 2.0}), Error);
  // One constant sample is fine.
  EXPECT_NO_THROW(WelchTTest({1.0, 1.0, 1.0}, {2.0, 3.0}));
}

TEST(MeanCi95, Examples) {
  MeanCi c = MeanCi95({0.7, 0.7, 0.7});
  EXPECT_DOUBLE_EQ(c.mean, 0.7);
  EXPECT_NEAR(c.halfwidth, 0.0, 1e-15);

  MeanCi two = MeanCi95({0.0, 1.0});
  EXPECT_EQ(two.mean, 0.5);
  // s = sqrt(0.5), s / sqrt(2) = 0.5.
  EXPECT_NEAR(two.halfwidth, 12.706 * 0.5, 1e-3);

  std::vector<double> runs{61, 64, 70, 66, 59, 72, 68, 65, 63, 69};
  MeanCi ten = MeanCi95(runs);
  double s = std::sqrt(SampleVariance(runs));
  EXPECT_NEAR(ten.halfwidth, 2.262 * s / std::sqrt(10.0), 1e-3 * s);
  EXPECT_THROW(MeanCi95({1.0}), Error);
}

TEST(Ols, ThreePointLine) {
  OlsFit f = OlsRegression({{1}, {2}, {3}}, {2, 4, 6}, {"x"});
  ASSERT_EQ(f.coefficients.size(), 2u);
  EXPECT_EQ(f.coefficients[0].name, "(Intercept)");
  EXPECT_NEAR(f.coefficients[0].estimate, 0.0, 1e-9);
  EXPECT_NEAR(f.coefficients[1].estimate, 2.0, 1e-9);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  EXPECT_EQ(f.residual_df, 1.0);
  EXPECT_LT(f.coefficients[1].p_value, 1e-6);
}

TEST(Ols, ExactPlaneRecovered) {
  Rng rng(4);
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  for (int i = 0; i < 25; ++i) {
    double a = rng.Gaussian(), b = 10 * rng.Uniform();
    x.push_back({a, b});
    y.push_back(1.5 + 2.0 * a - 3.0 * b);
  }
  OlsFit f = OlsRegression(x, y, {"a", "b"});
  EXPECT_NEAR(f.coefficients[0].estimate, 1.5, 1e-9);
  EXPECT_NEAR(f.coefficients[1].estimate, 2.0, 1e-9);
  EXPECT_NEAR(f.coefficients[2].estimate, -3.0, 1e-9);
  for (double r : f.residuals) EXPECT_NEAR(r, 0.0, 1e-9);
  EXPECT_LT(f.coefficients[1].p_value, 1e-6);
  EXPECT_LT(f.coefficients[2].p_value, 1e-6);
}

TEST(Ols, SimpleRegressionMatchesClosedForm) {
  Rng rng(5);
  std::vector<std::vector<double>> x;
  std::vector<double> xs, y;
  for (int i = 0; i < 40; ++i) {
    double v = rng.Gaussian();
    x.push_back({v});
    xs.push_back(v);
    y.push_back(0.3 + 0.8 * v + 0.5 * rng.Gaussian());
  }
  double mx = Mean(xs), my = Mean(y), sxx = 0, sxy = 0;
  for (int i = 0; i < 40; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (y[i] - my);
  }
  double slope = sxy / sxx, icpt = my - slope * mx, rss = 0;
  for (int i = 0; i < 40; ++i) {
    double e = y[i] - icpt - slope * xs[i];
    rss += e * e;
  }
  double se = std::sqrt(rss / 38 / sxx);
  OlsFit f = OlsRegression(x, y, {"x"});
  EXPECT_NEAR(f.coefficients[1].estimate, slope, 1e-12);
  EXPECT_NEAR(f.coefficients[0].estimate, icpt, 1e-12);
  EXPECT_NEAR(f.coefficients[1].std_error, se, 1e-12);
  EXPECT_NEAR(f.coefficients[1].p_value, TTwoSidedP(slope / se, 38), 1e-12);
}

TEST(Ols, ResidualsOrthogonalToDesign) {
  Rng rng(6);
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  for (int i = 0; i < 60; ++i) {
    x.push_back({rng.Gaussian(), 100 * rng.Uniform(), rng.Gaussian() * 1e-3});
    y.push_back(rng.Gaussian() + x.back()[0]);
  }
  OlsFit f = OlsRegression(x, y, {"a", "b", "c"});
  double s0 = 0;
  for (double r : f.residuals) s0 += r;
  EXPECT_NEAR(s0, 0.0, 1e-8);
  for (int j = 0; j < 3; ++j) {
    double s = 0;
    for (int i = 0; i < 60; ++i) s += x[i][j] * f.residuals[i];
    EXPECT_NEAR(s, 0.0, 1e-8) << j;
  }
}

TEST(Ols, AffineRescalingKeepsPValues) {
  Rng rng(7);
  std::vector<std::vector<double>> x, xs;
  std::vector<double> y;
  for (int i = 0; i < 30; ++i) {
    double a = rng.Gaussian(), b = rng.Gaussian();
    x.push_back({a, b});
    xs.push_back({a, 250.0 * b - 17.0});
    y.push_back(a - 0.4 * b + rng.Gaussian());
  }
  OlsFit f = OlsRegression(x, y, {"a", "b"});
  OlsFit g = OlsRegression(xs, y, {"a", "b"});
  for (int j = 1; j <= 2; ++j)
    EXPECT_NEAR(f.coefficients[j].p_value, g.coefficients[j].p_value, 1e-9);
  EXPECT_NEAR(g.coefficients[2].estimate * 250.0, f.coefficients[2].estimate,
              1e-9);
}

TEST(Ols, NoiseColumnRarelySignificant) {
  int kept = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed);
    std::vector<std::vector<double>> x;
    std::vector<double> y;
    for (int i = 0; i < 200; ++i) {
      double a = rng.Gaussian(), noise = rng.Gaussian();
      x.push_back({a, noise});
      y.push_back(2.0 * a + rng.Gaussian());
    }
    OlsFit f = OlsRegression(x, y, {"a", "noise"});
    if (f.coefficients[2].p_value > 0.05) ++kept;
    EXPECT_LT(f.coefficients[1].p_value, 1e-6);
  }
  EXPECT_GE(kept, 95);
}

TEST(Ols, RankDeficiencyNamesColumns) {
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  for (int i = 0; i < 10; ++i) {
    x.push_back({double(i), double(i * i), 2.0 * i + 1.0});
    y.push_back(i % 3);
  }
  try {
    OlsRegression(x, y, {"phLen", "sq", "ppl"});
    FAIL();
  } catch (const Error &e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("phLen"), std::string::npos) << msg;
    EXPECT_NE(msg.find("ppl"), std::string::npos) << msg;
    EXPECT_EQ(msg.find("sq"), std::string::npos) << msg;
  }
}

TEST(Ols, Errors) {
  EXPECT_THROW(OlsRegression({{1}, {2}}, {1, 2}, {"x"}), Error);
  EXPECT_THROW(OlsRegression({{1}, {2}, {3}}, {1, 2}, {"x"}), Error);
  EXPECT_THROW(OlsRegression({{0}, {0}, {0}, {0}}, {1, 2, 3, 4}, {"x"}),
               Error);
}

}  // namespace
}  // namespace pararank
