// base/base-test.cc

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

#include <set>
#include <sstream>

#include "base/parallel.h"
#include "base/pararank-error.h"
#include "base/random.h"
#include "base/table-io.h"
#include "base/text-utils.h"

namespace pararank {
namespace {

TEST(TextUtils, ParseRejectsTrailingGarbage) {
  EXPECT_DOUBLE_EQ(ParseDouble(" -2.5 ", "x"), -2.5);
  EXPECT_THROW(ParseDouble("1.5abc", "x"), Error);
  EXPECT_THROW(ParseDouble("", "x"), Error);
  EXPECT_EQ(ParseInt("+7", "n"), 7);
  EXPECT_THROW(ParseInt("7.0", "n"), Error);
}

TEST(TextUtils, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, -1e-300, 12345.678}) {
    EXPECT_EQ(ParseDouble(FormatDouble(v), "v"), v);
  }
}

TEST(Table, CsvQuotingAndLineNumbers) {
  std::istringstream is("a,b\n1,\"x, \"\"y\"\"\"\n\n3,z\n");
  Table t = Table::Parse(is, ',', "mem");
  ASSERT_EQ(t.rows().size(), 2u);
  EXPECT_EQ(t.rows()[0].fields[1], "x, \"y\"");
  EXPECT_EQ(t.rows()[1].line, 4);
  EXPECT_EQ(t.Column("b"), 1u);
  EXPECT_THROW(t.Column("c"), Error);
  EXPECT_EQ(FormatRow({"1", "x, \"y\""}, ','), "1,\"x, \"\"y\"\"\"");
}

TEST(Table, RaggedRowIsError) {
  std::istringstream is("a\tb\n1\t2\t3\n");
  EXPECT_THROW(Table::Parse(is, '\t', "mem"), Error);
}

TEST(Rng, DeterministicAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    uint64_t x = a.UniformInt(7);
    EXPECT_EQ(x, b.UniformInt(7));
    EXPECT_LT(x, 7u);
  }
  std::vector<int> v = {1, 2, 3, 4, 5};
  Rng c(1);
  c.Shuffle(&v);
  EXPECT_EQ(std::multiset<int>(v.begin(), v.end()),
            std::multiset<int>({1, 2, 3, 4, 5}));
}

TEST(ParallelFor, VisitsEveryIndexOnceAndPropagatesErrors) {
  std::vector<int> hits(100, 0);
  ParallelFor(hits.size(), 4, [&](size_t i) { hits[i]++; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(ParallelFor(10, 3,
                           [](size_t i) {
                             if (i == 5) throw Error("boom");
                           }),
               Error);
}

}  // namespace
}  // namespace pararank
