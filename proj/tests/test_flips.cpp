// Copyright 2026 inertia-eval contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "inertia/flips.hpp"

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "inertia/metrics.hpp"

namespace {

using inertia::CategoricalLabels;
using inertia::categorical_labels;
using inertia::nfi_categorical;
using inertia::nfr_categorical;
using inertia::nfr_scalar;
using inertia::ScalarAnnotations;
using inertia::scalar_annotations;
using inertia::SegmentScores;

ScalarAnnotations make_scalar(std::vector<std::vector<double>> rows) {
  ScalarAnnotations a;
  a.annotators = rows.empty() ? 0 : rows[0].size();
  a.rows = std::move(rows);
  return a;
}

CategoricalLabels make_labels(std::vector<int> labels) {
  CategoricalLabels l;
  l.labels = std::move(labels);
  return l;
}

TEST(NfrScalar, IdenticalAnnotationsGiveZero) {
  const auto a = make_scalar({{5.0, 4.8}, {3.2, 3.0}, {6.0, 6.0}});
  EXPECT_EQ(nfr_scalar(a, a), 0.0);
}

TEST(NfrScalar, UnanimousDegradationCounts) {
  const auto old_model = make_scalar({{5.0, 4.8}, {4.0, 4.2}, {3.0, 3.4}});
  const auto new_model = make_scalar({{5.0, 4.8}, {3.8, 4.0}, {3.0, 3.4}});
  EXPECT_NEAR(nfr_scalar(old_model, new_model), 1.0 / 3.0, 1e-12);
}

TEST(NfrScalar, SplitVoteIsNotAFlip) {
  const auto old_model = make_scalar({{4.0, 4.0}});
  const auto lower_and_equal = make_scalar({{3.8, 4.0}});
  EXPECT_EQ(nfr_scalar(old_model, lower_and_equal), 0.0);
  const auto lower_and_higher = make_scalar({{3.8, 4.2}});
  EXPECT_EQ(nfr_scalar(old_model, lower_and_higher), 0.0);
  const auto both_lower = make_scalar({{3.8, 3.8}});
  EXPECT_EQ(nfr_scalar(old_model, both_lower), 1.0);
}

TEST(NfrScalar, ShapeErrors) {
  const auto a = make_scalar({{4.0, 4.0}});
  const auto b = make_scalar({{4.0, 4.0}, {5.0, 5.0}});
  EXPECT_THROW(nfr_scalar(a, b), inertia::DataError);
  const auto three = make_scalar({{4.0, 4.0, 4.0}});
  EXPECT_THROW(nfr_scalar(a, three), inertia::DataError);
}

TEST(NfrCategorical, KnownValues) {
  const auto old_labels = make_labels({1, 1, 0, 0});
  const auto new_labels = make_labels({0, 1, 0, 1});
  EXPECT_EQ(nfr_categorical(old_labels, new_labels), 0.25);
}

TEST(NfrCategorical, IdentityAndNothingToLose) {
  const auto x = make_labels({1, 0, 1, 0, 1});
  EXPECT_EQ(nfr_categorical(x, x), 0.0);
  const auto all_wrong = make_labels({0, 0, 0, 0, 0});
  const auto anything = make_labels({1, 0, 1, 1, 0});
  EXPECT_EQ(nfr_categorical(all_wrong, anything), 0.0);
}

TEST(NfiCategorical, KnownValues) {
  const auto old_labels = make_labels({1, 1, 0, 0});
  const auto new_labels = make_labels({0, 1, 0, 1});
  EXPECT_EQ(nfi_categorical(old_labels, new_labels), 0.5);
}

TEST(NfiCategorical, PerfectNewModelIsUndefined) {
  const auto old_labels = make_labels({1, 0, 1});
  const auto perfect = make_labels({1, 1, 1});
  try {
    nfi_categorical(old_labels, perfect);
    FAIL() << "expected DataError";
  } catch (const inertia::DataError& e) {
    EXPECT_STREQ(e.what(), "NFI undefined: new model is perfect");
  }
}

TEST(NfiCategorical, AllOldIncorrectGivesZero) {
  const auto old_labels = make_labels({0, 0, 0, 0});
  const auto new_labels = make_labels({0, 1, 0, 1});
  EXPECT_EQ(nfi_categorical(old_labels, new_labels), 0.0);
}

// flip count <= new error count for random label pairs
TEST(FlipInvariants, FlipCountBoundedByNewErrors) {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + gen() % 20;
    std::vector<int> old_labels(n), new_labels(n);
    std::size_t new_errors = 0;
    for (std::size_t i = 0; i < n; ++i) {
      old_labels[i] = static_cast<int>(gen() % 2);
      new_labels[i] = static_cast<int>(gen() % 2);
      if (new_labels[i] == 0) ++new_errors;
    }
    const auto old_l = make_labels(old_labels);
    const auto new_l = make_labels(new_labels);
    const double nfr = nfr_categorical(old_l, new_l);
    EXPECT_LE(nfr * static_cast<double>(n),
              static_cast<double>(new_errors) + 1e-9);
    EXPECT_EQ(nfr_categorical(old_l, old_l), 0.0);
  }
}

TEST(SymmetrizedNfr, MeanOfBothDirections) {
  const auto old_labels = make_labels({1, 1, 0, 0});
  const auto new_labels = make_labels({0, 1, 0, 1});
  const double forward = nfr_categorical(old_labels, new_labels);
  const double backward = nfr_categorical(new_labels, old_labels);
  EXPECT_EQ(inertia::symmetrize(forward, backward), 0.25);
}

TEST(ScalarAnnotationsLoader, RangeEnforcedQuantizationWarned) {
  SegmentScores in_range;
  in_range.columns = 2;
  in_range.rows = {{1.0, 6.0}, {3.2, 4.4}};
  std::vector<std::string> warnings;
  scalar_annotations(in_range, &warnings);
  EXPECT_TRUE(warnings.empty());

  SegmentScores off_grid;
  off_grid.columns = 1;
  off_grid.rows = {{3.25}};
  warnings.clear();
  scalar_annotations(off_grid, &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("0.2 grid"), std::string::npos);

  SegmentScores out_of_range;
  out_of_range.columns = 1;
  out_of_range.rows = {{6.2}};
  EXPECT_THROW(scalar_annotations(out_of_range, nullptr), inertia::DataError);
}

TEST(CategoricalLabelsLoader, RejectsNonBinaryAndMultiColumn) {
  SegmentScores good;
  good.columns = 1;
  good.rows = {{1.0}, {0.0}};
  EXPECT_EQ(categorical_labels(good).labels, (std::vector<int>{1, 0}));

  SegmentScores bad_value;
  bad_value.columns = 1;
  bad_value.rows = {{0.5}};
  EXPECT_THROW(categorical_labels(bad_value), inertia::DataError);

  SegmentScores two_cols;
  two_cols.columns = 2;
  two_cols.rows = {{1.0, 0.0}};
  EXPECT_THROW(categorical_labels(two_cols), inertia::DataError);
}

}  // namespace
