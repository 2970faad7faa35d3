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

// Negative flip rate (NFR) and negative flip impact (NFI) from paired
// segment-level annotations of an old and a new model.

#ifndef INERTIA_FLIPS_HPP_
#define INERTIA_FLIPS_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "inertia/corpus.hpp"
#include "inertia/errors.hpp"

namespace inertia {

// Scalar quality judgments on a 1..6 scale in 0.2 increments, one column per
// annotator.
struct ScalarAnnotations {
  std::vector<std::vector<double>> rows;
  std::size_t annotators = 0;

  std::size_t size() const { return rows.size(); }
};

// Binary per-segment labels: 1 = correct, 0 = incorrect.
struct CategoricalLabels {
  std::vector<int> labels;

  std::size_t size() const { return labels.size(); }
};

// Validates the 1..6 range (hard error) and the 0.2 quantization grid
// (warning only, to tolerate real-world annotation exports).
inline ScalarAnnotations scalar_annotations(
    const SegmentScores& scores, std::vector<std::string>* warnings = nullptr) {
  if (scores.rows.empty()) throw DataError("scalar annotations: empty input");
  ScalarAnnotations out;
  out.annotators = scores.columns;
  out.rows = scores.rows;
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    for (const double v : out.rows[i]) {
      if (v < 1.0 || v > 6.0) {
        throw DataError("scalar annotations: score " + std::to_string(v) +
                        " at row " + std::to_string(i + 1) +
                        " outside [1,6]");
      }
      const double steps = (v - 1.0) / 0.2;
      if (warnings && std::fabs(steps - std::round(steps)) > 1e-6) {
        warnings->push_back("row " + std::to_string(i + 1) + ": score " +
                            std::to_string(v) + " is not on the 0.2 grid");
      }
    }
  }
  return out;
}

inline CategoricalLabels categorical_labels(const SegmentScores& scores) {
  if (scores.rows.empty()) throw DataError("categorical labels: empty input");
  if (scores.columns != 1) {
    throw DataError("categorical labels: expected a single 0/1 column, got " +
                    std::to_string(scores.columns));
  }
  CategoricalLabels out;
  out.labels.reserve(scores.rows.size());
  for (std::size_t i = 0; i < scores.rows.size(); ++i) {
    const double v = scores.rows[i][0];
    if (v != 0.0 && v != 1.0) {
      throw DataError("categorical labels: value at row " +
                      std::to_string(i + 1) + " is not 0 or 1");
    }
    out.labels.push_back(v == 1.0 ? 1 : 0);
  }
  return out;
}

// Fraction of segments every annotator scores strictly lower for the new
// model. Split votes (one lower, one equal or higher) are not flips.
inline double nfr_scalar(const ScalarAnnotations& old_model,
                         const ScalarAnnotations& new_model) {
  if (old_model.size() != new_model.size()) {
    throw DataError("nfr: size mismatch (" + std::to_string(old_model.size()) +
                    " vs " + std::to_string(new_model.size()) + ")");
  }
  if (old_model.annotators != new_model.annotators) {
    throw DataError("nfr: annotator count mismatch (" +
                    std::to_string(old_model.annotators) + " vs " +
                    std::to_string(new_model.annotators) + ")");
  }
  if (old_model.rows.empty()) throw DataError("nfr: empty annotations");
  std::size_t flips = 0;
  for (std::size_t i = 0; i < old_model.size(); ++i) {
    bool unanimous = true;
    for (std::size_t a = 0; a < old_model.annotators; ++a) {
      if (!(new_model.rows[i][a] < old_model.rows[i][a])) {
        unanimous = false;
        break;
      }
    }
    if (unanimous) ++flips;
  }
  return static_cast<double>(flips) / static_cast<double>(old_model.size());
}

// |{i : old_i = 1 and new_i = 0}| / N.
inline double nfr_categorical(const CategoricalLabels& old_model,
                              const CategoricalLabels& new_model) {
  if (old_model.size() != new_model.size()) {
    throw DataError("nfr: size mismatch (" + std::to_string(old_model.size()) +
                    " vs " + std::to_string(new_model.size()) + ")");
  }
  if (old_model.labels.empty()) throw DataError("nfr: empty labels");
  std::size_t flips = 0;
  for (std::size_t i = 0; i < old_model.size(); ++i) {
    if (old_model.labels[i] == 1 && new_model.labels[i] == 0) ++flips;
  }
  return static_cast<double>(flips) / static_cast<double>(old_model.size());
}

// Flips as a proportion of the new model's errors.
inline double nfi_categorical(const CategoricalLabels& old_model,
                              const CategoricalLabels& new_model) {
  if (old_model.size() != new_model.size()) {
    throw DataError("nfi: size mismatch (" + std::to_string(old_model.size()) +
                    " vs " + std::to_string(new_model.size()) + ")");
  }
  if (old_model.labels.empty()) throw DataError("nfi: empty labels");
  std::size_t flips = 0, new_errors = 0;
  for (std::size_t i = 0; i < old_model.size(); ++i) {
    if (new_model.labels[i] == 0) {
      ++new_errors;
      if (old_model.labels[i] == 1) ++flips;
    }
  }
  if (new_errors == 0) {
    throw DataError("NFI undefined: new model is perfect");
  }
  return static_cast<double>(flips) / static_cast<double>(new_errors);
}

}  // namespace inertia

#endif  // INERTIA_FLIPS_HPP_
