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

// Smoothness and stability metrics over translation output files.
//
// Consistency and stability are both the harmonic mean of the two directional
// corpus BLEU scores between a pair of output files, making them symmetric in
// their arguments. Robustness is the change in a reference-based quality
// score between noisy-input and clean-input translations.

#ifndef INERTIA_METRICS_HPP_
#define INERTIA_METRICS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "inertia/bleu.hpp"
#include "inertia/corpus.hpp"
#include "inertia/errors.hpp"

namespace inertia {

struct SmoothnessResult {
  double consistency = 0.0;   // 0..100
  double robustness = 0.0;    // signed delta in the quality metric's units
};

struct StabilityResult {
  double stability = 0.0;         // 0..100
  double exact_match_rate = 0.0;  // 0..1
};

inline double consistency(const Corpus& noisy_output, const Corpus& clean_output,
                          const BleuConfig& config = {}, unsigned threads = 1) {
  const double forward =
      corpus_bleu(noisy_output, clean_output, config, threads).score;
  const double backward =
      corpus_bleu(clean_output, noisy_output, config, threads).score;
  return harmonic_mean(forward, backward);
}

// Mean consistency against several clean variants (e.g. multiple reference
// corrections of the same noisy input).
inline double consistency_multi(const Corpus& noisy_output,
                                const std::vector<Corpus>& clean_variants,
                                const BleuConfig& config = {},
                                unsigned threads = 1) {
  if (clean_variants.empty()) throw DataError("consistency: no clean variants");
  double sum = 0.0;
  for (const Corpus& variant : clean_variants) {
    sum += consistency(noisy_output, variant, config, threads);
  }
  return sum / static_cast<double>(clean_variants.size());
}

// mean(noisy scores) - mean(clean scores); both inputs single-column.
inline double robustness(const SegmentScores& noisy_scores,
                         const SegmentScores& clean_scores) {
  if (noisy_scores.size() != clean_scores.size()) {
    throw DataError("robustness: score size mismatch (" +
                    std::to_string(noisy_scores.size()) + " vs " +
                    std::to_string(clean_scores.size()) + ")");
  }
  if (noisy_scores.rows.empty()) throw DataError("robustness: empty scores");
  if (noisy_scores.columns != 1 || clean_scores.columns != 1) {
    throw DataError("robustness: expected a single score column");
  }
  double noisy_sum = 0.0, clean_sum = 0.0;
  for (std::size_t i = 0; i < noisy_scores.size(); ++i) {
    noisy_sum += noisy_scores.rows[i][0];
    clean_sum += clean_scores.rows[i][0];
  }
  const double n = static_cast<double>(noisy_scores.size());
  return noisy_sum / n - clean_sum / n;
}

// BLEU-substituted robustness: BLEU(noisy, refs) - BLEU(clean, refs).
inline double robustness_bleu(const Corpus& noisy_output,
                              const Corpus& clean_output, const Corpus& refs,
                              const BleuConfig& config = {},
                              unsigned threads = 1) {
  return corpus_bleu(noisy_output, refs, config, threads).score -
         corpus_bleu(clean_output, refs, config, threads).score;
}

namespace detail {

// ASCII whitespace only, independent of the C locale.
inline std::string_view rtrim(std::string_view s) {
  while (!s.empty()) {
    const char c = s.back();
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n' && c != '\f' &&
        c != '\v') {
      break;
    }
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace detail

// Harmonic mean of the two directional BLEU scores plus the fraction of
// byte-identical lines (compared after trimming trailing whitespace).
inline StabilityResult stability(const Corpus& a, const Corpus& b,
                                 const BleuConfig& config = {},
                                 unsigned threads = 1) {
  if (a.size() != b.size()) {
    throw DataError("corpus size mismatch: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()) + " lines");
  }
  StabilityResult result;
  result.stability = harmonic_mean(corpus_bleu(a, b, config, threads).score,
                                   corpus_bleu(b, a, config, threads).score);
  std::size_t matches = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (detail::rtrim(a.lines[i]) == detail::rtrim(b.lines[i])) ++matches;
  }
  result.exact_match_rate =
      a.empty() ? 0.0
                : static_cast<double>(matches) / static_cast<double>(a.size());
  return result;
}

// Arithmetic mean of a metric computed in both update directions.
inline double symmetrize(double forward, double backward) {
  return 0.5 * (forward + backward);
}

}  // namespace inertia

#endif  // INERTIA_METRICS_HPP_
