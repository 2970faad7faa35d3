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

// Corpus BLEU with mteval exponential smoothing and 13a tokenization, the
// defaults matching the standard scorer signature
// nrefs:1|case:mixed|eff:no|tok:13a|smooth:exp. Also provides the
// harmonic-mean combinator and a paired bootstrap confidence interval.

#ifndef INERTIA_BLEU_HPP_
#define INERTIA_BLEU_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "inertia/corpus.hpp"
#include "inertia/errors.hpp"
#include "inertia/parallel.hpp"
#include "inertia/rng.hpp"
#include "inertia/text.hpp"

namespace inertia {

enum class TokenizerKind { k13a, kWhitespace, kNone };

struct BleuConfig {
  int max_order = 4;
  bool exponential_smoothing = true;
  bool effective_order = false;
  TokenizerKind tokenizer = TokenizerKind::k13a;
};

struct BleuScore {
  double score = 0.0;                 // 0..100
  std::vector<double> precisions;     // one per order, 0..100
  double brevity_penalty = 1.0;
  std::int64_t hyp_len = 0;
  std::int64_t ref_len = 0;
};

// Order-wise clipped match and total counts plus token lengths. Integer
// sums, so accumulation over segments is exact and order-independent.
struct BleuStats {
  std::vector<std::int64_t> correct;
  std::vector<std::int64_t> total;
  std::int64_t hyp_len = 0;
  std::int64_t ref_len = 0;

  explicit BleuStats(int max_order = 4)
      : correct(static_cast<std::size_t>(max_order), 0),
        total(static_cast<std::size_t>(max_order), 0) {}
  BleuStats() : BleuStats(4) {}

  BleuStats& operator+=(const BleuStats& o) {
    for (std::size_t n = 0; n < correct.size(); ++n) {
      correct[n] += o.correct[n];
      total[n] += o.total[n];
    }
    hyp_len += o.hyp_len;
    ref_len += o.ref_len;
    return *this;
  }
};

inline TokenSequence tokenize(std::string_view line, TokenizerKind kind) {
  switch (kind) {
    case TokenizerKind::k13a:
      return tokenize_13a(line);
    case TokenizerKind::kWhitespace:
    case TokenizerKind::kNone:
      // kNone assumes pre-tokenized input, which splits the same way.
      return tokenize_whitespace(line);
  }
  return {};
}

namespace detail {

// n-gram key: tokens joined with an unlikely separator byte.
inline std::string ngram_key(const TokenSequence& tokens, std::size_t start,
                             std::size_t n) {
  std::string key;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) key.push_back('\x1f');
    key += tokens[start + k];
  }
  return key;
}

inline std::unordered_map<std::string, std::int64_t> ngram_counts(
    const TokenSequence& tokens, std::size_t n) {
  std::unordered_map<std::string, std::int64_t> counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[ngram_key(tokens, i, n)];
  }
  return counts;
}

}  // namespace detail

inline BleuStats segment_bleu_stats(const TokenSequence& hyp,
                                    const TokenSequence& ref, int max_order) {
  BleuStats stats(max_order);
  stats.hyp_len = static_cast<std::int64_t>(hyp.size());
  stats.ref_len = static_cast<std::int64_t>(ref.size());
  for (int n = 1; n <= max_order; ++n) {
    const std::size_t un = static_cast<std::size_t>(n);
    if (hyp.size() < un) break;
    stats.total[un - 1] +=
        static_cast<std::int64_t>(hyp.size() - un + 1);
    const auto ref_counts = detail::ngram_counts(ref, un);
    for (const auto& [key, count] : detail::ngram_counts(hyp, un)) {
      const auto it = ref_counts.find(key);
      if (it != ref_counts.end()) {
        stats.correct[un - 1] += std::min(count, it->second);
      }
    }
  }
  return stats;
}

// Score from accumulated sufficient statistics. Exponential smoothing is the
// mteval scheme: a running value s starts at 1 and doubles at each order with
// zero matches, which then scores 100/(s * total_n). Orders with no n-grams
// at all contribute log 0, driving the score to 0 unless effective_order
// trims them.
inline BleuScore bleu_from_stats(const BleuStats& stats,
                                 const BleuConfig& config = {}) {
  const int max_order = config.max_order;
  BleuScore result;
  result.hyp_len = stats.hyp_len;
  result.ref_len = stats.ref_len;
  result.precisions.assign(static_cast<std::size_t>(max_order), 0.0);

  double smooth = 1.0;
  int effective = max_order;
  for (int n = 1; n <= max_order; ++n) {
    const std::size_t idx = static_cast<std::size_t>(n - 1);
    if (stats.total[idx] == 0) break;
    if (config.effective_order) effective = n;
    if (stats.correct[idx] == 0) {
      if (config.exponential_smoothing) {
        smooth *= 2.0;
        result.precisions[idx] =
            100.0 / (smooth * static_cast<double>(stats.total[idx]));
      }
    } else {
      result.precisions[idx] = 100.0 * static_cast<double>(stats.correct[idx]) /
                               static_cast<double>(stats.total[idx]);
    }
  }

  result.brevity_penalty = 1.0;
  if (stats.hyp_len < stats.ref_len) {
    result.brevity_penalty =
        stats.hyp_len > 0
            ? std::exp(1.0 - static_cast<double>(stats.ref_len) /
                                 static_cast<double>(stats.hyp_len))
            : 0.0;
  }

  // geometric mean over the 0..1 scale so a perfect match scores exactly 100
  double log_sum = 0.0;
  for (int n = 0; n < effective; ++n) {
    const double p = result.precisions[static_cast<std::size_t>(n)];
    log_sum += p > 0.0 ? std::log(p / 100.0) : -9999999999.0;
  }
  result.score = result.brevity_penalty * 100.0 *
                 std::exp(log_sum / static_cast<double>(effective));
  return result;
}

inline std::vector<BleuStats> per_segment_bleu_stats(const Corpus& hypotheses,
                                                     const Corpus& references,
                                                     const BleuConfig& config,
                                                     unsigned threads = 1) {
  if (hypotheses.size() != references.size()) {
    throw DataError("corpus size mismatch: " +
                    std::to_string(hypotheses.size()) + " hypotheses vs " +
                    std::to_string(references.size()) + " references");
  }
  if (hypotheses.empty()) throw DataError("empty corpus");
  if (config.max_order < 1) throw UsageError("bleu: max_order must be >= 1");

  std::vector<BleuStats> segment_stats(hypotheses.size(),
                                       BleuStats(config.max_order));
  map_chunks<int>(hypotheses.size(), 256, resolve_threads(threads),
                  [&](std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      segment_stats[i] = segment_bleu_stats(
                          tokenize(hypotheses.lines[i], config.tokenizer),
                          tokenize(references.lines[i], config.tokenizer),
                          config.max_order);
                    }
                    return 0;
                  });
  return segment_stats;
}

inline BleuScore corpus_bleu(const Corpus& hypotheses, const Corpus& references,
                             const BleuConfig& config = {},
                             unsigned threads = 1) {
  BleuStats acc(config.max_order);
  for (const BleuStats& s :
       per_segment_bleu_stats(hypotheses, references, config, threads)) {
    acc += s;
  }
  return bleu_from_stats(acc, config);
}

// 2ab/(a+b), defined as 0 when a + b = 0. Equal inputs return exactly that
// input, keeping H(x,x) = x free of rounding.
inline double harmonic_mean(double a, double b) {
  if (a < 0.0 || b < 0.0) throw UsageError("harmonic_mean: negative input");
  if (a == b) return a;
  const double sum = a + b;
  if (sum == 0.0) return 0.0;
  return 2.0 * a * b / sum;
}

namespace detail {

// Linear interpolation between closest ranks on a sorted sample.
inline double quantile_sorted(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[lo + 1] - sorted[lo]) * frac;
}

}  // namespace detail

// Paired bootstrap over segments: resample segment indices with replacement,
// score each resample, report the 2.5th/97.5th percentiles. Deterministic
// given the seed.
inline std::pair<double, double> bootstrap_ci(const Corpus& hypotheses,
                                              const Corpus& references,
                                              const BleuConfig& config,
                                              int resamples,
                                              std::uint64_t seed,
                                              unsigned threads = 1) {
  if (resamples < 100) throw UsageError("bootstrap: resamples must be >= 100");
  const std::vector<BleuStats> segment_stats =
      per_segment_bleu_stats(hypotheses, references, config, threads);
  const std::size_t n = segment_stats.size();

  SplitMix64 rng(seed);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(resamples));
  for (int r = 0; r < resamples; ++r) {
    BleuStats acc(config.max_order);
    for (std::size_t k = 0; k < n; ++k) {
      acc += segment_stats[rng.next_index(n)];
    }
    values.push_back(bleu_from_stats(acc, config).score);
  }
  std::sort(values.begin(), values.end());
  return {detail::quantile_sorted(values, 0.025),
          detail::quantile_sorted(values, 0.975)};
}

}  // namespace inertia

#endif  // INERTIA_BLEU_HPP_
