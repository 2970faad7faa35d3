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

// Diagonal-prior lexical alignment model (reparameterized IBM Model 2)
// trained with EM, a Viterbi decoder, and the conditional-entropy corpus
// complexity measure computed from Viterbi-aligned data.
//
// The alignment prior for target position i (1..m) and source position j
// (1..n) is (1-p0) * exp(lambda * h) / Z_i with h = -|i/m - j/n|; j = 0 is
// the NULL word with fixed probability p0.

#ifndef INERTIA_ALIGN_HPP_
#define INERTIA_ALIGN_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "inertia/corpus.hpp"
#include "inertia/errors.hpp"
#include "inertia/parallel.hpp"
#include "inertia/rng.hpp"
#include "inertia/text.hpp"

namespace inertia {

struct AlignConfig {
  int iterations = 5;
  double p0 = 0.08;
  double lambda = 4.0;
  double dirichlet_alpha = 0.0;  // 0 = plain EM
  std::optional<std::size_t> sample_size;  // unset = whole corpus
  std::uint64_t seed = 0;
  bool tune_lambda = false;
  bool lowercase = false;  // ASCII lowercasing of tokens before training
  unsigned threads = 1;
};

struct AlignmentModel {
  std::vector<std::string> source_vocab;  // id -> word
  std::vector<std::string> target_vocab;
  std::unordered_map<std::string, int> source_index;
  std::unordered_map<std::string, int> target_index;
  // t[x] maps target id -> p(target | source); row source_vocab.size() is NULL.
  std::vector<std::unordered_map<int, double>> t;
  double lambda = 4.0;
  double p0 = 0.08;
  std::vector<double> log_likelihoods;  // one entry per EM iteration

  std::size_t null_row() const { return source_vocab.size(); }
};

struct AlignedPair {
  TokenSequence source_tokens;
  TokenSequence target_tokens;
  // Per target position: linked source position, or nullopt for NULL.
  std::vector<std::optional<std::size_t>> links;
};

namespace align_detail {

inline double diagonal_h(std::size_t i, std::size_t j, std::size_t m,
                         std::size_t n) {
  return -std::fabs(static_cast<double>(i) / static_cast<double>(m) -
                    static_cast<double>(j) / static_cast<double>(n));
}

inline double prior_normalizer(std::size_t i, std::size_t m, std::size_t n,
                               double lambda) {
  double z = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    z += std::exp(lambda * diagonal_h(i, j, m, n));
  }
  return z;
}

inline std::string ascii_lower(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

}  // namespace align_detail

// Alignment prior for target position i in 1..m and source position j in
// 0..n, where j = 0 is the NULL word.
inline double diagonal_prior(std::size_t i, std::size_t j, std::size_t m,
                             std::size_t n, double lambda, double p0) {
  if (m == 0 || n == 0 || i < 1 || i > m || j > n) {
    throw UsageError("diagonal_prior: position out of range");
  }
  if (j == 0) return p0;
  const double z = align_detail::prior_normalizer(i, m, n, lambda);
  return (1.0 - p0) * std::exp(lambda * align_detail::diagonal_h(i, j, m, n)) / z;
}

namespace align_detail {

struct TokenizedBitext {
  std::vector<std::vector<int>> source_ids;  // one entry per usable pair
  std::vector<std::vector<int>> target_ids;
  std::vector<std::size_t> pair_index;       // original line numbers
  std::vector<std::string> source_vocab;
  std::vector<std::string> target_vocab;
  std::unordered_map<std::string, int> source_index;
  std::unordered_map<std::string, int> target_index;
};

inline int intern(const std::string& word,
                  std::unordered_map<std::string, int>& index,
                  std::vector<std::string>& vocab) {
  const auto it = index.find(word);
  if (it != index.end()) return it->second;
  const int id = static_cast<int>(vocab.size());
  vocab.push_back(word);
  index.emplace(word, id);
  return id;
}

inline TokenizedBitext tokenize_bitext(const Corpus& source, const Corpus& target,
                                       bool lowercase,
                                       std::vector<std::string>* warnings) {
  if (source.size() != target.size()) {
    throw DataError("corpus size mismatch: " + std::to_string(source.size()) +
                    " source vs " + std::to_string(target.size()) +
                    " target lines");
  }
  if (source.empty()) throw DataError("empty corpus");
  TokenizedBitext bitext;
  for (std::size_t line = 0; line < source.size(); ++line) {
    TokenSequence src_tokens = tokenize_whitespace(source.lines[line]);
    TokenSequence tgt_tokens = tokenize_whitespace(target.lines[line]);
    if (src_tokens.empty() || tgt_tokens.empty()) {
      if (warnings) {
        warnings->push_back("line " + std::to_string(line + 1) +
                            ": empty side, pair skipped");
      }
      continue;
    }
    std::vector<int> src_ids, tgt_ids;
    src_ids.reserve(src_tokens.size());
    tgt_ids.reserve(tgt_tokens.size());
    for (std::string& w : src_tokens) {
      if (lowercase) w = ascii_lower(std::move(w));
      src_ids.push_back(intern(w, bitext.source_index, bitext.source_vocab));
    }
    for (std::string& w : tgt_tokens) {
      if (lowercase) w = ascii_lower(std::move(w));
      tgt_ids.push_back(intern(w, bitext.target_index, bitext.target_vocab));
    }
    bitext.source_ids.push_back(std::move(src_ids));
    bitext.target_ids.push_back(std::move(tgt_ids));
    bitext.pair_index.push_back(line);
  }
  if (bitext.source_ids.empty()) {
    throw DataError("alignment training: no usable sentence pairs");
  }
  return bitext;
}

struct EStepChunk {
  double log_likelihood = 0.0;
  double posterior_h_sum = 0.0;    // sum of gamma * h over non-NULL links
  double posterior_h_mass = 0.0;   // sum of gamma over non-NULL links
  // (x * T + y, expected count), combined per key in canonical sorted order
  std::vector<std::pair<std::uint64_t, double>> counts;
};

// Sort contributions and sum runs of equal keys. Canonical order, so the
// result depends only on the chunk's contents.
inline void combine_contributions(
    std::vector<std::pair<std::uint64_t, double>>& entries) {
  std::sort(entries.begin(), entries.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < entries.size();) {
    std::uint64_t key = entries[i].first;
    double sum = 0.0;
    while (i < entries.size() && entries[i].first == key) {
      sum += entries[i].second;
      ++i;
    }
    entries[out++] = {key, sum};
  }
  entries.resize(out);
}

// Mean prior-expected diagonal proximity per target token for the given
// sentence shapes, as a function of lambda. Monotone increasing in lambda.
inline double expected_h(const std::vector<std::pair<std::uint64_t, std::size_t>>& shapes,
                         double lambda) {
  double h_sum = 0.0;
  double tokens = 0.0;
  for (const auto& [packed, count] : shapes) {
    const std::size_t m = static_cast<std::size_t>(packed >> 32);
    const std::size_t n = static_cast<std::size_t>(packed & 0xFFFFFFFFULL);
    double sentence_h = 0.0;
    for (std::size_t i = 1; i <= m; ++i) {
      double z = 0.0, num = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double h = diagonal_h(i, j, m, n);
        const double e = std::exp(lambda * h);
        z += e;
        num += e * h;
      }
      sentence_h += num / z;
    }
    h_sum += sentence_h * static_cast<double>(count);
    tokens += static_cast<double>(m * count);
  }
  return h_sum / tokens;
}

inline double golden_section_lambda(
    const std::vector<std::pair<std::uint64_t, std::size_t>>& shapes,
    double target, double lo, double hi, int steps) {
  const double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  auto objective = [&](double lambda) {
    return std::fabs(expected_h(shapes, lambda) - target);
  };
  double fc = objective(c), fd = objective(d);
  for (int s = 0; s < steps; ++s) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = objective(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace align_detail

// EM training of the translation table under the diagonal prior. With plain
// EM (dirichlet_alpha = 0) the recorded per-iteration corpus log-likelihood
// is non-decreasing.
inline AlignmentModel train(const Corpus& source, const Corpus& target,
                            const AlignConfig& config = {},
                            std::vector<std::string>* warnings = nullptr) {
  if (config.iterations < 1) throw UsageError("align: iterations must be >= 1");
  if (!(config.p0 > 0.0 && config.p0 < 1.0)) {
    throw UsageError("align: p0 must be in (0,1)");
  }
  if (!(config.lambda > 0.0)) throw UsageError("align: lambda must be > 0");
  if (config.dirichlet_alpha < 0.0) {
    throw UsageError("align: dirichlet alpha must be >= 0");
  }

  using align_detail::EStepChunk;
  auto bitext = align_detail::tokenize_bitext(source, target, config.lowercase,
                                              warnings);
  const std::size_t n_pairs = bitext.source_ids.size();
  const std::size_t s_vocab = bitext.source_vocab.size();
  const std::size_t t_vocab = bitext.target_vocab.size();
  const std::size_t null_row = s_vocab;

  // co-occurrence support; the NULL row supports every target type
  std::vector<std::unordered_set<int>> support(s_vocab);
  for (std::size_t p = 0; p < n_pairs; ++p) {
    for (const int x : bitext.source_ids[p]) {
      for (const int y : bitext.target_ids[p]) {
        support[static_cast<std::size_t>(x)].insert(y);
      }
    }
  }

  AlignmentModel model;
  model.source_vocab = std::move(bitext.source_vocab);
  model.target_vocab = std::move(bitext.target_vocab);
  model.source_index = std::move(bitext.source_index);
  model.target_index = std::move(bitext.target_index);
  model.lambda = config.lambda;
  model.p0 = config.p0;
  model.t.assign(s_vocab + 1, {});
  const double uniform = 1.0 / static_cast<double>(t_vocab);
  for (std::size_t x = 0; x < s_vocab; ++x) {
    for (const int y : support[x]) model.t[x].emplace(y, uniform);
  }
  for (std::size_t y = 0; y < t_vocab; ++y) {
    model.t[null_row].emplace(static_cast<int>(y), uniform);
  }

  // sentence shape histogram, used only when tuning lambda
  std::vector<std::pair<std::uint64_t, std::size_t>> shapes;
  if (config.tune_lambda) {
    std::unordered_map<std::uint64_t, std::size_t> shape_counts;
    for (std::size_t p = 0; p < n_pairs; ++p) {
      const std::uint64_t packed =
          (static_cast<std::uint64_t>(bitext.target_ids[p].size()) << 32) |
          static_cast<std::uint64_t>(bitext.source_ids[p].size());
      ++shape_counts[packed];
    }
    shapes.assign(shape_counts.begin(), shape_counts.end());
    std::sort(shapes.begin(), shapes.end());
  }

  const unsigned threads = resolve_threads(config.threads);
  for (int iteration = 0; iteration < config.iterations; ++iteration) {
    auto chunk_results = map_chunks<EStepChunk>(
        n_pairs, 256, threads, [&](std::size_t begin, std::size_t end) {
          EStepChunk chunk;
          std::vector<double> scores;
          std::vector<double> prior_row;
          for (std::size_t p = begin; p < end; ++p) {
            const auto& src = bitext.source_ids[p];
            const auto& tgt = bitext.target_ids[p];
            const std::size_t n = src.size();
            const std::size_t m = tgt.size();
            for (std::size_t i = 1; i <= m; ++i) {
              const int y = tgt[i - 1];
              // one exp row per target position, summed in j order like the
              // standalone normalizer
              prior_row.assign(n + 1, 0.0);
              double z = 0.0;
              for (std::size_t j = 1; j <= n; ++j) {
                prior_row[j] = std::exp(model.lambda *
                                        align_detail::diagonal_h(i, j, m, n));
                z += prior_row[j];
              }
              scores.assign(n + 1, 0.0);
              const auto null_it = model.t[null_row].find(y);
              scores[0] = config.p0 * (null_it != model.t[null_row].end()
                                           ? null_it->second
                                           : 0.0);
              double denom = scores[0];
              for (std::size_t j = 1; j <= n; ++j) {
                const auto& row = model.t[static_cast<std::size_t>(src[j - 1])];
                const auto it = row.find(y);
                const double lex = it != row.end() ? it->second : 0.0;
                scores[j] = (1.0 - config.p0) * prior_row[j] / z * lex;
                denom += scores[j];
              }
              if (denom <= 0.0) continue;
              chunk.log_likelihood += std::log(denom);
              const std::uint64_t y64 = static_cast<std::uint64_t>(y);
              chunk.counts.emplace_back(
                  static_cast<std::uint64_t>(null_row) * t_vocab + y64,
                  scores[0] / denom);
              for (std::size_t j = 1; j <= n; ++j) {
                const double gamma = scores[j] / denom;
                chunk.counts.emplace_back(
                    static_cast<std::uint64_t>(src[j - 1]) * t_vocab + y64,
                    gamma);
                if (config.tune_lambda) {
                  chunk.posterior_h_sum +=
                      gamma * align_detail::diagonal_h(i, j, m, n);
                  chunk.posterior_h_mass += gamma;
                }
              }
            }
          }
          align_detail::combine_contributions(chunk.counts);
          return chunk;
        });

    // merge in chunk order so totals do not depend on the thread count
    double log_likelihood = 0.0;
    double posterior_h_sum = 0.0, posterior_h_mass = 0.0;
    std::vector<std::unordered_map<int, double>> counts(s_vocab + 1);
    for (const EStepChunk& chunk : chunk_results) {
      log_likelihood += chunk.log_likelihood;
      posterior_h_sum += chunk.posterior_h_sum;
      posterior_h_mass += chunk.posterior_h_mass;
      for (const auto& [key, value] : chunk.counts) {
        counts[static_cast<std::size_t>(key / t_vocab)]
              [static_cast<int>(key % t_vocab)] += value;
      }
    }
    model.log_likelihoods.push_back(log_likelihood);

    // M-step over sorted keys for bit-stable row sums
    for (std::size_t x = 0; x <= s_vocab; ++x) {
      std::vector<std::pair<int, double>> row(counts[x].begin(),
                                              counts[x].end());
      if (config.dirichlet_alpha > 0.0) {
        if (x < s_vocab) {
          for (const int y : support[x]) {
            if (counts[x].find(y) == counts[x].end()) row.emplace_back(y, 0.0);
          }
        } else {
          for (std::size_t y = 0; y < t_vocab; ++y) {
            if (counts[x].find(static_cast<int>(y)) == counts[x].end()) {
              row.emplace_back(static_cast<int>(y), 0.0);
            }
          }
        }
      }
      std::sort(row.begin(), row.end());
      double sum = 0.0;
      for (auto& [y, c] : row) {
        c += config.dirichlet_alpha;
        sum += c;
      }
      model.t[x].clear();
      if (sum <= 0.0) continue;
      for (const auto& [y, c] : row) {
        model.t[x].emplace(y, c / sum);
      }
    }

    if (config.tune_lambda && posterior_h_mass > 0.0) {
      model.lambda = align_detail::golden_section_lambda(
          shapes, posterior_h_sum / posterior_h_mass, 0.25, 16.0, 8);
    }
  }
  return model;
}

// Hard alignment: for each target position, the argmax over NULL and all
// source positions of prior * t. Ties go to the smallest source index and
// NULL loses ties. Unseen words fall back to a 1e-12 lexical floor.
inline AlignedPair viterbi_align(const AlignmentModel& model,
                                 const TokenSequence& source,
                                 const TokenSequence& target) {
  if (source.empty() || target.empty()) {
    throw DataError("viterbi_align: empty token sequence");
  }
  constexpr double kFloor = 1e-12;
  const std::size_t n = source.size();
  const std::size_t m = target.size();
  const std::size_t null_row = model.null_row();

  AlignedPair pair;
  pair.source_tokens = source;
  pair.target_tokens = target;
  pair.links.resize(m);

  std::vector<int> src_ids(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    const auto it = model.source_index.find(source[j]);
    if (it != model.source_index.end()) src_ids[j] = it->second;
  }

  std::vector<double> prior_row;
  for (std::size_t i = 1; i <= m; ++i) {
    const auto y_it = model.target_index.find(target[i - 1]);
    const int y = y_it != model.target_index.end() ? y_it->second : -1;
    prior_row.assign(n + 1, 0.0);
    double z = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
      prior_row[j] =
          std::exp(model.lambda * align_detail::diagonal_h(i, j, m, n));
      z += prior_row[j];
    }

    auto lexical = [&](std::size_t row_index) {
      if (y < 0) return kFloor;
      const auto& row = model.t[row_index];
      const auto it = row.find(y);
      return it != row.end() ? it->second : kFloor;
    };

    double best_score = -1.0;
    std::size_t best_j = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      const double lex =
          src_ids[j - 1] >= 0
              ? lexical(static_cast<std::size_t>(src_ids[j - 1]))
              : kFloor;
      const double score = (1.0 - model.p0) * prior_row[j] / z * lex;
      if (score > best_score) {
        best_score = score;
        best_j = j;
      }
    }
    const double null_score = model.p0 * lexical(null_row);
    if (null_score > best_score) {
      pair.links[i - 1] = std::nullopt;
    } else {
      pair.links[i - 1] = best_j - 1;
    }
  }
  return pair;
}

// Trains on the whole bitext, Viterbi-aligns the (sampled) corpus and returns
// the mean, over source types with at least one non-NULL link, of the natural
// entropy of the empirical aligned-target distribution. NULL-linked target
// tokens are excluded. When aligned_out is given it receives one entry per
// sampled pair, in sampled order (empty-side pairs yield empty link lists).
inline double complexity(const Corpus& source, const Corpus& target,
                         const AlignConfig& config = {},
                         std::vector<AlignedPair>* aligned_out = nullptr,
                         std::vector<std::string>* warnings = nullptr) {
  const AlignmentModel model = train(source, target, config, warnings);

  std::vector<std::size_t> sampled(source.size());
  for (std::size_t i = 0; i < sampled.size(); ++i) sampled[i] = i;
  if (config.sample_size && *config.sample_size < sampled.size()) {
    if (*config.sample_size == 0) {
      throw UsageError("complexity: sample size must be >= 1");
    }
    SplitMix64 rng(config.seed);
    for (std::size_t i = 0; i < *config.sample_size; ++i) {
      const std::size_t j = i + rng.next_index(sampled.size() - i);
      std::swap(sampled[i], sampled[j]);
    }
    sampled.resize(*config.sample_size);
    std::sort(sampled.begin(), sampled.end());
  }

  std::vector<AlignedPair> aligned(sampled.size());
  map_chunks<int>(
      sampled.size(), 256, resolve_threads(config.threads),
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
          const std::size_t line = sampled[k];
          TokenSequence src = tokenize_whitespace(source.lines[line]);
          TokenSequence tgt = tokenize_whitespace(target.lines[line]);
          if (config.lowercase) {
            for (std::string& w : src) {
              w = align_detail::ascii_lower(std::move(w));
            }
            for (std::string& w : tgt) {
              w = align_detail::ascii_lower(std::move(w));
            }
          }
          if (src.empty() || tgt.empty()) {
            aligned[k] = AlignedPair{std::move(src), std::move(tgt), {}};
          } else {
            aligned[k] = viterbi_align(model, src, tgt);
          }
        }
        return 0;
      });

  std::unordered_map<int, std::unordered_map<int, std::int64_t>> counts;
  for (const AlignedPair& pair : aligned) {
    for (std::size_t i = 0; i < pair.links.size(); ++i) {
      if (!pair.links[i]) continue;
      const auto x_it =
          model.source_index.find(pair.source_tokens[*pair.links[i]]);
      const auto y_it = model.target_index.find(pair.target_tokens[i]);
      if (x_it == model.source_index.end() ||
          y_it == model.target_index.end()) {
        continue;  // token outside the model vocabulary
      }
      ++counts[x_it->second][y_it->second];
    }
  }
  if (aligned_out) *aligned_out = std::move(aligned);
  if (counts.empty()) {
    throw DataError("complexity: no non-NULL alignment links");
  }

  std::vector<int> source_types;
  source_types.reserve(counts.size());
  for (const auto& [x, _] : counts) source_types.push_back(x);
  std::sort(source_types.begin(), source_types.end());

  double entropy_sum = 0.0;
  for (const int x : source_types) {
    std::vector<std::pair<int, std::int64_t>> row(counts[x].begin(),
                                                  counts[x].end());
    std::sort(row.begin(), row.end());
    std::int64_t total = 0;
    for (const auto& [y, c] : row) total += c;
    double h = 0.0;
    for (const auto& [y, c] : row) {
      const double p = static_cast<double>(c) / static_cast<double>(total);
      if (p > 0.0 && p < 1.0) h -= p * std::log(p);
    }
    entropy_sum += h;
  }
  return entropy_sum / static_cast<double>(source_types.size());
}

// Pharaoh-style dump line: space-separated "t-s" pairs, 0-based, where t is
// the target position and s the linked source position; NULL links omitted.
inline std::string pharaoh_line(const AlignedPair& pair) {
  std::string out;
  for (std::size_t i = 0; i < pair.links.size(); ++i) {
    if (!pair.links[i]) continue;
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(i);
    out.push_back('-');
    out += std::to_string(*pair.links[i]);
  }
  return out;
}

}  // namespace inertia

#endif  // INERTIA_ALIGN_HPP_
