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

// Seeded splitmix64 generator and the synthetic-misspelling transform.
// Every random decision is pinned to the splitmix64 sequence so outputs are
// byte-reproducible across platforms, runs and thread counts.

#ifndef INERTIA_NOISE_HPP_
#define INERTIA_NOISE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "inertia/corpus.hpp"
#include "inertia/errors.hpp"
#include "inertia/parallel.hpp"
#include "inertia/rng.hpp"
#include "inertia/text.hpp"

namespace inertia {

enum class EditStrategy { kDelete, kInsert, kSubstitute };

struct NoiseConfig {
  double p = 0.1;
  std::vector<EditStrategy> strategies = {
      EditStrategy::kDelete, EditStrategy::kInsert, EditStrategy::kSubstitute};
  std::u32string alphabet = U"abcdefghijklmnopqrstuvwxyz";
  std::uint64_t seed = 0;
};

struct NoiseStats {
  std::uint64_t lines = 0;
  std::uint64_t words = 0;
  std::uint64_t selected = 0;
  std::uint64_t deletes = 0;
  std::uint64_t inserts = 0;
  std::uint64_t substitutes = 0;
  std::uint64_t substitute_collisions = 0;  // substitution re-drew the original char
  std::uint64_t skipped_no_strategy = 0;

  NoiseStats& operator+=(const NoiseStats& o) {
    lines += o.lines;
    words += o.words;
    selected += o.selected;
    deletes += o.deletes;
    inserts += o.inserts;
    substitutes += o.substitutes;
    substitute_collisions += o.substitute_collisions;
    skipped_no_strategy += o.skipped_no_strategy;
    return *this;
  }
};

namespace detail {

inline void validate_noise_config(const NoiseConfig& config) {
  if (config.strategies.empty()) throw UsageError("noise: empty strategy set");
  if (config.alphabet.empty()) throw UsageError("noise: empty alphabet");
  if (config.p < 0.0 || config.p > 1.0)
    throw UsageError("noise: probability must be in [0,1]");
}

// Strategies eligible for a word of the given length. Deletion is excluded
// for single-character words so no token ever becomes empty.
inline std::vector<EditStrategy> eligible_strategies(
    const NoiseConfig& config, std::size_t word_len) {
  std::vector<EditStrategy> out;
  out.reserve(config.strategies.size());
  for (EditStrategy s : config.strategies) {
    if (s == EditStrategy::kDelete && word_len <= 1) continue;
    out.push_back(s);
  }
  return out;
}

// Draw order is part of the reproducibility contract: strategy index, then
// position index, then alphabet index (twice for a substitution collision).
inline std::u32string apply_one_edit(const std::u32string& word,
                                     SplitMix64& rng,
                                     const NoiseConfig& config,
                                     const std::vector<EditStrategy>& eligible,
                                     NoiseStats* stats) {
  const EditStrategy strategy = eligible[rng.next_index(eligible.size())];
  std::u32string out = word;
  switch (strategy) {
    case EditStrategy::kDelete: {
      const std::size_t pos = rng.next_index(out.size());
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
      if (stats) ++stats->deletes;
      break;
    }
    case EditStrategy::kInsert: {
      const std::size_t pos = rng.next_index(out.size() + 1);
      const char32_t c = config.alphabet[rng.next_index(config.alphabet.size())];
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), c);
      if (stats) ++stats->inserts;
      break;
    }
    case EditStrategy::kSubstitute: {
      const std::size_t pos = rng.next_index(out.size());
      char32_t c = config.alphabet[rng.next_index(config.alphabet.size())];
      if (c == out[pos]) {
        // re-draw once, then accept whatever comes up
        c = config.alphabet[rng.next_index(config.alphabet.size())];
      }
      if (stats) {
        ++stats->substitutes;
        if (c == out[pos]) ++stats->substitute_collisions;
      }
      out[pos] = c;
      break;
    }
  }
  return out;
}

}  // namespace detail

// Apply exactly one character edit to a non-empty word.
inline std::string misspell_word(std::string_view word, SplitMix64& rng,
                                 const NoiseConfig& config) {
  detail::validate_noise_config(config);
  const std::u32string w = utf8::decode_or_throw(word, "misspell_word");
  if (w.empty()) throw DataError("misspell_word: empty word");
  const auto eligible = detail::eligible_strategies(config, w.size());
  if (eligible.empty()) throw DataError("no eligible strategy");
  return utf8::encode(detail::apply_one_edit(w, rng, config, eligible, nullptr));
}

// Misspell each whitespace word independently with probability config.p.
// Line i uses a substream seeded with mix(seed XOR i), so output does not
// depend on line processing order or thread count. Words are re-joined with
// single spaces. Words selected under a strategy set that leaves them no
// eligible edit (e.g. delete-only on a one-character word) pass through
// unchanged.
inline Corpus misspell_corpus(const Corpus& corpus, const NoiseConfig& config,
                              unsigned threads = 1,
                              NoiseStats* stats = nullptr) {
  detail::validate_noise_config(config);
  const std::size_t n = corpus.lines.size();
  std::vector<std::string> out_lines(n);

  struct ChunkResult {
    NoiseStats stats;
  };
  auto chunk_results = map_chunks<ChunkResult>(
      n, 256, resolve_threads(threads),
      [&](std::size_t begin, std::size_t end) {
        ChunkResult result;
        for (std::size_t i = begin; i < end; ++i) {
          SplitMix64 rng(SplitMix64::mix(config.seed ^ static_cast<std::uint64_t>(i)));
          const TokenSequence words = tokenize_whitespace(corpus.lines[i]);
          std::string joined;
          bool first = true;
          for (const std::string& word : words) {
            ++result.stats.words;
            std::string replacement = word;
            if (rng.next_real() < config.p) {
              const std::u32string w = utf8::decode_or_throw(word, "misspell_corpus");
              const auto eligible = detail::eligible_strategies(config, w.size());
              if (eligible.empty()) {
                ++result.stats.skipped_no_strategy;
              } else {
                ++result.stats.selected;
                replacement = utf8::encode(detail::apply_one_edit(
                    w, rng, config, eligible, &result.stats));
              }
            }
            if (!first) joined.push_back(' ');
            joined += replacement;
            first = false;
          }
          out_lines[i] = std::move(joined);
          ++result.stats.lines;
        }
        return result;
      });

  if (stats) {
    *stats = NoiseStats{};
    for (const auto& c : chunk_results) *stats += c.stats;
  }
  Corpus out;
  out.lines = std::move(out_lines);
  out.origin = corpus.origin;
  return out;
}

}  // namespace inertia

#endif  // INERTIA_NOISE_HPP_
