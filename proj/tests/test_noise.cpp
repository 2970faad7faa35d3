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

#include "inertia/noise.hpp"

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "inertia/text.hpp"

namespace {

using inertia::Corpus;
using inertia::EditStrategy;
using inertia::levenshtein;
using inertia::misspell_corpus;
using inertia::misspell_word;
using inertia::NoiseConfig;
using inertia::NoiseStats;
using inertia::SplitMix64;

// Hand-traced first output of the splitmix64 recurrence from state 0.
TEST(SplitMix64Prng, FirstOutputFromSeedZero) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
}

TEST(SplitMix64Prng, RealsAreInUnitInterval) {
  SplitMix64 rng(987654321);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.next_real();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(SplitMix64Prng, MixMatchesFirstOutput) {
  EXPECT_EQ(SplitMix64::mix(0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(SplitMix64::mix(42), SplitMix64(42).next());
}

TEST(MisspellWord, SingleEditDistance) {
  NoiseConfig config;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SplitMix64 rng(seed);
    const std::string out = misspell_word("cat", rng, config);
    EXPECT_LE(levenshtein(out, "cat"), 1u);
    EXPECT_FALSE(out.empty());
  }
}

TEST(MisspellWord, DeleteOnlyOnSingleCharWordFails) {
  NoiseConfig config;
  config.strategies = {EditStrategy::kDelete};
  SplitMix64 rng(1);
  try {
    misspell_word("a", rng, config);
    FAIL() << "expected DataError";
  } catch (const inertia::DataError& e) {
    EXPECT_STREQ(e.what(), "no eligible strategy");
  }
}

TEST(MisspellWord, EmptyWordFails) {
  NoiseConfig config;
  SplitMix64 rng(1);
  EXPECT_THROW(misspell_word("", rng, config), inertia::DataError);
}

// Golden outputs, cross-checked against an independent trace of the
// splitmix64 recurrence: the first output 0xE220A8397B1DCDAF mod 3 = 1
// selects insertion, position draw 0, alphabet draw 'b'.
TEST(MisspellWord, GoldenSeedZero) {
  NoiseConfig config;
  SplitMix64 rng(0);
  EXPECT_EQ(misspell_word("hello", rng, config), "bhello");
  SplitMix64 rng2(0);
  config.strategies = {EditStrategy::kSubstitute};
  EXPECT_EQ(misspell_word("hello", rng2, config), "bello");
}

TEST(MisspellWord, UnicodeWordKeepsScalarDistance) {
  NoiseConfig config;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SplitMix64 rng(seed);
    const std::string out = misspell_word("über", rng, config);
    EXPECT_LE(levenshtein(out, "über"), 1u);
  }
}

Corpus make_corpus(std::vector<std::string> lines) {
  Corpus c;
  c.lines = std::move(lines);
  return c;
}

TEST(MisspellCorpus, ZeroProbabilityIsIdentity) {
  const Corpus input =
      make_corpus({"the quick brown fox", "jumps over the lazy dog", ""});
  NoiseConfig config;
  config.p = 0.0;
  config.seed = 9;
  const Corpus out = misspell_corpus(input, config);
  EXPECT_EQ(out.lines, input.lines);
}

TEST(MisspellCorpus, ProbabilityOneEditsEveryWord) {
  const Corpus input = make_corpus({"alpha beta gamma delta", "epsilon zeta"});
  NoiseConfig config;
  config.p = 1.0;
  config.seed = 3;
  NoiseStats stats;
  const Corpus out = misspell_corpus(input, config, 1, &stats);
  EXPECT_EQ(stats.selected, 6u);
  for (std::size_t i = 0; i < input.lines.size(); ++i) {
    const auto in_words = inertia::tokenize_whitespace(input.lines[i]);
    const auto out_words = inertia::tokenize_whitespace(out.lines[i]);
    ASSERT_EQ(in_words.size(), out_words.size());
    for (std::size_t w = 0; w < in_words.size(); ++w) {
      EXPECT_LE(levenshtein(in_words[w], out_words[w]), 1u);
    }
  }
}

TEST(MisspellCorpus, DeterministicAcrossThreadCounts) {
  std::mt19937_64 gen(31);
  Corpus input;
  for (int i = 0; i < 1000; ++i) {
    std::string line;
    const int words = 1 + static_cast<int>(gen() % 12);
    for (int w = 0; w < words; ++w) {
      if (w > 0) line.push_back(' ');
      const int len = 1 + static_cast<int>(gen() % 9);
      for (int k = 0; k < len; ++k) {
        line.push_back(static_cast<char>('a' + gen() % 26));
      }
    }
    input.lines.push_back(line);
  }
  NoiseConfig config;
  config.p = 0.1;
  config.seed = 7;
  const Corpus one = misspell_corpus(input, config, 1);
  const Corpus eight = misspell_corpus(input, config, 8);
  EXPECT_EQ(one.lines, eight.lines);
}

TEST(MisspellCorpus, LineCountAndTokenCountsPreserved) {
  const Corpus input = make_corpus(
      {"one two three four five", "a b c d", "", "single"});
  NoiseConfig config;
  config.p = 1.0;
  config.seed = 11;
  const Corpus out = misspell_corpus(input, config);
  ASSERT_EQ(out.lines.size(), input.lines.size());
  for (std::size_t i = 0; i < input.lines.size(); ++i) {
    EXPECT_EQ(inertia::tokenize_whitespace(out.lines[i]).size(),
              inertia::tokenize_whitespace(input.lines[i]).size());
  }
}

TEST(MisspellCorpus, IneligibleSelectedWordsPassThrough) {
  const Corpus input = make_corpus({"a a a a a a a a"});
  NoiseConfig config;
  config.p = 1.0;
  config.strategies = {EditStrategy::kDelete};
  config.seed = 5;
  NoiseStats stats;
  const Corpus out = misspell_corpus(input, config, 1, &stats);
  EXPECT_EQ(out.lines[0], input.lines[0]);
  EXPECT_EQ(stats.skipped_no_strategy, 8u);
  EXPECT_EQ(stats.selected, 0u);
}

TEST(MisspellCorpus, SelectionFractionNearProbability) {
  std::mt19937_64 gen(77);
  Corpus input;
  std::string line;
  int words_in_line = 0;
  int total_words = 0;
  while (total_words < 10000) {
    if (words_in_line > 0) line.push_back(' ');
    const int len = 3 + static_cast<int>(gen() % 6);
    for (int k = 0; k < len; ++k) {
      line.push_back(static_cast<char>('a' + gen() % 26));
    }
    ++total_words;
    if (++words_in_line == 10) {
      input.lines.push_back(line);
      line.clear();
      words_in_line = 0;
    }
  }
  NoiseConfig config;
  config.p = 0.1;
  config.seed = 7;
  NoiseStats stats;
  misspell_corpus(input, config, 4, &stats);
  EXPECT_EQ(stats.words, 10000u);
  const double fraction =
      static_cast<double>(stats.selected) / static_cast<double>(stats.words);
  EXPECT_GE(fraction, 0.08);
  EXPECT_LE(fraction, 0.12);
}

TEST(NoiseConfigValidation, RejectsDegenerateConfigs) {
  const Corpus input = make_corpus({"a b"});
  NoiseConfig config;
  config.strategies.clear();
  EXPECT_THROW(misspell_corpus(input, config), inertia::UsageError);
  config = NoiseConfig{};
  config.alphabet.clear();
  EXPECT_THROW(misspell_corpus(input, config), inertia::UsageError);
  config = NoiseConfig{};
  config.p = 1.5;
  EXPECT_THROW(misspell_corpus(input, config), inertia::UsageError);
}

}  // namespace
