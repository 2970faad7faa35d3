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

// Acceptance suite: one test per criterion, each reported as its own
// pass/fail line by the harness. Oracles here are deliberately brute-force
// and independent of the library computation paths they check.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bleu_oracle.hpp"
#include "cli_runner.hpp"
#include "gtest/gtest.h"
#include "inertia/align.hpp"
#include "inertia/bleu.hpp"
#include "inertia/corpus.hpp"
#include "inertia/flips.hpp"
#include "inertia/metrics.hpp"
#include "inertia/noise.hpp"
#include "inertia/text.hpp"

namespace {

using inertia::Corpus;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Corpus make_corpus(std::vector<std::string> lines) {
  Corpus c;
  c.lines = std::move(lines);
  return c;
}

std::string random_line(std::mt19937_64& gen,
                        const std::vector<std::string>& vocab,
                        std::size_t min_words, std::size_t max_words) {
  std::string line;
  const std::size_t words =
      min_words +
      (max_words > min_words ? gen() % (max_words - min_words + 1) : 0);
  for (std::size_t w = 0; w < words; ++w) {
    if (w > 0) line.push_back(' ');
    line += vocab[gen() % vocab.size()];
  }
  return line;
}

// ---------------------------------------------------------------------------
// Criterion 1: corpus_bleu matches a brute-force n-gram-counting oracle
// within 1e-4 on 25 fixture corpora (1..50 segments, including empty lines
// and disjoint vocabularies), for both 13a and whitespace tokenization.
// Runtime < 1 s.
TEST(Acceptance, Criterion1_BleuOracleEquivalence) {
  const auto start = Clock::now();
  std::mt19937_64 gen(2026);
  const std::vector<std::string> vocab = {
      "the",  "cat",   "sat",   "on",   "mat",  "a",    "dog.", "ran",
      "fast", "3.5",   "time,", "well", "he",   "she",  "it",   "blue",
      "red",  "green", "now",   "then", "very", "quite"};
  const std::vector<std::string> disjoint_vocab = {"zorp", "flim", "quux",
                                                   "blat", "narf"};

  int checked = 0;
  for (int fixture = 0; fixture < 25; ++fixture) {
    const std::size_t segments = 1 + (static_cast<std::size_t>(fixture) * 2) % 50;
    Corpus hyp, ref;
    for (std::size_t s = 0; s < segments; ++s) {
      if (fixture % 5 == 1 && s % 7 == 3) {
        hyp.lines.push_back("");
        ref.lines.push_back("");
        continue;
      }
      if (fixture % 5 == 2) {
        // fully disjoint vocabularies
        hyp.lines.push_back(random_line(gen, vocab, 1, 9));
        ref.lines.push_back(random_line(gen, disjoint_vocab, 1, 9));
      } else if (fixture % 5 == 3) {
        const std::string line = random_line(gen, vocab, 1, 12);
        hyp.lines.push_back(line);
        ref.lines.push_back(line);
      } else {
        hyp.lines.push_back(random_line(gen, vocab, 1, 12));
        ref.lines.push_back(random_line(gen, vocab, 1, 12));
      }
    }
    for (const inertia::TokenizerKind tok :
         {inertia::TokenizerKind::k13a, inertia::TokenizerKind::kWhitespace}) {
      inertia::BleuConfig config;
      config.tokenizer = tok;
      const double got = inertia::corpus_bleu(hyp, ref, config).score;
      const double expected = oracle::corpus_bleu(hyp, ref, tok);
      EXPECT_NEAR(got, expected, 1e-4)
          << "fixture " << fixture << " segments " << segments;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 50);
  EXPECT_LT(seconds_since(start), 1.0);
}

// ---------------------------------------------------------------------------
// Criterion 2: identity suite over 10 randomized fixtures each:
// consistency(A,A) = 100, stability(A,A) = 100, EM(A,A) = 1,
// robustness(s,s) = 0, NFR(x,x) = 0. Runtime < 1 s.
TEST(Acceptance, Criterion2_IdentitySuite) {
  const auto start = Clock::now();
  std::mt19937_64 gen(4051);
  const std::vector<std::string> vocab = {"alpha", "beta",  "gamma", "delta",
                                          "omega", "sigma", "kappa", "theta"};
  for (int fixture = 0; fixture < 10; ++fixture) {
    Corpus corpus;
    const std::size_t segments = 1 + gen() % 6;
    for (std::size_t s = 0; s < segments; ++s) {
      corpus.lines.push_back(random_line(gen, vocab, 4, 10));
    }
    EXPECT_EQ(inertia::consistency(corpus, corpus), 100.0);
    const auto stab = inertia::stability(corpus, corpus);
    EXPECT_EQ(stab.stability, 100.0);
    EXPECT_EQ(stab.exact_match_rate, 1.0);

    inertia::SegmentScores scores;
    scores.columns = 1;
    for (std::size_t s = 0; s < segments; ++s) {
      scores.rows.push_back({static_cast<double>(gen() % 1000) / 250.0});
    }
    EXPECT_EQ(inertia::robustness(scores, scores), 0.0);

    inertia::CategoricalLabels labels;
    inertia::ScalarAnnotations annotations;
    annotations.annotators = 2;
    for (std::size_t s = 0; s < segments; ++s) {
      labels.labels.push_back(static_cast<int>(gen() % 2));
      annotations.rows.push_back({1.0 + 0.2 * static_cast<double>(gen() % 26),
                                  1.0 + 0.2 * static_cast<double>(gen() % 26)});
    }
    EXPECT_EQ(inertia::nfr_categorical(labels, labels), 0.0);
    EXPECT_EQ(inertia::nfr_scalar(annotations, annotations), 0.0);
  }
  EXPECT_LT(seconds_since(start), 1.0);
}

// ---------------------------------------------------------------------------
// Criterion 3: symmetry properties over 1000 random fixtures: consistency
// and stability invariant under argument swap, robustness_bleu antisymmetric,
// harmonic_mean symmetric.
TEST(Acceptance, Criterion3_SymmetrySuite) {
  std::mt19937_64 gen(773);
  const std::vector<std::string> vocab = {"red",  "green", "blue", "cyan",
                                          "dark", "light", "pale", "deep"};
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t segments = 1 + gen() % 3;
    Corpus a, b, refs;
    for (std::size_t s = 0; s < segments; ++s) {
      a.lines.push_back(random_line(gen, vocab, 1, 7));
      b.lines.push_back(random_line(gen, vocab, 1, 7));
      refs.lines.push_back(random_line(gen, vocab, 1, 7));
    }
    EXPECT_EQ(inertia::consistency(a, b), inertia::consistency(b, a));
    const auto ab = inertia::stability(a, b);
    const auto ba = inertia::stability(b, a);
    EXPECT_EQ(ab.stability, ba.stability);
    EXPECT_EQ(ab.exact_match_rate, ba.exact_match_rate);
    EXPECT_EQ(inertia::robustness_bleu(a, b, refs),
              -inertia::robustness_bleu(b, a, refs));

    const double x = static_cast<double>(gen() % 10000) / 100.0;
    const double y = static_cast<double>(gen() % 10000) / 100.0;
    EXPECT_EQ(inertia::harmonic_mean(x, y), inertia::harmonic_mean(y, x));
  }
}

// ---------------------------------------------------------------------------
// Criterion 4: noise contract on a 10,000-word corpus at p = 0.1 with a
// fixed seed: modified fraction in [0.08, 0.12]; every modified word at
// Levenshtein distance exactly 1 (substitution collisions excepted and
// bounded by 1/26 of substitutions); per-line token counts preserved;
// byte-identical output at 1 vs 8 threads. Runtime < 2 s.
TEST(Acceptance, Criterion4_NoiseContract) {
  const auto start = Clock::now();
  std::mt19937_64 gen(99);
  Corpus input;
  {
    std::string line;
    int words_in_line = 0;
    for (int total = 0; total < 10000; ++total) {
      if (words_in_line > 0) line.push_back(' ');
      const int len = 2 + static_cast<int>(gen() % 8);
      for (int k = 0; k < len; ++k) {
        line.push_back(static_cast<char>('a' + gen() % 26));
      }
      if (++words_in_line == 10) {
        input.lines.push_back(line);
        line.clear();
        words_in_line = 0;
      }
    }
  }

  inertia::NoiseConfig config;
  config.p = 0.1;
  config.seed = 7;
  inertia::NoiseStats stats;
  const Corpus output = inertia::misspell_corpus(input, config, 1, &stats);

  ASSERT_EQ(stats.words, 10000u);
  const double fraction =
      static_cast<double>(stats.selected) / static_cast<double>(stats.words);
  EXPECT_GE(fraction, 0.08);
  EXPECT_LE(fraction, 0.12);

  std::uint64_t changed = 0;
  for (std::size_t i = 0; i < input.lines.size(); ++i) {
    const auto in_words = inertia::tokenize_whitespace(input.lines[i]);
    const auto out_words = inertia::tokenize_whitespace(output.lines[i]);
    ASSERT_EQ(in_words.size(), out_words.size()) << "line " << i;
    for (std::size_t w = 0; w < in_words.size(); ++w) {
      if (in_words[w] != out_words[w]) {
        ++changed;
        EXPECT_EQ(inertia::levenshtein(in_words[w], out_words[w]), 1u)
            << in_words[w] << " -> " << out_words[w];
      }
    }
  }
  // collision corner: the re-drawn substitution character equals the original
  EXPECT_EQ(changed + stats.substitute_collisions, stats.selected);
  EXPECT_LE(static_cast<double>(stats.substitute_collisions),
            static_cast<double>(stats.substitutes) / 26.0);

  const Corpus eight = inertia::misspell_corpus(input, config, 8);
  EXPECT_EQ(output.lines, eight.lines);
  EXPECT_LT(seconds_since(start), 2.0);
}

// ---------------------------------------------------------------------------
// Criterion 5: on a generated 200-pair corpus from a known one-to-one
// dictionary, Viterbi after 5 plain-EM iterations recovers >= 95% of gold
// links; the corpus log-likelihood is non-decreasing per iteration (1e-9
// slack); the alignment prior normalizes to 1e-9 for all m, n <= 50.
// Runtime < 5 s.
TEST(Acceptance, Criterion5_AlignmentRecovery) {
  const auto start = Clock::now();

  std::mt19937_64 gen(515);
  constexpr int kTypes = 40;
  Corpus src, tgt;
  std::vector<std::vector<std::size_t>> gold;
  for (int pair = 0; pair < 200; ++pair) {
    const std::size_t len = 3 + gen() % 7;
    std::vector<int> ids(kTypes);
    std::iota(ids.begin(), ids.end(), 0);
    std::string s, t;
    std::vector<std::size_t> links;
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t pick = gen() % ids.size();
      const int w = ids[pick];
      ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(pick));
      if (k > 0) {
        s.push_back(' ');
        t.push_back(' ');
      }
      s += "src" + std::to_string(w);
      t += "tgt" + std::to_string(w);
      links.push_back(k);
    }
    src.lines.push_back(s);
    tgt.lines.push_back(t);
    gold.push_back(links);
  }

  inertia::AlignConfig config;
  config.iterations = 5;
  const inertia::AlignmentModel model = inertia::train(src, tgt, config);

  ASSERT_EQ(model.log_likelihoods.size(), 5u);
  for (std::size_t i = 1; i < model.log_likelihoods.size(); ++i) {
    EXPECT_GE(model.log_likelihoods[i], model.log_likelihoods[i - 1] - 1e-9);
  }

  std::size_t total_links = 0, recovered = 0;
  for (std::size_t p = 0; p < src.lines.size(); ++p) {
    const auto s_tokens = inertia::tokenize_whitespace(src.lines[p]);
    const auto t_tokens = inertia::tokenize_whitespace(tgt.lines[p]);
    const auto aligned = inertia::viterbi_align(model, s_tokens, t_tokens);
    for (std::size_t i = 0; i < aligned.links.size(); ++i) {
      ++total_links;
      if (aligned.links[i] && *aligned.links[i] == gold[p][i]) ++recovered;
    }
  }
  EXPECT_GE(static_cast<double>(recovered) / static_cast<double>(total_links),
            0.95);

  for (std::size_t m = 1; m <= 50; ++m) {
    for (std::size_t n = 1; n <= 50; ++n) {
      for (std::size_t i = 1; i <= m; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j <= n; ++j) {
          sum += inertia::diagonal_prior(i, j, m, n, 4.0, 0.08);
        }
        ASSERT_NEAR(sum, 1.0, 1e-9) << "m=" << m << " n=" << n << " i=" << i;
      }
    }
  }
  EXPECT_LT(seconds_since(start), 5.0);
}

// ---------------------------------------------------------------------------
// Criterion 6: C(d) = 0 (tolerance 1e-12) on a deterministic one-to-one
// corpus; on a two-mode corpus C(d) matches a brute-force entropy oracle
// computed from the dumped alignments within 1e-9 and exceeds the
// single-mode value.
TEST(Acceptance, Criterion6_ComplexityOracle) {
  std::mt19937_64 gen(626);
  constexpr int kTypes = 12;

  Corpus src, single_tgt, multi_tgt;
  std::vector<int> occurrence_count(kTypes, 0);
  for (int pair = 0; pair < 120; ++pair) {
    const std::size_t len = 3 + gen() % 4;
    std::vector<int> ids(kTypes);
    std::iota(ids.begin(), ids.end(), 0);
    std::string s, t1, t2;
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t pick = gen() % ids.size();
      const int w = ids[pick];
      ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(pick));
      if (k > 0) {
        s.push_back(' ');
        t1.push_back(' ');
        t2.push_back(' ');
      }
      s += "src" + std::to_string(w);
      t1 += "tgt" + std::to_string(w);
      // strictly alternate the two target modes per source type so both are
      // equally frequent
      t2 += (occurrence_count[w]++ % 2 == 0 ? "tgt" : "alt") + std::to_string(w);
    }
    src.lines.push_back(s);
    single_tgt.lines.push_back(t1);
    multi_tgt.lines.push_back(t2);
  }

  const double single_mode = inertia::complexity(src, single_tgt);
  EXPECT_NEAR(single_mode, 0.0, 1e-12);

  std::vector<inertia::AlignedPair> aligned;
  const double multi_mode = inertia::complexity(src, multi_tgt, {}, &aligned);
  ASSERT_EQ(aligned.size(), src.lines.size());

  // dump, then recount from the dump text alone
  std::vector<std::string> dump;
  dump.reserve(aligned.size());
  for (const auto& pair : aligned) dump.push_back(inertia::pharaoh_line(pair));

  std::map<std::string, std::map<std::string, long>> counts;
  for (std::size_t p = 0; p < dump.size(); ++p) {
    const auto s_tokens = inertia::tokenize_whitespace(src.lines[p]);
    const auto t_tokens = inertia::tokenize_whitespace(multi_tgt.lines[p]);
    std::istringstream links(dump[p]);
    std::string link;
    while (links >> link) {
      const std::size_t dash = link.find('-');
      ASSERT_NE(dash, std::string::npos);
      const std::size_t t_pos = std::stoul(link.substr(0, dash));
      const std::size_t s_pos = std::stoul(link.substr(dash + 1));
      ASSERT_LT(t_pos, t_tokens.size());
      ASSERT_LT(s_pos, s_tokens.size());
      ++counts[s_tokens[s_pos]][t_tokens[t_pos]];
    }
  }
  ASSERT_FALSE(counts.empty());
  long double entropy_sum = 0.0L;
  for (const auto& [x, row] : counts) {
    long total = 0;
    for (const auto& [y, c] : row) total += c;
    long double h = 0.0L;
    for (const auto& [y, c] : row) {
      const long double prob = static_cast<long double>(c) / total;
      h -= prob * std::log(prob);
    }
    entropy_sum += h;
  }
  const double oracle_entropy =
      static_cast<double>(entropy_sum / static_cast<long double>(counts.size()));

  EXPECT_NEAR(multi_mode, oracle_entropy, 1e-9);
  EXPECT_GT(multi_mode, single_mode);
}

// ---------------------------------------------------------------------------
// Criterion 7: categorical flips fixture old=[1,1,0,0], new=[0,1,0,1] gives
// NFR 0.25 and NFI 0.5; scalar unanimity fixtures match hand counts; NFI on
// a perfect new model raises the documented error.
TEST(Acceptance, Criterion7_FlipsFixtures) {
  inertia::CategoricalLabels old_labels, new_labels;
  old_labels.labels = {1, 1, 0, 0};
  new_labels.labels = {0, 1, 0, 1};
  EXPECT_EQ(inertia::nfr_categorical(old_labels, new_labels), 0.25);
  EXPECT_EQ(inertia::nfi_categorical(old_labels, new_labels), 0.5);

  // 5 segments, unanimity on exactly two of them
  inertia::ScalarAnnotations old_scalar, new_scalar;
  old_scalar.annotators = new_scalar.annotators = 2;
  old_scalar.rows = {{5.0, 5.2}, {4.0, 4.0}, {3.0, 3.6}, {6.0, 6.0}, {2.0, 2.2}};
  new_scalar.rows = {{4.8, 5.0}, {4.0, 3.8}, {2.8, 3.4}, {6.0, 6.0}, {2.2, 2.4}};
  // segment 1: both lower (flip); segment 2: one equal (no flip);
  // segment 3: both lower (flip); segment 4: equal (no); segment 5: both higher
  EXPECT_EQ(inertia::nfr_scalar(old_scalar, new_scalar), 0.4);

  inertia::CategoricalLabels perfect;
  perfect.labels = {1, 1, 1, 1};
  try {
    inertia::nfi_categorical(old_labels, perfect);
    FAIL() << "expected DataError";
  } catch (const inertia::DataError& e) {
    EXPECT_STREQ(e.what(), "NFI undefined: new model is perfect");
  }
}

// ---------------------------------------------------------------------------
// Criterion 8: end-to-end through the CLI. Noise a 100-line clean file with
// seed 7, compute consistency clean-vs-noisy with --threads 1 and
// --threads 8: the JSON reports are bit-identical. mix at ratio 1.0 exactly
// doubles the corpus.
TEST(Acceptance, Criterion8_EndToEndPipeline) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() /
                       ("inertia_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  std::mt19937_64 gen(808);
  const std::vector<std::string> vocab = {
      "translation", "systems", "produce",  "different", "outputs", "when",
      "inputs",      "change",  "slightly", "over",      "time",    "models"};
  Corpus clean;
  for (int i = 0; i < 100; ++i) {
    clean.lines.push_back(random_line(gen, vocab, 5, 12));
  }
  const std::string clean_path = (dir / "clean.txt").string();
  inertia::save_corpus(clean, clean_path);

  const std::string noisy_path = (dir / "noisy.txt").string();
  const auto noise_run =
      cli::run("noise --input " + clean_path + " --output " + noisy_path +
               " --prob 0.1 --seed 7");
  ASSERT_EQ(noise_run.exit_code, 0);

  const auto threads1 =
      cli::run("consistency --noisy " + noisy_path + " --clean " + clean_path +
               " --json --threads 1");
  const auto threads8 =
      cli::run("consistency --noisy " + noisy_path + " --clean " + clean_path +
               " --json --threads 8");
  ASSERT_EQ(threads1.exit_code, 0);
  ASSERT_EQ(threads8.exit_code, 0);
  EXPECT_EQ(threads1.stdout_text, threads8.stdout_text);

  const auto doc = nlohmann::json::parse(threads1.stdout_text);
  const double value = doc["rows"][0]["value"].get<double>();
  EXPECT_GT(value, 0.0);
  EXPECT_LT(value, 100.0);

  const std::string out_src = (dir / "mix_src.txt").string();
  const std::string out_tgt = (dir / "mix_tgt.txt").string();
  const auto mix_run = cli::run(
      "mix --orig-src " + clean_path + " --orig-tgt " + clean_path +
      " --pl-src " + noisy_path + " --pl-tgt " + noisy_path +
      " --ratio 1.0 --seed 1 --out-src " + out_src + " --out-tgt " + out_tgt);
  ASSERT_EQ(mix_run.exit_code, 0);
  EXPECT_EQ(inertia::load_corpus(out_src).size(), 200u);
  EXPECT_EQ(inertia::load_corpus(out_tgt).size(), 200u);

  fs::remove_all(dir);
}

}  // namespace
