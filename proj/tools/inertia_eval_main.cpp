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

// inertia-eval: command-line front end. Results go to stdout (JSON with
// --json, otherwise "name value" lines at 4 decimal places); diagnostics go
// to stderr. Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "inertia/align.hpp"
#include "inertia/bleu.hpp"
#include "inertia/corpus.hpp"
#include "inertia/errors.hpp"
#include "inertia/flips.hpp"
#include "inertia/metrics.hpp"
#include "inertia/noise.hpp"
#include "inertia/parallel.hpp"
#include "inertia/report.hpp"
#include "inertia/text.hpp"

namespace {

using nlohmann::json;

struct CommonFlags {
  bool json_output = false;
  unsigned threads = 0;  // 0 = INERTIA_EVAL_THREADS, then hardware count
  std::string system_label = "system";
};

void add_common_flags(CLI::App* cmd, CommonFlags* common,
                      bool with_system = true) {
  cmd->add_flag("--json", common->json_output, "Emit a JSON report to stdout");
  cmd->add_option("--threads", common->threads,
                  "Worker threads (0 = INERTIA_EVAL_THREADS env, then cores)");
  if (with_system) {
    cmd->add_option("--system", common->system_label,
                    "System label used in report rows");
  }
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return std::string(buf);
}

inertia::InputDigest digest(const std::string& path) {
  return {path, inertia::digest_file(path)};
}

void print_report(const inertia::InertiaReport& report, bool as_json) {
  if (as_json) {
    std::cout << inertia::report_to_json(report).dump(2) << "\n";
    return;
  }
  for (const auto& row : report.rows) {
    std::cout << row.metric << " " << fixed4(row.value);
    if (row.ci) {
      std::cout << " ±" << fixed4(0.5 * (row.ci->high - row.ci->low));
    }
    std::cout << "\n";
  }
}

inertia::TokenizerKind parse_tokenizer(const std::string& name) {
  if (name == "13a") return inertia::TokenizerKind::k13a;
  if (name == "whitespace" || name == "ws") return inertia::TokenizerKind::kWhitespace;
  if (name == "none") return inertia::TokenizerKind::kNone;
  throw inertia::UsageError("unknown tokenizer: " + name);
}

std::vector<inertia::EditStrategy> parse_strategies(const std::string& list) {
  std::vector<inertia::EditStrategy> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string::npos) comma = list.size();
    const std::string name = list.substr(start, comma - start);
    if (name == "del" || name == "delete") {
      out.push_back(inertia::EditStrategy::kDelete);
    } else if (name == "ins" || name == "insert") {
      out.push_back(inertia::EditStrategy::kInsert);
    } else if (name == "sub" || name == "substitute") {
      out.push_back(inertia::EditStrategy::kSubstitute);
    } else if (!name.empty()) {
      throw inertia::UsageError("unknown strategy: " + name);
    }
    if (comma == list.size()) break;
    start = comma + 1;
  }
  if (out.empty()) throw inertia::UsageError("no strategies given");
  return out;
}

std::string strategies_to_string(const std::vector<inertia::EditStrategy>& v) {
  std::string out;
  for (const auto s : v) {
    if (!out.empty()) out.push_back(',');
    switch (s) {
      case inertia::EditStrategy::kDelete: out += "del"; break;
      case inertia::EditStrategy::kInsert: out += "ins"; break;
      case inertia::EditStrategy::kSubstitute: out += "sub"; break;
    }
  }
  return out;
}

// --alphabet accepts "a-z" (default), "corpus" (characters observed in the
// input corpus) or a path to a file whose non-whitespace characters form the
// alphabet in order of first appearance.
std::u32string resolve_alphabet(const std::string& mode,
                                const inertia::Corpus& input) {
  if (mode == "a-z") return U"abcdefghijklmnopqrstuvwxyz";
  std::u32string chars;
  auto add_from = [&chars](const std::string& text) {
    const std::u32string decoded =
        inertia::utf8::decode_or_throw(text, "alphabet");
    for (const char32_t c : decoded) {
      if (inertia::is_unicode_space(c)) continue;
      if (chars.find(c) == std::u32string::npos) chars.push_back(c);
    }
  };
  if (mode == "corpus") {
    for (const auto& line : input.lines) add_from(line);
  } else {
    add_from(inertia::detail::read_file_bytes(mode));
  }
  if (chars.empty()) throw inertia::DataError("alphabet: no characters found");
  return chars;
}

int run(int argc, char** argv) {
  CLI::App app{"Model-inertia metrics for machine translation outputs"};
  app.require_subcommand(1);

  // ---- noise ----
  auto* noise_cmd = app.add_subcommand(
      "noise", "Apply seeded synthetic misspellings to a corpus");
  struct {
    std::string input, output;
    double prob = 0.1;
    std::uint64_t seed = 0;
    std::string alphabet = "a-z";
    std::string strategies = "del,ins,sub";
    CommonFlags common;
  } noise_args;
  noise_cmd->add_option("--input", noise_args.input, "Input corpus")->required();
  noise_cmd->add_option("--output", noise_args.output, "Output corpus")->required();
  noise_cmd->add_option("--prob", noise_args.prob, "Per-word misspelling probability");
  noise_cmd->add_option("--seed", noise_args.seed, "PRNG seed");
  noise_cmd->add_option("--alphabet", noise_args.alphabet,
                        "a-z | corpus | path to an alphabet file");
  noise_cmd->add_option("--strategies", noise_args.strategies,
                        "Comma list of del,ins,sub");
  add_common_flags(noise_cmd, &noise_args.common, /*with_system=*/false);

  // ---- bleu ----
  auto* bleu_cmd = app.add_subcommand("bleu", "Corpus BLEU of hypotheses against references");
  struct {
    std::string hyp, ref;
    std::string tok = "13a";
    std::string smooth = "exp";
    bool effective_order = false;
    int bootstrap = 0;
    std::uint64_t seed = 0;
    CommonFlags common;
  } bleu_args;
  bleu_cmd->add_option("--hyp", bleu_args.hyp, "Hypothesis corpus")->required();
  bleu_cmd->add_option("--ref", bleu_args.ref, "Reference corpus")->required();
  bleu_cmd->add_option("--tok", bleu_args.tok, "Tokenizer: 13a|whitespace|none");
  bleu_cmd->add_option("--smooth", bleu_args.smooth, "Smoothing: exp|none");
  bleu_cmd->add_flag("--effective-order", bleu_args.effective_order,
                     "Average log precisions only over observed n-gram orders");
  bleu_cmd->add_option("--bootstrap", bleu_args.bootstrap,
                       "Bootstrap resamples for a 95% CI (0 = off, else >= 100)");
  bleu_cmd->add_option("--seed", bleu_args.seed, "Bootstrap PRNG seed");
  add_common_flags(bleu_cmd, &bleu_args.common);

  // ---- consistency ----
  auto* cons_cmd = app.add_subcommand(
      "consistency", "Symmetric BLEU between noisy-input and clean-input outputs");
  struct {
    std::string noisy;
    std::vector<std::string> clean;
    std::string tok = "13a";
    CommonFlags common;
  } cons_args;
  cons_cmd->add_option("--noisy", cons_args.noisy, "Noisy-input translations")->required();
  cons_cmd->add_option("--clean", cons_args.clean,
                       "Clean-input translations (repeatable; mean over variants)")
      ->required();
  cons_cmd->add_option("--tok", cons_args.tok, "Tokenizer: 13a|whitespace|none");
  add_common_flags(cons_cmd, &cons_args.common);

  // ---- robustness ----
  auto* rob_cmd = app.add_subcommand(
      "robustness", "Quality delta between noisy-input and clean-input outputs");
  struct {
    std::string noisy_scores, clean_scores;
    std::string noisy, clean, refs;
    std::string tok = "13a";
    CommonFlags common;
  } rob_args;
  rob_cmd->add_option("--noisy-scores", rob_args.noisy_scores,
                      "Per-segment scores for noisy-input outputs");
  rob_cmd->add_option("--clean-scores", rob_args.clean_scores,
                      "Per-segment scores for clean-input outputs");
  rob_cmd->add_option("--noisy", rob_args.noisy, "Noisy-input translations (BLEU mode)");
  rob_cmd->add_option("--clean", rob_args.clean, "Clean-input translations (BLEU mode)");
  rob_cmd->add_option("--refs", rob_args.refs, "Reference translations (BLEU mode)");
  rob_cmd->add_option("--tok", rob_args.tok, "Tokenizer: 13a|whitespace|none");
  add_common_flags(rob_cmd, &rob_args.common);

  // ---- stability ----
  auto* stab_cmd = app.add_subcommand(
      "stability", "Symmetric BLEU and exact-match rate between two output files");
  struct {
    std::string a, b;
    bool symmetrize = false;
    std::string tok = "13a";
    CommonFlags common;
  } stab_args;
  stab_cmd->add_option("--a", stab_args.a, "Outputs of model A")->required();
  stab_cmd->add_option("--b", stab_args.b, "Outputs of model B")->required();
  stab_cmd->add_flag("--symmetrize", stab_args.symmetrize,
                     "Average the metric over both argument orders");
  stab_cmd->add_option("--tok", stab_args.tok, "Tokenizer: 13a|whitespace|none");
  add_common_flags(stab_cmd, &stab_args.common);

  // ---- flips ----
  auto* flips_cmd = app.add_subcommand(
      "flips", "Negative flip rate / impact between old and new model annotations");
  struct {
    std::string old_path, new_path;
    std::string mode;
    std::string metric = "nfr";
    bool symmetrize = false;
    CommonFlags common;
  } flips_args;
  flips_cmd->add_option("--old", flips_args.old_path, "Old-model annotation TSV")->required();
  flips_cmd->add_option("--new", flips_args.new_path, "New-model annotation TSV")->required();
  flips_cmd->add_option("--mode", flips_args.mode, "scalar|categorical")->required();
  flips_cmd->add_option("--metric", flips_args.metric, "nfr|nfi");
  flips_cmd->add_flag("--symmetrize", flips_args.symmetrize,
                      "Average the metric over both update directions");
  add_common_flags(flips_cmd, &flips_args.common);

  // ---- complexity ----
  auto* cplx_cmd = app.add_subcommand(
      "complexity", "Aligned conditional-entropy complexity of a parallel corpus");
  struct {
    std::string source, target;
    int iters = 5;
    double p0 = 0.08;
    double lambda = 4.0;
    double alpha = 0.0;
    std::int64_t sample = -1;
    std::uint64_t seed = 0;
    std::string dump;
    bool tune_lambda = false;
    bool lowercase = false;
    CommonFlags common;
  } cplx_args;
  cplx_cmd->add_option("--source", cplx_args.source, "Source side")->required();
  cplx_cmd->add_option("--target", cplx_args.target, "Target side")->required();
  cplx_cmd->add_option("--iters", cplx_args.iters, "EM iterations");
  cplx_cmd->add_option("--p0", cplx_args.p0, "NULL alignment probability");
  cplx_cmd->add_option("--lambda", cplx_args.lambda, "Diagonal tension");
  cplx_cmd->add_option("--alpha", cplx_args.alpha, "Additive smoothing for the M-step");
  cplx_cmd->add_option("--sample", cplx_args.sample,
                       "Align only a sample of this many pairs (default: all)");
  cplx_cmd->add_option("--seed", cplx_args.seed, "Sampling PRNG seed");
  cplx_cmd->add_option("--dump-alignments", cplx_args.dump,
                       "Write Pharaoh-format alignments (t-s pairs) to this file");
  cplx_cmd->add_flag("--tune-lambda", cplx_args.tune_lambda,
                     "Re-fit the diagonal tension each EM iteration");
  cplx_cmd->add_flag("--lowercase", cplx_args.lowercase,
                     "ASCII-lowercase tokens before training");
  add_common_flags(cplx_cmd, &cplx_args.common);

  // ---- mix ----
  auto* mix_cmd = app.add_subcommand(
      "mix", "Concatenate original and pseudo-label bitext at a given ratio");
  struct {
    std::string orig_src, orig_tgt, pl_src, pl_tgt, out_src, out_tgt;
    double ratio = 1.0;
    std::uint64_t seed = 0;
    CommonFlags common;
  } mix_args;
  mix_cmd->add_option("--orig-src", mix_args.orig_src, "Original source")->required();
  mix_cmd->add_option("--orig-tgt", mix_args.orig_tgt, "Original target")->required();
  mix_cmd->add_option("--pl-src", mix_args.pl_src, "Pseudo-label source")->required();
  mix_cmd->add_option("--pl-tgt", mix_args.pl_tgt, "Pseudo-label target")->required();
  mix_cmd->add_option("--ratio", mix_args.ratio, "PL pairs per original pair");
  mix_cmd->add_option("--seed", mix_args.seed, "Sampling PRNG seed");
  mix_cmd->add_option("--out-src", mix_args.out_src, "Output source")->required();
  mix_cmd->add_option("--out-tgt", mix_args.out_tgt, "Output target")->required();
  add_common_flags(mix_cmd, &mix_args.common, /*with_system=*/false);

  // ---- report ----
  auto* report_cmd = app.add_subcommand(
      "report", "Merge metric-run JSON files into one table");
  struct {
    std::vector<std::string> inputs;
    std::string format = "markdown";
    std::string timestamp;
  } report_args;
  report_cmd->add_option("--in", report_args.inputs, "Run JSON files")->required();
  report_cmd->add_option("--format", report_args.format, "json|markdown|csv");
  report_cmd->add_option("--timestamp", report_args.timestamp,
                         "Stamp the merged report with this string");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (noise_cmd->parsed()) {
      const inertia::Corpus input = inertia::load_corpus(noise_args.input);
      inertia::NoiseConfig config;
      config.p = noise_args.prob;
      config.seed = noise_args.seed;
      config.strategies = parse_strategies(noise_args.strategies);
      config.alphabet = resolve_alphabet(noise_args.alphabet, input);
      inertia::NoiseStats stats;
      const inertia::Corpus output = inertia::misspell_corpus(
          input, config, inertia::resolve_threads(noise_args.common.threads),
          &stats);
      inertia::save_corpus(output, noise_args.output);
      if (noise_args.common.json_output) {
        inertia::InertiaReport report;
        report.command = "noise";
        report.config = {{"prob", config.p},
                         {"seed", config.seed},
                         {"strategies", strategies_to_string(config.strategies)},
                         {"alphabet_size", config.alphabet.size()},
                         {"output", noise_args.output}};
        report.inputs = {digest(noise_args.input)};
        json doc = inertia::report_to_json(report);
        doc["metadata"]["stats"] = {
            {"lines", stats.lines},
            {"words", stats.words},
            {"selected", stats.selected},
            {"deletes", stats.deletes},
            {"inserts", stats.inserts},
            {"substitutes", stats.substitutes},
            {"substitute_collisions", stats.substitute_collisions},
            {"skipped_no_strategy", stats.skipped_no_strategy}};
        std::cout << doc.dump(2) << "\n";
      }
      return 0;
    }

    if (bleu_cmd->parsed()) {
      const inertia::Corpus hyp = inertia::load_corpus(bleu_args.hyp);
      const inertia::Corpus ref = inertia::load_corpus(bleu_args.ref);
      inertia::BleuConfig config;
      config.tokenizer = parse_tokenizer(bleu_args.tok);
      if (bleu_args.smooth == "none") {
        config.exponential_smoothing = false;
      } else if (bleu_args.smooth != "exp") {
        throw inertia::UsageError("bleu: --smooth must be exp or none");
      }
      config.effective_order = bleu_args.effective_order;
      const unsigned threads = inertia::resolve_threads(bleu_args.common.threads);
      const inertia::BleuScore score = inertia::corpus_bleu(hyp, ref, config, threads);
      inertia::InertiaReport report;
      report.command = "bleu";
      report.config = {{"tok", bleu_args.tok},
                       {"smooth", bleu_args.smooth},
                       {"effective_order", bleu_args.effective_order},
                       {"bootstrap", bleu_args.bootstrap}};
      report.inputs = {digest(bleu_args.hyp), digest(bleu_args.ref)};
      inertia::MetricRow row{bleu_args.common.system_label, "bleu", score.score, {}};
      if (bleu_args.bootstrap > 0) {
        report.config["seed"] = bleu_args.seed;
        const auto [low, high] = inertia::bootstrap_ci(
            hyp, ref, config, bleu_args.bootstrap, bleu_args.seed, threads);
        row.ci = inertia::CiInterval{low, high};
      }
      report.rows.push_back(row);
      if (bleu_args.common.json_output) {
        json doc = inertia::report_to_json(report);
        doc["metadata"]["details"] = {{"precisions", score.precisions},
                                      {"brevity_penalty", score.brevity_penalty},
                                      {"hyp_len", score.hyp_len},
                                      {"ref_len", score.ref_len}};
        std::cout << doc.dump(2) << "\n";
      } else {
        print_report(report, false);
        std::cout << "precisions";
        for (const double p : score.precisions) std::cout << " " << fixed4(p);
        std::cout << "\n";
        std::cout << "brevity_penalty " << fixed4(score.brevity_penalty) << "\n";
        std::cout << "hyp_len " << score.hyp_len << "\n";
        std::cout << "ref_len " << score.ref_len << "\n";
      }
      return 0;
    }

    if (cons_cmd->parsed()) {
      const inertia::Corpus noisy = inertia::load_corpus(cons_args.noisy);
      std::vector<inertia::Corpus> variants;
      variants.reserve(cons_args.clean.size());
      for (const auto& path : cons_args.clean) {
        variants.push_back(inertia::load_corpus(path));
      }
      inertia::BleuConfig config;
      config.tokenizer = parse_tokenizer(cons_args.tok);
      const double value = inertia::consistency_multi(
          noisy, variants, config,
          inertia::resolve_threads(cons_args.common.threads));
      inertia::InertiaReport report;
      report.command = "consistency";
      report.config = {{"tok", cons_args.tok},
                       {"clean_variants", cons_args.clean.size()}};
      report.inputs.push_back(digest(cons_args.noisy));
      for (const auto& path : cons_args.clean) report.inputs.push_back(digest(path));
      report.rows.push_back(
          {cons_args.common.system_label, "consistency", value, {}});
      print_report(report, cons_args.common.json_output);
      return 0;
    }

    if (rob_cmd->parsed()) {
      const bool score_mode =
          !rob_args.noisy_scores.empty() || !rob_args.clean_scores.empty();
      const bool bleu_mode = !rob_args.noisy.empty() || !rob_args.clean.empty() ||
                             !rob_args.refs.empty();
      if (score_mode == bleu_mode) {
        throw inertia::UsageError(
            "robustness: use either --noisy-scores/--clean-scores or "
            "--noisy/--clean/--refs");
      }
      inertia::InertiaReport report;
      report.command = "robustness";
      double value = 0.0;
      if (score_mode) {
        if (rob_args.noisy_scores.empty() || rob_args.clean_scores.empty()) {
          throw inertia::UsageError(
              "robustness: both --noisy-scores and --clean-scores are required");
        }
        value = inertia::robustness(
            inertia::load_scores(rob_args.noisy_scores, 1),
            inertia::load_scores(rob_args.clean_scores, 1));
        report.config = {{"mode", "scores"}};
        report.inputs = {digest(rob_args.noisy_scores), digest(rob_args.clean_scores)};
      } else {
        if (rob_args.noisy.empty() || rob_args.clean.empty() || rob_args.refs.empty()) {
          throw inertia::UsageError(
              "robustness: --noisy, --clean and --refs are all required");
        }
        inertia::BleuConfig config;
        config.tokenizer = parse_tokenizer(rob_args.tok);
        value = inertia::robustness_bleu(
            inertia::load_corpus(rob_args.noisy),
            inertia::load_corpus(rob_args.clean),
            inertia::load_corpus(rob_args.refs), config,
            inertia::resolve_threads(rob_args.common.threads));
        report.config = {{"mode", "bleu"}, {"tok", rob_args.tok}};
        report.inputs = {digest(rob_args.noisy), digest(rob_args.clean),
                         digest(rob_args.refs)};
      }
      report.rows.push_back(
          {rob_args.common.system_label, "robustness", value, {}});
      print_report(report, rob_args.common.json_output);
      return 0;
    }

    if (stab_cmd->parsed()) {
      const inertia::Corpus a = inertia::load_corpus(stab_args.a);
      const inertia::Corpus b = inertia::load_corpus(stab_args.b);
      inertia::BleuConfig config;
      config.tokenizer = parse_tokenizer(stab_args.tok);
      const unsigned threads = inertia::resolve_threads(stab_args.common.threads);
      inertia::StabilityResult result = inertia::stability(a, b, config, threads);
      if (stab_args.symmetrize) {
        const inertia::StabilityResult reverse =
            inertia::stability(b, a, config, threads);
        result.stability = inertia::symmetrize(result.stability, reverse.stability);
        result.exact_match_rate =
            inertia::symmetrize(result.exact_match_rate, reverse.exact_match_rate);
      }
      inertia::InertiaReport report;
      report.command = "stability";
      report.config = {{"tok", stab_args.tok}, {"symmetrize", stab_args.symmetrize}};
      report.inputs = {digest(stab_args.a), digest(stab_args.b)};
      report.rows.push_back(
          {stab_args.common.system_label, "stability", result.stability, {}});
      report.rows.push_back({stab_args.common.system_label, "exact_match",
                             result.exact_match_rate, {}});
      print_report(report, stab_args.common.json_output);
      return 0;
    }

    if (flips_cmd->parsed()) {
      if (flips_args.mode != "scalar" && flips_args.mode != "categorical") {
        throw inertia::UsageError("flips: --mode must be scalar or categorical");
      }
      if (flips_args.metric != "nfr" && flips_args.metric != "nfi") {
        throw inertia::UsageError("flips: --metric must be nfr or nfi");
      }
      if (flips_args.mode == "scalar" && flips_args.metric == "nfi") {
        throw inertia::UsageError("flips: NFI is not defined for scalar scores");
      }
      double value = 0.0;
      if (flips_args.mode == "scalar") {
        std::vector<std::string> warnings;
        const auto old_ann = inertia::scalar_annotations(
            inertia::load_scores(flips_args.old_path), &warnings);
        const auto new_ann = inertia::scalar_annotations(
            inertia::load_scores(flips_args.new_path), &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        value = inertia::nfr_scalar(old_ann, new_ann);
        if (flips_args.symmetrize) {
          value = inertia::symmetrize(value, inertia::nfr_scalar(new_ann, old_ann));
        }
      } else {
        const auto old_labels =
            inertia::categorical_labels(inertia::load_scores(flips_args.old_path, 1));
        const auto new_labels =
            inertia::categorical_labels(inertia::load_scores(flips_args.new_path, 1));
        auto metric_fn = flips_args.metric == "nfr" ? inertia::nfr_categorical
                                                    : inertia::nfi_categorical;
        value = metric_fn(old_labels, new_labels);
        if (flips_args.symmetrize) {
          value = inertia::symmetrize(value, metric_fn(new_labels, old_labels));
        }
      }
      inertia::InertiaReport report;
      report.command = "flips";
      report.config = {{"mode", flips_args.mode},
                       {"metric", flips_args.metric},
                       {"symmetrize", flips_args.symmetrize}};
      report.inputs = {digest(flips_args.old_path), digest(flips_args.new_path)};
      report.rows.push_back(
          {flips_args.common.system_label, flips_args.metric, value, {}});
      print_report(report, flips_args.common.json_output);
      return 0;
    }

    if (cplx_cmd->parsed()) {
      const auto [src, tgt] =
          inertia::load_parallel(cplx_args.source, cplx_args.target);
      inertia::AlignConfig config;
      config.iterations = cplx_args.iters;
      config.p0 = cplx_args.p0;
      config.lambda = cplx_args.lambda;
      config.dirichlet_alpha = cplx_args.alpha;
      if (cplx_args.sample >= 0) {
        config.sample_size = static_cast<std::size_t>(cplx_args.sample);
      }
      config.seed = cplx_args.seed;
      config.tune_lambda = cplx_args.tune_lambda;
      config.lowercase = cplx_args.lowercase;
      config.threads = inertia::resolve_threads(cplx_args.common.threads);
      std::vector<inertia::AlignedPair> aligned;
      std::vector<std::string> warnings;
      const double value = inertia::complexity(
          src, tgt, config, cplx_args.dump.empty() ? nullptr : &aligned,
          &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      if (!cplx_args.dump.empty()) {
        std::ofstream out(cplx_args.dump, std::ios::binary);
        if (!out) throw inertia::DataError("cannot write file: " + cplx_args.dump);
        for (const auto& pair : aligned) {
          out << inertia::pharaoh_line(pair) << "\n";
        }
      }
      inertia::InertiaReport report;
      report.command = "complexity";
      report.config = {{"iters", cplx_args.iters},
                       {"p0", cplx_args.p0},
                       {"lambda", cplx_args.lambda},
                       {"alpha", cplx_args.alpha},
                       {"seed", cplx_args.seed},
                       {"tune_lambda", cplx_args.tune_lambda},
                       {"lowercase", cplx_args.lowercase}};
      if (config.sample_size) report.config["sample"] = *config.sample_size;
      report.inputs = {digest(cplx_args.source), digest(cplx_args.target)};
      report.rows.push_back(
          {cplx_args.common.system_label, "complexity", value, {}});
      print_report(report, cplx_args.common.json_output);
      return 0;
    }

    if (mix_cmd->parsed()) {
      const auto [orig_src, orig_tgt] =
          inertia::load_parallel(mix_args.orig_src, mix_args.orig_tgt);
      const auto [pl_src, pl_tgt] =
          inertia::load_parallel(mix_args.pl_src, mix_args.pl_tgt);
      const auto [out_src, out_tgt] = inertia::mix_plt(
          orig_src, orig_tgt, pl_src, pl_tgt, mix_args.ratio, mix_args.seed);
      inertia::save_corpus(out_src, mix_args.out_src);
      inertia::save_corpus(out_tgt, mix_args.out_tgt);
      if (mix_args.common.json_output) {
        inertia::InertiaReport report;
        report.command = "mix";
        report.config = {{"ratio", mix_args.ratio},
                         {"seed", mix_args.seed},
                         {"out_src", mix_args.out_src},
                         {"out_tgt", mix_args.out_tgt}};
        report.inputs = {digest(mix_args.orig_src), digest(mix_args.orig_tgt),
                         digest(mix_args.pl_src), digest(mix_args.pl_tgt)};
        json doc = inertia::report_to_json(report);
        doc["metadata"]["stats"] = {{"original_pairs", orig_src.size()},
                                    {"output_pairs", out_src.size()}};
        std::cout << doc.dump(2) << "\n";
      }
      return 0;
    }

    if (report_cmd->parsed()) {
      inertia::InertiaReport merged;
      merged.command = "report";
      merged.config = {{"merged_runs", report_args.inputs.size()}};
      for (const auto& path : report_args.inputs) {
        const inertia::InertiaReport run =
            inertia::parse_report(inertia::detail::read_file_bytes(path));
        merged.rows.insert(merged.rows.end(), run.rows.begin(), run.rows.end());
        merged.inputs.insert(merged.inputs.end(), run.inputs.begin(),
                             run.inputs.end());
      }
      if (!report_args.timestamp.empty()) merged.timestamp = report_args.timestamp;
      inertia::ReportFormat format = inertia::ReportFormat::kMarkdown;
      if (report_args.format == "json") format = inertia::ReportFormat::kJson;
      else if (report_args.format == "csv") format = inertia::ReportFormat::kCsv;
      else if (report_args.format != "markdown") {
        throw inertia::UsageError("report: unknown format " + report_args.format);
      }
      std::cout << inertia::emit(merged, format);
      return 0;
    }
  } catch (const inertia::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const inertia::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
