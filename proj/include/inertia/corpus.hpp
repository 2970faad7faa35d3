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

// Line-oriented corpus and score-file I/O, plus pseudo-label data mixing.

#ifndef INERTIA_CORPUS_HPP_
#define INERTIA_CORPUS_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "inertia/errors.hpp"
#include "inertia/rng.hpp"
#include "inertia/text.hpp"

namespace inertia {

// One text segment per line, UTF-8, newlines normalized to LF on load.
struct Corpus {
  std::vector<std::string> lines;
  std::string origin = "inline";

  std::size_t size() const { return lines.size(); }
  bool empty() const { return lines.empty(); }
};

// Per-segment scores, one or more columns (e.g. annotators) per row.
struct SegmentScores {
  std::vector<std::vector<double>> rows;
  std::size_t columns = 0;

  std::size_t size() const { return rows.size(); }
};

namespace detail {

inline std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// Split on LF; a trailing LF does not create an extra empty segment; a CR
// before each LF is dropped (CRLF normalization).
inline std::vector<std::string> split_lines(std::string_view bytes) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= bytes.size()) {
    const std::size_t nl = bytes.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < bytes.size()) lines.emplace_back(bytes.substr(start));
      break;
    }
    std::string_view line = bytes.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = nl + 1;
  }
  return lines;
}

}  // namespace detail

inline Corpus load_corpus(const std::string& path) {
  Corpus corpus;
  corpus.origin = path;
  corpus.lines = detail::split_lines(detail::read_file_bytes(path));
  for (std::size_t i = 0; i < corpus.lines.size(); ++i) {
    if (!utf8::decode(corpus.lines[i])) {
      throw DataError(path + ":" + std::to_string(i + 1) + ": invalid UTF-8");
    }
  }
  return corpus;
}

inline void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  for (const std::string& line : corpus.lines) {
    out << line << '\n';
  }
  if (!out) throw DataError("write failed: " + path);
}

inline std::pair<Corpus, Corpus> load_parallel(const std::string& source_path,
                                               const std::string& target_path) {
  Corpus src = load_corpus(source_path);
  Corpus tgt = load_corpus(target_path);
  if (src.size() != tgt.size()) {
    throw DataError("corpus size mismatch: " + source_path + " has " +
                    std::to_string(src.size()) + " lines, " + target_path +
                    " has " + std::to_string(tgt.size()) + " lines");
  }
  return {std::move(src), std::move(tgt)};
}

// TSV of finite reals. expected_columns == 0 accepts any consistent width.
inline SegmentScores load_scores(const std::string& path,
                                 std::size_t expected_columns = 0) {
  const std::vector<std::string> lines =
      detail::split_lines(detail::read_file_bytes(path));
  SegmentScores scores;
  scores.rows.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    std::vector<double> row;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) tab = line.size();
      std::string_view cell(line.data() + start, tab - start);
      while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
      while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() ||
          !std::isfinite(value)) {
        throw DataError(path + ":" + std::to_string(i + 1) +
                        ": non-numeric cell '" + std::string(cell) + "'");
      }
      row.push_back(value);
      if (tab == line.size()) break;
      start = tab + 1;
    }
    if (scores.columns == 0 && scores.rows.empty()) {
      scores.columns = expected_columns == 0 ? row.size() : expected_columns;
    }
    if (row.size() != scores.columns) {
      throw DataError(path + ":" + std::to_string(i + 1) + ": expected " +
                      std::to_string(scores.columns) + " columns, got " +
                      std::to_string(row.size()));
    }
    scores.rows.push_back(std::move(row));
  }
  return scores;
}

// Concatenate the original bitext with round(ratio * |original|) pseudo-label
// pairs: whole copies of the PL bitext first, then a uniform sample without
// replacement for the remainder (emitted in original PL order). Output is the
// original block followed by the PL block; shuffling is left to the consumer.
inline std::pair<Corpus, Corpus> mix_plt(const Corpus& original_src,
                                         const Corpus& original_tgt,
                                         const Corpus& pl_src,
                                         const Corpus& pl_tgt,
                                         double ratio = 1.0,
                                         std::uint64_t seed = 0) {
  if (original_src.size() != original_tgt.size()) {
    throw DataError("mix: original bitext not parallel (" +
                    std::to_string(original_src.size()) + " vs " +
                    std::to_string(original_tgt.size()) + " lines)");
  }
  if (pl_src.size() != pl_tgt.size()) {
    throw DataError("mix: pseudo-label bitext not parallel (" +
                    std::to_string(pl_src.size()) + " vs " +
                    std::to_string(pl_tgt.size()) + " lines)");
  }
  if (ratio < 0.0) throw UsageError("mix: ratio must be >= 0");

  const std::size_t needed = static_cast<std::size_t>(
      std::llround(ratio * static_cast<double>(original_src.size())));
  if (needed > 0 && pl_src.empty()) {
    throw DataError("mix: pseudo-label corpus is empty");
  }

  Corpus out_src, out_tgt;
  out_src.lines = original_src.lines;
  out_tgt.lines = original_tgt.lines;
  out_src.lines.reserve(original_src.size() + needed);
  out_tgt.lines.reserve(original_tgt.size() + needed);

  if (needed > 0) {
    const std::size_t pl_n = pl_src.size();
    const std::size_t copies = needed / pl_n;
    const std::size_t remainder = needed % pl_n;
    for (std::size_t c = 0; c < copies; ++c) {
      out_src.lines.insert(out_src.lines.end(), pl_src.lines.begin(),
                           pl_src.lines.end());
      out_tgt.lines.insert(out_tgt.lines.end(), pl_tgt.lines.begin(),
                           pl_tgt.lines.end());
    }
    if (remainder > 0) {
      std::vector<std::size_t> indices(pl_n);
      for (std::size_t i = 0; i < pl_n; ++i) indices[i] = i;
      SplitMix64 rng(seed);
      for (std::size_t i = 0; i + 1 < pl_n && i < remainder; ++i) {
        const std::size_t j = i + rng.next_index(pl_n - i);
        std::swap(indices[i], indices[j]);
      }
      std::vector<std::size_t> chosen(indices.begin(),
                                      indices.begin() +
                                          static_cast<std::ptrdiff_t>(remainder));
      std::sort(chosen.begin(), chosen.end());
      for (const std::size_t idx : chosen) {
        out_src.lines.push_back(pl_src.lines[idx]);
        out_tgt.lines.push_back(pl_tgt.lines[idx]);
      }
    }
  }
  return {std::move(out_src), std::move(out_tgt)};
}

}  // namespace inertia

#endif  // INERTIA_CORPUS_HPP_
