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

// Deterministic tokenization and string-distance primitives. All operations
// work on Unicode scalar values; byte strings are strictly validated UTF-8.

#ifndef INERTIA_TEXT_HPP_
#define INERTIA_TEXT_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inertia/errors.hpp"

namespace inertia {

using TokenSequence = std::vector<std::string>;

namespace utf8 {

// Strict decoder: rejects truncated sequences, overlong forms, surrogates
// and scalars above U+10FFFF.
inline std::optional<std::u32string> decode(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const unsigned char b0 = static_cast<unsigned char>(bytes[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      if (b0 < 0xC2) return std::nullopt;  // overlong two-byte form
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      if (b0 > 0xF4) return std::nullopt;  // beyond U+10FFFF
      len = 4;
      cp = b0 & 0x07;
    } else {
      return std::nullopt;  // stray continuation or invalid lead byte
    }
    if (i + static_cast<std::size_t>(len) > n) return std::nullopt;
    unsigned char lo = 0x80, hi = 0xBF;
    if (b0 == 0xE0) lo = 0xA0;        // overlong three-byte forms
    else if (b0 == 0xED) hi = 0x9F;   // surrogates
    else if (b0 == 0xF0) lo = 0x90;   // overlong four-byte forms
    else if (b0 == 0xF4) hi = 0x8F;   // > U+10FFFF
    for (int k = 1; k < len; ++k) {
      const unsigned char b = static_cast<unsigned char>(bytes[i + k]);
      const unsigned char min_b = (k == 1) ? lo : 0x80;
      const unsigned char max_b = (k == 1) ? hi : 0xBF;
      if (b < min_b || b > max_b) return std::nullopt;
      cp = (cp << 6) | (b & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) append(out, cp);
  return out;
}

inline std::u32string decode_or_throw(std::string_view bytes, const char* where) {
  auto d = decode(bytes);
  if (!d) throw DataError(std::string(where) + ": invalid UTF-8 input");
  return std::move(*d);
}

}  // namespace utf8

// Unicode whitespace (the set used by common text-processing splitters).
inline bool is_unicode_space(char32_t c) {
  switch (c) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
    case 0x1C: case 0x1D: case 0x1E: case 0x1F:
    case 0x20: case 0x85: case 0xA0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

namespace detail {

inline bool is_ascii_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

// The mteval-13a split set: ASCII punctuation except ' , - .
// Ranges: 0x20-0x26, 0x28-0x2B, 0x2F, 0x3A-0x40, 0x5B-0x60, 0x7B-0x7E.
inline bool is_13a_split_char(char32_t c) {
  return (c >= 0x20 && c <= 0x26) || (c >= 0x28 && c <= 0x2B) || c == 0x2F ||
         (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) ||
         (c >= 0x7B && c <= 0x7E);
}

inline void replace_all(std::u32string& s, std::u32string_view from,
                        std::u32string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::u32string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

inline std::vector<std::string> split_spaces(const std::u32string& s) {
  std::vector<std::string> tokens;
  std::u32string cur;
  for (char32_t c : s) {
    if (is_unicode_space(c)) {
      if (!cur.empty()) {
        tokens.push_back(utf8::encode(cur));
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(utf8::encode(cur));
  return tokens;
}

}  // namespace detail

inline TokenSequence tokenize_whitespace(std::string_view text) {
  const std::u32string s = utf8::decode_or_throw(text, "tokenize_whitespace");
  return detail::split_spaces(s);
}

// mteval-13a tokenization. Markup normalization, then four ordered
// substitution passes; each pass scans left to right and never re-examines
// replaced text, matching the reference regex engine's non-overlapping
// substitution semantics. Case is preserved.
inline TokenSequence tokenize_13a(std::string_view text) {
  std::u32string s = utf8::decode_or_throw(text, "tokenize_13a");

  detail::replace_all(s, U"<skipped>", U"");
  detail::replace_all(s, U"-\n", U"");
  std::replace(s.begin(), s.end(), U'\n', U' ');
  if (s.find(U'&') != std::u32string::npos) {
    detail::replace_all(s, U"&quot;", U"\"");
    detail::replace_all(s, U"&amp;", U"&");
    detail::replace_all(s, U"&lt;", U"<");
    detail::replace_all(s, U"&gt;", U">");
  }

  std::u32string cur;
  cur.reserve(s.size() + 2);
  cur.push_back(U' ');
  cur += s;
  cur.push_back(U' ');

  // pass 1: pad every split-set character with spaces
  std::u32string next;
  next.reserve(cur.size() * 2);
  for (char32_t c : cur) {
    if (detail::is_13a_split_char(c)) {
      next.push_back(U' ');
      next.push_back(c);
      next.push_back(U' ');
    } else {
      next.push_back(c);
    }
  }
  cur.swap(next);

  // pass 2: period/comma not preceded by a digit
  next.clear();
  for (std::size_t i = 0; i < cur.size();) {
    if (i + 1 < cur.size() && !detail::is_ascii_digit(cur[i]) &&
        (cur[i + 1] == U'.' || cur[i + 1] == U',')) {
      next.push_back(cur[i]);
      next.push_back(U' ');
      next.push_back(cur[i + 1]);
      next.push_back(U' ');
      i += 2;
    } else {
      next.push_back(cur[i]);
      ++i;
    }
  }
  cur.swap(next);

  // pass 3: period/comma not followed by a digit
  next.clear();
  for (std::size_t i = 0; i < cur.size();) {
    if (i + 1 < cur.size() && (cur[i] == U'.' || cur[i] == U',') &&
        !detail::is_ascii_digit(cur[i + 1])) {
      next.push_back(U' ');
      next.push_back(cur[i]);
      next.push_back(U' ');
      next.push_back(cur[i + 1]);
      i += 2;
    } else {
      next.push_back(cur[i]);
      ++i;
    }
  }
  cur.swap(next);

  // pass 4: dash preceded by a digit
  next.clear();
  for (std::size_t i = 0; i < cur.size();) {
    if (i + 1 < cur.size() && detail::is_ascii_digit(cur[i]) &&
        cur[i + 1] == U'-') {
      next.push_back(cur[i]);
      next.push_back(U' ');
      next.push_back(U'-');
      next.push_back(U' ');
      i += 2;
    } else {
      next.push_back(cur[i]);
      ++i;
    }
  }
  cur.swap(next);

  return detail::split_spaces(cur);
}

// Unit-cost edit distance over Unicode scalar values.
inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  const std::u32string ua = utf8::decode_or_throw(a, "levenshtein");
  const std::u32string ub = utf8::decode_or_throw(b, "levenshtein");
  const std::u32string& s = ua.size() <= ub.size() ? ua : ub;
  const std::u32string& t = ua.size() <= ub.size() ? ub : ua;
  if (s.empty()) return t.size();

  std::vector<std::size_t> row(s.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t j = 1; j <= t.size(); ++j) {
    std::size_t prev_diag = row[0];
    row[0] = j;
    for (std::size_t i = 1; i <= s.size(); ++i) {
      const std::size_t subst = prev_diag + (s[i - 1] == t[j - 1] ? 0 : 1);
      prev_diag = row[i];
      row[i] = std::min({row[i] + 1, row[i - 1] + 1, subst});
    }
  }
  return row[s.size()];
}

}  // namespace inertia

#endif  // INERTIA_TEXT_HPP_
