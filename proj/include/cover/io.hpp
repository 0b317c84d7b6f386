// Copyright 2026 The cover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Instance file formats.
//
// Native ("scp 1"), whitespace-separated tokens:
//
//   scp 1
//   m n
//   w_1 k_1 e_1 ... e_k1
//   ...
//
// with 1-based elements and each weight an integer, a decimal or "p/q".
//
// OR-Library set covering (read only), element-major:
//
//   m n
//   c_1 ... c_n            column costs
//   for each row j = 1..m: count, then count 1-based column indices

#ifndef COVER_IO_HPP_
#define COVER_IO_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>

#include "cover/error.hpp"
#include "cover/instance.hpp"
#include "cover/rational.hpp"

namespace cover {

enum class InputFormat { kAuto, kNative, kOrLib };

namespace internal {

struct Token {
  std::string_view text;
  std::size_t line = 0;
  std::size_t column = 0;
};

inline constexpr std::size_t kMaxDeclaredSize = std::size_t{1} << 28;

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }

  Token Next(std::string_view what) {
    SkipSpace();
    if (pos_ >= text_.size()) {
      throw Error::AtPosition(line_, column_,
                              "unexpected end of input, expected " +
                                  std::string(what));
    }
    Token t{{}, line_, column_};
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !IsSpace(text_[pos_])) {
      ++pos_;
      ++column_;
    }
    t.text = text_.substr(start, pos_ - start);
    return t;
  }

  std::size_t NextCount(std::string_view what) {
    Token t = Next(what);
    std::size_t value = 0;
    if (t.text.empty()) Fail(t, what);
    for (char c : t.text) {
      if (c < '0' || c > '9') Fail(t, what);
      value = value * 10 + static_cast<std::size_t>(c - '0');
      // A corrupt header must not trigger a huge allocation.
      if (value > kMaxDeclaredSize) {
        throw Error::AtPosition(t.line, t.column,
                                std::string(what) + " is too large");
      }
    }
    return value;
  }

  Rational NextRational(std::string_view what) {
    Token t = Next(what);
    auto value = ParseRational(t.text);
    if (!value) Fail(t, what);
    return *value;
  }

  [[noreturn]] static void Fail(const Token& t, std::string_view what) {
    throw Error::AtPosition(t.line, t.column,
                            "expected " + std::string(what) + ", got '" +
                                std::string(t.text) + "'");
  }

 private:
  static bool IsSpace(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  }

  void SkipSpace() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// Digits only; values beyond kMaxDeclaredSize are reported as a syntax error.
inline std::size_t ParseIndex(const Token& t, std::string_view what) {
  std::size_t value = 0;
  if (t.text.empty()) Tokenizer::Fail(t, what);
  for (char c : t.text) {
    if (c < '0' || c > '9' || value > kMaxDeclaredSize) {
      Tokenizer::Fail(t, what);
    }
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

}  // namespace internal

inline Instance ParseNative(std::string_view text) {
  internal::Tokenizer tok(text);
  internal::Token magic = tok.Next("'scp' header");
  if (magic.text != "scp") internal::Tokenizer::Fail(magic, "'scp' header");
  internal::Token version = tok.Next("format version");
  if (version.text != "1") {
    throw Error::AtPosition(version.line, version.column,
                            "unsupported format version '" +
                                std::string(version.text) + "'");
  }
  Instance instance;
  instance.m = tok.NextCount("universe size m");
  const std::size_t n = tok.NextCount("set count n");
  instance.sets.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    SetEntry& set = instance.sets[i];
    set.weight = tok.NextRational("weight of set " + std::to_string(i + 1));
    const std::size_t k = tok.NextCount("element count");
    set.elements.reserve(std::min(k, instance.m + 1));
    internal::Token last;
    for (std::size_t j = 0; j < k; ++j) {
      last = tok.Next("element");
      const std::size_t e = internal::ParseIndex(last, "element id");
      if (e < 1 || e > instance.m) {
        throw Error::AtSet(ErrorCode::kElementOutOfRange, i,
                           "element " + std::string(last.text) +
                               " outside [1, " + std::to_string(instance.m) +
                               "]");
      }
      set.elements.push_back(static_cast<Element>(e));
    }
    std::sort(set.elements.begin(), set.elements.end());
    if (std::adjacent_find(set.elements.begin(), set.elements.end()) !=
        set.elements.end()) {
      throw Error::AtPosition(last.line, last.column,
                              "duplicate element in set " +
                                  std::to_string(i + 1));
    }
  }
  if (!tok.AtEnd()) {
    internal::Token extra = tok.Next("end of input");
    throw Error::AtPosition(extra.line, extra.column,
                            "trailing data '" + std::string(extra.text) + "'");
  }
  Validate(instance);
  return instance;
}

inline Instance ParseOrLib(std::string_view text) {
  internal::Tokenizer tok(text);
  Instance instance;
  instance.m = tok.NextCount("row count m");
  const std::size_t n = tok.NextCount("column count n");
  instance.sets.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    instance.sets[i].weight = tok.NextRational("column cost");
  }
  for (std::size_t row = 1; row <= instance.m; ++row) {
    const std::size_t count = tok.NextCount("row cover count");
    for (std::size_t j = 0; j < count; ++j) {
      internal::Token t = tok.Next("column index");
      const std::size_t col = internal::ParseIndex(t, "column index");
      if (col < 1 || col > n) {
        internal::Tokenizer::Fail(t, "column index in [1, n]");
      }
      auto& elements = instance.sets[col - 1].elements;
      if (!elements.empty() && elements.back() == row) {
        throw Error::AtPosition(t.line, t.column,
                                "column listed twice in row " +
                                    std::to_string(row));
      }
      elements.push_back(static_cast<Element>(row));
    }
  }
  if (!tok.AtEnd()) {
    internal::Token extra = tok.Next("end of input");
    throw Error::AtPosition(extra.line, extra.column,
                            "trailing data '" + std::string(extra.text) + "'");
  }
  // Rows are visited in increasing order, so every element list is sorted.
  // A row with count 0 leaves its element uncovered and fails here.
  Validate(instance);
  return instance;
}

inline InputFormat DetectFormat(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                             text[i] == '\n' || text[i] == '\r')) {
    ++i;
  }
  return text.substr(i, 3) == "scp" ? InputFormat::kNative
                                    : InputFormat::kOrLib;
}

inline Instance ParseInstance(std::string_view text,
                              InputFormat format = InputFormat::kAuto) {
  if (format == InputFormat::kAuto) format = DetectFormat(text);
  return format == InputFormat::kNative ? ParseNative(text) : ParseOrLib(text);
}

// Lines are joined by '\n' with no trailing newline.
inline std::string WriteNative(const Instance& instance) {
  std::string out = "scp 1\n" + std::to_string(instance.m) + " " +
                    std::to_string(instance.n());
  for (const SetEntry& set : instance.sets) {
    out += "\n";
    out += ToString(set.weight);
    out += " ";
    out += std::to_string(set.elements.size());
    for (Element e : set.elements) {
      out += " ";
      out += std::to_string(e);
    }
  }
  return out;
}

}  // namespace cover

#endif  // COVER_IO_HPP_
