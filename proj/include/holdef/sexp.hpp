/* Copyright 2026 The holdef Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "holdef/result.hpp"

namespace holdef {

struct Span {
  std::size_t line = 1;
  std::size_t col = 1;

  std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

/// An atom or a list. Spans are carried but ignored by equality.
class Sexp {
 public:
  static Sexp atom(std::string text, Span at = {}) {
    Sexp s;
    s.is_atom_ = true;
    s.text_ = std::move(text);
    s.span_ = at;
    return s;
  }
  static Sexp list(std::vector<Sexp> items, Span at = {}) {
    Sexp s;
    s.items_ = std::move(items);
    s.span_ = at;
    return s;
  }

  bool is_atom() const { return is_atom_; }
  bool is_list() const { return !is_atom_; }
  const std::string& text() const { return text_; }
  const std::vector<Sexp>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  const Sexp& operator[](std::size_t i) const { return items_[i]; }
  const Span& span() const { return span_; }

  bool is(std::string_view a) const { return is_atom_ && text_ == a; }
  /// A list whose head is the atom `h`.
  bool headed(std::string_view h) const { return !is_atom_ && !items_.empty() && items_[0].is(h); }

  friend bool operator==(const Sexp& a, const Sexp& b) {
    return a.is_atom_ == b.is_atom_ && a.text_ == b.text_ && a.items_ == b.items_;
  }

  std::string str() const {
    std::string out;
    print(out);
    return out;
  }

 private:
  void print(std::string& out) const {
    if (is_atom_) {
      out += quote_atom(text_);
      return;
    }
    out += '(';
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) out += ' ';
      items_[i].print(out);
    }
    out += ')';
  }

 public:
  static bool bare_char(unsigned char c) {
    return c > 0x20 && c != '(' && c != ')' && c != '"' && c != ';' && c != 0x7f;
  }

  static std::string quote_atom(const std::string& t) {
    bool bare = !t.empty();
    for (unsigned char c : t)
      if (!bare_char(c)) bare = false;
    if (bare) return t;
    std::string out = "\"";
    for (char c : t) {
      if (c == '"' || c == '\\') out += '\\';
      if (c == '\n') {
        out += "\\n";
        continue;
      }
      out += c;
    }
    return out + "\"";
  }

 private:
  bool is_atom_ = false;
  std::string text_;
  std::vector<Sexp> items_;
  Span span_;
};

namespace detail {

class SexpReader {
 public:
  explicit SexpReader(std::string_view src) : src_(src) {}

  Result<std::vector<Sexp>> read_all() {
    std::vector<Sexp> out;
    while (true) {
      skip();
      if (pos_ >= src_.size()) return out;
      auto s = read();
      if (!s) return s.error();
      out.push_back(std::move(*s));
    }
  }

 private:
  Error err(Span at, const std::string& msg) const { return Error{Errc::Parse, at.str() + ": " + msg}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++here_.line;
      here_.col = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xc0) != 0x80) {
      ++here_.col;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  Result<Sexp> read() {
    skip();
    Span at = here_;
    if (pos_ >= src_.size()) return err(at, "unexpected end of input");
    char c = src_[pos_];
    if (c == ')') return err(at, "unbalanced ')'");
    if (c == '(') {
      advance();
      std::vector<Sexp> items;
      while (true) {
        skip();
        if (pos_ >= src_.size()) return err(at, "unclosed '('");
        if (src_[pos_] == ')') {
          advance();
          return Sexp::list(std::move(items), at);
        }
        auto s = read();
        if (!s) return s.error();
        items.push_back(std::move(*s));
      }
    }
    if (c == '"') {
      advance();
      std::string text;
      while (true) {
        if (pos_ >= src_.size()) return err(at, "unterminated string");
        char d = src_[pos_];
        advance();
        if (d == '"') break;
        if (d == '\\') {
          if (pos_ >= src_.size()) return err(at, "unterminated string");
          char e = src_[pos_];
          advance();
          text += e == 'n' ? '\n' : e;
          continue;
        }
        text += d;
      }
      return Sexp::atom(std::move(text), at);
    }
    std::string text;
    while (pos_ < src_.size() && Sexp::bare_char(static_cast<unsigned char>(src_[pos_]))) {
      text += src_[pos_];
      advance();
    }
    return Sexp::atom(std::move(text), at);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Span here_;
};

}  // namespace detail

/// All top-level s-expressions of `src`. Comments run from ';' to end of line.
inline Result<std::vector<Sexp>> parse_sexps(std::string_view src) { return detail::SexpReader(src).read_all(); }

}  // namespace holdef
