// Copyright 2026 The Authors.
//
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

#include "kmr/groundfield/expr.h"

#include <cctype>

#include "kmr/errors.h"

namespace kmr {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const Tower& t, int nv) : s_(s), t_(t), nv_(nv) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int64_t integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    int64_t v = std::stoll(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (eat('+')) {
        r = r + term();
      } else if (eat('-')) {
        r = r - term();
      } else {
        return r;
      }
    }
  }

  RatFunc term() {
    RatFunc r = factor();
    for (;;) {
      if (eat('*')) {
        r = r * factor();
      } else if (eat('/')) {
        RatFunc d = factor();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RatFunc factor() {
    if (eat('-')) return -factor();
    RatFunc base = atom();
    if (eat('^')) {
      int64_t e = integer();
      if (e < 0 && base.is_zero()) fail("negative power of zero");
      return base.pow(e);
    }
    return base;
  }

  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '[') {
      ++pos_;
      Raw coeffs;
      if (!eat(']')) {
        do {
          coeffs.push_back(mod_reduce(integer(), t_.p()));
        } while (eat(','));
        if (!eat(']')) fail("expected ']'");
      }
      if (!eat('@')) fail("expected '@level'");
      int64_t level = integer();
      if (level <= 0 || static_cast<size_t>(level) != coeffs.size()) fail("level does not match coefficients");
      return RatFunc::constant(t_, nv_, GroundElem(t_, static_cast<uint32_t>(level), coeffs));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RatFunc::constant(t_, nv_, integer());
    }
    if (c == 't') {
      ++pos_;
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected variable index after 't'");
      int idx = std::stoi(s_.substr(start, pos_ - start));
      if (idx < 1 || idx > nv_) fail("variable t" + std::to_string(idx) + " out of range");
      return RatFunc::variable(t_, nv_, idx - 1);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const Tower& t_;
  int nv_;
  size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const Tower& tower, int num_vars) {
  return Parser(text, tower, num_vars).parse();
}

}  // namespace kmr
