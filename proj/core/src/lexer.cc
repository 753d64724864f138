// Copyright 2026 The ShaderFuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexer.h"

#include <array>
#include <cctype>

#include "shaderfuzz/coverage.h"

namespace shaderfuzz {
namespace {

constexpr std::array<std::string_view, 18> kKeywords = {
    "fn",     "let",      "var",    "struct",   "if",     "else",
    "loop",   "for",      "while",  "break",    "continue", "return",
    "switch", "case",     "default", "true",    "false",  "continuing",
};

// Multi-character punctuators, longest first for maximal munch.
constexpr std::array<std::string_view, 16> kPuncts2Plus = {
    "->", "==", "!=", "<=", ">=", "&&", "||", "<<", ">>",
    "+=", "-=", "*=", "/=", "%=", "++", "--",
};

constexpr std::string_view kPuncts1 = "()[]{};:,.@=+-*/%!~^&|<>";

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_hex_digit(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

}  // namespace

bool is_wgsl_keyword(std::string_view word) {
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<Token> lex_wgsl(std::string_view src) {
  std::vector<Token> out;
  size_t i = 0;
  const size_t n = src.size();
  while (i < n) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      SF_COV(kLexer);
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      SF_COV(kLexer);
      // Block comments nest in WGSL.
      int depth = 1;
      i += 2;
      while (i < n && depth > 0) {
        if (src[i] == '/' && i + 1 < n && src[i + 1] == '*') {
          depth++;
          i += 2;
        } else if (src[i] == '*' && i + 1 < n && src[i + 1] == '/') {
          depth--;
          i += 2;
        } else {
          ++i;
        }
      }
      continue;
    }
    if (is_ident_start(c)) {
      SF_COV(kLexer);
      size_t start = i;
      while (i < n && is_ident_char(src[i])) ++i;
      std::string word(src.substr(start, i - start));
      out.push_back({is_wgsl_keyword(word) ? Token::Kind::kKeyword
                                           : Token::Kind::kIdent,
                     std::move(word)});
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(src[i + 1]))) {
      SF_COV(kLexer);
      size_t start = i;
      bool is_float = false;
      if (c == '0' && i + 1 < n && (src[i + 1] == 'x' || src[i + 1] == 'X')) {
        SF_COV(kLexer);
        i += 2;
        while (i < n && is_hex_digit(src[i])) ++i;
        if (i < n && (src[i] == 'i' || src[i] == 'u')) ++i;
      } else {
        while (i < n && is_digit(src[i])) ++i;
        if (i < n && src[i] == '.') {
          SF_COV(kLexer);
          is_float = true;
          ++i;
          while (i < n && is_digit(src[i])) ++i;
        }
        if (i < n && (src[i] == 'e' || src[i] == 'E')) {
          size_t save = i;
          ++i;
          if (i < n && (src[i] == '+' || src[i] == '-')) ++i;
          if (i < n && is_digit(src[i])) {
            SF_COV(kLexer);
            is_float = true;
            while (i < n && is_digit(src[i])) ++i;
          } else {
            i = save;  // bare 'e' belongs to the next token
          }
        }
        if (i < n && (src[i] == 'f' || src[i] == 'h')) {
          is_float = true;
          ++i;
        } else if (!is_float && i < n && (src[i] == 'i' || src[i] == 'u')) {
          ++i;
        }
      }
      out.push_back({is_float ? Token::Kind::kFloatLit : Token::Kind::kIntLit,
                     std::string(src.substr(start, i - start))});
      continue;
    }
    bool matched = false;
    for (auto p : kPuncts2Plus) {
      if (src.substr(i, p.size()) == p) {
        SF_COV(kLexer);
        out.push_back({Token::Kind::kPunct, std::string(p)});
        i += p.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (kPuncts1.find(c) != std::string_view::npos) {
      SF_COV(kLexer);
      out.push_back({Token::Kind::kPunct, std::string(1, c)});
      ++i;
      continue;
    }
    SF_COV(kLexer);
    out.push_back({Token::Kind::kErrorChar, std::string(1, c)});
    ++i;
  }
  out.push_back({Token::Kind::kEof, ""});
  return out;
}

}  // namespace shaderfuzz
