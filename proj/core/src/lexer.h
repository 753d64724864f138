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

#ifndef SHADERFUZZ_SRC_LEXER_H_
#define SHADERFUZZ_SRC_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

namespace shaderfuzz {

struct Token {
  enum class Kind : uint8_t {
    kIdent,
    kKeyword,
    kIntLit,
    kFloatLit,
    kPunct,
    kErrorChar,  // byte that fits no token class; kept so damaged seeds survive
    kEof,
  };
  Kind kind = Kind::kEof;
  std::string text;

  bool is(Kind k) const { return kind == k; }
  bool is_punct(std::string_view p) const {
    return kind == Kind::kPunct && text == p;
  }
  bool is_keyword(std::string_view k) const {
    return kind == Kind::kKeyword && text == k;
  }
};

bool is_wgsl_keyword(std::string_view word);

// Trivia (whitespace and comments) is dropped here, which is the one
// normalization pass the round-trip property is stated over.
std::vector<Token> lex_wgsl(std::string_view source);

}  // namespace shaderfuzz

#endif  // SHADERFUZZ_SRC_LEXER_H_
