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

#ifndef SHADERFUZZ_PARSER_H_
#define SHADERFUZZ_PARSER_H_

#include <optional>
#include <string>
#include <string_view>

#include "shaderfuzz/ast.h"

namespace shaderfuzz {

struct ParseOptions {
  size_t max_input_bytes = 4u << 20;
};

struct ParseResult {
  std::optional<AstTree> tree;
  std::string error;

  bool ok() const { return tree.has_value(); }
};

// Error-recovering parser over the supported WGSL subset. Unparseable
// regions become kError nodes holding the raw tokens, so byte-damaged or
// grammar-violating inputs still yield a full tree. Fails only on empty
// input or input above the size limit.
ParseResult parse_wgsl(std::string_view source, const ParseOptions& opts = {});

// Deterministic text reconstruction: concatenates leaf texts with a
// whitespace policy under which parse(unparse(t)) is structurally equal to t
// for every parser-produced t.
std::string unparse(const AstTree& tree);
std::string unparse(const AstNode& node);

}  // namespace shaderfuzz

#endif  // SHADERFUZZ_PARSER_H_
