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

#ifndef SHADERFUZZ_TOKEN_DICTIONARY_H_
#define SHADERFUZZ_TOKEN_DICTIONARY_H_

#include <string>
#include <vector>

namespace shaderfuzz {

// Domain-specific token strings used by the AST Replace mutation: keywords,
// builtin function names, attribute names, swizzles, and boundary literals
// (including at least one integer too large for 64 bits).
struct TokenDictionary {
  std::vector<std::string> entries;

  static TokenDictionary standard();
};

}  // namespace shaderfuzz

#endif  // SHADERFUZZ_TOKEN_DICTIONARY_H_
