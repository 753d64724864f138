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

#ifndef SHADERFUZZ_AST_MUTATIONS_H_
#define SHADERFUZZ_AST_MUTATIONS_H_

#include <functional>

#include "shaderfuzz/ast.h"
#include "shaderfuzz/rng.h"
#include "shaderfuzz/token_dictionary.h"

namespace shaderfuzz {

// Tree-edit operators applied to AST-layer samples. These may (and are meant
// to) produce grammar-violating inputs; only the structural caps are
// enforced.
enum class AstOperator : uint8_t {
  kRecursiveReplace,  // re-inserts a subtree into a same-kind descendant
  kDelete,            // removes a node and all its children
  kReplace,           // rewrites leaf text from the token dictionary
  kSplice,            // transplants a same-kind subtree from another corpus tree
  kSwap,              // reorders the children of one node
  kIdentifier,        // renames one identifier to another used in the tree
};

inline constexpr int kAstOperatorCount = 6;
const char* ast_operator_name(AstOperator op);

// Supplies a random donor tree for Splice; returns nullptr when the corpus
// has no AST sample to offer.
using DonorSource = std::function<const AstTree*()>;

struct AstMutationResult {
  AstTree tree;
  bool changed = false;        // false means no applicable mutation site
  AstOperator applied{};       // actual operator (Splice may fall back)
};

AstMutationResult apply_ast_operator(const AstTree& tree, AstOperator op,
                                     Rng& rng, const TokenDictionary& dict,
                                     const DonorSource& donor,
                                     const AstLimits& limits = {});

// Applies one randomly chosen applicable operator.
AstMutationResult mutate_ast(const AstTree& tree, Rng& rng,
                             const TokenDictionary& dict,
                             const DonorSource& donor,
                             const AstLimits& limits = {});

}  // namespace shaderfuzz

#endif  // SHADERFUZZ_AST_MUTATIONS_H_
