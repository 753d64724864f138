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

#ifndef SHADERFUZZ_AST_MINIMIZE_H_
#define SHADERFUZZ_AST_MINIMIZE_H_

#include <functional>

#include "shaderfuzz/ast.h"

namespace shaderfuzz {

using AstKeepPredicate = std::function<bool(const AstTree&)>;

struct MinimizeBudget {
  // Upper bound on keep-predicate evaluations; SIZE_MAX means run to
  // 1-minimality. A bounded run still returns a keep-satisfying tree that is
  // never larger than the input.
  size_t max_keep_evals = static_cast<size_t>(-1);
};

// Prunes subtrees while the predicate stays true. With an unbounded budget
// the result is 1-minimal at subtree granularity: removing any single
// remaining removable subtree breaks `keep`. Requires keep(tree) to hold.
AstTree minimize_ast(const AstTree& tree, const AstKeepPredicate& keep,
                     const MinimizeBudget& budget = {});

}  // namespace shaderfuzz

#endif  // SHADERFUZZ_AST_MINIMIZE_H_
