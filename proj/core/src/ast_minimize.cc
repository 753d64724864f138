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

#include "shaderfuzz/ast_minimize.h"

#include <algorithm>

namespace shaderfuzz {
namespace {

// A node is removable if its parent keeps at least one child afterwards, or
// if its parent is the root translation unit (which may become empty).
void collect_removable(const AstNode& root, std::vector<std::pair<NodePath, size_t>>& out) {
  walk(root, [&](const AstNode& n, const NodePath& p) {
    if (p.empty()) return true;
    NodePath parent_path(p.begin(), p.end() - 1);
    const AstNode* parent = node_at(root, parent_path);
    if (parent_path.empty() || parent->children.size() >= 2) {
      out.push_back({p, node_count(n)});
    }
    return true;
  });
}

bool try_remove(AstTree& tree, const NodePath& path) {
  NodePath parent_path(path.begin(), path.end() - 1);
  AstNode* parent = node_at(tree.root, parent_path);
  if (parent == nullptr || path.back() >= parent->children.size()) return false;
  parent->children.erase(parent->children.begin() + path.back());
  return true;
}

}  // namespace

AstTree minimize_ast(const AstTree& tree, const AstKeepPredicate& keep,
                     const MinimizeBudget& budget) {
  AstTree current = tree;
  size_t evals = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::pair<NodePath, size_t>> candidates;
    collect_removable(current.root, candidates);
    // Larger subtrees first: each successful removal prunes the most.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    for (const auto& [path, size] : candidates) {
      if (evals >= budget.max_keep_evals) return current;
      AstTree attempt = current;
      if (!try_remove(attempt, path)) continue;
      ++evals;
      if (keep(attempt)) {
        current = std::move(attempt);
        progress = true;
        break;  // paths are stale now; rescan
      }
    }
  }
  return current;
}

}  // namespace shaderfuzz
