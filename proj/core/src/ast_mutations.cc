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

#include "shaderfuzz/ast_mutations.h"

#include <algorithm>

namespace shaderfuzz {
namespace {

constexpr int kCapRetries = 8;

const char* kOperatorNames[kAstOperatorCount] = {
    "recursive-replace", "delete", "replace", "splice", "swap", "identifier",
};

std::vector<NodePath> collect_paths(
    const AstNode& root,
    const std::function<bool(const AstNode&, const NodePath&)>& pred) {
  std::vector<NodePath> out;
  walk(root, [&](const AstNode& n, const NodePath& p) {
    if (pred(n, p)) out.push_back(p);
    return true;
  });
  return out;
}

// --- individual operators -------------------------------------------------

// Copies the subtree at an ancestor position over one of its own same-kind
// descendants, strictly increasing nesting depth.
bool recursive_replace_once(AstTree& tree, Rng& rng) {
  // Candidates: nodes that have at least one same-kind strict ancestor.
  // Ancestors are path prefixes, so they can be re-derived from the path.
  std::vector<NodePath> candidates;
  struct StackEntry { NodeKind kind; };
  std::vector<NodeKind> ancestry;
  std::function<void(const AstNode&, NodePath&)> scan =
      [&](const AstNode& n, NodePath& path) {
        bool has_same_kind_ancestor =
            std::find(ancestry.begin(), ancestry.end(), n.kind) != ancestry.end();
        if (has_same_kind_ancestor && n.kind != NodeKind::kToken &&
            n.kind != NodeKind::kTranslationUnit) {
          candidates.push_back(path);
        }
        ancestry.push_back(n.kind);
        for (uint32_t i = 0; i < n.children.size(); ++i) {
          path.push_back(i);
          scan(n.children[i], path);
          path.pop_back();
        }
        ancestry.pop_back();
      };
  NodePath p;
  scan(tree.root, p);
  if (candidates.empty()) return false;

  const NodePath& dest = rng.pick(candidates);
  const AstNode* dest_node = node_at(tree.root, dest);
  // Same-kind ancestors are the proper prefixes of `dest` with matching kind.
  std::vector<size_t> ancestor_lens;
  const AstNode* cur = &tree.root;
  for (size_t i = 0; i < dest.size(); ++i) {
    if (cur->kind == dest_node->kind) ancestor_lens.push_back(i);
    cur = &cur->children[dest[i]];
  }
  if (ancestor_lens.empty()) return false;
  size_t len = ancestor_lens[rng.index(ancestor_lens.size())];
  NodePath src(dest.begin(), dest.begin() + len);
  AstNode copy = *node_at(tree.root, src);
  *node_at(tree.root, dest) = std::move(copy);
  return true;
}

bool delete_once(AstTree& tree, Rng& rng) {
  auto sites = collect_paths(tree.root, [&](const AstNode&, const NodePath& p) {
    if (p.empty()) return false;
    NodePath parent(p.begin(), p.end() - 1);
    return node_at(tree.root, parent)->children.size() >= 2;
  });
  if (sites.empty()) return false;
  const NodePath& victim = rng.pick(sites);
  NodePath parent(victim.begin(), victim.end() - 1);
  AstNode* pn = node_at(tree.root, parent);
  pn->children.erase(pn->children.begin() + victim.back());
  return true;
}

bool replace_once(AstTree& tree, Rng& rng, const TokenDictionary& dict) {
  auto sites = collect_paths(tree.root, [](const AstNode& n, const NodePath&) {
    return n.is_leaf() && !n.text.empty();
  });
  if (sites.empty() || dict.entries.empty()) return false;
  AstNode* leaf = node_at(tree.root, rng.pick(sites));
  for (int i = 0; i < 4; ++i) {
    const std::string& entry = rng.pick(dict.entries);
    if (entry != leaf->text) {
      leaf->text = entry;
      return true;
    }
  }
  return false;
}

bool splice_once(AstTree& tree, Rng& rng, const AstTree* donor) {
  if (donor == nullptr) return false;
  auto recipients = collect_paths(tree.root, [](const AstNode& n, const NodePath& p) {
    return !p.empty() && n.kind != NodeKind::kToken;
  });
  if (recipients.empty()) return false;
  // Donor and recipient node kinds are required to match; the paper leaves
  // this unconstrained, matching kinds is our interpretation.
  for (int attempt = 0; attempt < 8; ++attempt) {
    const NodePath& rp = recipients[rng.index(recipients.size())];
    NodeKind want = node_at(tree.root, rp)->kind;
    auto donors = collect_paths(donor->root, [&](const AstNode& n, const NodePath&) {
      return n.kind == want;
    });
    if (donors.empty()) continue;
    AstNode graft = *node_at(donor->root, rng.pick(donors));
    *node_at(tree.root, rp) = std::move(graft);
    return true;
  }
  return false;
}

bool swap_once(AstTree& tree, Rng& rng) {
  auto sites = collect_paths(tree.root, [](const AstNode& n, const NodePath&) {
    return n.children.size() >= 2;
  });
  if (sites.empty()) return false;
  AstNode* n = node_at(tree.root, rng.pick(sites));
  size_t a = rng.index(n->children.size());
  size_t b = rng.index(n->children.size() - 1);
  if (b >= a) ++b;
  std::swap(n->children[a], n->children[b]);
  return true;
}

bool identifier_once(AstTree& tree, Rng& rng) {
  auto sites = collect_paths(tree.root, [](const AstNode& n, const NodePath&) {
    return n.kind == NodeKind::kIdentifier && n.is_leaf();
  });
  if (sites.size() < 2) return false;
  for (int attempt = 0; attempt < 8; ++attempt) {
    AstNode* target = node_at(tree.root, sites[rng.index(sites.size())]);
    const AstNode* source = node_at(tree.root, sites[rng.index(sites.size())]);
    if (source->text != target->text) {
      target->text = source->text;
      return true;
    }
  }
  return false;
}

bool apply_once(AstTree& tree, AstOperator op, Rng& rng,
                const TokenDictionary& dict, const AstTree* donor) {
  switch (op) {
    case AstOperator::kRecursiveReplace: {
      // Repeat insertion a few times; this is the operator meant to build
      // pathological nesting.
      int reps = 1 + static_cast<int>(rng.below(3));
      bool any = false;
      for (int i = 0; i < reps; ++i) any |= recursive_replace_once(tree, rng);
      return any;
    }
    case AstOperator::kDelete: return delete_once(tree, rng);
    case AstOperator::kReplace: return replace_once(tree, rng, dict);
    case AstOperator::kSplice: return splice_once(tree, rng, donor);
    case AstOperator::kSwap: return swap_once(tree, rng);
    case AstOperator::kIdentifier: return identifier_once(tree, rng);
  }
  return false;
}

}  // namespace

const char* ast_operator_name(AstOperator op) {
  return kOperatorNames[static_cast<int>(op)];
}

AstMutationResult apply_ast_operator(const AstTree& tree, AstOperator op,
                                     Rng& rng, const TokenDictionary& dict,
                                     const DonorSource& donor,
                                     const AstLimits& limits) {
  AstOperator effective = op;
  const AstTree* donor_tree = nullptr;
  if (op == AstOperator::kSplice) {
    donor_tree = donor ? donor() : nullptr;
    if (donor_tree == nullptr) {
      // Empty corpus: fall back to a different operator.
      effective = static_cast<AstOperator>(rng.below(kAstOperatorCount - 1));
      if (effective == AstOperator::kSplice) effective = AstOperator::kSwap;
    }
  }
  for (int attempt = 0; attempt < kCapRetries; ++attempt) {
    AstTree scratch = tree;
    if (!apply_once(scratch, effective, rng, dict, donor_tree)) {
      return AstMutationResult{tree, false, effective};
    }
    if (!within_limits(scratch, limits)) continue;  // rejected, retry
    bool changed = !structurally_equal(scratch.root, tree.root);
    return AstMutationResult{std::move(scratch), changed, effective};
  }
  return AstMutationResult{tree, false, effective};
}

AstMutationResult mutate_ast(const AstTree& tree, Rng& rng,
                             const TokenDictionary& dict,
                             const DonorSource& donor,
                             const AstLimits& limits) {
  std::vector<AstOperator> order;
  for (int i = 0; i < kAstOperatorCount; ++i) {
    order.push_back(static_cast<AstOperator>(i));
  }
  rng.shuffle(order);
  for (AstOperator op : order) {
    AstMutationResult r = apply_ast_operator(tree, op, rng, dict, donor, limits);
    if (r.changed) return r;
  }
  return AstMutationResult{tree, false, order.back()};
}

}  // namespace shaderfuzz
