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

#include "shaderfuzz/ast.h"

namespace shaderfuzz {

const char* node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::kTranslationUnit: return "translation-unit";
    case NodeKind::kStructDecl: return "struct-decl";
    case NodeKind::kStructMember: return "struct-member";
    case NodeKind::kFunctionDecl: return "function-decl";
    case NodeKind::kParamList: return "param-list";
    case NodeKind::kParam: return "param";
    case NodeKind::kGlobalVarDecl: return "global-var-decl";
    case NodeKind::kAttribute: return "attribute";
    case NodeKind::kTypeExpr: return "type-expression";
    case NodeKind::kTemplateList: return "template-list";
    case NodeKind::kCompoundStmt: return "compound-stmt";
    case NodeKind::kDeclStmt: return "decl-stmt";
    case NodeKind::kAssignStmt: return "assign-stmt";
    case NodeKind::kIfStmt: return "if-stmt";
    case NodeKind::kLoopStmt: return "loop-stmt";
    case NodeKind::kContinuingStmt: return "continuing-stmt";
    case NodeKind::kForStmt: return "for-stmt";
    case NodeKind::kWhileStmt: return "while-stmt";
    case NodeKind::kBreakStmt: return "break-stmt";
    case NodeKind::kContinueStmt: return "continue-stmt";
    case NodeKind::kReturnStmt: return "return-stmt";
    case NodeKind::kSwitchStmt: return "switch-stmt";
    case NodeKind::kSwitchCase: return "switch-case";
    case NodeKind::kExprStmt: return "expr-stmt";
    case NodeKind::kBinaryExpr: return "binary-expr";
    case NodeKind::kUnaryExpr: return "unary-expr";
    case NodeKind::kCallExpr: return "call-expr";
    case NodeKind::kMemberExpr: return "member-expr";
    case NodeKind::kIndexExpr: return "index-expr";
    case NodeKind::kParenExpr: return "paren-expr";
    case NodeKind::kIdentifier: return "identifier";
    case NodeKind::kLiteral: return "literal";
    case NodeKind::kToken: return "token";
    case NodeKind::kError: return "error";
  }
  return "unknown";
}

size_t node_count(const AstNode& node) {
  size_t n = 1;
  for (const auto& c : node.children) n += node_count(c);
  return n;
}

size_t tree_depth(const AstNode& node) {
  size_t d = 0;
  for (const auto& c : node.children) d = std::max(d, tree_depth(c));
  return d + 1;
}

bool structurally_equal(const AstNode& a, const AstNode& b) {
  if (a.kind != b.kind || a.text != b.text ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (size_t i = 0; i < a.children.size(); ++i) {
    if (!structurally_equal(a.children[i], b.children[i])) return false;
  }
  return true;
}

bool contains_error_nodes(const AstNode& node) {
  if (node.kind == NodeKind::kError) return true;
  for (const auto& c : node.children) {
    if (contains_error_nodes(c)) return true;
  }
  return false;
}

AstNode* node_at(AstNode& root, const NodePath& path) {
  AstNode* cur = &root;
  for (uint32_t idx : path) {
    if (idx >= cur->children.size()) return nullptr;
    cur = &cur->children[idx];
  }
  return cur;
}

const AstNode* node_at(const AstNode& root, const NodePath& path) {
  return node_at(const_cast<AstNode&>(root), path);
}

static void walk_impl(const AstNode& node, NodePath& path,
                      const std::function<bool(const AstNode&, const NodePath&)>& fn) {
  if (!fn(node, path)) return;
  for (uint32_t i = 0; i < node.children.size(); ++i) {
    path.push_back(i);
    walk_impl(node.children[i], path, fn);
    path.pop_back();
  }
}

void walk(const AstNode& root,
          const std::function<bool(const AstNode&, const NodePath&)>& fn) {
  NodePath path;
  walk_impl(root, path, fn);
}

static bool node_well_formed(const AstNode& node, bool is_root) {
  if (node.children.empty()) {
    if (is_root && node.kind == NodeKind::kTranslationUnit) return true;
    return !node.text.empty();
  }
  if (!node.text.empty()) return false;
  for (const auto& c : node.children) {
    if (!node_well_formed(c, false)) return false;
  }
  return true;
}

bool tree_well_formed(const AstTree& tree) {
  return tree.root.kind == NodeKind::kTranslationUnit &&
         node_well_formed(tree.root, true);
}

}  // namespace shaderfuzz
