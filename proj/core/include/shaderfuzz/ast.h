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

#ifndef SHADERFUZZ_AST_H_
#define SHADERFUZZ_AST_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace shaderfuzz {

// Concrete syntax tree over the supported WGSL subset. Every source token
// survives as a leaf, so unparsing is a pure concatenation of leaf texts.
// Trivia (whitespace, comments) is dropped during lexing.
enum class NodeKind : uint8_t {
  kTranslationUnit,
  kStructDecl,
  kStructMember,
  kFunctionDecl,
  kParamList,
  kParam,
  kGlobalVarDecl,
  kAttribute,
  kTypeExpr,
  kTemplateList,
  kCompoundStmt,
  kDeclStmt,
  kAssignStmt,
  kIfStmt,
  kLoopStmt,
  kContinuingStmt,
  kForStmt,
  kWhileStmt,
  kBreakStmt,
  kContinueStmt,
  kReturnStmt,
  kSwitchStmt,
  kSwitchCase,
  kExprStmt,
  kBinaryExpr,
  kUnaryExpr,
  kCallExpr,
  kMemberExpr,
  kIndexExpr,
  kParenExpr,
  kIdentifier,
  kLiteral,
  kToken,
  kError,
};

const char* node_kind_name(NodeKind kind);

struct AstNode {
  NodeKind kind = NodeKind::kToken;
  // Verbatim source fragment; non-empty exactly for leaf nodes.
  std::string text;
  std::vector<AstNode> children;

  bool is_leaf() const { return children.empty(); }
};

// A path addresses a node by child indices from the root.
using NodePath = std::vector<uint32_t>;

struct AstTree {
  AstNode root;  // always kTranslationUnit for parser output
};

size_t node_count(const AstNode& node);
size_t tree_depth(const AstNode& node);
bool structurally_equal(const AstNode& a, const AstNode& b);
bool contains_error_nodes(const AstNode& node);

AstNode* node_at(AstNode& root, const NodePath& path);
const AstNode* node_at(const AstNode& root, const NodePath& path);

// Preorder walk; callback receives each node with its path. Returning false
// skips the node's children.
void walk(const AstNode& root,
          const std::function<bool(const AstNode&, const NodePath&)>& fn);

// Well-formedness per the tree invariants: leaves carry text, interior nodes
// have children. The root translation unit is the one node allowed to be
// empty (the minimal representable tree).
bool tree_well_formed(const AstTree& tree);

// Structural caps applied after mutations.
struct AstLimits {
  size_t max_nodes = 50000;
  size_t max_depth = 200;
};

inline bool within_limits(const AstTree& t, const AstLimits& limits) {
  return node_count(t.root) <= limits.max_nodes &&
         tree_depth(t.root) <= limits.max_depth;
}

}  // namespace shaderfuzz

#endif  // SHADERFUZZ_AST_H_
