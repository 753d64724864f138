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

#include "shaderfuzz/parser.h"

namespace shaderfuzz {
namespace {

void collect_leaves(const AstNode& node, std::vector<const AstNode*>& out) {
  if (node.is_leaf()) {
    if (!node.text.empty()) out.push_back(&node);
    return;
  }
  for (const auto& c : node.children) collect_leaves(c, out);
}

}  // namespace

// Every pair of adjacent leaves is separated by whitespace, so re-lexing can
// never merge tokens; newlines after ';' and braces are cosmetic only.
std::string unparse(const AstNode& node) {
  std::vector<const AstNode*> leaves;
  collect_leaves(node, leaves);
  std::string out;
  for (size_t i = 0; i < leaves.size(); ++i) {
    const std::string& t = leaves[i]->text;
    out += t;
    if (i + 1 == leaves.size()) break;
    if (t == ";" || t == "{" || t == "}") {
      out += '\n';
    } else {
      out += ' ';
    }
  }
  return out;
}

std::string unparse(const AstTree& tree) { return unparse(tree.root); }

}  // namespace shaderfuzz
