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

#include <array>

#include "lexer.h"
#include "shaderfuzz/coverage.h"

namespace shaderfuzz {
namespace {

constexpr size_t kMaxParseDepth = 250;

constexpr std::array<std::string_view, 14> kTemplateTypeKeywords = {
    "vec2",   "vec3",   "vec4",   "mat2x2", "mat2x3", "mat2x4", "mat3x2",
    "mat3x3", "mat3x4", "mat4x2", "mat4x3", "mat4x4", "array",  "ptr",
};

bool is_template_type_keyword(std::string_view word) {
  for (auto k : kTemplateTypeKeywords) {
    if (k == word) return true;
  }
  return false;
}

bool is_assign_op(std::string_view p) {
  return p == "=" || p == "+=" || p == "-=" || p == "*=" || p == "/=" ||
         p == "%=" || p == "&=" || p == "|=" || p == "^=";
}

// Internal control flow for error recovery; never escapes parse_wgsl.
struct ParseBail {};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  AstTree parse_translation_unit() {
    SF_COV(kParser);
    AstNode root{NodeKind::kTranslationUnit, "", {}};
    while (!at_eof()) {
      size_t start = pos_;
      try {
        root.children.push_back(parse_declaration());
      } catch (const ParseBail&) {
        root.children.push_back(recover_declaration(start));
      }
    }
    return AstTree{std::move(root)};
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at_eof() const { return peek().is(Token::Kind::kEof); }

  AstNode take_leaf(NodeKind kind) {
    AstNode leaf{kind, peek().text, {}};
    if (!at_eof()) ++pos_;
    return leaf;
  }

  AstNode expect_punct(std::string_view p) {
    if (!peek().is_punct(p)) throw ParseBail{};
    return take_leaf(NodeKind::kToken);
  }
  AstNode expect_keyword(std::string_view k) {
    if (!peek().is_keyword(k)) throw ParseBail{};
    return take_leaf(NodeKind::kToken);
  }
  AstNode expect_ident() {
    if (!peek().is(Token::Kind::kIdent)) throw ParseBail{};
    return take_leaf(NodeKind::kIdentifier);
  }

  // Closes a template list, splitting composite '>'-led punctuators that
  // maximal-munch lexing produced, as in array<vec4<f32>>.
  AstNode expect_template_close() {
    const Token& t = peek();
    if (t.is_punct(">")) return take_leaf(NodeKind::kToken);
    if (t.is_punct(">>") || t.is_punct(">=")) {
      SF_COV(kParserRecovery);
      std::string rest = t.text.substr(1);
      toks_[pos_] = Token{Token::Kind::kPunct, rest};
      return AstNode{NodeKind::kToken, ">", {}};
    }
    throw ParseBail{};
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxParseDepth) {
        SF_COV(kParserRecovery);
        --parser.depth_;
        throw ParseBail{};
      }
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  // --- declarations ---------------------------------------------------

  AstNode parse_declaration() {
    SF_COV(kParser);
    if (peek().is_keyword("struct")) return parse_struct_decl();
    std::vector<AstNode> attrs = parse_attributes();
    if (peek().is_keyword("fn")) return parse_function_decl(std::move(attrs));
    if (peek().is_keyword("var")) return parse_global_var(std::move(attrs));
    throw ParseBail{};
  }

  AstNode parse_struct_decl() {
    SF_COV(kParser);
    AstNode n{NodeKind::kStructDecl, "", {}};
    n.children.push_back(expect_keyword("struct"));
    n.children.push_back(expect_ident());
    n.children.push_back(expect_punct("{"));
    while (!peek().is_punct("}") && !at_eof()) {
      n.children.push_back(parse_struct_member());
    }
    n.children.push_back(expect_punct("}"));
    return n;
  }

  AstNode parse_struct_member() {
    SF_COV(kParser);
    AstNode m{NodeKind::kStructMember, "", {}};
    for (auto& a : parse_attributes()) m.children.push_back(std::move(a));
    m.children.push_back(expect_ident());
    m.children.push_back(expect_punct(":"));
    m.children.push_back(parse_type());
    if (peek().is_punct(",")) m.children.push_back(take_leaf(NodeKind::kToken));
    return m;
  }

  std::vector<AstNode> parse_attributes() {
    std::vector<AstNode> out;
    while (peek().is_punct("@")) {
      SF_COV(kParser);
      AstNode a{NodeKind::kAttribute, "", {}};
      a.children.push_back(take_leaf(NodeKind::kToken));
      a.children.push_back(expect_ident());
      if (peek().is_punct("(")) {
        a.children.push_back(take_leaf(NodeKind::kToken));
        while (!peek().is_punct(")") && !at_eof()) {
          a.children.push_back(parse_expression());
          if (peek().is_punct(",")) {
            a.children.push_back(take_leaf(NodeKind::kToken));
          } else {
            break;
          }
        }
        a.children.push_back(expect_punct(")"));
      }
      out.push_back(std::move(a));
    }
    return out;
  }

  AstNode parse_function_decl(std::vector<AstNode> attrs) {
    SF_COV(kParser);
    AstNode f{NodeKind::kFunctionDecl, "", {}};
    for (auto& a : attrs) f.children.push_back(std::move(a));
    f.children.push_back(expect_keyword("fn"));
    f.children.push_back(expect_ident());
    f.children.push_back(parse_param_list());
    if (peek().is_punct("->")) {
      SF_COV(kParser);
      f.children.push_back(take_leaf(NodeKind::kToken));
      for (auto& a : parse_attributes()) f.children.push_back(std::move(a));
      f.children.push_back(parse_type());
    }
    f.children.push_back(parse_compound_stmt());
    return f;
  }

  AstNode parse_param_list() {
    SF_COV(kParser);
    AstNode pl{NodeKind::kParamList, "", {}};
    pl.children.push_back(expect_punct("("));
    while (!peek().is_punct(")") && !at_eof()) {
      AstNode p{NodeKind::kParam, "", {}};
      for (auto& a : parse_attributes()) p.children.push_back(std::move(a));
      p.children.push_back(expect_ident());
      p.children.push_back(expect_punct(":"));
      p.children.push_back(parse_type());
      if (peek().is_punct(",")) p.children.push_back(take_leaf(NodeKind::kToken));
      pl.children.push_back(std::move(p));
    }
    pl.children.push_back(expect_punct(")"));
    return pl;
  }

  AstNode parse_global_var(std::vector<AstNode> attrs) {
    SF_COV(kParser);
    AstNode g{NodeKind::kGlobalVarDecl, "", {}};
    for (auto& a : attrs) g.children.push_back(std::move(a));
    g.children.push_back(expect_keyword("var"));
    if (peek().is_punct("<")) g.children.push_back(parse_var_template());
    g.children.push_back(expect_ident());
    if (peek().is_punct(":")) {
      g.children.push_back(take_leaf(NodeKind::kToken));
      g.children.push_back(parse_type());
    }
    if (peek().is_punct("=")) {
      g.children.push_back(take_leaf(NodeKind::kToken));
      g.children.push_back(parse_expression());
    }
    g.children.push_back(expect_punct(";"));
    return g;
  }

  // The <address_space, access_mode> qualifier of a var declaration.
  AstNode parse_var_template() {
    SF_COV(kParser);
    AstNode t{NodeKind::kTemplateList, "", {}};
    t.children.push_back(expect_punct("<"));
    t.children.push_back(expect_ident());
    if (peek().is_punct(",")) {
      t.children.push_back(take_leaf(NodeKind::kToken));
      t.children.push_back(expect_ident());
    }
    t.children.push_back(expect_template_close());
    return t;
  }

  // --- types ----------------------------------------------------------

  AstNode parse_type() {
    DepthGuard guard(*this);
    SF_COV(kParser);
    AstNode ty{NodeKind::kTypeExpr, "", {}};
    ty.children.push_back(expect_ident());
    if (peek().is_punct("<")) {
      ty.children.push_back(parse_template_list());
    }
    return ty;
  }

  AstNode parse_template_list() {
    SF_COV(kParser);
    AstNode tl{NodeKind::kTemplateList, "", {}};
    tl.children.push_back(expect_punct("<"));
    while (!at_eof()) {
      if (peek().is(Token::Kind::kIdent)) {
        tl.children.push_back(parse_type());
      } else {
        tl.children.push_back(parse_expression());
      }
      if (peek().is_punct(",")) {
        tl.children.push_back(take_leaf(NodeKind::kToken));
        continue;
      }
      break;
    }
    tl.children.push_back(expect_template_close());
    return tl;
  }

  // --- statements -----------------------------------------------------

  AstNode parse_compound_stmt() {
    DepthGuard guard(*this);
    SF_COV(kParser);
    AstNode b{NodeKind::kCompoundStmt, "", {}};
    b.children.push_back(expect_punct("{"));
    while (!peek().is_punct("}") && !at_eof()) {
      size_t start = pos_;
      try {
        b.children.push_back(parse_statement());
      } catch (const ParseBail&) {
        b.children.push_back(recover_statement(start));
        if (pos_ == start) break;  // no progress possible
      }
    }
    b.children.push_back(expect_punct("}"));
    return b;
  }

  AstNode parse_statement() {
    DepthGuard guard(*this);
    SF_COV(kParser);
    const Token& t = peek();
    if (t.is_punct("{")) return parse_compound_stmt();
    if (t.is_keyword("var") || t.is_keyword("let")) {
      AstNode d = parse_decl_stmt_body();
      d.children.push_back(expect_punct(";"));
      return d;
    }
    if (t.is_keyword("if")) return parse_if_stmt();
    if (t.is_keyword("loop")) return parse_loop_stmt();
    if (t.is_keyword("for")) return parse_for_stmt();
    if (t.is_keyword("while")) return parse_while_stmt();
    if (t.is_keyword("switch")) return parse_switch_stmt();
    if (t.is_keyword("break")) {
      SF_COV(kParser);
      AstNode s{NodeKind::kBreakStmt, "", {}};
      s.children.push_back(take_leaf(NodeKind::kToken));
      s.children.push_back(expect_punct(";"));
      return s;
    }
    if (t.is_keyword("continue")) {
      SF_COV(kParser);
      AstNode s{NodeKind::kContinueStmt, "", {}};
      s.children.push_back(take_leaf(NodeKind::kToken));
      s.children.push_back(expect_punct(";"));
      return s;
    }
    if (t.is_keyword("return")) {
      SF_COV(kParser);
      AstNode s{NodeKind::kReturnStmt, "", {}};
      s.children.push_back(take_leaf(NodeKind::kToken));
      if (!peek().is_punct(";")) s.children.push_back(parse_expression());
      s.children.push_back(expect_punct(";"));
      return s;
    }
    AstNode s = parse_assign_or_expr_stmt();
    s.children.push_back(expect_punct(";"));
    return s;
  }

  // var/let declaration without the trailing semicolon (shared with for-init).
  AstNode parse_decl_stmt_body() {
    SF_COV(kParser);
    AstNode d{NodeKind::kDeclStmt, "", {}};
    d.children.push_back(take_leaf(NodeKind::kToken));  // var | let
    if (peek().is_punct("<")) d.children.push_back(parse_var_template());
    d.children.push_back(expect_ident());
    if (peek().is_punct(":")) {
      d.children.push_back(take_leaf(NodeKind::kToken));
      d.children.push_back(parse_type());
    }
    if (peek().is_punct("=")) {
      d.children.push_back(take_leaf(NodeKind::kToken));
      d.children.push_back(parse_expression());
    }
    return d;
  }

  // Assignment, increment/decrement, or bare call, without the semicolon.
  AstNode parse_assign_or_expr_stmt() {
    SF_COV(kParser);
    AstNode lhs = parse_expression();
    if (peek().is(Token::Kind::kPunct) && is_assign_op(peek().text)) {
      AstNode s{NodeKind::kAssignStmt, "", {}};
      s.children.push_back(std::move(lhs));
      s.children.push_back(take_leaf(NodeKind::kToken));
      s.children.push_back(parse_expression());
      return s;
    }
    if (peek().is_punct("++") || peek().is_punct("--")) {
      AstNode s{NodeKind::kAssignStmt, "", {}};
      s.children.push_back(std::move(lhs));
      s.children.push_back(take_leaf(NodeKind::kToken));
      return s;
    }
    AstNode s{NodeKind::kExprStmt, "", {}};
    s.children.push_back(std::move(lhs));
    return s;
  }

  AstNode parse_if_stmt() {
    SF_COV(kParser);
    AstNode s{NodeKind::kIfStmt, "", {}};
    s.children.push_back(expect_keyword("if"));
    s.children.push_back(parse_expression());
    s.children.push_back(parse_compound_stmt());
    if (peek().is_keyword("else")) {
      SF_COV(kParser);
      s.children.push_back(take_leaf(NodeKind::kToken));
      if (peek().is_keyword("if")) {
        s.children.push_back(parse_if_stmt());
      } else {
        s.children.push_back(parse_compound_stmt());
      }
    }
    return s;
  }

  AstNode parse_loop_stmt() {
    SF_COV(kParser);
    AstNode s{NodeKind::kLoopStmt, "", {}};
    s.children.push_back(expect_keyword("loop"));
    s.children.push_back(expect_punct("{"));
    while (!peek().is_punct("}") && !at_eof()) {
      if (peek().is_keyword("continuing")) {
        SF_COV(kParser);
        AstNode c{NodeKind::kContinuingStmt, "", {}};
        c.children.push_back(take_leaf(NodeKind::kToken));
        c.children.push_back(parse_compound_stmt());
        s.children.push_back(std::move(c));
        break;
      }
      size_t start = pos_;
      try {
        s.children.push_back(parse_statement());
      } catch (const ParseBail&) {
        s.children.push_back(recover_statement(start));
        if (pos_ == start) break;
      }
    }
    s.children.push_back(expect_punct("}"));
    return s;
  }

  AstNode parse_for_stmt() {
    SF_COV(kParser);
    AstNode s{NodeKind::kForStmt, "", {}};
    s.children.push_back(expect_keyword("for"));
    s.children.push_back(expect_punct("("));
    if (!peek().is_punct(";")) {
      if (peek().is_keyword("var") || peek().is_keyword("let")) {
        s.children.push_back(parse_decl_stmt_body());
      } else {
        s.children.push_back(parse_assign_or_expr_stmt());
      }
    }
    s.children.push_back(expect_punct(";"));
    if (!peek().is_punct(";")) s.children.push_back(parse_expression());
    s.children.push_back(expect_punct(";"));
    if (!peek().is_punct(")")) s.children.push_back(parse_assign_or_expr_stmt());
    s.children.push_back(expect_punct(")"));
    s.children.push_back(parse_compound_stmt());
    return s;
  }

  AstNode parse_while_stmt() {
    SF_COV(kParser);
    AstNode s{NodeKind::kWhileStmt, "", {}};
    s.children.push_back(expect_keyword("while"));
    s.children.push_back(parse_expression());
    s.children.push_back(parse_compound_stmt());
    return s;
  }

  AstNode parse_switch_stmt() {
    SF_COV(kParser);
    AstNode s{NodeKind::kSwitchStmt, "", {}};
    s.children.push_back(expect_keyword("switch"));
    s.children.push_back(parse_expression());
    s.children.push_back(expect_punct("{"));
    while (!peek().is_punct("}") && !at_eof()) {
      SF_COV(kParser);
      AstNode c{NodeKind::kSwitchCase, "", {}};
      if (peek().is_keyword("default")) {
        c.children.push_back(take_leaf(NodeKind::kToken));
      } else {
        c.children.push_back(expect_keyword("case"));
        c.children.push_back(parse_expression());
        while (peek().is_punct(",")) {
          c.children.push_back(take_leaf(NodeKind::kToken));
          c.children.push_back(parse_expression());
        }
      }
      if (peek().is_punct(":")) c.children.push_back(take_leaf(NodeKind::kToken));
      c.children.push_back(parse_compound_stmt());
      s.children.push_back(std::move(c));
    }
    s.children.push_back(expect_punct("}"));
    return s;
  }

  // --- expressions ------------------------------------------------------

  AstNode parse_expression() { return parse_binary(0); }

  // Binary precedence tiers, loosest first. This accepts a superset of the
  // WGSL operator mixing rules; the validator enforces typing.
  static int punct_tier(const Token& t) {
    if (!t.is(Token::Kind::kPunct)) return -1;
    const std::string& p = t.text;
    if (p == "||") return 0;
    if (p == "&&") return 1;
    if (p == "|") return 2;
    if (p == "^") return 3;
    if (p == "&") return 4;
    if (p == "==" || p == "!=") return 5;
    if (p == "<" || p == ">" || p == "<=" || p == ">=") return 6;
    if (p == "<<" || p == ">>") return 7;
    if (p == "+" || p == "-") return 8;
    if (p == "*" || p == "/" || p == "%") return 9;
    return -1;
  }
  static constexpr int kMaxTier = 9;

  AstNode parse_binary(int tier) {
    DepthGuard guard(*this);
    if (tier > kMaxTier) return parse_unary();
    AstNode lhs = parse_binary(tier + 1);
    while (punct_tier(peek()) == tier) {
      SF_COV(kParser);
      AstNode n{NodeKind::kBinaryExpr, "", {}};
      n.children.push_back(std::move(lhs));
      n.children.push_back(take_leaf(NodeKind::kToken));
      n.children.push_back(parse_binary(tier + 1));
      lhs = std::move(n);
    }
    return lhs;
  }

  AstNode parse_unary() {
    DepthGuard guard(*this);
    const Token& t = peek();
    if (t.is_punct("-") || t.is_punct("!") || t.is_punct("~") ||
        t.is_punct("*") || t.is_punct("&")) {
      SF_COV(kParser);
      AstNode n{NodeKind::kUnaryExpr, "", {}};
      n.children.push_back(take_leaf(NodeKind::kToken));
      n.children.push_back(parse_unary());
      return n;
    }
    return parse_postfix();
  }

  AstNode parse_postfix() {
    SF_COV(kParser);
    AstNode e = parse_primary();
    while (true) {
      if (peek().is_punct("(")) {
        SF_COV(kParser);
        AstNode call{NodeKind::kCallExpr, "", {}};
        call.children.push_back(std::move(e));
        call.children.push_back(take_leaf(NodeKind::kToken));
        while (!peek().is_punct(")") && !at_eof()) {
          call.children.push_back(parse_expression());
          if (peek().is_punct(",")) {
            call.children.push_back(take_leaf(NodeKind::kToken));
          } else {
            break;
          }
        }
        call.children.push_back(expect_punct(")"));
        e = std::move(call);
      } else if (peek().is_punct(".")) {
        SF_COV(kParser);
        AstNode m{NodeKind::kMemberExpr, "", {}};
        m.children.push_back(std::move(e));
        m.children.push_back(take_leaf(NodeKind::kToken));
        m.children.push_back(expect_ident());
        e = std::move(m);
      } else if (peek().is_punct("[")) {
        SF_COV(kParser);
        AstNode ix{NodeKind::kIndexExpr, "", {}};
        ix.children.push_back(std::move(e));
        ix.children.push_back(take_leaf(NodeKind::kToken));
        ix.children.push_back(parse_expression());
        ix.children.push_back(expect_punct("]"));
        e = std::move(ix);
      } else {
        break;
      }
    }
    return e;
  }

  AstNode parse_primary() {
    DepthGuard guard(*this);
    const Token& t = peek();
    if (t.is(Token::Kind::kIntLit) || t.is(Token::Kind::kFloatLit)) {
      SF_COV(kParser);
      return take_leaf(NodeKind::kLiteral);
    }
    if (t.is_keyword("true") || t.is_keyword("false")) {
      SF_COV(kParser);
      return take_leaf(NodeKind::kLiteral);
    }
    if (t.is(Token::Kind::kIdent)) {
      if (is_template_type_keyword(t.text) && peek(1).is_punct("<")) {
        SF_COV(kParser);
        return parse_type();  // constructor head like vec4<f32>
      }
      SF_COV(kParser);
      return take_leaf(NodeKind::kIdentifier);
    }
    if (t.is_punct("(")) {
      SF_COV(kParser);
      AstNode p{NodeKind::kParenExpr, "", {}};
      p.children.push_back(take_leaf(NodeKind::kToken));
      p.children.push_back(parse_expression());
      p.children.push_back(expect_punct(")"));
      return p;
    }
    throw ParseBail{};
  }

  // --- error recovery ---------------------------------------------------

  AstNode token_to_leaf(const Token& t) {
    NodeKind kind = NodeKind::kToken;
    if (t.is(Token::Kind::kIdent)) kind = NodeKind::kIdentifier;
    if (t.is(Token::Kind::kIntLit) || t.is(Token::Kind::kFloatLit)) {
      kind = NodeKind::kLiteral;
    }
    return AstNode{kind, t.text, {}};
  }

  AstNode make_error_node(size_t start, size_t end) {
    SF_COV(kParserRecovery);
    AstNode err{NodeKind::kError, "", {}};
    for (size_t i = start; i < end; ++i) {
      err.children.push_back(token_to_leaf(toks_[i]));
    }
    if (err.children.empty()) {
      // An error region must carry at least one leaf to stay well formed.
      err.children.push_back(AstNode{NodeKind::kToken, ";", {}});
    }
    return err;
  }

  // Skips to the next plausible declaration start, balancing braces.
  AstNode recover_declaration(size_t start) {
    SF_COV(kParserRecovery);
    pos_ = start;
    int brace_depth = 0;
    bool first = true;
    while (!at_eof()) {
      const Token& t = peek();
      if (!first && brace_depth == 0 &&
          (t.is_keyword("struct") || t.is_keyword("fn") || t.is_keyword("var") ||
           t.is_punct("@"))) {
        break;
      }
      first = false;
      if (t.is_punct("{")) ++brace_depth;
      if (t.is_punct("}") && brace_depth > 0) --brace_depth;
      ++pos_;
      if (brace_depth == 0 && toks_[pos_ - 1].is_punct(";")) break;
      if (brace_depth == 0 && toks_[pos_ - 1].is_punct("}")) break;
    }
    return make_error_node(start, pos_);
  }

  // Skips to just past the next ';' or up to the enclosing '}'.
  AstNode recover_statement(size_t start) {
    SF_COV(kParserRecovery);
    pos_ = start;
    int brace_depth = 0;
    while (!at_eof()) {
      const Token& t = peek();
      if (brace_depth == 0 && t.is_punct("}")) break;
      if (t.is_punct("{")) ++brace_depth;
      if (t.is_punct("}") && brace_depth > 0) --brace_depth;
      ++pos_;
      if (brace_depth == 0 && toks_[pos_ - 1].is_punct(";")) break;
    }
    return make_error_node(start, pos_);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  size_t depth_ = 0;
};

}  // namespace

ParseResult parse_wgsl(std::string_view source, const ParseOptions& opts) {
  if (source.empty()) {
    return ParseResult{std::nullopt, "empty input"};
  }
  if (source.size() > opts.max_input_bytes) {
    return ParseResult{std::nullopt, "input exceeds size limit"};
  }
  Parser parser(lex_wgsl(source));
  return ParseResult{parser.parse_translation_unit(), ""};
}

}  // namespace shaderfuzz
