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

#ifndef SHADERFUZZ_IR_H_
#define SHADERFUZZ_IR_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace shaderfuzz {

// Statically-typed shader IR. Types live in a module-level arena whose
// entries only refer to earlier handles, expressions live in per-function
// arenas in topological order, and every expression carries its resolved
// type. All mutations are required to re-establish these invariants.

using TypeHandle = uint32_t;
using ExprHandle = uint32_t;
using FunctionHandle = uint32_t;
using GlobalHandle = uint32_t;
using LocalHandle = uint32_t;

enum class ScalarKind : uint8_t { kBool, kI32, kU32, kF32 };
enum class AddressSpace : uint8_t { kFunction, kPrivate, kStorage };
enum class StorageAccess : uint8_t { kRead, kReadWrite };

const char* scalar_kind_name(ScalarKind kind);  // WGSL spelling
const char* address_space_name(AddressSpace space);

// --- types ------------------------------------------------------------

struct TypeScalar {
  ScalarKind kind;
};
struct TypeVector {
  uint8_t size;  // 2..4
  ScalarKind element;
};
struct TypeMatrix {
  uint8_t cols, rows;  // 2..4 each; element is always f32
};
struct TypeArray {
  TypeHandle element;
  uint32_t length;  // 0 means runtime-sized
};

enum class BuiltinValue : uint8_t { kPosition, kGlobalInvocationId, kVertexIndex };

struct IoBinding {
  enum class Kind : uint8_t { kLocation, kBuiltin };
  Kind kind = Kind::kLocation;
  uint32_t location = 0;
  BuiltinValue builtin = BuiltinValue::kPosition;

  static IoBinding make_location(uint32_t slot) { return {Kind::kLocation, slot, {}}; }
  static IoBinding make_builtin(BuiltinValue b) { return {Kind::kBuiltin, 0, b}; }
};

struct StructMemberDef {
  std::string name;
  TypeHandle type;
  std::optional<IoBinding> binding;
};
struct TypeStruct {
  std::string name;
  std::vector<StructMemberDef> members;
};
struct TypePointer {
  AddressSpace space;
  TypeHandle pointee;
};

using IrType = std::variant<TypeScalar, TypeVector, TypeMatrix, TypeArray,
                            TypeStruct, TypePointer>;

// --- expressions --------------------------------------------------------

using LiteralValue = std::variant<bool, int32_t, uint32_t, float>;
ScalarKind literal_kind(const LiteralValue& v);

enum class UnaryOp : uint8_t { kNegate, kLogicalNot, kBitNot };
enum class BinaryOp : uint8_t {
  kAdd, kSub, kMul, kDiv, kMod,
  kAnd, kOr, kXor, kShiftLeft, kShiftRight,
  kEqual, kNotEqual, kLess, kLessEqual, kGreater, kGreaterEqual,
};
const char* unary_op_token(UnaryOp op);
const char* binary_op_token(BinaryOp op);

struct ExprArgument { uint32_t index; };
struct ExprLocalVar { LocalHandle local; };    // has pointer type
struct ExprGlobalVar { GlobalHandle global; }; // has pointer type
struct ExprLiteral { LiteralValue value; };
struct ExprCompose {
  TypeHandle type;
  std::vector<ExprHandle> components;  // empty = zero value, 1 = conversion/splat
};
struct ExprAccess { ExprHandle base; uint32_t index; };
struct ExprUnary { UnaryOp op; ExprHandle operand; };
struct ExprBinary { BinaryOp op; ExprHandle lhs, rhs; };
struct ExprCallResult { FunctionHandle callee; };  // arguments live on StmtCall
struct ExprBuiltinCall;  // defined below with BuiltinFn
struct ExprLoad { ExprHandle pointer; };

enum class BuiltinFn : uint8_t {
  kAbs, kAcos, kAsin, kAtan, kCeil, kClamp, kCos, kCosh, kCross, kDegrees,
  kDistance, kDot, kExp, kExp2, kFloor, kFract, kInverseSqrt, kLength, kLog,
  kLog2, kMax, kMin, kMix, kNormalize, kPow, kRadians, kRound, kSaturate,
  kSign, kSin, kSinh, kSmoothstep, kSqrt, kStep, kTan, kTanh, kTrunc, kAll,
  kAny, kSelect, kFma, kCountOneBits, kReverseBits, kFirstLeadingBit,
  kFirstTrailingBit, kArrayLength,
};
inline constexpr int kBuiltinFnCount = 46;
const char* builtin_fn_name(BuiltinFn fn);

struct ExprBuiltinCall {
  BuiltinFn fn;
  std::vector<ExprHandle> args;
};

using IrExpression =
    std::variant<ExprArgument, ExprLocalVar, ExprGlobalVar, ExprLiteral,
                 ExprCompose, ExprAccess, ExprUnary, ExprBinary,
                 ExprCallResult, ExprBuiltinCall, ExprLoad>;

struct TypedExpr {
  IrExpression expr;
  TypeHandle type;
};

// --- statements ---------------------------------------------------------

struct IrStatement;
using Block = std::vector<IrStatement>;

struct StmtEmit { ExprHandle expr; };
struct StmtStore { ExprHandle pointer, value; };
struct StmtCall {
  FunctionHandle callee;
  std::vector<ExprHandle> args;
  std::optional<ExprHandle> result;  // an ExprCallResult when non-void
};
struct StmtIf {
  ExprHandle condition;
  Block then_block, else_block;
};
struct StmtLoop { Block body, continuing; };
struct StmtBreak {};
struct StmtContinue {};
struct StmtReturn { std::optional<ExprHandle> value; };
struct IrSwitchCase {
  std::vector<int64_t> values;  // empty for the default case
  bool is_default = false;
  Block body;
};
struct StmtSwitch {
  ExprHandle selector;
  std::vector<IrSwitchCase> cases;
};

struct IrStatement {
  std::variant<StmtEmit, StmtStore, StmtCall, StmtIf, StmtLoop, StmtBreak,
               StmtContinue, StmtReturn, StmtSwitch>
      node;
};

// --- module -------------------------------------------------------------

struct IrParam {
  std::string name;
  TypeHandle type;
  std::optional<IoBinding> binding;
};
struct IrLocal {
  std::string name;
  TypeHandle type;
};

struct IrFunction {
  std::string name;
  std::vector<IrParam> params;
  std::optional<TypeHandle> return_type;
  std::optional<IoBinding> return_binding;
  std::vector<IrLocal> locals;
  std::vector<TypedExpr> expressions;
  Block body;
};

enum class ShaderStage : uint8_t { kCompute, kVertex, kFragment };

struct EntryPoint {
  ShaderStage stage;
  FunctionHandle function;
  std::array<uint32_t, 3> workgroup_size = {1, 1, 1};  // compute only
};

struct IrGlobal {
  std::string name;
  TypeHandle type;
  AddressSpace space = AddressSpace::kPrivate;  // kFunction is invalid here
  StorageAccess access = StorageAccess::kReadWrite;
  std::optional<std::pair<uint32_t, uint32_t>> group_binding;  // storage only
};

struct IrModule {
  std::vector<IrType> types;
  std::vector<IrGlobal> globals;
  std::vector<IrFunction> functions;
  std::vector<EntryPoint> entry_points;
};

// --- type helpers ---------------------------------------------------------

bool types_structurally_equal(const IrModule& m, const IrType& a, const IrType& b);
bool type_handles_equal(const IrModule& m, TypeHandle a, TypeHandle b);

// Returns the handle of a structurally equal existing entry or appends one.
// Structs are nominal and always appended fresh.
TypeHandle intern_type(IrModule& m, IrType type);
std::optional<TypeHandle> find_type(const IrModule& m, const IrType& type);

bool is_scalar_of(const IrModule& m, TypeHandle t, ScalarKind k);
bool is_constructible(const IrModule& m, TypeHandle t);
bool is_host_shareable(const IrModule& m, TypeHandle t);  // storage buffers
bool is_storable(const IrModule& m, TypeHandle t);        // var declarations
std::string type_text(const IrModule& m, TypeHandle t);   // WGSL spelling

// --- traversal and editing --------------------------------------------------

// Visits every ExprHandle stored in the function (expression operands and
// statement references), allowing in-place remapping.
void visit_expr_handles(IrFunction& fn, const std::function<void(ExprHandle&)>& cb);
void visit_statements(Block& block, const std::function<void(IrStatement&)>& cb);
void visit_statements(const Block& block,
                      const std::function<void(const IrStatement&)>& cb);

// Inserts an expression at `pos`, shifting later handles. The new entry may
// only reference handles < pos.
ExprHandle insert_expression(IrFunction& fn, ExprHandle pos, TypedExpr e);

// Removes expressions not reachable from any statement, compacting handles.
// Returns the number of removed entries.
size_t sweep_unused_expressions(IrFunction& fn);

size_t statement_count(const Block& block);
// Total size metric: expression count + statement count over all functions.
size_t module_size(const IrModule& m);

// --- audit -------------------------------------------------------------------

// Full-module well-formedness check: handle hygiene, topological arenas,
// stored-type consistency with infer_type, statement typing rules, call-site
// consistency, and call-graph acyclicity. Returns an explanation for the
// first violation found.
std::optional<std::string> audit_module(const IrModule& m);
inline bool module_well_formed(const IrModule& m) { return !audit_module(m).has_value(); }

}  // namespace shaderfuzz

#endif  // SHADERFUZZ_IR_H_
