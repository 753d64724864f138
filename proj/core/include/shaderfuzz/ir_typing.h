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

#ifndef SHADERFUZZ_IR_TYPING_H_
#define SHADERFUZZ_IR_TYPING_H_

#include <optional>
#include <string>

#include "shaderfuzz/ir.h"

namespace shaderfuzz {

struct InferResult {
  std::optional<IrType> type;  // value, compared structurally against arena
  std::string error;

  bool ok() const { return type.has_value(); }
  static InferResult fail(std::string why) { return {std::nullopt, std::move(why)}; }
  static InferResult of(IrType t) { return {std::move(t), ""}; }
};

// Recomputes the type of one expression from its operands' stored types,
// independent of the expression's own stored type. Mutations use the error
// result as their validity check.
InferResult infer_type(const IrModule& m, const IrFunction& fn, ExprHandle h);

// Typing rule for a builtin call given concrete argument types.
InferResult infer_builtin(const IrModule& m, BuiltinFn fn,
                          const std::vector<IrType>& args);

// All builtins accepting exactly these argument types with an identical
// result type; used by the Built-ins mutation for signature-compatible swaps.
std::vector<BuiltinFn> signature_compatible_builtins(const IrModule& m, BuiltinFn original,
                                                     const std::vector<IrType>& args);

}  // namespace shaderfuzz

#endif  // SHADERFUZZ_IR_TYPING_H_
