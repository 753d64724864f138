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

#include "shaderfuzz/token_dictionary.h"

namespace shaderfuzz {

TokenDictionary TokenDictionary::standard() {
  TokenDictionary dict;
  dict.entries = {
      // keywords of the supported grammar subset
      "fn", "let", "var", "struct", "if", "else", "loop", "for", "while",
      "break", "continue", "return", "switch", "case", "default", "true",
      "false", "continuing",
      // type names
      "bool", "i32", "u32", "f32", "vec2", "vec3", "vec4", "mat2x2", "mat4x4",
      "array", "ptr", "function", "private", "storage", "read", "read_write",
      // builtin functions
      "abs", "acos", "asin", "atan", "ceil", "clamp", "cos", "cosh", "cross",
      "degrees", "distance", "dot", "exp", "exp2", "floor", "fract",
      "inverseSqrt", "length", "log", "log2", "max", "min", "mix", "normalize",
      "pow", "radians", "round", "saturate", "sign", "sin", "sinh",
      "smoothstep", "sqrt", "step", "tan", "tanh", "trunc", "all", "any",
      "select", "fma", "countOneBits", "reverseBits", "firstLeadingBit",
      "firstTrailingBit", "arrayLength",
      // attribute names
      "location", "builtin", "group", "binding", "workgroup_size", "vertex",
      "fragment", "compute", "position", "global_invocation_id",
      // swizzles
      "x", "y", "z", "w", "xy", "xyz", "xyzw", "rgba", "xxxx", "wzyx",
      // boundary literals; the last integers do not fit in 64 bits
      "0", "1", "-1", "2147483647", "4294967296", "18446744073709551616",
      "340282366920938463463374607431768211456", "1e38", "nan", "0x7fffffff",
      "_",
  };
  return dict;
}

}  // namespace shaderfuzz
