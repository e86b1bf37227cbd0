#pragma once

#include <string>
#include <string_view>

#include "gts/ast.hpp"

namespace gts {

// Parses one program (a single expression) in the concrete syntax:
//
//   type    := atomty ("->" type)?          -- "->" right-associative
//   atomty  := "dyn" | "int" | "ref" atomty | "(" type ")"
//   expr    := assign
//   assign  := add (":=" assign)?           -- right-associative
//   add     := app ("+" app)*               -- left-associative
//   app     := atom+                        -- left-associative application
//   atom    := INT | IDENT | "!" atom | "ref" "<" type ">" atom
//            | "fun" "(" IDENT ":" type ")" "->" type "{" expr "}"
//            | "(" expr ")"
//
// "#" starts a line comment. Keywords: fun, ref, dyn, int.
// Throws parse_error with line/column and the expected-token set.
SurfaceExprPtr parse_program(std::string_view source);

SurfaceTypePtr parse_type(std::string_view source);  // for tests/tools

}  // namespace gts
