#pragma once

#include <string_view>

#include "numerosity/pointset.hpp"

namespace numerosity {

// Parses the point-set expression language:
//
//   expr  := term (('|' | '&' | '\') term)*
//   term  := atom ('*' atom)*
//   atom  := '{' [tuple (',' tuple)*] '}' | 'N^' int | 'diag(' int ')'
//          | 'evens' | 'odds' | 'squares' | 'affine(' int ',' int ')'
//          | 'perm(' expr ',' spec ')' | 'copy(' expr ',' int ',' int ',' int ',' int ')'
//          | '(' expr ')'
//   tuple := '(' int (',' int)* ')'
//   spec  := 'id' | 'rev' | ('[' int* ']')+
//
// '|' union, '&' intersection, '\' difference (one precedence level, left
// associative), '*' concatenation product (binds tighter). Throws ParseError
// on syntax errors and Error when the expression fails validation.
PointSetExpr parse_expr(std::string_view text);

PermutationSpec parse_permutation_spec(std::string_view text);

}  // namespace numerosity
