#pragma once

#include <string_view>

#include "thinset/set_expr.hpp"

namespace thinset {

// Grammar:
//   expr := 'union' '(' expr (',' expr)+ ')'
//         | 'inter' '(' expr ',' expr ')'
//         | 'diff'  '(' expr ',' expr ')'
//         | '{' int (',' int)* '}'
//         | name [ '(' int (',' int)* ')' ]
//         | 'blocks' '(' name ')'            -- alias for a block-family name
// Catalog names: ap(m,r), pow(b), pow2plus1, pow2pair, pow2run, tri, triY,
// cubicgap, primes, dyadic(n,i), poly(c,d), geo(b,c).
SetExpr parse_set_expr(std::string_view text);

}  // namespace thinset
