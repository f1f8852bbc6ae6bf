#pragma once

#include "freeop/lexer.hpp"
#include "freeop/poly/polynomial.hpp"

namespace freeop {

/// Parses one polynomial expression from the stream and stops at the first
/// token that cannot continue it. Identifiers must name one of `vars`.
Polynomial parse_expression(TokenStream& in, const VariableList& vars);

}  // namespace freeop
