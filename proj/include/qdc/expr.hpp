#pragma once

#include <string>

#include "qdc/ncalg.hpp"

namespace qdc {

// Parses the expression grammar into a Polynomial over the N-context:
//
//   expr   := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := atom ["^" sint]
//   atom   := scalar | gen | builtin | "(" expr ")"
//   gen    := KIND "[" int "," int "]"        KIND in {T,L,Om,OmL,OmT,Im,ImL}
//   scalar := q | p | x | lam | Nq | kq | integer
//
// Built-in composite symbols: XiX (xi_x), DetT (det_q T), TrOmL (Tr_q Omega^L).
// "/" requires a nonzero scalar (degree-0) divisor; "^" with a negative
// exponent requires a scalar base. Throws ParseError with a position.
Polynomial parse_expr(const std::string& input, int N);

// Canonical rendering; parse_expr(print_poly(p), N) == p.
std::string print_poly(const Polynomial& p);

}  // namespace qdc
