#pragma once

#include <string>

#include "fpvcodes/fppoly.hpp"
#include "fpvcodes/ring.hpp"

namespace fpv {

// Polynomial input comes in two syntaxes: comma-separated coefficients
// constant-first ("1,-1,1,-1,1") and the human expression form
// ("x^4-x^3+x^2-x+1"). Both are accepted everywhere a polynomial is parsed.
Poly parse_poly(const PrimeField& field, const std::string& text);

// Comma-separated RElem list, constant-first; each coefficient uses the
// RElem syntax ("2+v*1", "crt:(0,2)", "1").
RPoly parse_rpoly(const PrimeField& field, const std::string& text);

// "1-2v" / "-1+2v" shorthands, an RElem expression, or nothing (use
// lambda/mu instead). Throws invalid_input for non-units.
Theta parse_theta(const PrimeField& field, const std::string& text);

std::string format_poly(const Poly& f);   // descending powers, reduced residues
std::string format_rpoly(const RPoly& f); // coefficients in a+v*b form

} // namespace fpv
