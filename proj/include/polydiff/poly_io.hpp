#pragma once

#include <string>
#include <vector>

#include "polydiff/poly.hpp"

namespace polydiff {

// Canonical text form, graded-lex descending. Variables print by name;
// coefficients print as p, p/q, or (p/q+r/s*i). Round-trips through
// parse_poly losslessly.
std::string print_poly(const Poly& p, const std::vector<std::string>& names);

// Default names x0..xN.
std::string print_poly(const Poly& p);

// Grammar: sums/differences of products of factors; a factor is a rational
// literal, the imaginary unit i, a named variable, or a parenthesized
// subexpression, optionally raised with ^k.
Poly parse_poly(const std::string& text, const std::vector<std::string>& names);

std::vector<std::string> default_var_names(int nvars);

}  // namespace polydiff
