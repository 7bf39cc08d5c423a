#ifndef HSURF_PARSE_HPP
#define HSURF_PARSE_HPP

#include <string>
#include <utility>

#include "hsurf/polynomial.hpp"

namespace hsurf {

// Expression grammar shared by the CLI and fixtures: variables x0, x1, ...
// with aliases x, y, z, w for x0..x3; integer and a/b literals; operators
// + - * / ^ and parentheses; whitespace insensitive. '^' takes a
// non-negative integer literal. parse_polynomial additionally requires the
// result to have a constant denominator, which it folds into the
// coefficients; print/parse are mutually inverse on canonical forms.
Polynomial parse_polynomial(const std::string& text, size_t nvars, FieldSpec field);

// Raw (numerator, denominator) pair of the expression; the denominator is a
// nonzero polynomial. No gcd reduction is applied here.
std::pair<Polynomial, Polynomial> parse_fraction(const std::string& text, size_t nvars, FieldSpec field);

} // namespace hsurf

#endif
