#ifndef SVLAB_PARSE_HPP
#define SVLAB_PARSE_HPP

#include <string>

#include "svlab/multipoly.hpp"
#include "svlab/unipoly.hpp"

namespace svlab {

/**
 * Parse a polynomial in variables x0..x_{nvars-1}.
 *
 * Grammar (whitespace free between tokens):
 *   poly     := ["+"|"-"] term (("+"|"-") term)*
 *   term     := coeff ("*" factor)* | factor ("*" factor)*
 *   factor   := var ("^" nat)?
 *   var      := "x" nat          (or "z" in the univariate entry point)
 *   coeff    := "(" rational (("+"|"-") rational? "i"?)? ")" | rational | "i"
 *   rational := int ("/" nat)?
 *
 * Errors carry the byte offset of the offending character.
 */
MultiPoly parse_multi(const std::string& text, int nvars);

/// Parse a univariate polynomial in z.
UniPoly parse_uni(const std::string& text);

/// Canonical text form; parses back to an equal polynomial.
std::string poly_str(const MultiPoly& p);
std::string poly_str(const UniPoly& p);

} // namespace svlab

#endif
