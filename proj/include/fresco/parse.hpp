#pragma once

#include <string>
#include <vector>

#include "fresco/ab_module.hpp"
#include "fresco/setup.hpp"
#include "fresco/types.hpp"

namespace fresco {

// Polynomial source text plus its variable alphabet. An empty alphabet means
// indexed names x0, x1, ... are expected and the arity is inferred.
struct SourcePoly {
    std::string text;
    std::vector<std::string> vars;
};

// Grammar (whitespace insensitive, explicit '*' required):
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := [coef '*']? factor ('*' factor)*
//   factor := var ['^' uint]
//   coef   := rational | 'L' ['^' '1'] | rational '*' 'L'
//   rational := uint ['/' uint]
// 'L' (or 'lambda') marks the deformation-parameter monomial; at most one term
// may carry it, and when none does the last term is designated. Exactly
// nvars+1 distinct monomials are required.
MonomialPoly parse_poly(const SourcePoly& src);

// Canonical rendering; parse_poly(render_poly(p)) == p.
std::string render_poly(const MonomialPoly& p);

// Monomial volume-form exponent: "1" or factor ('*' factor)*.
ExpVector parse_form(const std::string& text, const std::vector<std::string>& vars);

std::string render_form(const ExpVector& beta, const std::vector<std::string>& vars);

// Univariate polynomial in b: ['-'] bterm (('+'|'-') bterm)* with
// bterm := rational ['*' 'b' ['^' uint]] | 'b' ['^' uint].
QPoly parse_bpoly(const std::string& text);

// Module presentation file: one line per column j of the a-matrix, entries
// comma-separated b-polynomials (entry i = coefficient of e_i in a.e_j).
// Blank lines and '#' comments are skipped.
ABModulePresentation parse_presentation(const std::string& text, Index truncation_order);

}  // namespace fresco
