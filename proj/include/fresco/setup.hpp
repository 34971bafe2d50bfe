#pragma once

#include <string>
#include <vector>

#include "fresco/rational.hpp"
#include "fresco/types.hpp"

namespace fresco {

// A polynomial in nvars variables made of exactly nvars+1 monomials, one of
// which (lambda_slot) carries the deformation parameter. Coefficients are the
// numeric stand-ins; the lambda slot's value is its specialization.
struct MonomialPoly {
    ExpMatrix exponents;                  // nvars rows, nvars+1 columns; column j = alpha_j
    std::vector<Rational> coefficients;   // size nvars+1, all nonzero
    Index lambda_slot = -1;               // defaults to the last monomial
    bool lambda_explicit = false;         // true when the source text spelled L
    std::vector<std::string> var_names;   // size nvars

    Index nvars() const { return exponents.rows(); }
    Index nmono() const { return exponents.cols(); }

    // Throws Error on malformed data (wrong counts, zero column, zero coefficient).
    void validate() const;

    friend bool operator==(const MonomialPoly& x, const MonomialPoly& y) {
        return x.exponents == y.exponents && x.coefficients == y.coefficients &&
               x.lambda_slot == y.lambda_slot && x.lambda_explicit == y.lambda_explicit &&
               x.var_names == y.var_names;
    }
};

// The combinatorics of the unique rational relation among the nvars+1 exponent
// vectors, relative to the (possibly reordered) monomial list: the last column
// is written in the basis of the others, and the integer relation between the
// two sides of that identity produces Delta, delta, d, h, r.
struct MonomialSetup {
    MonomialPoly poly;                // after reordering
    std::vector<Index> permutation;   // new position p -> original index permutation[p]

    ExpMatrix M;        // nvars x (nvars+1)
    QMatrix Mtilde;     // square, first row all ones
    QMatrix Mtilde_inv;

    QVector rho;                 // coordinates of the last column in the basis
    long rbar = 0;               // |r|: least positive integer clearing denominators
    ExpVector p;                 // p_j = |r| * rho_j
    std::vector<Index> H;        // rho_j = 0 (0-based monomial indices)
    std::vector<Index> Jplus;    // rho_j > 0
    std::vector<Index> Jminus;   // rho_j < 0

    ExpVector Delta;   // length d+h side of the monomial relation
    ExpVector delta;   // length d side
    long d = 0;
    long h = 0;
    long r = 0;        // signed: Delta_last - delta_last = r, |r| = rbar

    QVector u;   // first column of Mtilde_inv; u_j = 0 iff j in H

    Index nvars() const { return M.rows(); }
    Index nmono() const { return M.cols(); }
};

// Checks (C2) then (C1). When the leading nvars columns are rank-deficient,
// retries with a reordering that keeps the lambda slot last if possible.
// Throws C2ViolationError (quasi-homogeneous input) or C1ViolationError.
MonomialSetup analyze(const MonomialPoly& f);

}  // namespace fresco
