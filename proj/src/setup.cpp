#include "fresco/setup.hpp"

#include <algorithm>
#include <numeric>

#include "fresco/errors.hpp"
#include "fresco/linalg.hpp"

namespace fresco {

void MonomialPoly::validate() const {
    const Index n = nvars();
    if (n < 1) throw Error("polynomial needs at least one variable");
    if (nmono() != n + 1) throw Error("expected nvars+1 monomials");
    if (static_cast<Index>(coefficients.size()) != nmono())
        throw Error("coefficient count does not match monomial count");
    if (lambda_slot < 0 || lambda_slot >= nmono()) throw Error("lambda slot out of range");
    if (!var_names.empty() && static_cast<Index>(var_names.size()) != n)
        throw Error("variable name count does not match nvars");
    for (Index j = 0; j < nmono(); ++j) {
        if (coefficients[static_cast<std::size_t>(j)].is_zero())
            throw Error("monomial coefficients must be nonzero");
        bool all_zero = true;
        for (Index i = 0; i < n; ++i) {
            if (exponents(i, j) < 0) throw Error("exponents must be non-negative");
            if (exponents(i, j) != 0) all_zero = false;
        }
        if (all_zero) throw Error("constant monomials are not allowed");
    }
}

namespace {

QMatrix build_mtilde(const ExpMatrix& m) {
    const Index rows = m.rows(), cols = m.cols();
    QMatrix mt(rows + 1, cols);
    for (Index j = 0; j < cols; ++j) {
        mt(0, j) = Rational(1);
        for (Index i = 0; i < rows; ++i) mt(i + 1, j) = Rational(static_cast<long>(m(i, j)));
    }
    return mt;
}

MonomialPoly apply_permutation(const MonomialPoly& f, const std::vector<Index>& perm) {
    MonomialPoly out = f;
    for (Index p = 0; p < f.nmono(); ++p) {
        const Index src = perm[static_cast<std::size_t>(p)];
        out.exponents.col(p) = f.exponents.col(src);
        out.coefficients[static_cast<std::size_t>(p)] = f.coefficients[static_cast<std::size_t>(src)];
        if (src == f.lambda_slot) out.lambda_slot = p;
    }
    return out;
}

// Permutation moving column `last` to the end, preserving the relative order
// of the rest.
std::vector<Index> exclusion_permutation(Index nmono, Index last) {
    std::vector<Index> perm;
    perm.reserve(static_cast<std::size_t>(nmono));
    for (Index j = 0; j < nmono; ++j)
        if (j != last) perm.push_back(j);
    perm.push_back(last);
    return perm;
}

}  // namespace

MonomialSetup analyze(const MonomialPoly& f) {
    f.validate();
    const Index n = f.nvars();
    const Index m = f.nmono();

    // (C2): the rank of M~ must be n+2, equivalently f is not quasi-homogeneous.
    // Rank is invariant under column reordering, so test before any recovery.
    if (rank(build_mtilde(f.exponents)) != m)
        throw C2ViolationError("quasi-homogeneous polynomial: rank of the extended exponent matrix is deficient");

    // (C1): the first n+1 exponent vectors must form a basis. Candidate "last"
    // columns are tried in preference order: current last, then the lambda
    // carrier, then the rest. Under (C2) some choice always works.
    std::vector<Index> candidates;
    candidates.push_back(m - 1);
    if (f.lambda_slot != m - 1) candidates.push_back(f.lambda_slot);
    for (Index j = m - 2; j >= 0; --j)
        if (j != f.lambda_slot) candidates.push_back(j);

    std::vector<Index> perm;
    for (Index last : candidates) {
        std::vector<Index> cand = exclusion_permutation(m, last);
        ExpMatrix basis(n, n);
        for (Index p = 0; p < n; ++p) basis.col(p) = f.exponents.col(cand[static_cast<std::size_t>(p)]);
        if (rank(to_rational(basis)) == n) {
            perm = std::move(cand);
            break;
        }
    }
    if (perm.empty()) throw C1ViolationError("no ordering of the monomials yields a basis of exponent vectors");

    MonomialSetup s;
    s.permutation = perm;
    s.poly = apply_permutation(f, perm);
    s.M = s.poly.exponents;
    s.Mtilde = build_mtilde(s.M);
    s.Mtilde_inv = invert(s.Mtilde);
    s.u = s.Mtilde_inv.col(0);

    // rho: last column in the basis of the first n+1 columns.
    QMatrix basis = to_rational(ExpMatrix(s.M.leftCols(n)));
    QVector target = to_rational(ExpMatrix(s.M.col(m - 1)));
    s.rho = solve_linear(basis, target);

    // |r| = lcm of the rho denominators; p_j = |r|.rho_j.
    mpz_class lcm_den(1);
    for (Index j = 0; j < n; ++j)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), s.rho(j).den().get_mpz_t());
    if (!lcm_den.fits_slong_p()) throw Error("relation denominator too large to enumerate");
    s.rbar = lcm_den.get_si();
    s.p = ExpVector::Zero(n);
    for (Index j = 0; j < n; ++j) {
        const Rational pj = Rational(static_cast<long>(s.rbar)) * s.rho(j);
        if (!pj.num().fits_slong_p()) throw Error("relation coefficients too large to enumerate");
        s.p(j) = static_cast<std::int64_t>(pj.num().get_si());
        const int sign = s.rho(j).sign();
        if (sign == 0)
            s.H.push_back(j);
        else if (sign > 0)
            s.Jplus.push_back(j);
        else
            s.Jminus.push_back(j);
    }

    // Two sides of the integer relation (c): |r|.alpha_last + sum_{J-}(-p_j).alpha_j
    // against sum_{J+} p_j.alpha_j. Delta is the longer side, delta the shorter,
    // and the sign of r records which way relation (e) points.
    ExpVector side_last = ExpVector::Zero(m);
    side_last(m - 1) = s.rbar;
    for (Index j : s.Jminus) side_last(j) = -s.p(j);
    ExpVector side_basis = ExpVector::Zero(m);
    for (Index j : s.Jplus) side_basis(j) = s.p(j);

    const long len_last = side_last.sum();
    const long len_basis = side_basis.sum();
    if (len_last == len_basis)
        throw C2ViolationError("quasi-homogeneous polynomial: the two sides of the monomial relation have equal length");
    if (len_last > len_basis) {
        s.Delta = side_last;
        s.delta = side_basis;
    } else {
        s.Delta = side_basis;
        s.delta = side_last;
    }
    s.d = std::min(len_last, len_basis);
    s.h = std::max(len_last, len_basis) - s.d;
    s.r = s.Delta(m - 1) - s.delta(m - 1);
    return s;
}

}  // namespace fresco
