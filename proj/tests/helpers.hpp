#pragma once

#include <random>
#include <string>
#include <vector>

#include "fresco/ab_algebra.hpp"
#include "fresco/ab_module.hpp"
#include "fresco/engine.hpp"
#include "fresco/linalg.hpp"
#include "fresco/parse.hpp"
#include "fresco/setup.hpp"

namespace testutil {

using fresco::ABModulePresentation;
using fresco::BTruncSeries;
using fresco::ExpVector;
using fresco::FactorSequence;
using fresco::HomogeneousOperator;
using fresco::Index;
using fresco::ModuleElement;
using fresco::MonomialPoly;
using fresco::MonomialSetup;
using fresco::QMatrix;
using fresco::QPoly;
using fresco::QVector;
using fresco::Rational;

inline Rational Q(const std::string& s) { return Rational(s); }

inline QVector qvec(std::initializer_list<const char*> vals) {
    QVector v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (const char* s : vals) v(i++) = Rational(std::string(s));
    return v;
}

inline ExpVector evec(std::initializer_list<long> vals) {
    ExpVector v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (long x : vals) v(i++) = x;
    return v;
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    long pick(long lo, long hi) {
        return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
    }
    Rational rational(long max_abs_num = 6, long max_den = 4) {
        return Rational(pick(-max_abs_num, max_abs_num), pick(1, max_den));
    }
    Rational nonzero_rational(long max_abs_num = 6, long max_den = 4) {
        while (true) {
            Rational r = rational(max_abs_num, max_den);
            if (!r.is_zero()) return r;
        }
    }
    QMatrix qmatrix(Index rows, Index cols, long max_abs_num = 5, long max_den = 3) {
        QMatrix m(rows, cols);
        for (Index j = 0; j < cols; ++j)
            for (Index i = 0; i < rows; ++i) m(i, j) = rational(max_abs_num, max_den);
        return m;
    }
    QMatrix invertible_qmatrix(Index n) {
        while (true) {
            QMatrix m = qmatrix(n, n);
            if (fresco::rank(m) == n) return m;
        }
    }
    fresco::ABElement ab_element(int max_degree = 4, int max_terms = 4) {
        fresco::ABElement e;
        const int terms = static_cast<int>(pick(1, max_terms));
        for (int t = 0; t < terms; ++t) {
            const int p = static_cast<int>(pick(0, max_degree));
            const int q = static_cast<int>(pick(0, max_degree - p));
            e.add_term(p, q, rational(4, 3));
        }
        return e;
    }
    HomogeneousOperator homogeneous(int degree, bool monic = false) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        for (auto& x : c) x = rational(4, 3);
        if (monic)
            c.front() = Rational(1);
        else
            while (c.front().is_zero()) c.front() = rational(4, 3);
        return HomogeneousOperator(std::move(c));
    }
    FactorSequence factor_sequence(int max_len = 6) {
        FactorSequence fs;
        const int len = static_cast<int>(pick(0, max_len));
        for (int i = 0; i < len; ++i) fs.roots.push_back(rational(5, 4));
        return fs;
    }
    ABModulePresentation presentation(Index max_rank = 3, Index trunc = 6, bool simple_pole = false) {
        const Index k = pick(1, max_rank);
        ABModulePresentation pres(k, trunc);
        for (Index j = 0; j < k; ++j)
            for (Index i = 0; i < k; ++i) {
                BTruncSeries s(trunc);
                for (Index c = simple_pole ? 1 : 0; c <= std::min<Index>(trunc, 3); ++c)
                    s.set_coeff(c, rational(3, 2));
                pres.set_entry(i, j, s);
            }
        return pres;
    }
    ModuleElement element(const ABModulePresentation& pres, Index max_order) {
        ModuleElement x = pres.zero_element();
        for (Index j = 0; j < pres.rank(); ++j)
            for (Index c = 0; c <= std::min(max_order, pres.truncation_order()); ++c)
                x.coords[static_cast<std::size_t>(j)].set_coeff(c, rational(3, 2));
        return x;
    }
};

// Characteristic polynomial by the Faddeev-LeVerrier recurrence; independent
// of the Krylov route used by minimal_polynomial.
inline QPoly charpoly(const QMatrix& a) {
    const Index n = a.rows();
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(n)] = Rational(1);
    QMatrix m = QMatrix::Zero(n, n);
    Rational c(1);
    for (Index k = 1; k <= n; ++k) {
        m = (a * (m + c * QMatrix::Identity(n, n))).eval();
        Rational tr(0);
        for (Index i = 0; i < n; ++i) tr += m(i, i);
        c = -tr / Rational(static_cast<long>(k));
        coeffs[static_cast<std::size_t>(n - k)] = c;
    }
    return QPoly(std::move(coeffs));
}

inline MonomialSetup family(const std::string& which) {
    using fresco::parse_poly;
    if (which == "4.3.1")
        return fresco::analyze(parse_poly({"x^5 + y^5 + z^5 + L*x*y*z^2", {"x", "y", "z"}}));
    if (which == "4.3.2")
        return fresco::analyze(parse_poly({"x*y^3 + y*z^3 + z*x^3 + L*x*y*z", {"x", "y", "z"}}));
    if (which == "4.3.3")
        return fresco::analyze(parse_poly(
            {"x*y^2*z^3 + y*z^2*t^3 + z*t^2*x^3 + t*x^2*y^3 + L*x*y*z*t", {"x", "y", "z", "t"}}));
    if (which == "4.3.4")
        return fresco::analyze(
            parse_poly({"x*y^2 + x^2*y + z*t^3 + t*z^3 + L*x*y*z*t", {"x", "y", "z", "t"}}));
    if (which == "H")  // rho = (2, 0, 0): H nonempty
        return fresco::analyze(parse_poly({"x^2 + y^3 + z^5 + L*x^4", {"x", "y", "z"}}));
    throw std::runtime_error("unknown family " + which);
}

inline std::vector<MonomialSetup> example_setups() {
    return {family("4.3.1"), family("4.3.2"), family("4.3.3"), family("4.3.4"), family("H")};
}

}  // namespace testutil
