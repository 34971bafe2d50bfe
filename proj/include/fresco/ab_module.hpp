#pragma once

#include <utility>
#include <vector>

#include "fresco/errors.hpp"
#include "fresco/linalg.hpp"
#include "fresco/qpoly.hpp"
#include "fresco/rational.hpp"
#include "fresco/types.hpp"

// Finite-rank module over order-N truncations of power series in b, with the
// a-action prescribed on basis vectors by a matrix of b-polynomials:
//   a.(S(b).e_j) = S(b).x_j + b^2.S'(b).e_j,   x_j = a.e_j.
// All operations silently drop coefficients above the truncation order.

namespace fresco {

class BTruncSeries {
  public:
    explicit BTruncSeries(Index order) : c_(static_cast<std::size_t>(order) + 1, Rational(0)) {
        if (order < 0) throw Error("truncation order must be non-negative");
    }
    BTruncSeries(const QPoly& p, Index order) : BTruncSeries(order) {
        for (Index i = 0; i <= order; ++i) c_[static_cast<std::size_t>(i)] = p.coeff(static_cast<int>(i));
    }

    Index order() const { return static_cast<Index>(c_.size()) - 1; }
    const Rational& coeff(Index i) const { return c_[static_cast<std::size_t>(i)]; }
    void set_coeff(Index i, const Rational& v) { c_[static_cast<std::size_t>(i)] = v; }

    bool is_zero() const {
        for (const Rational& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_zero_up_to(Index ord) const {
        for (Index i = 0; i <= std::min(ord, order()); ++i)
            if (!c_[static_cast<std::size_t>(i)].is_zero()) return false;
        return true;
    }

    BTruncSeries& operator+=(const BTruncSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    BTruncSeries& operator-=(const BTruncSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend BTruncSeries operator+(BTruncSeries x, const BTruncSeries& y) { return x += y; }
    friend BTruncSeries operator-(BTruncSeries x, const BTruncSeries& y) { return x -= y; }
    friend BTruncSeries operator*(const Rational& s, const BTruncSeries& x) {
        BTruncSeries out(x.order());
        for (std::size_t i = 0; i < x.c_.size(); ++i) out.c_[i] = s * x.c_[i];
        return out;
    }

    // Truncating Cauchy product.
    friend BTruncSeries operator*(const BTruncSeries& x, const BTruncSeries& y) {
        x.check_order(y);
        BTruncSeries out(x.order());
        for (Index i = 0; i <= x.order(); ++i) {
            if (x.coeff(i).is_zero()) continue;
            for (Index j = 0; i + j <= x.order(); ++j)
                out.c_[static_cast<std::size_t>(i + j)] += x.coeff(i) * y.coeff(j);
        }
        return out;
    }

    // Multiplication by b; the top coefficient falls off the truncation.
    BTruncSeries shift_b() const {
        BTruncSeries out(order());
        for (Index i = order(); i >= 1; --i) out.c_[static_cast<std::size_t>(i)] = coeff(i - 1);
        return out;
    }

    // Formal derivative in b.
    BTruncSeries derivative() const {
        BTruncSeries out(order());
        for (Index i = 1; i <= order(); ++i)
            out.c_[static_cast<std::size_t>(i - 1)] = Rational(static_cast<long>(i)) * coeff(i);
        return out;
    }

    friend bool operator==(const BTruncSeries& x, const BTruncSeries& y) { return x.c_ == y.c_; }
    friend bool operator!=(const BTruncSeries& x, const BTruncSeries& y) { return !(x == y); }

    std::string str() const { return QPoly(std::vector<Rational>(c_)).str("b"); }

  private:
    void check_order(const BTruncSeries& o) const {
        if (o.order() != order()) throw Error("mismatched truncation orders");
    }
    std::vector<Rational> c_;
};

struct ModuleElement {
    std::vector<BTruncSeries> coords;

    friend bool operator==(const ModuleElement& x, const ModuleElement& y) {
        return x.coords == y.coords;
    }
};

class ABModulePresentation {
  public:
    ABModulePresentation(Index rank, Index truncation_order)
        : rank_(rank), trunc_(truncation_order) {
        if (rank < 1) throw Error("module rank must be positive");
        if (truncation_order < 2) throw Error("truncation order must be at least 2");
        a_matrix_.assign(static_cast<std::size_t>(rank),
                         std::vector<BTruncSeries>(static_cast<std::size_t>(rank),
                                                   BTruncSeries(truncation_order)));
    }

    Index rank() const { return rank_; }
    Index truncation_order() const { return trunc_; }

    // Entry (i, j): coefficient of e_i in a.e_j.
    const BTruncSeries& entry(Index i, Index j) const {
        return a_matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    void set_entry(Index i, Index j, const BTruncSeries& s) {
        if (s.order() != trunc_) throw Error("entry truncation order mismatch");
        a_matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
    }

    ModuleElement basis_vector(Index j) const {
        ModuleElement e{std::vector<BTruncSeries>(static_cast<std::size_t>(rank_),
                                                  BTruncSeries(trunc_))};
        e.coords[static_cast<std::size_t>(j)].set_coeff(0, Rational(1));
        return e;
    }
    ModuleElement zero_element() const {
        return ModuleElement{std::vector<BTruncSeries>(static_cast<std::size_t>(rank_),
                                                       BTruncSeries(trunc_))};
    }
    // x_j = a.e_j as a module element (column j).
    ModuleElement column(Index j) const {
        ModuleElement e = zero_element();
        for (Index i = 0; i < rank_; ++i) e.coords[static_cast<std::size_t>(i)] = entry(i, j);
        return e;
    }

  private:
    Index rank_;
    Index trunc_;
    std::vector<std::vector<BTruncSeries>> a_matrix_;
};

inline ModuleElement apply_b(const ModuleElement& x) {
    ModuleElement out = x;
    for (BTruncSeries& s : out.coords) s = s.shift_b();
    return out;
}

inline ModuleElement apply_a(const ABModulePresentation& m, const ModuleElement& x) {
    if (static_cast<Index>(x.coords.size()) != m.rank()) throw Error("element rank mismatch");
    ModuleElement out = m.zero_element();
    for (Index j = 0; j < m.rank(); ++j) {
        const BTruncSeries& s = x.coords[static_cast<std::size_t>(j)];
        if (s.order() != m.truncation_order()) throw Error("element truncation order mismatch");
        if (s.is_zero()) continue;
        // S(b).x_j
        for (Index i = 0; i < m.rank(); ++i)
            out.coords[static_cast<std::size_t>(i)] += s * m.entry(i, j);
        // b^2.S'(b).e_j
        out.coords[static_cast<std::size_t>(j)] += s.derivative().shift_b().shift_b();
    }
    return out;
}

// a.E is contained in b.E exactly when no entry of the a-matrix has a constant term.
inline bool is_simple_pole(const ABModulePresentation& m) {
    for (Index i = 0; i < m.rank(); ++i)
        for (Index j = 0; j < m.rank(); ++j)
            if (!m.entry(i, j).coeff(0).is_zero()) return false;
    return true;
}

// Matrix of the action of -b^{-1}a on E/bE: linear b-coefficients, negated.
inline QMatrix residue_action(const ABModulePresentation& m) {
    QMatrix action(m.rank(), m.rank());
    for (Index i = 0; i < m.rank(); ++i)
        for (Index j = 0; j < m.rank(); ++j) action(i, j) = -m.entry(i, j).coeff(1);
    return action;
}

// Minimal polynomial of that action; only defined for simple-pole presentations.
inline QPoly bernstein_simple_pole(const ABModulePresentation& m) {
    if (!is_simple_pole(m)) throw NotSimplePoleError();
    return minimal_polynomial(residue_action(m));
}

// a.b - b.a = b^2 on x, compared up to order N-1 (the truncation boundary can
// differ above that).
inline bool commutation_check(const ABModulePresentation& m, const ModuleElement& x) {
    const ModuleElement lhs_ab = apply_a(m, apply_b(x));
    const ModuleElement lhs_ba = apply_b(apply_a(m, x));
    const ModuleElement rhs = apply_b(apply_b(x));
    const Index cutoff = m.truncation_order() - 1;
    for (Index i = 0; i < m.rank(); ++i) {
        const BTruncSeries diff = lhs_ab.coords[static_cast<std::size_t>(i)] -
                                  lhs_ba.coords[static_cast<std::size_t>(i)] -
                                  rhs.coords[static_cast<std::size_t>(i)];
        if (!diff.is_zero_up_to(cutoff)) return false;
    }
    return true;
}

}  // namespace fresco
