#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fresco/errors.hpp"
#include "fresco/qpoly.hpp"
#include "fresco/rational.hpp"

// Arithmetic in the algebra generated by a and b with the single relation
// a.b - b.a = b^2. Elements are kept in normal order (a-powers to the left of
// b-powers); products are normalized with the rewrite b^v.a = a.b^v - v.b^{v+1},
// which strictly decreases the number of (b,a) inversions and so terminates.

namespace fresco {

class ABElement {
  public:
    using Key = std::pair<int, int>;  // (a_power, b_power)

    ABElement() = default;

    static ABElement zero() { return ABElement(); }
    static ABElement one() { return monomial(0, 0, Rational(1)); }
    static ABElement gen_a() { return monomial(1, 0, Rational(1)); }
    static ABElement gen_b() { return monomial(0, 1, Rational(1)); }
    static ABElement monomial(int a_pow, int b_pow, const Rational& c) {
        ABElement e;
        e.add_term(a_pow, b_pow, c);
        return e;
    }

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(int a_pow, int b_pow, const Rational& c) {
        if (c.is_zero()) return;
        Key k{a_pow, b_pow};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ABElement& operator+=(const ABElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    ABElement& operator-=(const ABElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend ABElement operator+(ABElement x, const ABElement& y) { return x += y; }
    friend ABElement operator-(ABElement x, const ABElement& y) { return x -= y; }
    ABElement operator-() const {
        ABElement e;
        for (const auto& [k, c] : terms_) e.terms_.emplace(k, -c);
        return e;
    }
    friend ABElement operator*(const Rational& s, const ABElement& x) {
        ABElement e;
        if (s.is_zero()) return e;
        for (const auto& [k, c] : x.terms_) e.terms_.emplace(k, s * c);
        return e;
    }
    friend ABElement operator*(const ABElement& x, const Rational& s) { return s * x; }

    friend bool operator==(const ABElement& x, const ABElement& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const ABElement& x, const ABElement& y) { return !(x == y); }

    // Total (a,b)-degree of the highest term, -1 for zero.
    int degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = degree();
        for (const auto& [k, c] : terms_)
            if (k.first + k.second != d) return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        // Highest a-power first.
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            const Rational m = c.sign() < 0 ? -c : c;
            const bool unit_mono = (k.first == 0 && k.second == 0);
            if (!m.is_one() || unit_mono) {
                os << m;
                if (!unit_mono) os << "*";
            }
            if (k.first > 0) {
                os << "a";
                if (k.first > 1) os << "^" << k.first;
                if (k.second > 0) os << "*";
            }
            if (k.second > 0) {
                os << "b";
                if (k.second > 1) os << "^" << k.second;
            }
        }
        return os.str();
    }

  private:
    std::map<Key, Rational> terms_;
};

namespace detail {

// Normal form of b^v * a^q.
inline const ABElement& swap_ba(int v, int q) {
    thread_local std::map<std::pair<int, int>, ABElement> memo;
    auto key = std::make_pair(v, q);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    ABElement result;
    if (q == 0) {
        result = ABElement::monomial(0, v, Rational(1));
    } else {
        // b^v a^q = a.(b^v a^{q-1}) - v.(b^{v+1} a^{q-1})
        for (const auto& [k, c] : swap_ba(v, q - 1).terms()) result.add_term(k.first + 1, k.second, c);
        ABElement tail = Rational(-v) * swap_ba(v + 1, q - 1);
        result += tail;
    }
    return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace detail

inline ABElement multiply(const ABElement& p, const ABElement& q) {
    ABElement out;
    for (const auto& [kp, cp] : p.terms()) {
        for (const auto& [kq, cq] : q.terms()) {
            const Rational c = cp * cq;
            for (const auto& [km, cm] : detail::swap_ba(kp.second, kq.first).terms())
                out.add_term(kp.first + km.first, km.second + kq.second, c * cm);
        }
    }
    return out;
}

inline ABElement operator*(const ABElement& p, const ABElement& q) { return multiply(p, q); }

// Homogeneous element sum_i c_i a^{k-i} b^i of degree k; "monic in a" means c_0 = 1.
class HomogeneousOperator {
  public:
    explicit HomogeneousOperator(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error("homogeneous operator needs at least one coefficient");
    }

    static HomogeneousOperator one() { return HomogeneousOperator({Rational(1)}); }
    static HomogeneousOperator linear(const Rational& u, const Rational& v) {
        return HomogeneousOperator({u, v});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    bool monic_in_a() const { return c_.front().is_one(); }

    ABElement to_element() const {
        ABElement e;
        const int k = degree();
        for (int i = 0; i <= k; ++i) e.add_term(k - i, i, coeff(i));
        return e;
    }

    static HomogeneousOperator from_element(const ABElement& e) {
        if (e.is_zero() || !e.is_homogeneous())
            throw Error("element is not a nonzero homogeneous operator");
        const int k = e.degree();
        std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
        for (const auto& [key, coeff] : e.terms()) c[static_cast<std::size_t>(key.second)] = coeff;
        return HomogeneousOperator(std::move(c));
    }

    friend bool operator==(const HomogeneousOperator& x, const HomogeneousOperator& y) {
        return x.c_ == y.c_;
    }
    friend bool operator!=(const HomogeneousOperator& x, const HomogeneousOperator& y) {
        return !(x == y);
    }

    std::string str() const { return to_element().str(); }

  private:
    std::vector<Rational> c_;
};

inline HomogeneousOperator left_mul_linear(const Rational& u, const Rational& v,
                                           const HomogeneousOperator& p) {
    if (u.is_zero() && v.is_zero()) throw ZeroFactorError();
    ABElement lin;
    lin.add_term(1, 0, u);
    lin.add_term(0, 1, v);
    return HomogeneousOperator::from_element(lin * p.to_element());
}

// Ordered list of degree-1 factors: (a - r_1.b)...(a - r_k.b), left to right,
// plus an accumulated nonzero scalar carried along by the factor recursion.
struct FactorSequence {
    std::vector<Rational> roots;
    Rational constant = Rational(1);

    std::size_t length() const { return roots.size(); }

    friend bool operator==(const FactorSequence& x, const FactorSequence& y) {
        return x.roots == y.roots && x.constant == y.constant;
    }
};

inline HomogeneousOperator expand_factors(const FactorSequence& f) {
    ABElement acc = f.constant * ABElement::one();
    for (const Rational& r : f.roots) {
        ABElement factor;
        factor.add_term(1, 0, Rational(1));
        factor.add_term(0, 1, -r);
        acc = acc * factor;
    }
    return HomogeneousOperator::from_element(acc);
}

// Root multiset { -(r_j + j - k) } of the Bernstein polynomial attached to the
// ordered product; sorted ascending.
inline std::vector<Rational> roots_from_factors(const FactorSequence& f) {
    const long k = static_cast<long>(f.roots.size());
    std::vector<Rational> roots;
    roots.reserve(f.roots.size());
    for (long j = 1; j <= k; ++j)
        roots.push_back(-(f.roots[static_cast<std::size_t>(j - 1)] + Rational(j - k)));
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Action on the formal family z^mu: a(z^mu) = z^{mu+1}, b(z^mu) = z^{mu+1}/(mu+1),
// so p.z^mu = (N(mu) / prod_{t=1..k}(mu+t)).z^{mu+k}. N carries the full content
// of p and doubles as an independent oracle for products.
struct MellinSymbol {
    QPoly numerator;
    int degree_shift = 0;
};

inline MellinSymbol mellin_symbol(const HomogeneousOperator& p) {
    const int k = p.degree();
    QPoly n = QPoly::zero();
    QPoly suffix = QPoly::one();  // prod_{t=i+1..k}(mu+t), built from i = k down
    for (int i = k; i >= 0; --i) {
        n = n + p.coeff(i) * suffix;
        if (i > 0) suffix = suffix * QPoly({Rational(i), Rational(1)});
    }
    return MellinSymbol{n, k};
}

// B(x) = (-1)^k N(-x-1), monic of degree k for operators monic in a.
inline QPoly bernstein_from_operator(const HomogeneousOperator& p) {
    if (!p.monic_in_a()) throw NotMonicError();
    const MellinSymbol sym = mellin_symbol(p);
    QPoly b = sym.numerator.compose(QPoly({Rational(-1), Rational(-1)}));
    if (sym.degree_shift % 2 != 0) b = -b;
    return b;
}

}  // namespace fresco
