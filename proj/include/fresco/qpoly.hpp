#pragma once

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fresco/rational.hpp"

namespace fresco {

// Dense univariate polynomial over an exact field scalar. Coefficients are
// stored ascending by degree with trailing zeros trimmed; the zero polynomial
// has an empty coefficient list and degree -1.
template <typename T>
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly({T(1)}); }
    static Poly x() { return Poly({T(0), T(1)}); }
    static Poly constant(const T& c) { return Poly({c}); }

    // Monic product of (x - r) over the given roots.
    static Poly from_roots(const std::vector<T>& roots) {
        Poly p = one();
        for (const T& r : roots) p = p * Poly({-r, T(1)});
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<std::size_t>(i)];
    }
    T leading() const { return is_zero() ? T(0) : c_.back(); }
    bool is_monic() const { return !is_zero() && c_.back() == T(1); }

    Poly monic() const {
        if (is_zero()) throw std::domain_error("monic of zero polynomial");
        return *this * leading().inverse();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> out(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<T> out(c_);
        for (T& c : out) c = -c;
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> out(a.c_);
        for (T& c : out) c *= s;
        return Poly(std::move(out));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    T operator()(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // p(inner), by Horner over polynomial arithmetic.
    Poly compose(const Poly& inner) const {
        Poly acc = zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<T> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(out));
    }

    std::pair<Poly, Poly> divmod(const Poly& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<T> rem(c_);
        const int dd = divisor.degree();
        if (degree() < dd) return {zero(), *this};
        std::vector<T> quot(static_cast<std::size_t>(degree() - dd) + 1, T(0));
        const T lead_inv = divisor.leading().inverse();
        for (int i = degree(); i >= dd; --i) {
            T q = rem[static_cast<std::size_t>(i)] * lead_inv;
            if (q.is_zero()) continue;
            quot[static_cast<std::size_t>(i - dd)] = q;
            for (int j = 0; j <= dd; ++j)
                rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeff(j);
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    bool divides(const Poly& other) const { return other.divmod(*this).second.is_zero(); }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            T c = coeff(i);
            if (c.is_zero()) continue;
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            T a = c.sign() < 0 ? -c : c;
            if (i == 0) {
                os << a;
            } else {
                if (!a.is_one()) os << a << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<T> c_;
};

using QPoly = Poly<Rational>;

template <typename T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        Poly<T> r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

template <typename T>
Poly<T> lcm(const Poly<T>& a, const Poly<T>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<T>::zero();
    return (a * b).divmod(gcd(a, b)).first.monic();
}

}  // namespace fresco
