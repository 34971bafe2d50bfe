#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "fresco/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<fresco::Rational> : GenericNumTraits<fresco::Rational> {
    typedef fresco::Rational Real;
    typedef fresco::Rational NonInteger;
    typedef fresco::Rational Nested;
    typedef fresco::Rational Literal;
    static inline Real epsilon() { return fresco::Rational(0); }
    static inline Real dummy_precision() { return fresco::Rational(0); }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };
};

}  // namespace Eigen

namespace fresco {

using Index = Eigen::Index;

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Exponent data (matrices M / M~ live over the integers before being lifted).
using ExpMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using ExpVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

template <typename DerivedA, typename DerivedB>
bool exact_eq(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <typename Derived>
QMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
    QMatrix out(m.rows(), m.cols());
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i) out(i, j) = Rational(static_cast<long>(m(i, j)));
    return out;
}

}  // namespace fresco
