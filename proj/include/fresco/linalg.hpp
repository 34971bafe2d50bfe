#pragma once

#include <optional>
#include <vector>

#include "fresco/errors.hpp"
#include "fresco/qpoly.hpp"
#include "fresco/types.hpp"

// Exact dense linear algebra over a field scalar (no pivoting by magnitude:
// the first nonzero entry in column order is always a valid pivot, and with
// exact arithmetic there is nothing to stabilize).

namespace fresco {

namespace detail {

// In-place forward elimination; returns the pivot column of each pivot row.
template <typename Scalar>
std::vector<Index> echelonize(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
    std::vector<Index> pivot_cols;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index pivot = -1;
        for (Index i = row; i < m.rows(); ++i) {
            if (!m(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        const Scalar inv = m(row, col).inverse();
        for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Scalar f = m(i, col);
            for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace detail

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> work = m;
    return static_cast<Index>(detail::echelonize(work).size());
}

// Any exact solution of m x = rhs (free variables set to 0), or nullopt when
// the system is inconsistent. m may be rectangular.
template <typename Derived, typename DerivedB>
std::optional<Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>> solve_any(
    const Eigen::MatrixBase<Derived>& m, const Eigen::MatrixBase<DerivedB>& rhs) {
    using Scalar = typename Derived::Scalar;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    Mat work(m.rows(), m.cols() + 1);
    work.leftCols(m.cols()) = m;
    work.col(m.cols()) = rhs;
    const std::vector<Index> pivots = detail::echelonize(work);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x = Vec::Zero(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = work(static_cast<Index>(r), m.cols());
    return x;
}

template <typename Derived, typename DerivedB>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> solve_linear(
    const Eigen::MatrixBase<Derived>& m, const Eigen::MatrixBase<DerivedB>& rhs) {
    if (m.rows() != m.cols()) throw Error("solve_linear requires a square matrix");
    if (rank(m) != m.rows()) throw SingularMatrixError();
    auto x = solve_any(m, rhs);
    return *x;
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> invert(
    const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (m.rows() != m.cols()) throw Error("invert requires a square matrix");
    const Index n = m.rows();
    Mat work(n, 2 * n);
    work.leftCols(n) = m;
    work.rightCols(n) = Mat::Identity(n, n);
    const std::vector<Index> pivots = detail::echelonize(work);
    if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots.back() >= n))
        throw SingularMatrixError();
    return work.rightCols(n);
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> poly_eval_matrix(
    const Poly<Scalar>& p, const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Index n = m.rows();
    Mat acc = Mat::Zero(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = (acc * m).eval();
        acc += p.coeff(i) * Mat::Identity(n, n);
    }
    return acc;
}

// Monic minimal polynomial, computed as the lcm of the minimal polynomials of
// the Krylov sequences of the standard basis vectors (exact kernel detection,
// no factorization).
template <typename Derived>
Poly<typename Derived::Scalar> minimal_polynomial(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    if (m.rows() != m.cols()) throw Error("minimal_polynomial requires a square matrix");
    const Index n = m.rows();
    const Mat a = m;
    Poly<Scalar> result = Poly<Scalar>::one();
    for (Index basis = 0; basis < n && result.degree() < static_cast<int>(n); ++basis) {
        std::vector<Vec> krylov;
        krylov.push_back(Vec::Unit(n, basis));
        for (Index step = 1; step <= n; ++step) {
            Vec next = a * krylov.back();
            Mat span(n, static_cast<Index>(krylov.size()));
            for (std::size_t i = 0; i < krylov.size(); ++i) span.col(static_cast<Index>(i)) = krylov[i];
            if (auto dep = solve_any(span, next)) {
                std::vector<Scalar> coeffs(krylov.size() + 1, Scalar(0));
                for (std::size_t i = 0; i < krylov.size(); ++i) coeffs[i] = -(*dep)(static_cast<Index>(i));
                coeffs.back() = Scalar(1);
                result = lcm(result, Poly<Scalar>(std::move(coeffs)));
                break;
            }
            krylov.push_back(std::move(next));
        }
    }
    return result;
}

}  // namespace fresco
