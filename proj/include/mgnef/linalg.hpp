#pragma once

// Exact dense linear algebra over a field scalar. Every routine pivots on the
// first nonzero entry in column order, so results are deterministic and
// never depend on magnitudes.

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mgnef/errors.hpp"
#include "mgnef/rational.hpp"

namespace mgnef {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct RowEchelon
{
    DenseMatrix<Scalar> reduced;
    std::vector<Index> pivot_columns;
};

/** Gauss-Jordan reduction to reduced row echelon form. */
template <typename Derived>
RowEchelon<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    RowEchelon<Scalar> out{m.eval(), {}};
    auto& r = out.reduced;
    const Scalar zero(0);
    Index row = 0;
    for (Index col = 0; col < r.cols() && row < r.rows(); ++col)
    {
        Index pivot = row;
        while (pivot < r.rows() && r(pivot, col) == zero)
            ++pivot;
        if (pivot == r.rows())
            continue;
        if (pivot != row)
            r.row(pivot).swap(r.row(row));
        const Scalar inv = Scalar(1) / r(row, col);
        for (Index j = col; j < r.cols(); ++j)
            r(row, j) *= inv;
        for (Index i = 0; i < r.rows(); ++i)
        {
            if (i == row || r(i, col) == zero)
                continue;
            const Scalar factor = r(i, col);
            for (Index j = col; j < r.cols(); ++j)
                r(i, j) -= factor * r(row, j);
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m)
{
    return static_cast<Index>(reduced_row_echelon(m).pivot_columns.size());
}

/** Throws NonSquareError unless rows == cols. The empty matrix has determinant 1. */
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols())
        throw NonSquareError("determinant of a " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    DenseMatrix<Scalar> a = m.eval();
    const Scalar zero(0);
    Scalar det(1);
    const Index n = a.rows();
    for (Index col = 0; col < n; ++col)
    {
        Index pivot = col;
        while (pivot < n && a(pivot, col) == zero)
            ++pivot;
        if (pivot == n)
            return zero;
        if (pivot != col)
        {
            a.row(pivot).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        for (Index i = col + 1; i < n; ++i)
        {
            if (a(i, col) == zero)
                continue;
            const Scalar factor = a(i, col) / a(col, col);
            for (Index j = col; j < n; ++j)
                a(i, j) -= factor * a(col, j);
        }
    }
    return det;
}

/**
 * Basis of the right null space, one vector per free column of the reduced
 * form (free variable set to 1). Empty iff the matrix has full column rank.
 */
template <typename Derived>
std::vector<DenseVector<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const auto ech = reduced_row_echelon(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (Index c : ech.pivot_columns)
        is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<DenseVector<Scalar>> basis;
    for (Index free = 0; free < m.cols(); ++free)
    {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        DenseVector<Scalar> v = DenseVector<Scalar>::Constant(m.cols(), Scalar(0));
        v(free) = Scalar(1);
        for (std::size_t k = 0; k < ech.pivot_columns.size(); ++k)
            v(ech.pivot_columns[k]) = -ech.reduced(static_cast<Index>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/** Some solution x of A x = b, or nullopt when the system is inconsistent. */
template <typename DerivedA, typename DerivedB>
std::optional<DenseVector<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                            const Eigen::MatrixBase<DerivedB>& b)
{
    using Scalar = typename DerivedA::Scalar;
    DenseMatrix<Scalar> augmented(a.rows(), a.cols() + 1);
    augmented << a, b;
    const auto ech = reduced_row_echelon(augmented);
    DenseVector<Scalar> x = DenseVector<Scalar>::Constant(a.cols(), Scalar(0));
    for (std::size_t k = 0; k < ech.pivot_columns.size(); ++k)
    {
        const Index col = ech.pivot_columns[k];
        if (col == a.cols())
            return std::nullopt;
        x(col) = ech.reduced(static_cast<Index>(k), a.cols());
    }
    return x;
}

/** Indices of a maximal linearly independent set of rows, earliest rows preferred. */
template <typename Derived>
std::vector<Index> independent_rows(const Eigen::MatrixBase<Derived>& m)
{
    return reduced_row_echelon(m.transpose()).pivot_columns;
}

/** A x >= 0 componentwise. */
template <typename Scalar>
bool all_nonnegative(const DenseVector<Scalar>& v)
{
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) < Scalar(0))
            return false;
    return true;
}

/**
 * Positive rescaling of a rational vector to integer coordinates with gcd 1.
 * Direction is preserved; the zero vector is returned unchanged.
 */
VectorQ primitive_ray(const VectorQ& v);

/** Lexicographic order on coordinates; used to give ray lists a fixed order. */
bool lex_less(const VectorQ& x, const VectorQ& y);

/** Rows of a matrix built from a list of equally sized vectors. */
MatrixQ stack_rows(const std::vector<VectorQ>& rows, Index cols);

} // namespace mgnef
