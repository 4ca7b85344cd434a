#pragma once

#include <optional>
#include <vector>

#include "mgnef/linalg.hpp"

namespace mgnef {

/**
 * Exact phase-one simplex with Bland's rule: finds weights w >= 0 with
 * generators * w = target, where generators holds one generator per column.
 * Returns nullopt when target is outside the cone the columns generate
 * (a Farkas certificate exists).
 */
template <typename DerivedG, typename DerivedX>
std::optional<DenseVector<typename DerivedG::Scalar>>
conic_combination(const Eigen::MatrixBase<DerivedG>& generators, const Eigen::MatrixBase<DerivedX>& target)
{
    using Scalar = typename DerivedG::Scalar;
    const Scalar zero(0);
    const Index m = generators.rows();
    const Index n = generators.cols();
    const Index rhs = n + m;

    // Tableau [A | I | b] plus a cost row holding the negated artificial sum.
    DenseMatrix<Scalar> t = DenseMatrix<Scalar>::Constant(m + 1, n + m + 1, zero);
    std::vector<Index> basis(static_cast<std::size_t>(m));
    for (Index i = 0; i < m; ++i)
    {
        const bool flip = target(i) < zero;
        for (Index j = 0; j < n; ++j)
            t(i, j) = flip ? Scalar(-generators(i, j)) : Scalar(generators(i, j));
        t(i, n + i) = Scalar(1);
        t(i, rhs) = flip ? Scalar(-target(i)) : Scalar(target(i));
        basis[static_cast<std::size_t>(i)] = n + i;
        for (Index j = 0; j < n; ++j)
            t(m, j) -= t(i, j);
        t(m, rhs) -= t(i, rhs);
    }

    for (;;)
    {
        Index entering = -1;
        for (Index j = 0; j < n + m; ++j)
        {
            if (t(m, j) < zero)
            {
                entering = j;
                break;
            }
        }
        if (entering < 0)
            break;

        Index leaving = -1;
        Scalar best_ratio;
        for (Index i = 0; i < m; ++i)
        {
            if (t(i, entering) <= zero)
                continue;
            const Scalar ratio = t(i, rhs) / t(i, entering);
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leaving)]))
            {
                leaving = i;
                best_ratio = ratio;
            }
        }
        // Phase one is bounded below by zero, so some row always blocks.
        if (leaving < 0)
            break;

        const Scalar inv = Scalar(1) / t(leaving, entering);
        for (Index j = 0; j <= rhs; ++j)
            t(leaving, j) *= inv;
        for (Index i = 0; i <= m; ++i)
        {
            if (i == leaving || t(i, entering) == zero)
                continue;
            const Scalar factor = t(i, entering);
            for (Index j = 0; j <= rhs; ++j)
                t(i, j) -= factor * t(leaving, j);
        }
        basis[static_cast<std::size_t>(leaving)] = entering;
    }

    if (t(m, rhs) != zero)
        return std::nullopt;
    DenseVector<Scalar> weights = DenseVector<Scalar>::Constant(n, zero);
    for (Index i = 0; i < m; ++i)
        if (basis[static_cast<std::size_t>(i)] < n)
            weights(basis[static_cast<std::size_t>(i)]) = t(i, rhs);
    return weights;
}

} // namespace mgnef
