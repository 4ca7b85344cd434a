#include <algorithm>

#include "mgnef/cone.hpp"
#include "mgnef/linalg.hpp"

namespace mgnef {

std::vector<VectorQ> extreme_rays(const PolyCone& cone, DdOptions options)
{
    const Index d = cone.dimension;
    if (d > options.max_dimension)
        throw DimensionLimitExceededError("ray enumeration limited to dimension " +
                                          std::to_string(options.max_dimension) + ", cone has dimension " +
                                          std::to_string(d));
    if (!cone.has_inequalities)
        throw std::invalid_argument("extreme_rays needs an H-representation");
    const MatrixQ a = cone.inequality_matrix();
    if (rank(a) < d)
        throw NotPointedError();
    if (d == 0)
        return {};

    // Start from d independent inequalities B: {B x >= 0} is simplicial with
    // the columns of B^-1 as its rays.
    const std::vector<Index> basis = independent_rows(a);
    std::vector<Index> processed(basis.begin(), basis.begin() + d);
    MatrixQ b(d, d);
    for (Index k = 0; k < d; ++k)
        b.row(k) = a.row(processed[static_cast<std::size_t>(k)]);
    std::vector<VectorQ> rays;
    for (Index k = 0; k < d; ++k)
    {
        VectorQ unit = VectorQ::Zero(d);
        unit(k) = 1;
        rays.push_back(primitive_ray(*solve(b, unit)));
    }

    auto adjacent = [&](const VectorQ& p, const VectorQ& n) {
        std::vector<VectorQ> common;
        for (Index row : processed)
        {
            const auto normal = a.row(row);
            if (normal.dot(p.transpose()) == 0 && normal.dot(n.transpose()) == 0)
                common.push_back(normal.transpose());
        }
        return rank(stack_rows(common, d)) == d - 2;
    };

    for (Index row = 0; row < a.rows(); ++row)
    {
        if (std::find(processed.begin(), processed.end(), row) != processed.end())
            continue;
        const VectorQ normal = a.row(row).transpose();
        std::vector<VectorQ> pos, zero, neg;
        std::vector<Rational> pos_val, neg_val;
        for (auto& r : rays)
        {
            const Rational v = normal.dot(r);
            if (v > 0)
            {
                pos.push_back(r);
                pos_val.push_back(v);
            }
            else if (v < 0)
            {
                neg.push_back(r);
                neg_val.push_back(v);
            }
            else
                zero.push_back(r);
        }
        if (neg.empty())
        {
            processed.push_back(row);
            continue;
        }
        std::vector<VectorQ> next = pos;
        next.insert(next.end(), zero.begin(), zero.end());
        for (std::size_t i = 0; i < pos.size(); ++i)
        {
            for (std::size_t j = 0; j < neg.size(); ++j)
            {
                if (!adjacent(pos[i], neg[j]))
                    continue;
                VectorQ r = primitive_ray((pos_val[i] * neg[j] - neg_val[j] * pos[i]).eval());
                if (std::find(next.begin(), next.end(), r) == next.end())
                    next.push_back(std::move(r));
            }
        }
        processed.push_back(row);
        rays = std::move(next);
    }

    std::sort(rays.begin(), rays.end(), lex_less);
    return rays;
}

} // namespace mgnef
