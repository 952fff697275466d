#include <algorithm>

#include <boost/dynamic_bitset.hpp>

#include "ternary/errors.hpp"
#include "ternary/linalg.hpp"
#include "ternary/polyhedral.hpp"

namespace ternary {

RationalCone::RationalCone(IntMatrix hrep, std::size_t dim) : hrep_(std::move(hrep)), dim_(dim)
{
    for (const auto& r : hrep_)
        if (r.size() != dim_)
            throw ValidationError("inequality row of length " + std::to_string(r.size()) + " in a cone of dimension " +
                                  std::to_string(dim_));
}

namespace {

struct Ray
{
    IntVector v;
    boost::dynamic_bitset<> zeros;   // tight rows among those inserted so far
};

std::size_t zero_count(const IntVector& row)
{
    return static_cast<std::size_t>(std::count(row.begin(), row.end(), Integer(0)));
}

}  // namespace

ConeRays extreme_rays(const RationalCone& cone, const DoubleDescriptionOptions& opts)
{
    const std::size_t n = cone.dim();

    IntMatrix rows;
    for (const auto& r : cone.hrep())
        if (!is_zero(r))
            rows.push_back(make_primitive(r));
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::stable_sort(rows.begin(), rows.end(),
                     [](const IntVector& a, const IntVector& b) { return zero_count(a) > zero_count(b); });

    ConeRays out;
    out.lineality = linalg::kernel_basis(rows, n);
    const std::size_t m = rows.size();
    const std::size_t r = n - out.lineality.size();
    if (r == 0)
        return out;

    // Initial simplicial cone from the first r independent rows, inside the row space.
    std::vector<std::size_t> order;
    std::vector<bool> inserted(m, false);
    {
        RatMatrix chosen;
        for (std::size_t i = 0; i < m && order.size() < r; ++i)
        {
            chosen.push_back(to_rational(rows[i]));
            if (linalg::rank(chosen) == chosen.size())
                order.push_back(i);
            else
                chosen.pop_back();
        }
    }
    for (auto i : order)
        inserted[i] = true;

    std::vector<Ray> rays;
    {
        RatMatrix gram(r, RatVector(r));
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                gram[a][b] = Rational(dot(rows[order[a]], rows[order[b]]));
        for (std::size_t k = 0; k < r; ++k)
        {
            RatVector e(r, Rational(0));
            e[k] = 1;
            const auto y = linalg::solve_square(gram, e);
            RatVector x(n, Rational(0));
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t c = 0; c < n; ++c)
                    if (rows[order[a]][c] != 0)
                        x[c] += (*y)[a] * Rational(rows[order[a]][c]);
            Ray ray{primitive_direction(x), boost::dynamic_bitset<>(m)};
            for (std::size_t a = 0; a < r; ++a)
                if (a != k)
                    ray.zeros.set(order[a]);
            rays.push_back(std::move(ray));
        }
    }

    for (std::size_t row = 0; row < m; ++row)
    {
        if (inserted[row])
            continue;
        const IntVector& a = rows[row];
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg, zer;
        for (std::size_t i = 0; i < rays.size(); ++i)
        {
            val[i] = dot(a, rays[i].v);
            if (val[i] > 0)
                pos.push_back(i);
            else if (val[i] < 0)
                neg.push_back(i);
            else
                zer.push_back(i);
        }

        std::vector<Ray> next;
        next.reserve(pos.size() + zer.size());
        for (auto i : pos)
            next.push_back(rays[i]);
        for (auto i : zer)
        {
            next.push_back(rays[i]);
            next.back().zeros.set(row);
        }

        for (auto p : pos)
            for (auto q : neg)
            {
                const auto common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 2 < r)
                    continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
                    if (t != p && t != q && common.is_subset_of(rays[t].zeros))
                        adjacent = false;
                if (!adjacent)
                    continue;
                IntVector v(n);
                for (std::size_t c = 0; c < n; ++c)
                    v[c] = val[p] * rays[q].v[c] - val[q] * rays[p].v[c];
                Ray nr{make_primitive(std::move(v)), common};
                nr.zeros.set(row);
                next.push_back(std::move(nr));
            }

        rays = std::move(next);
        inserted[row] = true;
        if (opts.max_rays != 0 && rays.size() > opts.max_rays)
            throw ResourceLimitError("double description exceeded " + std::to_string(opts.max_rays) + " rays");
    }

    out.rays.reserve(rays.size());
    for (auto& ray : rays)
        out.rays.push_back(std::move(ray.v));
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

}  // namespace ternary
