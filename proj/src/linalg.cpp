#include "ternary/linalg.hpp"

#include <algorithm>
#include <utility>

namespace ternary::linalg {

std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col)
    {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t j = col; j < cols; ++j)
            m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r)
        {
            if (r == row || m[r][col] == 0)
                continue;
            const Rational f = m[r][col];
            for (std::size_t j = col; j < cols; ++j)
                if (m[row][j] != 0)
                    m[r][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

std::size_t rank(const RatMatrix& m)
{
    if (m.empty())
        return 0;
    RatMatrix copy = m;
    return rref(copy, m.front().size()).size();
}

std::size_t rank(const IntMatrix& m)
{
    RatMatrix q;
    q.reserve(m.size());
    for (const auto& r : m)
        q.push_back(to_rational(r));
    return rank(q);
}

IntMatrix kernel_basis(const RatMatrix& m, std::size_t cols)
{
    RatMatrix red = m;
    const auto pivots = rref(red, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;

    IntMatrix basis;
    for (std::size_t free = 0; free < cols; ++free)
    {
        if (is_pivot[free])
            continue;
        RatVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -red[i][free];
        basis.push_back(primitive_direction(v));
    }
    return basis;
}

IntMatrix kernel_basis(const IntMatrix& m, std::size_t cols)
{
    RatMatrix q;
    q.reserve(m.size());
    for (const auto& r : m)
        q.push_back(to_rational(r));
    return kernel_basis(q, cols);
}

std::optional<RatVector> solve_any(const RatMatrix& a, const RatVector& b, std::size_t cols)
{
    RatMatrix aug;
    aug.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        RatVector row = a[i];
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    const auto pivots = rref(aug, cols + 1);
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt;
    RatVector x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug[i][cols];
    return x;
}

std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b)
{
    const std::size_t n = a.size();
    if (rank(a) != n)
        return std::nullopt;
    return solve_any(a, b, n);
}

Integer determinant(IntMatrix m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (m[k][k] == 0)
        {
            std::size_t sel = k + 1;
            while (sel < n && m[sel][k] == 0)
                ++sel;
            if (sel == n)
                return 0;
            std::swap(m[k], m[sel]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
        {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

IntMatrix integer_kernel(const IntMatrix& m, std::size_t cols)
{
    // Column operations on a copy of m, mirrored on a unimodular U. Columns of
    // U beyond the last pivot span the integer kernel.
    IntMatrix a = m;
    IntMatrix u(cols, IntVector(cols, Integer(0)));
    for (std::size_t i = 0; i < cols; ++i)
        u[i][i] = 1;

    auto swap_cols = [&](std::size_t x, std::size_t y) {
        if (x == y)
            return;
        for (auto& r : a)
            std::swap(r[x], r[y]);
        for (auto& r : u)
            std::swap(r[x], r[y]);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (auto& r : a)
            r[dst] += f * r[src];
        for (auto& r : u)
            r[dst] += f * r[src];
    };

    std::size_t p = 0;
    for (std::size_t i = 0; i < a.size() && p < cols; ++i)
    {
        while (true)
        {
            std::size_t best = cols;
            for (std::size_t j = p; j < cols; ++j)
                if (a[i][j] != 0 && (best == cols || abs(a[i][j]) < abs(a[i][best])))
                    best = j;
            if (best == cols)
                break;
            swap_cols(p, best);
            bool done = true;
            for (std::size_t j = p + 1; j < cols; ++j)
            {
                if (a[i][j] == 0)
                    continue;
                const Integer q = a[i][j] / a[i][p];
                add_col(j, p, -q);
                if (a[i][j] != 0)
                    done = false;
            }
            if (done)
            {
                ++p;
                break;
            }
        }
    }

    IntMatrix basis;
    for (std::size_t j = p; j < cols; ++j)
    {
        IntVector v(cols);
        for (std::size_t r = 0; r < cols; ++r)
            v[r] = u[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

IntMatrix saturated_lattice_basis(const IntMatrix& rows, std::size_t cols)
{
    const IntMatrix complement = kernel_basis(rows, cols);
    if (complement.empty())
    {
        IntMatrix id(cols, IntVector(cols, Integer(0)));
        for (std::size_t i = 0; i < cols; ++i)
            id[i][i] = 1;
        return id;
    }
    return integer_kernel(complement, cols);
}

std::optional<RatVector> coordinates_in(const IntMatrix& basis, const IntVector& v)
{
    const std::size_t k = basis.size();
    const std::size_t n = v.size();
    RatMatrix a(n, RatVector(k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            a[i][j] = basis[j][i];
    return solve_any(a, to_rational(v), k);
}

}  // namespace ternary::linalg
