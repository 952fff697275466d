#include "ternary/lp.hpp"

namespace ternary::lp {

std::optional<RatVector> nonnegative_solution(const RatMatrix& a, const RatVector& b, std::size_t cols)
{
    const std::size_t m = a.size();
    const std::size_t n = cols;
    if (m == 0)
        return RatVector(n, Rational(0));

    // Tableau over x (n columns) and one artificial per row, rhs last.
    const std::size_t width = n + m + 1;
    RatMatrix t(m, RatVector(width, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
    {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = flip ? -a[i][j] : a[i][j];
        t[i][n + i] = 1;
        t[i][width - 1] = flip ? -b[i] : b[i];
        basis[i] = n + i;
    }
    // Reduced costs of min sum(artificials); cost[width-1] holds -objective.
    RatVector cost(width, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cost[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i)
        cost[width - 1] -= t[i][width - 1];

    while (true)
    {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (cost[j] < 0)
            {
                enter = j;
                break;
            }
        if (enter == width)
            break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i)
        {
            if (t[i][enter] <= 0)
                continue;
            const Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave]))
            {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            break;   // unbounded direction cannot occur for a phase-one objective bounded below by 0

        const Rational piv = t[leave][enter];
        for (auto& x : t[leave])
            x /= piv;
        for (std::size_t i = 0; i < m; ++i)
        {
            if (i == leave || t[i][enter] == 0)
                continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0)
                    t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0)
        {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0)
                    cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    if (cost[width - 1] != 0)
        return std::nullopt;
    RatVector x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n)
            x[basis[i]] = t[i][width - 1];
    return x;
}

}  // namespace ternary::lp
