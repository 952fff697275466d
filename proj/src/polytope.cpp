#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ternary/errors.hpp"
#include "ternary/linalg.hpp"
#include "ternary/lp.hpp"
#include "ternary/polyhedral.hpp"

namespace ternary {

LatticePolytope::LatticePolytope(IntMatrix points) : points_(std::move(points))
{
    if (!points_.empty())
        ambient_ = points_.front().size();
    for (const auto& p : points_)
        if (p.size() != ambient_)
            throw ValidationError("polytope points have inconsistent dimensions");
}

namespace {

IntMatrix distinct_sorted(IntMatrix pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

IntMatrix differences(const IntMatrix& pts, const IntVector& origin)
{
    IntMatrix d;
    for (const auto& p : pts)
    {
        IntVector v(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            v[i] = p[i] - origin[i];
        if (!is_zero(v))
            d.push_back(std::move(v));
    }
    return d;
}

// Lattice coordinates of pts relative to origin in the saturated lattice of their differences.
IntMatrix to_lattice(const IntMatrix& pts, const IntVector& origin)
{
    const std::size_t n = origin.size();
    const IntMatrix basis = linalg::saturated_lattice_basis(differences(pts, origin), n);
    IntMatrix out;
    out.reserve(pts.size());
    for (const auto& p : pts)
    {
        IntVector diff(n);
        for (std::size_t i = 0; i < n; ++i)
            diff[i] = p[i] - origin[i];
        IntVector y;
        if (!basis.empty())
        {
            const auto c = linalg::coordinates_in(basis, diff);
            for (const auto& x : *c)
            {
                if (denominator(x) != 1)
                    throw std::logic_error("lattice coordinates are not integral");
                y.push_back(numerator(x));
            }
        }
        out.push_back(std::move(y));
    }
    return out;
}

// Facets of a full-dimensional point set in Z^d as (a, b) with a . y + b >= 0, a primitive.
std::vector<Facet> full_dim_facets(const IntMatrix& pts, std::size_t d)
{
    IntMatrix hom;
    for (const auto& p : pts)
    {
        IntVector row{Integer(1)};
        row.insert(row.end(), p.begin(), p.end());
        hom.push_back(std::move(row));
    }
    const auto cr = extreme_rays(RationalCone(hom, d + 1));
    std::vector<Facet> facets;
    for (const auto& ray : cr.rays)
    {
        IntVector a(ray.begin() + 1, ray.end());
        const Integer g = gcd_of(a);
        for (auto& x : a)
            x /= g;
        facets.push_back({std::move(a), ray[0] / g});
    }
    return facets;
}

Integer pyramid_volume(const IntMatrix& pts, std::size_t d)
{
    if (d == 0)
        return 1;
    const IntVector& apex = pts.front();
    Integer total = 0;
    for (const auto& f : full_dim_facets(pts, d))
    {
        const Integer h = dot(f.normal, apex) + f.offset;
        if (h == 0)
            continue;
        IntMatrix on;
        for (const auto& p : pts)
            if (dot(f.normal, p) + f.offset == 0)
                on.push_back(p);
        total += h * pyramid_volume(to_lattice(on, on.front()), d - 1);
    }
    return total;
}

// Position of p relative to the affine span of `face` inside span(face ∪ {opposite}):
// the coefficient of (opposite - face[0]).
Rational opposite_coefficient(const IntMatrix& y, const std::vector<std::size_t>& face, std::size_t opposite,
                              std::size_t p)
{
    const std::size_t n = y[p].size();
    const IntVector& base = y[face.front()];
    std::vector<IntVector> dirs;
    for (std::size_t i = 1; i < face.size(); ++i)
    {
        IntVector v(n);
        for (std::size_t c = 0; c < n; ++c)
            v[c] = y[face[i]][c] - base[c];
        dirs.push_back(std::move(v));
    }
    IntVector o(n);
    for (std::size_t c = 0; c < n; ++c)
        o[c] = y[opposite][c] - base[c];
    dirs.push_back(std::move(o));
    IntVector target(n);
    for (std::size_t c = 0; c < n; ++c)
        target[c] = y[p][c] - base[c];
    const auto coeffs = linalg::coordinates_in(dirs, target);
    if (!coeffs)
        throw std::logic_error("placing: point outside the current affine hull");
    return coeffs->back();
}

}  // namespace

IntMatrix polytope_vertices(const LatticePolytope& poly)
{
    const IntMatrix pts = distinct_sorted(poly.points());
    if (pts.size() <= 1)
        return pts;
    const std::size_t n = poly.ambient_dim();
    IntMatrix verts;
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        // Is pts[i] a convex combination of the others?
        RatMatrix a(n + 1, RatVector(pts.size() - 1));
        RatVector b(n + 1);
        std::size_t col = 0;
        for (std::size_t j = 0; j < pts.size(); ++j)
        {
            if (j == i)
                continue;
            for (std::size_t c = 0; c < n; ++c)
                a[c][col] = pts[j][c];
            a[n][col] = 1;
            ++col;
        }
        for (std::size_t c = 0; c < n; ++c)
            b[c] = pts[i][c];
        b[n] = 1;
        if (!lp::nonnegative_solution(a, b, pts.size() - 1))
            verts.push_back(pts[i]);
    }
    return verts;
}

long dimension(const LatticePolytope& poly)
{
    if (poly.points().empty())
        return -1;
    return static_cast<long>(linalg::rank(differences(poly.points(), poly.points().front())));
}

std::vector<Facet> polytope_facets(const LatticePolytope& poly)
{
    const IntMatrix verts = polytope_vertices(poly);
    if (verts.empty())
        return {};
    const std::size_t n = poly.ambient_dim();
    IntMatrix hom;
    for (const auto& p : verts)
    {
        IntVector row{Integer(1)};
        row.insert(row.end(), p.begin(), p.end());
        hom.push_back(std::move(row));
    }
    const auto cr = extreme_rays(RationalCone(hom, n + 1));
    std::vector<Facet> facets;
    for (const auto& ray : cr.rays)
        facets.push_back({IntVector(ray.begin() + 1, ray.end()), ray[0]});
    return facets;
}

IntMatrix lattice_coordinates(const LatticePolytope& poly)
{
    const IntMatrix verts = polytope_vertices(poly);
    if (verts.empty())
        return {};
    return to_lattice(verts, verts.front());
}

Integer normalized_volume(const LatticePolytope& poly)
{
    const IntMatrix verts = polytope_vertices(poly);
    if (verts.empty())
        return 0;
    const IntMatrix y = to_lattice(verts, verts.front());
    const std::size_t d = y.front().size();
    if (d == 0)
        return 1;

    std::vector<std::vector<std::size_t>> simplices{{0}};
    std::vector<std::size_t> placed{0};
    std::size_t k = 0;
    for (std::size_t p = 1; p < y.size(); ++p)
    {
        IntMatrix span;
        for (auto q : placed)
            span.push_back(y[q]);
        span.push_back(y[p]);
        if (linalg::rank(differences(span, y.front())) > k)
        {
            for (auto& s : simplices)
                s.push_back(p);
            ++k;
            placed.push_back(p);
            continue;
        }

        std::map<std::vector<std::size_t>, std::vector<std::size_t>> facet_opposites;
        for (const auto& s : simplices)
            for (std::size_t o = 0; o < s.size(); ++o)
            {
                std::vector<std::size_t> f;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != o)
                        f.push_back(s[i]);
                std::sort(f.begin(), f.end());
                facet_opposites[f].push_back(s[o]);
            }
        std::vector<std::vector<std::size_t>> added;
        for (const auto& [f, opp] : facet_opposites)
        {
            if (opp.size() != 1)
                continue;
            if (opposite_coefficient(y, f, opp.front(), p) < 0)
            {
                auto s = f;
                s.push_back(p);
                added.push_back(std::move(s));
            }
        }
        simplices.insert(simplices.end(), added.begin(), added.end());
        placed.push_back(p);
    }

    Integer total = 0;
    for (const auto& s : simplices)
    {
        IntMatrix m;
        for (std::size_t i = 1; i < s.size(); ++i)
        {
            IntVector row(d);
            for (std::size_t c = 0; c < d; ++c)
                row[c] = y[s[i]][c] - y[s[0]][c];
            m.push_back(std::move(row));
        }
        total += abs(linalg::determinant(std::move(m)));
    }
    return total;
}

Integer normalized_volume_pyramids(const LatticePolytope& poly)
{
    const IntMatrix verts = polytope_vertices(poly);
    if (verts.empty())
        return 0;
    const IntMatrix y = to_lattice(verts, verts.front());
    return pyramid_volume(y, y.front().size());
}

std::string off_export(const LatticePolytope& poly)
{
    const IntMatrix y = lattice_coordinates(poly);
    if (y.empty() || y.front().size() != 3)
        throw ValidationError("OFF export requires a 3-dimensional polytope");
    const auto facets = full_dim_facets(y, 3);

    std::vector<std::set<std::size_t>> on(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f)
        for (std::size_t v = 0; v < y.size(); ++v)
            if (dot(facets[f].normal, y[v]) + facets[f].offset == 0)
                on[f].insert(v);
    auto common_facets = [&](std::size_t a, std::size_t b) {
        std::size_t c = 0;
        for (const auto& s : on)
            c += s.count(a) && s.count(b);
        return c;
    };

    std::ostringstream os;
    os << "OFF\n" << y.size() << ' ' << facets.size() << " 0\n";
    for (const auto& p : y)
        os << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    for (std::size_t f = 0; f < facets.size(); ++f)
    {
        // Walk the boundary cycle: consecutive vertices share an edge (two common facets).
        std::vector<std::size_t> cyc{*on[f].begin()};
        std::set<std::size_t> left(std::next(on[f].begin()), on[f].end());
        while (!left.empty())
        {
            auto it = std::find_if(left.begin(), left.end(),
                                   [&](std::size_t v) { return common_facets(cyc.back(), v) >= 2; });
            if (it == left.end())
                throw std::logic_error("OFF export: facet boundary is not a cycle");
            cyc.push_back(*it);
            left.erase(it);
        }
        // Counter-clockwise seen from outside: (v1-v0) x (v2-v0) points along -normal.
        auto sub = [&](std::size_t a, std::size_t b) {
            return IntVector{y[a][0] - y[b][0], y[a][1] - y[b][1], y[a][2] - y[b][2]};
        };
        const IntVector u = sub(cyc[1], cyc[0]), w = sub(cyc[2], cyc[0]);
        const IntVector cross{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
        if (dot(cross, facets[f].normal) > 0)
            std::reverse(cyc.begin() + 1, cyc.end());
        os << cyc.size();
        for (auto v : cyc)
            os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

std::optional<RatVector> strict_feasible(const IntMatrix& eq_rows, const IntMatrix& strict_rows, std::size_t dim)
{
    if (strict_rows.empty())
        return RatVector(dim, Rational(0));
    // x = x+ - x-, slack s >= 0 per strict row: eq (x+ - x-) = 0, strict (x+ - x-) - s = 1.
    const std::size_t ns = strict_rows.size();
    const std::size_t cols = 2 * dim + ns;
    RatMatrix a;
    RatVector b;
    for (const auto& r : eq_rows)
    {
        RatVector row(cols, Rational(0));
        for (std::size_t c = 0; c < dim; ++c)
        {
            row[c] = r[c];
            row[dim + c] = -r[c];
        }
        a.push_back(std::move(row));
        b.push_back(0);
    }
    for (std::size_t i = 0; i < ns; ++i)
    {
        RatVector row(cols, Rational(0));
        for (std::size_t c = 0; c < dim; ++c)
        {
            row[c] = strict_rows[i][c];
            row[dim + c] = -strict_rows[i][c];
        }
        row[2 * dim + i] = -1;
        a.push_back(std::move(row));
        b.push_back(1);
    }
    const auto sol = lp::nonnegative_solution(a, b, cols);
    if (!sol)
        return std::nullopt;
    RatVector x(dim);
    for (std::size_t c = 0; c < dim; ++c)
        x[c] = (*sol)[c] - (*sol)[dim + c];
    return x;
}

std::size_t solution_space_dim(const IntMatrix& eq_rows, std::size_t dim)
{
    return dim - linalg::rank(eq_rows);
}

}  // namespace ternary
