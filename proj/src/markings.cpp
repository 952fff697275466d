#include "ternary/markings.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "ternary/errors.hpp"

namespace ternary {

namespace {

using Bits = boost::dynamic_bitset<>;

/** Reduced row echelon form over Z2; returns pivot columns, rows are reduced in place and trimmed. */
std::vector<std::size_t> z2_rref(std::vector<Bits>& rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c)
    {
        std::size_t piv = r;
        while (piv < rows.size() && !rows[piv].test(c))
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].test(c))
                rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::size_t z2_rank(std::vector<Bits> rows, std::size_t cols)
{
    return z2_rref(rows, cols).size();
}

/** Basis of {x : row . x = 0 for all rows}, one vector per free column. */
std::vector<Bits> z2_kernel(std::vector<Bits> rows, std::size_t cols)
{
    auto pivots = z2_rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<Bits> basis;
    for (std::size_t f = 0; f < cols; ++f)
    {
        if (is_pivot[f])
            continue;
        Bits v(cols);
        v.set(f);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rows[i].test(f))
                v.set(pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::array<Corner, 3> corners_of(const SimplicialPoset2& p, std::size_t t)
{
    const auto& f = p.triangle_edges(t);
    return {Corner{t, {f[0], f[1]}}, Corner{t, {f[0], f[2]}}, Corner{t, {f[1], f[2]}}};
}

void check_corner(const SimplicialPoset2& p, const Corner& c)
{
    if (c.triangle >= p.triangle_count())
        throw ValidationError("corner refers to unknown triangle index " + std::to_string(c.triangle));
    const auto& f = p.triangle_edges(c.triangle);
    auto facet = [&](std::size_t e) { return std::find(f.begin(), f.end(), e) != f.end(); };
    if (c.edges[0] == c.edges[1] || !facet(c.edges[0]) || !facet(c.edges[1]))
        throw ValidationError("corner of triangle " + p.triangle_id(c.triangle) +
                              " must name two distinct facet edges");
}

void check_marking(const SimplicialPoset2& p, const Marking& m)
{
    for (const auto& c : m.corners)
        check_corner(p, c);
}

/** Edges lying in some marked corner, per triangle. */
std::vector<std::set<std::size_t>> marked_edges_by_triangle(const SimplicialPoset2& p, const Marking& m)
{
    std::vector<std::set<std::size_t>> out(p.triangle_count());
    for (const auto& c : m.corners)
    {
        out[c.triangle].insert(c.edges[0]);
        out[c.triangle].insert(c.edges[1]);
    }
    return out;
}

bool connected_induced(const SimplicialPoset2& g, const std::vector<std::size_t>& vertices)
{
    if (vertices.empty())
        return false;
    std::vector<char> in(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (auto v : vertices)
        in[v] = 1;
    std::vector<std::size_t> stack{vertices.front()};
    seen[vertices.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty())
    {
        auto v = stack.back();
        stack.pop_back();
        for (auto e : g.edges_at_vertex(v))
        {
            auto w = g.other_end(e, v);
            if (in[w] && !seen[w])
            {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertices.size();
}

}  // namespace

bool Marking::contains(const Corner& c) const
{
    return std::binary_search(corners.begin(), corners.end(), c);
}

bool Marking::is_subset_of(const Marking& other) const
{
    return std::includes(other.corners.begin(), other.corners.end(), corners.begin(), corners.end());
}

Marking make_marking(const SimplicialPoset2& p, std::vector<Corner> corners)
{
    for (auto& c : corners)
    {
        if (c.edges[0] > c.edges[1])
            std::swap(c.edges[0], c.edges[1]);
        check_corner(p, c);
    }
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    return Marking{std::move(corners)};
}

std::vector<Corner> all_corners(const SimplicialPoset2& p)
{
    std::vector<Corner> out;
    out.reserve(3 * p.triangle_count());
    for (std::size_t t = 0; t < p.triangle_count(); ++t)
        for (const auto& c : corners_of(p, t))
            out.push_back(c);
    return out;
}

std::size_t opposite_edge(const SimplicialPoset2& p, const Corner& c)
{
    for (auto e : p.triangle_edges(c.triangle))
        if (e != c.edges[0] && e != c.edges[1])
            return e;
    throw ValidationError("corner of triangle " + p.triangle_id(c.triangle) + " has no opposite edge");
}

IntVector corner_row(const SimplicialPoset2& p, const Corner& c)
{
    IntVector row(p.edge_count(), 0);
    row[c.edges[0]] += 1;
    row[c.edges[1]] += 1;
    row[opposite_edge(p, c)] -= 1;
    return row;
}

IntMatrix corner_rows(const SimplicialPoset2& p)
{
    IntMatrix rows;
    for (const auto& c : all_corners(p))
        rows.push_back(corner_row(p, c));
    return rows;
}

bool is_locally_feasible(const Marking& m, const SimplicialPoset2& p)
{
    check_marking(p, m);
    auto marked = marked_edges_by_triangle(p, m);
    for (std::size_t e = 0; e < p.edge_count(); ++e)
    {
        const auto& cof = p.triangles_of_edge(e);
        auto along = std::count_if(cof.begin(), cof.end(), [&](std::size_t t) { return marked[t].count(e) > 0; });
        if (along != 0 && static_cast<std::size_t>(along) != cof.size())
            return false;
    }
    return true;
}

std::optional<RatVector> is_feasible(const Marking& m, const SimplicialPoset2& p)
{
    check_marking(p, m);
    IntMatrix eq, strict;
    for (const auto& c : all_corners(p))
        (m.contains(c) ? strict : eq).push_back(corner_row(p, c));
    return strict_feasible(eq, strict, p.edge_count());
}

Marking marking_of_ray(const RatVector& covector, const SimplicialPoset2& p)
{
    if (covector.size() != p.edge_count())
        throw ValidationError("covector length differs from the edge count");
    Marking m;
    for (const auto& c : all_corners(p))
        if (dot(corner_row(p, c), covector) > 0)
            m.corners.push_back(c);
    std::sort(m.corners.begin(), m.corners.end());
    return m;
}

Marking marking_of_ray(const IntVector& covector, const SimplicialPoset2& p)
{
    return marking_of_ray(to_rational(covector), p);
}

std::vector<MinimalMarking> minimal_feasible_markings(const SimplicialPoset2& p, const DoubleDescriptionOptions& opts)
{
    auto rays = extreme_rays(RationalCone(corner_rows(p), p.edge_count()), opts);
    std::map<Marking, IntVector> seen;
    for (const auto& r : rays.rays)
        seen.emplace(marking_of_ray(r, p), r);
    std::vector<MinimalMarking> out;
    for (auto& [m, r] : seen)
        if (!m.empty())
            out.push_back({m, r});
    return out;
}

bool is_one_marking(const Marking& m)
{
    for (std::size_t i = 1; i < m.corners.size(); ++i)
        if (m.corners[i].triangle == m.corners[i - 1].triangle)
            return false;
    return true;
}

Z2Complex::Z2Complex(const SimplicialPoset2& p)
    : nv_(p.vertex_count()), ne_(p.edge_count())
{
    for (std::size_t t = 0; t < p.triangle_count(); ++t)
    {
        Cochain b(ne_);
        for (auto e : p.triangle_edges(t))
            b.flip(e);
        boundary2_.push_back(std::move(b));
    }
    for (std::size_t e = 0; e < ne_; ++e)
    {
        Bits b(nv_);
        for (auto v : p.edge_ends(e))
            b.flip(v);
        boundary1_.push_back(std::move(b));
    }
}

Cochain Z2Complex::coboundary0(const Bits& vertices) const
{
    Cochain out(ne_);
    for (std::size_t e = 0; e < ne_; ++e)
        out[e] = (boundary1_[e] & vertices).count() % 2 == 1;
    return out;
}

Bits Z2Complex::coboundary1(const Cochain& delta) const
{
    Bits out(boundary2_.size());
    for (std::size_t t = 0; t < boundary2_.size(); ++t)
        out[t] = (boundary2_[t] & delta).count() % 2 == 1;
    return out;
}

bool Z2Complex::is_cocycle(const Cochain& delta) const
{
    return delta.size() == ne_ && coboundary1(delta).none();
}

std::vector<Cochain> Z2Complex::cocycle_basis() const
{
    return z2_kernel(boundary2_, ne_);
}

std::size_t Z2Complex::coboundary0_rank() const
{
    // rows of ∂⁰ as a matrix edges x vertices are the boundary1 bitsets
    return z2_rank(boundary1_, nv_);
}

std::size_t Z2Complex::h1_dim() const
{
    return ne_ - z2_rank(boundary2_, ne_) - coboundary0_rank();
}

bool Z2Complex::boundaries_compose_to_zero() const
{
    for (const auto& tri : boundary2_)
    {
        Bits sum(nv_);
        for (std::size_t e = 0; e < ne_; ++e)
            if (tri.test(e))
                sum ^= boundary1_[e];
        if (sum.any())
            return false;
    }
    return true;
}

Cochain marking_to_cocycle(const Marking& m, const SimplicialPoset2& p)
{
    if (!is_one_marking(m))
        throw ValidationError("marking has more than one corner in some triangle");
    if (!is_locally_feasible(m, p))
        throw ValidationError("marking is not locally feasible");
    Cochain delta(p.edge_count());
    for (const auto& c : m.corners)
    {
        delta.set(c.edges[0]);
        delta.set(c.edges[1]);
    }
    return delta;
}

Marking cocycle_to_marking(const Cochain& delta, const SimplicialPoset2& p)
{
    Z2Complex cx(p);
    if (!cx.is_cocycle(delta))
        throw ValidationError("cochain is not a cocycle");
    Marking m;
    for (std::size_t t = 0; t < p.triangle_count(); ++t)
    {
        std::vector<std::size_t> on;
        for (auto e : p.triangle_edges(t))
            if (delta.test(e))
                on.push_back(e);
        if (on.size() == 2)
            m.corners.push_back(Corner{t, {on[0], on[1]}});
    }
    std::sort(m.corners.begin(), m.corners.end());
    return m;
}

bool is_minimal_cocycle(const Cochain& delta, const std::vector<Cochain>& basis)
{
    if (delta.none())
        return false;
    Cochain outside = ~delta;
    std::vector<Bits> restricted;
    restricted.reserve(basis.size());
    for (const auto& b : basis)
        restricted.push_back(b & outside);
    // cocycles supported inside supp(delta) form the kernel of the restriction map
    return basis.size() - z2_rank(std::move(restricted), delta.size()) == 1;
}

namespace {

OneMarkingMinimal make_one_minimal(const Cochain& delta, const SimplicialPoset2& p)
{
    OneMarkingMinimal r;
    r.marking = cocycle_to_marking(delta, p);
    r.cocycle = delta;
    r.witness.assign(p.edge_count(), Rational(0));
    for (std::size_t e = 0; e < p.edge_count(); ++e)
        if (delta.test(e))
            r.witness[e] = 1;
    return r;
}

}  // namespace

std::vector<OneMarkingMinimal> one_marking_minimals(const SimplicialPoset2& p, const OneMarkingOptions& opts)
{
    Z2Complex cx(p);
    auto basis = cx.cocycle_basis();
    std::vector<Cochain> supports;
    if (basis.size() <= opts.max_kernel_dim)
    {
        const std::size_t k = basis.size();
        Cochain delta(p.edge_count());
        // Gray code walk over all nonzero kernel elements
        for (std::uint64_t i = 1; k > 0 && i < (std::uint64_t{1} << k); ++i)
        {
            delta ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
            if (is_minimal_cocycle(delta, basis))
                supports.push_back(delta);
        }
    }
    else if (cx.h1_dim() == 0)
    {
        for (auto& c : minimal_cutsets(p, opts.max_component_vertices))
            supports.push_back(std::move(c.edges));
    }
    else
    {
        throw ResourceLimitError("cocycle space of dimension " + std::to_string(basis.size()) +
                                 " with nontrivial H^1 exceeds the exhaustive search bound " +
                                 std::to_string(opts.max_kernel_dim));
    }
    std::vector<OneMarkingMinimal> out;
    for (const auto& d : supports)
        out.push_back(make_one_minimal(d, p));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.marking < b.marking; });
    out.erase(std::unique(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.marking == b.marking; }),
              out.end());
    return out;
}

std::vector<Marking> minimal_locally_feasible_markings(const SimplicialPoset2& p, std::size_t max_candidates)
{
    const std::size_t ne = p.edge_count();
    if (ne > 40 || (std::uint64_t{1} << ne) > max_candidates)
        throw ResourceLimitError("locally feasible enumeration over " + std::to_string(ne) + " edges exceeds the bound");

    std::vector<std::uint64_t> tri_mask(p.triangle_count());
    for (std::size_t t = 0; t < p.triangle_count(); ++t)
        for (auto e : p.triangle_edges(t))
            tri_mask[t] |= std::uint64_t{1} << e;

    // marked-edge sets meeting no triangle in exactly one edge
    std::vector<std::uint64_t> supports;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << ne); ++s)
    {
        bool ok = std::all_of(tri_mask.begin(), tri_mask.end(),
                              [&](std::uint64_t m) { return std::popcount(s & m) != 1; });
        if (ok)
            supports.push_back(s);
    }

    std::vector<Marking> out;
    std::size_t produced = 0;
    for (auto s : supports)
    {
        // triangles with two marked edges have a forced corner, those with three choose two corners
        std::vector<Corner> forced;
        std::vector<std::size_t> full;
        for (std::size_t t = 0; t < p.triangle_count(); ++t)
        {
            auto k = std::popcount(s & tri_mask[t]);
            if (k == 3)
                full.push_back(t);
            else if (k == 2)
            {
                std::vector<std::size_t> on;
                for (auto e : p.triangle_edges(t))
                    if ((s >> e) & 1)
                        on.push_back(e);
                forced.push_back(Corner{t, {on[0], on[1]}});
            }
        }
        // a proper locally feasible sub-marking has a proper support s' ⊂ s; it fits inside a
        // 2-corners-per-full-triangle marking iff its two-edge triangles are forced or full here
        std::vector<std::uint64_t> subs;
        for (auto s2 : supports)
            if (s2 != s && (s2 & ~s) == 0)
                subs.push_back(s2);

        std::size_t combos = 1;
        for (std::size_t i = 0; i < full.size(); ++i)
        {
            combos *= 3;
            if (combos > max_candidates)
                throw ResourceLimitError("locally feasible enumeration exceeds the candidate bound");
        }
        produced += combos;
        if (produced > max_candidates)
            throw ResourceLimitError("locally feasible enumeration exceeds the candidate bound");

        for (std::size_t code = 0; code < combos; ++code)
        {
            std::vector<Corner> corners = forced;
            std::size_t c = code;
            for (auto t : full)
            {
                auto tc = corners_of(p, t);
                auto skip = c % 3;
                c /= 3;
                for (std::size_t j = 0; j < 3; ++j)
                    if (j != skip)
                        corners.push_back(tc[j]);
            }
            Marking m = make_marking(p, std::move(corners));
            bool minimal = true;
            for (auto s2 : subs)
            {
                bool fits = true;
                for (std::size_t t = 0; t < p.triangle_count() && fits; ++t)
                {
                    auto k2 = std::popcount(s2 & tri_mask[t]);
                    if (k2 == 2)
                    {
                        std::vector<std::size_t> on;
                        for (auto e : p.triangle_edges(t))
                            if ((s2 >> e) & 1)
                                on.push_back(e);
                        fits = m.contains(Corner{t, {on[0], on[1]}});
                    }
                }
                if (fits)
                {
                    minimal = false;
                    break;
                }
            }
            if (minimal)
                out.push_back(std::move(m));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

MinimalityComparison compare_minimality(const SimplicialPoset2& p, const DoubleDescriptionOptions& opts,
                                        std::size_t max_candidates)
{
    MinimalityComparison r;
    r.locally_minimal = minimal_locally_feasible_markings(p, max_candidates);
    for (auto& mm : minimal_feasible_markings(p, opts))
        r.feasible_minimal.push_back(std::move(mm.marking));
    for (const auto& m : r.locally_minimal)
        if (!is_feasible(m, p))
            r.locally_minimal_infeasible.push_back(m);
    for (const auto& m : r.feasible_minimal)
        if (!std::binary_search(r.locally_minimal.begin(), r.locally_minimal.end(), m))
            r.feasible_minimal_not_locally_minimal.push_back(m);
    return r;
}

std::vector<std::vector<std::size_t>> connected_components(const SimplicialPoset2& g)
{
    std::vector<std::size_t> comp(g.vertex_count(), SIZE_MAX);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < g.vertex_count(); ++s)
    {
        if (comp[s] != SIZE_MAX)
            continue;
        std::vector<std::size_t> members, stack{s};
        comp[s] = out.size();
        while (!stack.empty())
        {
            auto v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (auto e : g.edges_at_vertex(v))
            {
                auto w = g.other_end(e, v);
                if (comp[w] == SIZE_MAX)
                {
                    comp[w] = out.size();
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<Cochain> cut_space_basis(const SimplicialPoset2& g)
{
    Z2Complex cx(g);
    std::vector<Cochain> out;
    for (const auto& comp : connected_components(g))
        for (std::size_t i = 1; i < comp.size(); ++i)
        {
            Bits s(g.vertex_count());
            s.set(comp[i]);
            out.push_back(cx.coboundary0(s));
        }
    return out;
}

std::vector<Cutset> minimal_cutsets(const SimplicialPoset2& g, std::size_t max_component_vertices)
{
    Z2Complex cx(g);
    std::vector<Cutset> out;
    for (const auto& comp : connected_components(g))
    {
        const std::size_t k = comp.size();
        if (k < 2)
            continue;
        if (k > max_component_vertices || k > 63)
            throw ResourceLimitError("component with " + std::to_string(k) + " vertices exceeds the cutset bound");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (k - 1)); ++mask)
        {
            std::vector<std::size_t> side, rest{comp[0]};
            for (std::size_t i = 1; i < k; ++i)
                ((mask >> (i - 1)) & 1 ? side : rest).push_back(comp[i]);
            std::sort(rest.begin(), rest.end());
            if (!connected_induced(g, side) || !connected_induced(g, rest))
                continue;
            Bits s(g.vertex_count());
            for (auto v : side)
                s.set(v);
            out.push_back(Cutset{side, cx.coboundary0(s)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Cutset& a, const Cutset& b) { return a.side < b.side; });
    return out;
}

}  // namespace ternary
