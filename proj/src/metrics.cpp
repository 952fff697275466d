#include "ternary/metrics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "ternary/errors.hpp"
#include "ternary/markings.hpp"
#include "ternary/polyhedral.hpp"

namespace ternary {

namespace {

std::string name_of_walk(const SimplicialPoset2& p, const Walk& w)
{
    std::string s;
    for (auto e : w.edges)
        s += (s.empty() ? "" : " ") + p.edge_id(e);
    return s;
}

bool joins(const SimplicialPoset2& p, std::size_t e, std::size_t a, std::size_t b)
{
    const auto& ends = p.edge_ends(e);
    return (ends[0] == a && ends[1] == b) || (ends[0] == b && ends[1] == a);
}

/** Sub-walk of `edges.size()` steps starting at vertex position `from` of a closed walk. */
Walk cyclic_segment(const Walk& c, std::size_t from, std::size_t steps)
{
    const std::size_t len = c.edges.size();
    Walk w;
    w.vertices.push_back(c.vertices[from % len]);
    for (std::size_t i = 0; i < steps; ++i)
    {
        w.edges.push_back(c.edges[(from + i) % len]);
        w.vertices.push_back(c.vertices[(from + i + 1) % len]);
    }
    return w;
}

void check_cycle(const Walk& c, const Subgraph& g, const SimplicialPoset2& p)
{
    if (c.edges.size() % 2 != 0)
        throw ValidationError("cycle has odd length " + std::to_string(c.edges.size()));
    if (c.edges.empty() || c.front() != c.back())
        throw ValidationError("walk is not closed");
    std::set<std::size_t> seen(c.vertices.begin(), c.vertices.end() - 1);
    if (seen.size() != c.edges.size())
        throw ValidationError("closed walk repeats a vertex: " + name_of_walk(p, c));
    for (auto e : c.edges)
        if (!g.has_edge(e))
            throw ValidationError("cycle edge " + p.edge_id(e) + " is not in the subgraph");
}

bool isometric_with(const Walk& c, const Subgraph& g, const SimplicialPoset2& p, const std::vector<std::uint64_t>& d)
{
    const std::size_t n = c.edges.size() / 2;
    for (std::size_t i = 0; i < n; ++i)
    {
        auto a = c.vertices[i];
        auto b = c.vertices[i + n];
        Walk first = cyclic_segment(c, i, n);
        Walk second = cyclic_segment(c, i + n, n);
        bool found = false;
        for (auto e : p.edges_at_vertex(a))
        {
            if (g.has_edge(e) || !joins(p, e, a, b) || d[e] != n)
                continue;
            if (contracts_to(first, e, p) && contracts_to(second, e, p))
            {
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

/** Simple cycles of g of even length in [4, max_len], each once, edge sequence from its least vertex. */
std::vector<Walk> even_cycles(const Subgraph& g, const SimplicialPoset2& p, std::size_t max_len)
{
    std::set<std::vector<std::size_t>> seen;
    std::vector<Walk> out;
    std::vector<char> on_path(p.vertex_count(), 0);
    Walk path;
    for (auto s : g.vertices)
    {
        path.vertices.assign(1, s);
        path.edges.clear();
        on_path[s] = 1;
        std::function<void()> extend = [&]() {
            auto v = path.vertices.back();
            for (auto e : p.edges_at_vertex(v))
            {
                if (!g.has_edge(e))
                    continue;
                auto w = p.other_end(e, v);
                if (w == s && path.edges.size() + 1 >= 4 && (path.edges.size() + 1) % 2 == 0)
                {
                    auto fwd = path.edges;
                    fwd.push_back(e);
                    std::vector<std::size_t> rev(fwd.rbegin(), fwd.rend());
                    const auto& key = std::min(fwd, rev);
                    if (seen.insert(key).second)
                        out.push_back(make_walk(p, s, key));
                }
                if (w <= s || on_path[w] || path.edges.size() + 1 >= max_len)
                    continue;
                on_path[w] = 1;
                path.edges.push_back(e);
                path.vertices.push_back(w);
                extend();
                path.edges.pop_back();
                path.vertices.pop_back();
                on_path[w] = 0;
            }
        };
        extend();
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end(), [](const Walk& a, const Walk& b) {
        return std::pair(a.edges.size(), a.edges) < std::pair(b.edges.size(), b.edges);
    });
    return out;
}

struct UnionFind
{
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

}  // namespace

Walk make_walk(const SimplicialPoset2& p, std::size_t start, const std::vector<std::size_t>& edges)
{
    if (edges.empty())
        throw ValidationError("walk must contain at least one edge");
    if (start >= p.vertex_count())
        throw ValidationError("walk starts at an unknown vertex");
    Walk w;
    w.vertices.push_back(start);
    for (auto e : edges)
    {
        if (e >= p.edge_count())
            throw ValidationError("walk uses an unknown edge");
        auto v = w.vertices.back();
        const auto& ends = p.edge_ends(e);
        if (ends[0] != v && ends[1] != v)
            throw ValidationError("edge " + p.edge_id(e) + " is not incident to " + p.vertex_id(v));
        w.edges.push_back(e);
        w.vertices.push_back(p.other_end(e, v));
    }
    return w;
}

Walk concatenate(const Walk& a, const Walk& b)
{
    if (a.back() != b.front())
        throw ValidationError("walks do not meet");
    Walk w = a;
    w.edges.insert(w.edges.end(), b.edges.begin(), b.edges.end());
    w.vertices.insert(w.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
    return w;
}

bool Subgraph::has_edge(std::size_t e) const
{
    return std::binary_search(edges.begin(), edges.end(), e);
}

Subgraph make_subgraph(const SimplicialPoset2& p, std::vector<std::size_t> edges,
                       const std::vector<std::size_t>& extra_vertices)
{
    Subgraph g;
    for (auto e : edges)
    {
        if (e >= p.edge_count())
            throw ValidationError("subgraph uses an unknown edge");
        g.vertices.push_back(p.edge_ends(e)[0]);
        g.vertices.push_back(p.edge_ends(e)[1]);
    }
    for (auto v : extra_vertices)
    {
        if (v >= p.vertex_count())
            throw ValidationError("subgraph uses an unknown vertex");
        g.vertices.push_back(v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    g.edges = std::move(edges);
    return g;
}

std::vector<std::string> metric_violations(const PosetMetric& d, const SimplicialPoset2& p)
{
    std::vector<std::string> out;
    if (d.values.size() != p.edge_count())
    {
        out.push_back("metric has " + std::to_string(d.values.size()) + " values for " +
                      std::to_string(p.edge_count()) + " edges");
        return out;
    }
    for (std::size_t e = 0; e < p.edge_count(); ++e)
        if (d.values[e] < 0)
            out.push_back("negative value on " + p.edge_id(e));
    for (const auto& c : all_corners(p))
        if (dot(corner_row(p, c), d.values) < 0)
            out.push_back("triangle " + p.triangle_id(c.triangle) + ": d(" + p.edge_id(c.edges[0]) + ") + d(" +
                          p.edge_id(c.edges[1]) + ") < d(" + p.edge_id(opposite_edge(p, c)) + ")");
    return out;
}

void require_pure(const SimplicialPoset2& p, bool allow_impure)
{
    if (!allow_impure && !p.is_pure())
        throw ValidationError("poset is not pure (pass the impure override to proceed)");
}

bool contracts_to(const Walk& w, std::size_t e, const SimplicialPoset2& p)
{
    if (e >= p.edge_count())
        throw ValidationError("unknown target edge");
    if (w.edges.empty() || !joins(p, e, w.front(), w.back()))
        throw ValidationError("walk does not join the endpoints of " + p.edge_id(e));
    const std::size_t n = w.edges.size();
    // c[i][j]: edges the sub-walk between vertex positions i < j contracts to
    std::vector<std::vector<std::vector<char>>> c(n + 1, std::vector<std::vector<char>>(n + 1));
    for (std::size_t i = 0; i < n; ++i)
    {
        c[i][i + 1].assign(p.edge_count(), 0);
        c[i][i + 1][w.edges[i]] = 1;
    }
    for (std::size_t len = 2; len <= n; ++len)
        for (std::size_t i = 0; i + len <= n; ++i)
        {
            const std::size_t j = i + len;
            auto& cell = c[i][j];
            cell.assign(p.edge_count(), 0);
            for (std::size_t k = i + 1; k < j; ++k)
                for (std::size_t a = 0; a < p.edge_count(); ++a)
                {
                    if (!c[i][k][a])
                        continue;
                    for (auto t : p.triangles_of_edge(a))
                    {
                        const auto& f = p.triangle_edges(t);
                        for (auto b : f)
                        {
                            if (b == a || !c[k][j][b])
                                continue;
                            for (auto x : f)
                                if (x != a && x != b)
                                    cell[x] = 1;
                        }
                    }
                }
        }
    return c[0][n][e] != 0;
}

std::vector<std::uint64_t> contraction_distance(const Subgraph& g, const SimplicialPoset2& p, bool allow_impure)
{
    require_pure(p, allow_impure);
    std::vector<std::uint64_t> d(p.edge_count(), kInfinite);
    std::vector<char> done(p.edge_count(), 0);
    using Item = std::pair<std::uint64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (auto e : g.edges)
    {
        d[e] = 1;
        queue.emplace(1, e);
    }
    // superior-function Dijkstra: d(e) = min over triangles {e, a, b} of d(a) + d(b)
    while (!queue.empty())
    {
        auto [dist, a] = queue.top();
        queue.pop();
        if (done[a] || dist != d[a])
            continue;
        done[a] = 1;
        for (auto t : p.triangles_of_edge(a))
        {
            const auto& f = p.triangle_edges(t);
            for (auto b : f)
            {
                if (b == a || !done[b])
                    continue;
                for (auto x : f)
                {
                    if (x == a || x == b || done[x])
                        continue;
                    auto cand = d[a] + d[b];
                    if (cand < d[x])
                    {
                        d[x] = cand;
                        queue.emplace(cand, x);
                    }
                }
            }
        }
    }
    return d;
}

bool is_bypassing(const Subgraph& g, const SimplicialPoset2& p, bool allow_impure)
{
    if (g.edges.empty() || g.vertices.size() != p.vertex_count())
        return false;
    auto d = contraction_distance(g, p, allow_impure);
    return std::none_of(d.begin(), d.end(), [](std::uint64_t x) { return x == kInfinite; });
}

PosetMetric graph_metric(const Subgraph& g, const SimplicialPoset2& p, bool allow_impure)
{
    if (!is_bypassing(g, p, allow_impure))
        throw ValidationError("subgraph is not bypassing");
    auto d = contraction_distance(g, p, allow_impure);
    PosetMetric m;
    for (auto x : d)
        m.values.emplace_back(static_cast<unsigned long long>(x));
    auto bad = metric_violations(m, p);
    if (!bad.empty())
        throw std::logic_error("graph metric violates " + bad.front());
    return m;
}

bool is_in_B(const Walk& w, std::size_t e, const Subgraph& g, const SimplicialPoset2& p, bool allow_impure)
{
    if (w.edges.empty() || !joins(p, e, w.front(), w.back()))
        return false;
    if (!std::all_of(w.edges.begin(), w.edges.end(), [&](std::size_t x) { return g.has_edge(x); }))
        return false;
    auto d = contraction_distance(g, p, allow_impure);
    return d[e] == w.edges.size() && contracts_to(w, e, p);
}

bool is_isometric_even_cycle(const Walk& c, const Subgraph& g, const SimplicialPoset2& p, bool allow_impure)
{
    check_cycle(c, g, p);
    return isometric_with(c, g, p, contraction_distance(g, p, allow_impure));
}

IcColoring ic_coloring(const Subgraph& g, const SimplicialPoset2& p, std::size_t max_cycle_len, bool allow_impure)
{
    if (!is_bypassing(g, p, allow_impure))
        throw ValidationError("ic-coloring requires a bypassing subgraph");
    auto d = contraction_distance(g, p, allow_impure);
    IcColoring out;
    out.max_cycle_len = max_cycle_len;
    UnionFind uf(p.edge_count());
    for (const auto& c : even_cycles(g, p, max_cycle_len))
    {
        if (!isometric_with(c, g, p, d))
            continue;
        out.cycles.push_back(c.edges);
        const std::size_t n = c.edges.size() / 2;
        for (std::size_t i = 0; i < n; ++i)
            if (uf.unite(c.edges[i], c.edges[i + n]))
                out.merges.emplace_back(c.edges[i], c.edges[i + n]);
    }
    std::vector<std::vector<std::size_t>> by_root(p.edge_count());
    for (auto e : g.edges)
        by_root[uf.find(e)].push_back(e);
    for (auto& cls : by_root)
        if (!cls.empty())
            out.classes.push_back(std::move(cls));
    std::sort(out.classes.begin(), out.classes.end());
    return out;
}

ExtremalityReport is_extreme_metric(const PosetMetric& d, const SimplicialPoset2& p, bool allow_impure)
{
    require_pure(p, allow_impure);
    auto bad = metric_violations(d, p);
    if (!bad.empty())
        throw ValidationError("not a metric: " + bad.front());
    if (std::all_of(d.values.begin(), d.values.end(), [](const Rational& x) { return x == 0; }))
        throw ValidationError("the zero metric is not a ray");
    ExtremalityReport r;
    IntMatrix rows;
    for (const auto& c : all_corners(p))
    {
        auto row = corner_row(p, c);
        if (dot(row, d.values) == 0)
        {
            rows.push_back(row);
            r.tight_rows.push_back({TightRow::Kind::Corner, c.triangle, c.edges, row});
        }
    }
    for (std::size_t e = 0; e < p.edge_count(); ++e)
        if (p.triangles_of_edge(e).empty() && d.values[e] == 0)
        {
            IntVector row(p.edge_count(), 0);
            row[e] = 1;
            rows.push_back(row);
            r.tight_rows.push_back({TightRow::Kind::Nonnegative, 0, {e, e}, row});
        }
    r.kernel_dim = solution_space_dim(rows, p.edge_count());
    r.extreme = r.kernel_dim == 1;
    return r;
}

PosetMetric cut_metric(const std::vector<std::size_t>& side, const SimplicialPoset2& p)
{
    std::vector<char> in(p.vertex_count(), 0);
    for (auto v : side)
    {
        if (v >= p.vertex_count())
            throw ValidationError("cut side uses an unknown vertex");
        in[v] = 1;
    }
    PosetMetric m;
    for (std::size_t e = 0; e < p.edge_count(); ++e)
    {
        const auto& ends = p.edge_ends(e);
        m.values.emplace_back(in[ends[0]] != in[ends[1]] ? 1 : 0);
    }
    return m;
}

HamiltonianCone hamiltonian_cone_subgraph(const std::vector<std::pair<std::size_t, std::size_t>>& h,
                                          const std::vector<std::size_t>& cycle, std::size_t n)
{
    if (n < 5)
        throw ValidationError("Hamiltonian cone needs n >= 5");
    const std::size_t m = n - 1;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (auto [a, b] : h)
    {
        if (a >= m || b >= m || a == b)
            throw ValidationError("Hamiltonian graph edge out of range or a loop");
        if (!edges.emplace(std::min(a, b), std::max(a, b)).second)
            throw ValidationError("Hamiltonian graph has a repeated edge");
    }
    std::vector<std::size_t> order = cycle;
    std::sort(order.begin(), order.end());
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), 0);
    if (order != all)
        throw ValidationError("cycle must visit each of the " + std::to_string(m) + " vertices once");
    for (std::size_t i = 0; i < m; ++i)
    {
        auto a = cycle[i], b = cycle[(i + 1) % m];
        if (!edges.count({std::min(a, b), std::max(a, b)}))
            throw ValidationError("cycle step is not an edge of the graph");
    }

    HamiltonianCone out{doubled_skeleton(n), {}, {}};
    if (m % 3 == 0)
        out.warnings.push_back("n - 1 = " + std::to_string(m) + " is divisible by 3; 1-ic-colorability is not guaranteed");
    auto plus = [&](std::size_t i, std::size_t j) {
        return *out.poset.edge_index("p" + std::to_string(std::min(i, j)) + "_" + std::to_string(std::max(i, j)));
    };
    std::vector<std::size_t> chosen;
    for (auto [a, b] : edges)
        chosen.push_back(plus(a + 1, b + 1));
    for (std::size_t i = 1; i <= m; ++i)
        chosen.push_back(plus(i, n));
    out.subgraph = make_subgraph(out.poset, chosen);
    return out;
}

}  // namespace ternary
