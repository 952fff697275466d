#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ternary/errors.hpp"
#include "ternary/linalg.hpp"
#include "ternary/markings.hpp"
#include "ternary/metrics.hpp"
#include "ternary/polyhedral.hpp"
#include "ternary/poset.hpp"

using namespace ternary;

namespace {

std::size_t E(const SimplicialPoset2& p, const std::string& id) { return *p.edge_index(id); }
std::size_t V(const SimplicialPoset2& p, const std::string& id) { return *p.vertex_index(id); }

// K_{3,2} with parts {v1,v2,v3} and {v4,v5} inside complete_skeleton(5).
Subgraph k32(const SimplicialPoset2& p)
{
    std::vector<std::size_t> edges;
    for (int a = 1; a <= 3; ++a)
        for (int b = 4; b <= 5; ++b)
            edges.push_back(E(p, "e" + std::to_string(a) + "_" + std::to_string(b)));
    return make_subgraph(p, edges);
}

PosetMetric ints(std::vector<long> xs)
{
    PosetMetric d;
    for (auto x : xs)
        d.values.emplace_back(x);
    return d;
}

// Classical triangle inequalities on the edge values of K_n.
bool classical_metric(const PosetMetric& d, const SimplicialPoset2& kn, std::size_t n)
{
    auto at = [&](std::size_t i, std::size_t j) {
        if (i > j)
            std::swap(i, j);
        return d.values[E(kn, "e" + std::to_string(i) + "_" + std::to_string(j))];
    };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                if (i != j && j != k && i != k && at(i, k) > at(i, j) + at(j, k))
                    return false;
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> cycle_pairs(std::size_t m)
{
    std::vector<std::pair<std::size_t, std::size_t>> h;
    for (std::size_t i = 0; i < m; ++i)
        h.push_back({i, (i + 1) % m});
    return h;
}

std::vector<std::size_t> iota_cycle(std::size_t m)
{
    std::vector<std::size_t> c(m);
    for (std::size_t i = 0; i < m; ++i)
        c[i] = i;
    return c;
}

// All walks in g of exactly len edges from start.
void walks_of(const Subgraph& g, const SimplicialPoset2& p, std::size_t start, std::size_t len,
              const std::function<void(const Walk&)>& f)
{
    std::vector<std::size_t> edges;
    std::function<void(std::size_t)> go = [&](std::size_t at) {
        if (edges.size() == len)
        {
            f(make_walk(p, start, edges));
            return;
        }
        for (auto e : g.edges)
        {
            const auto& ends = p.edge_ends(e);
            if (ends[0] != at && ends[1] != at)
                continue;
            edges.push_back(e);
            go(p.other_end(e, at));
            edges.pop_back();
        }
    };
    go(start);
}

}  // namespace

TEST_CASE("contraction of walks")
{
    auto k3 = complete_skeleton(3);
    auto e12 = E(k3, "e1_2"), e23 = E(k3, "e2_3"), e13 = E(k3, "e1_3");
    CHECK(contracts_to(make_walk(k3, V(k3, "v1"), {e12}), e12, k3));
    CHECK(contracts_to(make_walk(k3, V(k3, "v1"), {e12, e23}), e13, k3));
    CHECK_THROWS_AS(contracts_to(make_walk(k3, V(k3, "v1"), {e12}), e23, k3), ValidationError);
    CHECK_THROWS_AS(make_walk(k3, V(k3, "v3"), {e12}), ValidationError);

    auto d5 = doubled_skeleton(5);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
        {
            auto w = make_walk(d5, V(d5, "v" + std::to_string(i)),
                               {E(d5, "p" + std::to_string(i) + "_5"), E(d5, "p" + std::to_string(j) + "_5")});
            auto target = E(d5, "e" + std::to_string(i) + "_" + std::to_string(j));
            CHECK(contracts_to(w, target, d5));
            CHECK(oracle::contracts(d5, w.front(), w.edges, target));
        }
}

TEST_CASE("interval contraction agrees with the explicit search")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial)
    {
        auto p = oracle::random_poset(rng);
        if (p.edge_count() == 0)
            continue;
        auto g = make_subgraph(p, [&] {
            std::vector<std::size_t> all(p.edge_count());
            for (std::size_t e = 0; e < all.size(); ++e)
                all[e] = e;
            return all;
        }());
        for (auto v : g.vertices)
            for (std::size_t len = 1; len <= 4; ++len)
                walks_of(g, p, v, len, [&](const Walk& w) {
                    for (std::size_t e = 0; e < p.edge_count(); ++e)
                    {
                        const auto& ends = p.edge_ends(e);
                        bool joins = (ends[0] == w.front() && ends[1] == w.back()) ||
                                     (ends[1] == w.front() && ends[0] == w.back());
                        if (joins)
                            CHECK(contracts_to(w, e, p) == oracle::contracts(p, w.front(), w.edges, e));
                    }
                });
    }
}

TEST_CASE("contraction distance examples")
{
    auto k5 = complete_skeleton(5);
    auto g = k32(k5);
    auto d = contraction_distance(g, k5);
    for (std::size_t e = 0; e < k5.edge_count(); ++e)
    {
        CAPTURE(k5.edge_id(e));
        CHECK(d[e] == (g.has_edge(e) ? 1u : 2u));
    }
    CHECK(is_bypassing(g, k5));

    auto k4 = complete_skeleton(4);
    auto tri = make_subgraph(k4, {E(k4, "e1_2"), E(k4, "e2_3"), E(k4, "e1_3")});
    auto dt = contraction_distance(tri, k4);
    CHECK(dt[E(k4, "e1_4")] == kInfinite);
    CHECK_FALSE(is_bypassing(tri, k4));

    auto tree = make_subgraph(k4, {E(k4, "e1_2"), E(k4, "e1_3"), E(k4, "e1_4")});
    CHECK(is_bypassing(tree, k4));
    CHECK_FALSE(is_bypassing(make_subgraph(k4, {}), k4));
}

TEST_CASE("contraction distance matches bounded walk search on random posets")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial)
    {
        auto p = oracle::random_poset(rng);
        auto g = oracle::random_subgraph(p, rng);
        auto got = contraction_distance(g, p, true);
        auto brute = oracle::walk_distances(g, p, 5);
        for (std::size_t e = 0; e < p.edge_count(); ++e)
        {
            CAPTURE(trial);
            CAPTURE(p.edge_id(e));
            if (brute[e] != kInfinite)
                CHECK(got[e] == brute[e]);
            else
                CHECK(got[e] > 5);
        }
    }
}

TEST_CASE("purity is required unless overridden")
{
    SimplicialPoset2 p({"a", "b", "c", "d"},
                       {{"x", {"a", "b"}}, {"y", {"b", "c"}}, {"z", {"a", "c"}}, {"w", {"c", "d"}}},
                       {{"T", {"x", "y", "z"}}});
    auto g = make_subgraph(p, {0});
    CHECK_THROWS_AS(contraction_distance(g, p), ValidationError);
    CHECK_NOTHROW(contraction_distance(g, p, true));
}

TEST_CASE("graph metrics")
{
    auto k4 = complete_skeleton(4);
    std::vector<std::size_t> all{0, 1, 2, 3, 4, 5};
    CHECK(graph_metric(make_subgraph(k4, all), k4) == ints({1, 1, 1, 1, 1, 1}));
    auto k5 = complete_skeleton(5);
    auto d = graph_metric(k32(k5), k5);
    CHECK(is_metric(d, k5));
    CHECK_THROWS_AS(graph_metric(make_subgraph(k4, {0, 1, 3}), k4), ValidationError);
}

TEST_CASE("metric validity is the classical triangle inequality on complete skeletons")
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> val(0, 4);
    for (std::size_t n = 3; n <= 5; ++n)
    {
        auto kn = complete_skeleton(n);
        for (int trial = 0; trial < 300; ++trial)
        {
            PosetMetric d;
            for (std::size_t e = 0; e < kn.edge_count(); ++e)
                d.values.emplace_back(val(rng));
            CHECK(is_metric(d, kn) == classical_metric(d, kn, n));
        }
    }
    auto k3 = complete_skeleton(3);
    auto bad = metric_violations(ints({1, 1, 3}), k3);
    CHECK(bad.size() == 1);
}

TEST_CASE("tight corners of a sum are tight for each summand")
{
    std::mt19937 rng(29);
    auto k5 = complete_skeleton(5);
    const auto rows = corner_rows(k5);
    std::uniform_int_distribution<int> w(0, 2);
    auto random_metric = [&] {
        RatVector v(k5.edge_count(), 0);
        for (std::uint64_t s = 1; s < 16; ++s)
        {
            std::vector<std::size_t> side;
            for (std::size_t i = 0; i < 4; ++i)
                if ((s >> i) & 1)
                    side.push_back(i);
            auto c = cut_metric(side, k5);
            int k = w(rng) * w(rng) / 2;
            for (std::size_t e = 0; e < v.size(); ++e)
                v[e] += k * c.values[e];
        }
        return v;
    };
    for (int trial = 0; trial < 100; ++trial)
    {
        auto a = random_metric(), b = random_metric();
        RatVector s(a.size());
        for (std::size_t e = 0; e < a.size(); ++e)
            s[e] = a[e] + b[e];
        for (const auto& r : rows)
            if (dot(r, s) == 0)
            {
                CHECK(dot(r, a) == 0);
                CHECK(dot(r, b) == 0);
            }
    }
}

TEST_CASE("extremality examples")
{
    auto k3 = complete_skeleton(3);
    auto cut = cut_metric({V(k3, "v1")}, k3);
    CHECK(cut.values[E(k3, "e1_2")] == 1);
    CHECK(cut.values[E(k3, "e1_3")] == 1);
    CHECK(cut.values[E(k3, "e2_3")] == 0);
    CHECK(is_extreme_metric(cut, k3).extreme);
    CHECK(cut_metric({}, k3) == ints({0, 0, 0}));
    CHECK(cut_metric({0}, k3) == cut_metric({1, 2}, k3));
    CHECK_THROWS_AS(is_extreme_metric(ints({0, 0, 0}), k3), ValidationError);

    auto k4 = complete_skeleton(4);
    auto ones = is_extreme_metric(ints({1, 1, 1, 1, 1, 1}), k4);
    CHECK_FALSE(ones.extreme);
    CHECK(ones.kernel_dim > 1);

    auto k5 = complete_skeleton(5);
    auto rep = is_extreme_metric(graph_metric(k32(k5), k5), k5);
    CHECK(rep.extreme);
    CHECK(rep.kernel_dim == 1);
    for (const auto& t : rep.tight_rows)
        CHECK(dot(t.row, graph_metric(k32(k5), k5).values) == 0);
}

TEST_CASE("extreme rays of small metric cones are the extreme metrics")
{
    for (std::size_t n = 3; n <= 5; ++n)
    {
        CAPTURE(n);
        auto kn = complete_skeleton(n);
        auto rays = extreme_rays(RationalCone(corner_rows(kn), kn.edge_count()));
        CHECK(rays.lineality.empty());
        std::set<IntVector> ray_set(rays.rays.begin(), rays.rays.end());
        for (const auto& r : rays.rays)
        {
            PosetMetric d;
            for (const auto& x : r)
                d.values.emplace_back(x);
            CHECK(is_extreme_metric(d, kn).extreme);
        }
        for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s)
        {
            std::vector<std::size_t> side;
            for (std::size_t i = 0; i < n; ++i)
                if ((s >> i) & 1)
                    side.push_back(i);
            IntVector c;
            for (const auto& x : cut_metric(side, kn).values)
                c.push_back(numerator(x));
            CHECK(ray_set.count(c) == 1);
        }
        CHECK(rays.rays.size() == (n == 3 ? 3u : n == 4 ? 7u : 25u));
    }
}

TEST_CASE("walk membership and isometric cycles")
{
    auto k5 = complete_skeleton(5);
    auto g = k32(k5);
    auto v = [&](int i) { return V(k5, "v" + std::to_string(i)); };
    auto e = [&](int i, int j) { return E(k5, "e" + std::to_string(i) + "_" + std::to_string(j)); };
    CHECK(is_in_B(make_walk(k5, v(1), {e(1, 4)}), e(1, 4), g, k5));
    CHECK(is_in_B(make_walk(k5, v(1), {e(1, 4), e(2, 4)}), e(1, 2), g, k5));
    CHECK_FALSE(is_in_B(make_walk(k5, v(1), {e(1, 5), e(2, 5), e(2, 4)}), e(1, 4), g, k5));

    auto c = make_walk(k5, v(1), {e(1, 4), e(2, 4), e(2, 5), e(1, 5)});
    CHECK(is_isometric_even_cycle(c, g, k5));

    auto k4 = complete_skeleton(4);
    auto full = make_subgraph(k4, {0, 1, 2, 3, 4, 5});
    auto sq = make_walk(k4, V(k4, "v1"), {E(k4, "e1_2"), E(k4, "e2_3"), E(k4, "e3_4"), E(k4, "e1_4")});
    CHECK_FALSE(is_isometric_even_cycle(sq, full, k4));
}

TEST_CASE("ic-coloring examples")
{
    auto k5 = complete_skeleton(5);
    auto col = ic_coloring(k32(k5), k5);
    CHECK(col.color_count() == 1);
    CHECK(col.conclusive());
    CHECK(col.max_cycle_len == 4);
    for (const auto& cyc : col.cycles)
        CHECK(cyc.size() == 4);

    auto k4 = complete_skeleton(4);
    auto star = make_subgraph(k4, {E(k4, "e1_2"), E(k4, "e1_3"), E(k4, "e1_4")});
    CHECK(ic_coloring(star, k4).color_count() > 1);

    auto tri = make_subgraph(k4, {E(k4, "e1_2"), E(k4, "e2_3"), E(k4, "e1_3")});
    CHECK_THROWS_AS(ic_coloring(tri, k4), ValidationError);
}

TEST_CASE("extremality kernel respects every shortest bypassing walk")
{
    auto check = [](const Subgraph& g, const SimplicialPoset2& p) {
        auto d = graph_metric(g, p);
        auto rep = is_extreme_metric(d, p);
        IntMatrix rows;
        for (const auto& t : rep.tight_rows)
            rows.push_back(t.row);
        auto kernel = linalg::kernel_basis(rows, p.edge_count());
        CHECK(kernel.size() == rep.kernel_dim);
        for (std::size_t e = 0; e < p.edge_count(); ++e)
        {
            auto len = static_cast<std::size_t>(numerator(d.values[e]));
            if (len > 3)
                continue;
            for (auto v : g.vertices)
                walks_of(g, p, v, len, [&](const Walk& w) {
                    const auto& ends = p.edge_ends(e);
                    if (!((ends[0] == w.front() && ends[1] == w.back()) || (ends[1] == w.front() && ends[0] == w.back())))
                        return;
                    if (!is_in_B(w, e, g, p))
                        return;
                    for (const auto& k : kernel)
                    {
                        Integer sum = 0;
                        for (auto we : w.edges)
                            sum += k[we];
                        CHECK(sum == k[e]);
                    }
                });
        }
    };
    auto k5 = complete_skeleton(5);
    check(k32(k5), k5);
    auto k4 = complete_skeleton(4);
    check(make_subgraph(k4, {E(k4, "e1_2"), E(k4, "e1_3"), E(k4, "e1_4")}), k4);
    auto h = hamiltonian_cone_subgraph(cycle_pairs(4), iota_cycle(4), 5);
    check(h.subgraph, h.poset);
}

TEST_CASE("hamiltonian cone subgraphs")
{
    auto h5 = hamiltonian_cone_subgraph(cycle_pairs(4), iota_cycle(4), 5);
    CHECK(h5.subgraph.edges.size() == 8);
    CHECK(h5.warnings.empty());
    CHECK(h5.poset.edge_count() == 20);
    auto h6 = hamiltonian_cone_subgraph(cycle_pairs(5), iota_cycle(5), 6);
    CHECK(h6.subgraph.edges.size() == 10);
    auto h7 = hamiltonian_cone_subgraph(cycle_pairs(6), iota_cycle(6), 7);
    CHECK(h7.warnings.size() == 1);

    // distances from the bounded walk search agree, including edges at distance 3
    auto brute = oracle::walk_distances(h5.subgraph, h5.poset, 4);
    auto got = contraction_distance(h5.subgraph, h5.poset);
    CHECK(got == brute);
    CHECK(*std::max_element(got.begin(), got.end()) == 3);

    CHECK_THROWS_AS(hamiltonian_cone_subgraph(cycle_pairs(3), iota_cycle(3), 4), ValidationError);
    CHECK_THROWS_AS(hamiltonian_cone_subgraph({{0, 1}, {1, 2}, {2, 3}}, iota_cycle(4), 5), ValidationError);
}
