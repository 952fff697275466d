#include "ternary/poset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ternary/errors.hpp"

namespace ternary {

namespace {

std::map<std::string, std::size_t> index_ids(const std::vector<std::string>& ids, const char* kind)
{
    std::map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (!m.emplace(ids[i], i).second)
            throw ValidationError(std::string("duplicate ") + kind + " id '" + ids[i] + "'");
    return m;
}

template <typename Ids>
std::optional<std::size_t> find_id(const Ids& ids, const std::string& id)
{
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace

SimplicialPoset2::SimplicialPoset2(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
                                   const std::vector<TriangleSpec>& triangles)
    : vertices_(std::move(vertices))
{
    const auto vidx = index_ids(vertices_, "vertex");
    for (const auto& e : edges)
        edge_ids_.push_back(e.id);
    for (const auto& t : triangles)
        triangle_ids_.push_back(t.id);
    const auto eidx = index_ids(edge_ids_, "edge");
    index_ids(triangle_ids_, "triangle");
    {
        std::set<std::string> all(vertices_.begin(), vertices_.end());
        for (const auto& id : edge_ids_)
            if (!all.insert(id).second)
                throw ValidationError("id '" + id + "' names more than one simplex");
        for (const auto& id : triangle_ids_)
            if (!all.insert(id).second)
                throw ValidationError("id '" + id + "' names more than one simplex");
    }

    for (const auto& e : edges)
    {
        std::array<std::size_t, 2> ends{};
        for (std::size_t k = 0; k < 2; ++k)
        {
            auto it = vidx.find(e.ends[k]);
            if (it == vidx.end())
                throw ValidationError("edge '" + e.id + "' references unknown vertex '" + e.ends[k] + "'");
            ends[k] = it->second;
        }
        if (ends[0] > ends[1])
            std::swap(ends[0], ends[1]);
        ends_.push_back(ends);
    }
    for (const auto& t : triangles)
    {
        std::array<std::size_t, 3> f{};
        for (std::size_t k = 0; k < 3; ++k)
        {
            auto it = eidx.find(t.edges[k]);
            if (it == eidx.end())
                throw ValidationError("triangle '" + t.id + "' references unknown edge '" + t.edges[k] + "'");
            f[k] = it->second;
        }
        std::sort(f.begin(), f.end());
        facets_.push_back(f);
    }

    cofaces_.assign(edge_ids_.size(), {});
    for (std::size_t t = 0; t < facets_.size(); ++t)
        for (auto e : std::set<std::size_t>(facets_[t].begin(), facets_[t].end()))
            cofaces_[e].push_back(t);
    incident_.assign(vertices_.size(), {});
    for (std::size_t e = 0; e < ends_.size(); ++e)
    {
        incident_[ends_[e][0]].push_back(e);
        if (ends_[e][1] != ends_[e][0])
            incident_[ends_[e][1]].push_back(e);
    }
}

std::optional<std::size_t> SimplicialPoset2::vertex_index(const std::string& id) const
{
    return find_id(vertices_, id);
}

std::optional<std::size_t> SimplicialPoset2::edge_index(const std::string& id) const
{
    return find_id(edge_ids_, id);
}

std::optional<std::size_t> SimplicialPoset2::triangle_index(const std::string& id) const
{
    return find_id(triangle_ids_, id);
}

std::size_t SimplicialPoset2::other_end(std::size_t e, std::size_t v) const
{
    return ends_[e][0] == v ? ends_[e][1] : ends_[e][0];
}

bool SimplicialPoset2::is_pure() const
{
    if (facets_.empty())
    {
        if (ends_.empty())
            return true;
        for (const auto& inc : incident_)
            if (inc.empty())
                return false;
        return true;
    }
    for (const auto& c : cofaces_)
        if (c.empty())
            return false;
    for (const auto& inc : incident_)
        if (inc.empty())
            return false;
    return true;
}

std::vector<EdgeSpec> SimplicialPoset2::edge_specs() const
{
    std::vector<EdgeSpec> out;
    for (std::size_t e = 0; e < ends_.size(); ++e)
        out.push_back({edge_ids_[e], {vertices_[ends_[e][0]], vertices_[ends_[e][1]]}});
    return out;
}

std::vector<TriangleSpec> SimplicialPoset2::triangle_specs() const
{
    std::vector<TriangleSpec> out;
    for (std::size_t t = 0; t < facets_.size(); ++t)
        out.push_back({triangle_ids_[t], {edge_ids_[facets_[t][0]], edge_ids_[facets_[t][1]], edge_ids_[facets_[t][2]]}});
    return out;
}

SimplicialPoset2 make_graph(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= vertices; ++i)
        v.push_back("v" + std::to_string(i));
    std::vector<EdgeSpec> e;
    for (std::size_t k = 0; k < edges.size(); ++k)
    {
        if (edges[k].first >= vertices || edges[k].second >= vertices)
            throw ValidationError("graph edge endpoint out of range");
        e.push_back({"e" + std::to_string(k + 1), {v[edges[k].first], v[edges[k].second]}});
    }
    return SimplicialPoset2(std::move(v), e, {});
}

std::vector<std::string> validate(const SimplicialPoset2& p)
{
    std::vector<std::string> out;
    for (std::size_t e = 0; e < p.edge_count(); ++e)
        if (p.edge_ends(e)[0] == p.edge_ends(e)[1])
            out.push_back("edge '" + p.edge_id(e) + "' is a loop");
    for (std::size_t t = 0; t < p.triangle_count(); ++t)
    {
        const auto& f = p.triangle_edges(t);
        if (f[0] == f[1] || f[1] == f[2])
        {
            out.push_back("triangle '" + p.triangle_id(t) + "' repeats a facet edge");
            continue;
        }
        std::set<std::size_t> verts;
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        for (auto e : f)
        {
            const auto& ends = p.edge_ends(e);
            verts.insert(ends[0]);
            verts.insert(ends[1]);
            pairs.insert({ends[0], ends[1]});
        }
        if (verts.size() != 3 || pairs.size() != 3)
            out.push_back("triangle '" + p.triangle_id(t) +
                          "': facet edges do not bound three distinct vertices (interval is not boolean)");
    }
    return out;
}

TernaryRelation ternary_relation(const SimplicialPoset2& p)
{
    if (auto v = validate(p); !v.empty())
        throw ValidationError("invalid poset: " + v.front());
    std::vector<Triple> triples;
    for (std::size_t t = 0; t < p.triangle_count(); ++t)
    {
        const auto& f = p.triangle_edges(t);
        triples.push_back({f[0], f[1], f[2]});
    }
    return TernaryRelation(p.edge_ids(), triples);
}

TernaryRelation graph_relation(const SimplicialPoset2& g)
{
    if (!g.is_graph())
        throw ValidationError("graph relation requires a poset without triangles");
    if (auto v = validate(g); !v.empty())
        throw ValidationError("invalid graph: " + v.front());
    std::vector<std::string> elements = g.vertex_ids();
    const std::size_t nv = elements.size();
    elements.insert(elements.end(), g.edge_ids().begin(), g.edge_ids().end());
    std::vector<Triple> triples;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        triples.push_back({g.edge_ends(e)[0], nv + e, g.edge_ends(e)[1]});
    return TernaryRelation(std::move(elements), triples);
}

SimplicialPoset2 cone_skeleton2(const SimplicialPoset2& p)
{
    if (auto v = validate(p); !v.empty())
        throw ValidationError("invalid poset: " + v.front());
    std::set<std::string> taken(p.vertex_ids().begin(), p.vertex_ids().end());
    taken.insert(p.edge_ids().begin(), p.edge_ids().end());
    taken.insert(p.triangle_ids().begin(), p.triangle_ids().end());
    auto fresh = [&](std::string id) {
        while (taken.count(id))
            id += "'";
        taken.insert(id);
        return id;
    };

    std::vector<std::string> vertices = p.vertex_ids();
    const std::string apex = fresh("v0");
    vertices.push_back(apex);

    std::vector<EdgeSpec> edges = p.edge_specs();
    std::vector<std::string> spoke(p.vertex_count());
    for (std::size_t v = 0; v < p.vertex_count(); ++v)
    {
        spoke[v] = fresh("s:" + p.vertex_id(v));
        edges.push_back({spoke[v], {apex, p.vertex_id(v)}});
    }

    std::vector<TriangleSpec> triangles = p.triangle_specs();
    for (std::size_t e = 0; e < p.edge_count(); ++e)
    {
        const auto& ends = p.edge_ends(e);
        triangles.push_back({fresh("c:" + p.edge_id(e)), {spoke[ends[0]], p.edge_id(e), spoke[ends[1]]}});
    }
    return SimplicialPoset2(std::move(vertices), edges, triangles);
}

namespace {

std::string vname(std::size_t i) { return "v" + std::to_string(i); }
std::string ename(std::size_t i, std::size_t j) { return "e" + std::to_string(i) + "_" + std::to_string(j); }
std::string pname(std::size_t i, std::size_t j) { return "p" + std::to_string(i) + "_" + std::to_string(j); }

// Edge name for an unordered pair.
std::string epair(std::size_t i, std::size_t j) { return i < j ? ename(i, j) : ename(j, i); }
std::string ppair(std::size_t i, std::size_t j) { return i < j ? pname(i, j) : pname(j, i); }

}  // namespace

SimplicialPoset2 complete_skeleton(std::size_t n)
{
    if (n == 0)
        throw ValidationError("complete_skeleton requires n >= 1");
    std::vector<std::string> v;
    std::vector<EdgeSpec> e;
    std::vector<TriangleSpec> t;
    for (std::size_t i = 1; i <= n; ++i)
        v.push_back(vname(i));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            e.push_back({ename(i, j), {vname(i), vname(j)}});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = j + 1; k <= n; ++k)
                t.push_back({"t" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k),
                             {ename(i, j), ename(j, k), ename(i, k)}});
    return SimplicialPoset2(std::move(v), e, t);
}

SimplicialPoset2 doubled_skeleton(std::size_t n)
{
    if (n < 2)
        throw ValidationError("doubled_skeleton requires n >= 2");
    std::vector<std::string> v;
    std::vector<EdgeSpec> e;
    std::vector<TriangleSpec> t;
    for (std::size_t i = 1; i <= n; ++i)
        v.push_back(vname(i));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            e.push_back({ename(i, j), {vname(i), vname(j)}});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            e.push_back({pname(i, j), {vname(i), vname(j)}});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = j + 1; k <= n; ++k)
                t.push_back({"t" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k),
                             {ename(i, j), ename(j, k), ename(i, k)}});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = j + 1; k <= n; ++k)
            {
                if (j == i || k == i)
                    continue;
                t.push_back({"t" + std::to_string(i) + "^" + std::to_string(j) + "_" + std::to_string(k),
                             {ppair(i, j), ppair(i, k), epair(j, k)}});
            }
    return SimplicialPoset2(std::move(v), e, t);
}

std::vector<std::string> validate(const VectorConfiguration& cfg)
{
    std::vector<std::string> out;
    if (cfg.names.size() != cfg.vectors.size())
        out.push_back("names and vectors differ in length");
    {
        std::set<std::string> seen;
        for (const auto& n : cfg.names)
            if (!seen.insert(n).second)
                out.push_back("duplicate vector name '" + n + "'");
    }
    auto name = [&](std::size_t i) { return i < cfg.names.size() ? cfg.names[i] : "#" + std::to_string(i); };
    for (std::size_t i = 0; i < cfg.vectors.size(); ++i)
    {
        if (cfg.vectors[i].size() != cfg.dim)
        {
            out.push_back("vector '" + name(i) + "' has wrong dimension");
            continue;
        }
        if (std::all_of(cfg.vectors[i].begin(), cfg.vectors[i].end(), [](const Rational& x) { return x == 0; }))
            out.push_back("vector '" + name(i) + "' is zero");
    }
    for (std::size_t i = 0; i < cfg.vectors.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.vectors.size(); ++j)
        {
            if (cfg.vectors[i].size() != cfg.dim || cfg.vectors[j].size() != cfg.dim)
                continue;
            bool same = true, opposite = true;
            for (std::size_t k = 0; k < cfg.dim; ++k)
            {
                same = same && cfg.vectors[i][k] == cfg.vectors[j][k];
                opposite = opposite && cfg.vectors[i][k] == -cfg.vectors[j][k];
            }
            if (same || opposite)
                out.push_back("vectors '" + name(i) + "' and '" + name(j) + "' represent the same ± pair");
        }
    return out;
}

TernaryRelation from_vector_configuration(const VectorConfiguration& cfg)
{
    if (auto v = validate(cfg); !v.empty())
        throw ValidationError("invalid vector configuration: " + v.front());
    const std::size_t n = cfg.vectors.size();
    const auto& a = cfg.vectors;
    // Up to global negation the sign patterns are +++, ++-, +-+, -++.
    static constexpr int signs[4][3] = {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}};
    std::vector<Triple> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (const auto& s : signs)
                {
                    bool zero = true;
                    for (std::size_t c = 0; c < cfg.dim && zero; ++c)
                        zero = s[0] * a[i][c] + s[1] * a[j][c] + s[2] * a[k][c] == 0;
                    if (zero)
                    {
                        triples.push_back({i, j, k});
                        break;
                    }
                }
    return TernaryRelation(cfg.names, triples);
}

VectorConfiguration root_system(RootType type, std::size_t n)
{
    VectorConfiguration cfg;
    auto unit = [](std::size_t dim, std::size_t i) {
        RatVector v(dim, Rational(0));
        v[i] = 1;
        return v;
    };
    if (type == RootType::A)
    {
        if (n < 1)
            throw ValidationError("root system A_n requires n >= 1");
        cfg.dim = n + 1;
    }
    else
    {
        if (n < 2)
            throw ValidationError("root systems B_n and D_n require n >= 2");
        cfg.dim = n;
    }
    const std::size_t d = cfg.dim;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
        {
            RatVector v = unit(d, i);
            v[j] = -1;
            cfg.names.push_back("m" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            cfg.vectors.push_back(std::move(v));
        }
    if (type == RootType::A)
        return cfg;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
        {
            RatVector v = unit(d, i);
            v[j] = 1;
            cfg.names.push_back("p" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            cfg.vectors.push_back(std::move(v));
        }
    if (type == RootType::B)
        for (std::size_t i = 0; i < d; ++i)
        {
            cfg.names.push_back("u" + std::to_string(i + 1));
            cfg.vectors.push_back(unit(d, i));
        }
    return cfg;
}

RootType parse_root_type(const std::string& s)
{
    if (s == "A" || s == "a")
        return RootType::A;
    if (s == "B" || s == "b")
        return RootType::B;
    if (s == "D" || s == "d")
        return RootType::D;
    throw ValidationError("unknown root system type '" + s + "' (expected A, B or D)");
}

}  // namespace ternary
