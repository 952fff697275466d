#include "ternary/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "ternary/errors.hpp"

namespace ternary::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ValidationError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(where, std::string("missing field '") + key + "'");
    return *it;
}

const Json& array_field(const Json& j, const char* key, const std::string& where)
{
    const auto& a = field(j, key, where);
    if (!a.is_array())
        fail(where + "." + key, "expected an array");
    return a;
}

std::string string_at(const Json& j, const std::string& where)
{
    if (!j.is_string())
        fail(where, "expected a string");
    return j.get<std::string>();
}

Rational rational_at(const Json& j, const std::string& where)
{
    try
    {
        if (j.is_string())
            return parse_rational(j.get<std::string>());
        if (j.is_number_integer())
            return Rational(j.get<long long>());
    }
    catch (const ValidationError& e)
    {
        fail(where, e.what());
    }
    fail(where, "expected a rational as a string such as \"3/2\"");
}

std::string index_path(const std::string& base, std::size_t i)
{
    return base + "[" + std::to_string(i) + "]";
}

}  // namespace

Json parse(const std::string& text, const std::string& source)
{
    try
    {
        return Json::parse(text);
    }
    catch (const Json::parse_error& e)
    {
        throw ValidationError(source + ": malformed JSON at byte " + std::to_string(e.byte));
    }
}

Json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

TernaryRelation canonical(const TernaryRelation& rel)
{
    auto names = rel.elements();
    std::sort(names.begin(), names.end());
    std::vector<std::array<std::string, 3>> triples;
    for (const auto& t : rel.triples())
        triples.push_back({rel.elements()[t[0]], rel.elements()[t[1]], rel.elements()[t[2]]});
    return TernaryRelation::from_names(std::move(names), triples);
}

Json to_json(const TernaryRelation& rel)
{
    auto names = rel.elements();
    std::sort(names.begin(), names.end());
    std::vector<std::array<std::string, 3>> triples;
    for (const auto& t : rel.triples())
    {
        std::array<std::string, 3> named{rel.elements()[t[0]], rel.elements()[t[1]], rel.elements()[t[2]]};
        std::sort(named.begin(), named.end());
        triples.push_back(named);
    }
    std::sort(triples.begin(), triples.end());
    Json j;
    j["elements"] = names;
    j["triples"] = Json::array();
    for (const auto& t : triples)
        j["triples"].push_back(t);
    return j;
}

TernaryRelation relation_from_json(const Json& j)
{
    std::vector<std::string> names;
    const auto& el = array_field(j, "elements", "relation");
    for (std::size_t i = 0; i < el.size(); ++i)
        names.push_back(string_at(el[i], index_path("relation.elements", i)));
    std::vector<Triple> triples;
    const auto& tr = array_field(j, "triples", "relation");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!index.emplace(names[i], i).second)
            fail(index_path("relation.elements", i), "duplicate element '" + names[i] + "'");
    for (std::size_t i = 0; i < tr.size(); ++i)
    {
        auto where = index_path("relation.triples", i);
        if (!tr[i].is_array() || tr[i].size() != 3)
            fail(where, "expected an array of three element names");
        Triple t{};
        for (std::size_t k = 0; k < 3; ++k)
        {
            auto name = string_at(tr[i][k], index_path(where, k));
            auto it = index.find(name);
            if (it == index.end())
                fail(index_path(where, k), "unknown element '" + name + "'");
            t[k] = it->second;
        }
        try
        {
            triples.push_back(make_triple(t[0], t[1], t[2]));
        }
        catch (const ValidationError& e)
        {
            fail(where, e.what());
        }
    }
    return canonical(TernaryRelation(std::move(names), triples));
}

Json to_json(const SimplicialPoset2& p)
{
    Json j;
    j["vertices"] = p.vertex_ids();
    j["edges"] = Json::array();
    for (const auto& e : p.edge_specs())
        j["edges"].push_back({{"id", e.id}, {"ends", e.ends}});
    j["triangles"] = Json::array();
    for (const auto& t : p.triangle_specs())
        j["triangles"].push_back({{"id", t.id}, {"edges", t.edges}});
    return j;
}

SimplicialPoset2 poset_from_json(const Json& j)
{
    std::vector<std::string> vertices;
    const auto& vs = array_field(j, "vertices", "poset");
    for (std::size_t i = 0; i < vs.size(); ++i)
        vertices.push_back(string_at(vs[i], index_path("poset.vertices", i)));
    std::vector<EdgeSpec> edges;
    const auto& es = array_field(j, "edges", "poset");
    for (std::size_t i = 0; i < es.size(); ++i)
    {
        auto where = index_path("poset.edges", i);
        const auto& ends = array_field(es[i], "ends", where);
        if (ends.size() != 2)
            fail(where + ".ends", "expected two vertex ids");
        edges.push_back({string_at(field(es[i], "id", where), where + ".id"),
                         {string_at(ends[0], where + ".ends[0]"), string_at(ends[1], where + ".ends[1]")}});
    }
    std::vector<TriangleSpec> triangles;
    if (j.contains("triangles"))
    {
        const auto& ts = array_field(j, "triangles", "poset");
        for (std::size_t i = 0; i < ts.size(); ++i)
        {
            auto where = index_path("poset.triangles", i);
            const auto& fe = array_field(ts[i], "edges", where);
            if (fe.size() != 3)
                fail(where + ".edges", "expected three edge ids");
            triangles.push_back({string_at(field(ts[i], "id", where), where + ".id"),
                                 {string_at(fe[0], where + ".edges[0]"), string_at(fe[1], where + ".edges[1]"),
                                  string_at(fe[2], where + ".edges[2]")}});
        }
    }
    SimplicialPoset2 p;
    try
    {
        p = SimplicialPoset2(std::move(vertices), edges, triangles);
    }
    catch (const ValidationError& e)
    {
        fail("poset", e.what());
    }
    auto problems = validate(p);
    if (!problems.empty())
        fail("poset", problems.front());
    return p;
}

Json to_json(const VectorConfiguration& cfg)
{
    Json j;
    j["dim"] = cfg.dim;
    std::vector<std::size_t> order(cfg.names.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cfg.names[a] < cfg.names[b]; });
    j["vectors"] = Json::object();
    for (auto i : order)
    {
        Json v = Json::array();
        for (const auto& x : cfg.vectors[i])
            v.push_back(to_string(x));
        j["vectors"][cfg.names[i]] = v;
    }
    return j;
}

VectorConfiguration vectors_from_json(const Json& j)
{
    VectorConfiguration cfg;
    const auto& d = field(j, "dim", "vectors");
    if (!d.is_number_unsigned())
        fail("vectors.dim", "expected a nonnegative integer");
    cfg.dim = d.get<std::size_t>();
    const auto& vs = field(j, "vectors", "vectors");
    if (!vs.is_object())
        fail("vectors.vectors", "expected an object of named coordinate arrays");
    for (auto it = vs.begin(); it != vs.end(); ++it)
    {
        auto where = "vectors.vectors." + it.key();
        if (!it->is_array())
            fail(where, "expected an array");
        RatVector v;
        for (std::size_t i = 0; i < it->size(); ++i)
            v.push_back(rational_at((*it)[i], index_path(where, i)));
        cfg.names.push_back(it.key());
        cfg.vectors.push_back(std::move(v));
    }
    auto problems = validate(cfg);
    if (!problems.empty())
        fail("vectors", problems.front());
    return cfg;
}

Json to_json(const Integer& x)
{
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return Json(x.convert_to<long long>());
    return Json(x.str());
}

Json to_json(const IntVector& v)
{
    Json j = Json::array();
    for (const auto& x : v)
        j.push_back(to_json(x));
    return j;
}

Json to_json(const IntMatrix& m)
{
    Json j = Json::array();
    for (const auto& row : m)
        j.push_back(to_json(row));
    return j;
}

Integer integer_from_json(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Integer(j.get<long long>());
    if (j.is_string())
    {
        auto q = rational_at(j, where);
        if (denominator(q) != 1)
            fail(where, "expected an integer");
        return numerator(q);
    }
    fail(where, "expected an integer");
}

IntMatrix int_matrix_from_json(const Json& j, const std::string& where)
{
    if (!j.is_array())
        fail(where, "expected an array of rows");
    IntMatrix m;
    for (std::size_t i = 0; i < j.size(); ++i)
    {
        auto w = index_path(where, i);
        if (!j[i].is_array())
            fail(w, "expected an array");
        IntVector row;
        for (std::size_t k = 0; k < j[i].size(); ++k)
            row.push_back(integer_from_json(j[i][k], index_path(w, k)));
        m.push_back(std::move(row));
    }
    return m;
}

Json to_json(const ConeRays& rays)
{
    Json j;
    j["rays"] = to_json(rays.rays);
    j["lineality"] = to_json(rays.lineality);
    return j;
}

ConeRays rays_from_json(const Json& j)
{
    ConeRays r;
    r.rays = int_matrix_from_json(field(j, "rays", "cone"), "cone.rays");
    r.lineality = int_matrix_from_json(field(j, "lineality", "cone"), "cone.lineality");
    return r;
}

Json to_json(const RatVector& v)
{
    Json j = Json::array();
    for (const auto& x : v)
        j.push_back(to_string(x));
    return j;
}

Json to_json(const Marking& m, const SimplicialPoset2& p)
{
    Json j;
    j["corners"] = Json::array();
    for (const auto& c : m.corners)
        j["corners"].push_back({{"triangle", p.triangle_id(c.triangle)},
                                {"edges", {p.edge_id(c.edges[0]), p.edge_id(c.edges[1])}}});
    return j;
}

Marking marking_from_json(const Json& j, const SimplicialPoset2& p)
{
    const auto& cs = array_field(j, "corners", "marking");
    std::vector<Corner> corners;
    for (std::size_t i = 0; i < cs.size(); ++i)
    {
        auto where = index_path("marking.corners", i);
        auto tname = string_at(field(cs[i], "triangle", where), where + ".triangle");
        auto t = p.triangle_index(tname);
        if (!t)
            fail(where + ".triangle", "unknown triangle '" + tname + "'");
        const auto& es = array_field(cs[i], "edges", where);
        if (es.size() != 2)
            fail(where + ".edges", "expected two edge ids");
        Corner c{*t, {}};
        for (std::size_t k = 0; k < 2; ++k)
        {
            auto ename = string_at(es[k], index_path(where + ".edges", k));
            auto e = p.edge_index(ename);
            if (!e)
                fail(index_path(where + ".edges", k), "unknown edge '" + ename + "'");
            c.edges[k] = *e;
        }
        corners.push_back(c);
    }
    try
    {
        return make_marking(p, std::move(corners));
    }
    catch (const ValidationError& e)
    {
        fail("marking", e.what());
    }
}

Json to_json(const PosetMetric& d, const SimplicialPoset2& p)
{
    std::vector<std::size_t> order(p.edge_count());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p.edge_id(a) < p.edge_id(b); });
    Json j;
    j["values"] = Json::object();
    for (auto e : order)
        j["values"][p.edge_id(e)] = to_string(d.values[e]);
    return j;
}

PosetMetric metric_from_json(const Json& j, const SimplicialPoset2& p)
{
    const auto& vs = field(j, "values", "metric");
    if (!vs.is_object())
        fail("metric.values", "expected an object mapping edge ids to rationals");
    PosetMetric d;
    d.values.assign(p.edge_count(), Rational(0));
    std::vector<char> given(p.edge_count(), 0);
    for (auto it = vs.begin(); it != vs.end(); ++it)
    {
        auto e = p.edge_index(it.key());
        if (!e)
            fail("metric.values." + it.key(), "unknown edge");
        d.values[*e] = rational_at(*it, "metric.values." + it.key());
        given[*e] = 1;
    }
    for (std::size_t e = 0; e < p.edge_count(); ++e)
        if (!given[e])
            fail("metric.values", "missing edge '" + p.edge_id(e) + "'");
    return d;
}

Json to_json(const Subgraph& g, const SimplicialPoset2& p)
{
    Json j;
    j["vertices"] = Json::array();
    for (auto v : g.vertices)
        j["vertices"].push_back(p.vertex_id(v));
    j["edges"] = Json::array();
    for (auto e : g.edges)
        j["edges"].push_back(p.edge_id(e));
    return j;
}

Subgraph subgraph_from_json(const Json& j, const SimplicialPoset2& p)
{
    std::vector<std::size_t> edges, vertices;
    const auto& es = array_field(j, "edges", "subgraph");
    for (std::size_t i = 0; i < es.size(); ++i)
    {
        auto name = string_at(es[i], index_path("subgraph.edges", i));
        auto e = p.edge_index(name);
        if (!e)
            fail(index_path("subgraph.edges", i), "unknown edge '" + name + "'");
        edges.push_back(*e);
    }
    if (j.contains("vertices"))
    {
        const auto& vs = array_field(j, "vertices", "subgraph");
        for (std::size_t i = 0; i < vs.size(); ++i)
        {
            auto name = string_at(vs[i], index_path("subgraph.vertices", i));
            auto v = p.vertex_index(name);
            if (!v)
                fail(index_path("subgraph.vertices", i), "unknown vertex '" + name + "'");
            vertices.push_back(*v);
        }
    }
    return make_subgraph(p, std::move(edges), vertices);
}

}  // namespace ternary::io
