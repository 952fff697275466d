#include "ternary/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ternary/cache.hpp"
#include "ternary/errors.hpp"
#include "ternary/json_io.hpp"

namespace ternary::cli {

namespace {

using io::Json;

struct Globals
{
    std::string cache_dir;
    std::size_t max_rays = 0;
    std::size_t cycle_bound = 4;
    std::string format = "json";
    std::uint64_t seed = 0;
    bool allow_impure = false;
};

class Runner
{
    public:
        Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

        Globals g;

        Json read_input(const std::string& path, const std::string& what)
        {
            if (path.empty() || path == "-")
            {
                std::ostringstream ss;
                ss << in_.rdbuf();
                return io::parse(ss.str(), "stdin (" + what + ")");
            }
            return io::read_file(path);
        }

        DoubleDescriptionOptions dd() const { return DoubleDescriptionOptions{g.max_rays}; }

        ConeRays rays(const RationalCone& cone)
        {
            if (g.cache_dir.empty())
                return extreme_rays(cone, dd());
            RayCache cache(g.cache_dir);
            return cached_extreme_rays(cone, dd(), &cache);
        }

        bool table() const { return g.format == "table"; }

        void emit(const Json& j) { out_ << j.dump(2) << '\n'; }
        std::ostream& out() { return out_; }
        std::ostream& err() { return err_; }

    private:
        std::istream& in_;
        std::ostream& out_;
        std::ostream& err_;
};

std::string join_row(const IntVector& v)
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : " ") + x.str();
    return s;
}

std::vector<std::size_t> vertex_list(const SimplicialPoset2& p, const std::vector<std::string>& ids, const char* what)
{
    std::vector<std::size_t> out;
    for (const auto& id : ids)
    {
        auto v = p.vertex_index(id);
        if (!v)
            throw ValidationError(std::string(what) + ": unknown vertex '" + id + "'");
        out.push_back(*v);
    }
    return out;
}

Json tight_rows_json(const ExtremalityReport& r, const SimplicialPoset2& p)
{
    Json rows = Json::array();
    for (const auto& t : r.tight_rows)
    {
        if (t.kind == TightRow::Kind::Corner)
            rows.push_back({{"triangle", p.triangle_id(t.triangle)},
                            {"edges", {p.edge_id(t.edges[0]), p.edge_id(t.edges[1])}}});
        else
            rows.push_back({{"nonnegative", p.edge_id(t.edges[0])}});
    }
    return rows;
}

Json markings_json(const std::vector<Marking>& ms, const SimplicialPoset2& p)
{
    Json a = Json::array();
    for (const auto& m : ms)
        a.push_back(io::to_json(m, p)["corners"]);
    return a;
}

void add_relation(CLI::App& app, Runner& r)
{
    auto* rel = app.add_subcommand("relation", "Build ternary relations");
    rel->require_subcommand(1);
    auto* build = rel->add_subcommand("build", "Relation from a graph, poset, root system or vector file");
    auto graph = std::make_shared<std::string>();
    auto poset = std::make_shared<std::string>();
    auto vectors = std::make_shared<std::string>();
    auto root = std::make_shared<std::vector<std::string>>();
    auto cone = std::make_shared<bool>(false);
    auto* og = build->add_option("--graph", *graph, "Graph JSON (poset without triangles): vertex-edge-vertex relation");
    auto* op = build->add_option("--poset", *poset, "Poset JSON: one triple per triangle");
    auto* orr = build->add_option("--root-system", *root, "Root system type (A, B, D) and rank")->expected(2);
    auto* ov = build->add_option("--vectors", *vectors, "Vector configuration JSON");
    build->add_flag("--cone", *cone, "With --poset: use the 2-skeleton of the cone over the poset");
    og->excludes(op)->excludes(orr)->excludes(ov);
    op->excludes(orr)->excludes(ov);
    orr->excludes(ov);
    build->callback([&r, graph, poset, vectors, root, cone]() {
        TernaryRelation out;
        if (!graph->empty())
        {
            auto g = io::poset_from_json(r.read_input(*graph, "graph"));
            if (!g.is_graph())
                throw ValidationError("--graph input has triangles; use --poset");
            out = graph_relation(g);
        }
        else if (!poset->empty())
        {
            auto p = io::poset_from_json(r.read_input(*poset, "poset"));
            out = ternary_relation(*cone ? cone_skeleton2(p) : p);
        }
        else if (!root->empty())
        {
            std::size_t n = 0;
            try
            {
                n = std::stoul((*root)[1]);
            }
            catch (const std::exception&)
            {
                throw ValidationError("--root-system rank must be a positive integer");
            }
            out = from_vector_configuration(root_system(parse_root_type((*root)[0]), n));
        }
        else if (!vectors->empty())
            out = from_vector_configuration(io::vectors_from_json(r.read_input(*vectors, "vectors")));
        else
            throw ValidationError("relation build needs one of --graph, --poset, --root-system, --vectors");
        r.emit(io::to_json(out));
    });
}

void add_poset(CLI::App& app, Runner& r)
{
    auto* ps = app.add_subcommand("poset", "Build simplicial posets");
    ps->require_subcommand(1);
    auto* build = ps->add_subcommand("build", "Complete, doubled or cone skeleton");
    auto complete = std::make_shared<std::size_t>(0);
    auto doubled = std::make_shared<std::size_t>(0);
    auto cone = std::make_shared<std::string>();
    auto* oc = build->add_option("--complete", *complete, "2-skeleton of the simplex on n vertices");
    auto* od = build->add_option("--doubled", *doubled, "Doubled complete skeleton on n vertices");
    auto* oo = build->add_option("--cone", *cone, "2-skeleton of the cone over a poset JSON");
    oc->excludes(od)->excludes(oo);
    od->excludes(oo);
    build->callback([&r, complete, doubled, cone]() {
        if (*complete)
            r.emit(io::to_json(complete_skeleton(*complete)));
        else if (*doubled)
            r.emit(io::to_json(doubled_skeleton(*doubled)));
        else if (!cone->empty())
            r.emit(io::to_json(cone_skeleton2(io::poset_from_json(r.read_input(*cone, "poset")))));
        else
            throw ValidationError("poset build needs one of --complete, --doubled, --cone");
    });
}

LatticePolytope polytope_of(const TernaryRelation& rel)
{
    IntMatrix pts;
    for (const auto& g : generator_points(rel))
        pts.push_back(g.coords);
    return LatticePolytope(std::move(pts));
}

void add_polytope(CLI::App& app, Runner& r)
{
    auto* poly = app.add_subcommand("polytope", "Polytope of a relation read from --input or stdin");
    poly->require_subcommand(1);
    auto input = std::make_shared<std::string>("-");
    poly->add_option("--input", *input, "Relation JSON file (default stdin)");
    auto check = std::make_shared<bool>(false);

    poly->add_subcommand("vertices", "Vertex coordinates over the sorted elements")->callback([&r, input]() {
        auto rel = io::relation_from_json(r.read_input(*input, "relation"));
        auto verts = polytope_vertices(polytope_of(rel));
        if (r.table())
        {
            for (const auto& v : verts)
                r.out() << join_row(v) << '\n';
            return;
        }
        Json j;
        j["elements"] = rel.elements();
        j["vertices"] = io::to_json(verts);
        r.emit(j);
    });
    poly->add_subcommand("dim", "Affine dimension")->callback([&r, input]() {
        auto d = dimension(polytope_of(io::relation_from_json(r.read_input(*input, "relation"))));
        if (r.table())
            r.out() << d << '\n';
        else
            r.emit(Json{{"dim", d}});
    });
    auto* nv = poly->add_subcommand("nvolume", "Normalized volume in the affine lattice");
    nv->add_flag("--check", *check, "Also compute by facet pyramids and require agreement");
    nv->callback([&r, input, check]() {
        auto p = polytope_of(io::relation_from_json(r.read_input(*input, "relation")));
        auto v = normalized_volume(p);
        Json j{{"normalized_volume", v.str()}};
        if (*check)
        {
            auto w = normalized_volume_pyramids(p);
            j["pyramid_volume"] = w.str();
            if (v != w)
                throw std::logic_error("volume routes disagree: " + v.str() + " vs " + w.str());
        }
        if (r.table())
            r.out() << v << '\n';
        else
            r.emit(j);
    });
    poly->add_subcommand("facets", "Facet inequalities normal . x + offset >= 0")->callback([&r, input]() {
        auto rel = io::relation_from_json(r.read_input(*input, "relation"));
        auto facets = polytope_facets(polytope_of(rel));
        if (r.table())
        {
            for (const auto& f : facets)
                r.out() << join_row(f.normal) << " | " << f.offset << '\n';
            return;
        }
        Json a = Json::array();
        for (const auto& f : facets)
            a.push_back({{"normal", io::to_json(f.normal)}, {"offset", io::to_json(f.offset)}});
        Json j;
        j["elements"] = rel.elements();
        j["facets"] = a;
        r.emit(j);
    });
    poly->add_subcommand("off-export", "OFF file of a 3-dimensional polytope")->callback([&r, input]() {
        r.out() << off_export(polytope_of(io::relation_from_json(r.read_input(*input, "relation"))));
    });
}

void add_cone(CLI::App& app, Runner& r)
{
    auto* cone = app.add_subcommand("cone", "Dual cone of a relation");
    cone->require_subcommand(1);
    auto input = std::make_shared<std::string>("-");
    cone->add_option("--input", *input, "Relation JSON, or {\"dim\":n,\"inequalities\":[...]} (default stdin)");
    cone->add_subcommand("rays", "Extreme rays and lineality basis")->callback([&r, input]() {
        auto j = r.read_input(*input, "relation");
        Json head;
        std::optional<RationalCone> c;
        if (j.is_object() && j.contains("inequalities"))
        {
            if (!j.contains("dim") || !j["dim"].is_number_unsigned())
                throw ValidationError("cone.dim: expected a nonnegative integer");
            c.emplace(io::int_matrix_from_json(j["inequalities"], "cone.inequalities"), j["dim"].get<std::size_t>());
        }
        else
        {
            auto rel = io::relation_from_json(j);
            head["elements"] = rel.elements();
            c.emplace(dual_cone_hrep(rel), rel.size());
        }
        auto rays = r.rays(*c);
        if (r.table())
        {
            for (const auto& ray : rays.rays)
                r.out() << join_row(ray) << '\n';
            return;
        }
        auto body = io::to_json(rays);
        head["rays"] = body["rays"];
        head["lineality"] = body["lineality"];
        r.emit(head);
    });
}

void add_markings(CLI::App& app, Runner& r)
{
    auto* mk = app.add_subcommand("markings", "Corner markings of a poset");
    mk->require_subcommand(1);
    auto poset = std::make_shared<std::string>();
    mk->add_option("--poset", *poset, "Poset JSON")->required();

    mk->add_subcommand("minimal", "Minimal feasible markings, one per extreme ray")->callback([&r, poset]() {
        auto p = io::poset_from_json(r.read_input(*poset, "poset"));
        auto ms = minimal_feasible_markings(p, r.dd());
        Json a = Json::array();
        for (const auto& m : ms)
            a.push_back({{"corners", io::to_json(m.marking, p)["corners"]}, {"witness", io::to_json(m.ray)}});
        r.emit(Json{{"edges", p.edge_ids()}, {"markings", a}});
    });
    mk->add_subcommand("one-minimal", "Minimal locally feasible markings with one corner per triangle")
        ->callback([&r, poset]() {
            auto p = io::poset_from_json(r.read_input(*poset, "poset"));
            Z2Complex cx(p);
            auto ms = one_marking_minimals(p);
            Json a = Json::array();
            for (const auto& m : ms)
            {
                Json support = Json::array();
                for (std::size_t e = 0; e < p.edge_count(); ++e)
                    if (m.cocycle.test(e))
                        support.push_back(p.edge_id(e));
                a.push_back({{"corners", io::to_json(m.marking, p)["corners"]},
                             {"cocycle", support},
                             {"witness", io::to_json(m.witness)}});
            }
            r.emit(Json{{"edges", p.edge_ids()}, {"h1_dim", cx.h1_dim()}, {"markings", a}});
        });
    auto marking = std::make_shared<std::string>();
    auto* check = mk->add_subcommand("check", "Local feasibility and LP feasibility of a marking");
    check->add_option("marking", *marking, "Marking JSON")->required();
    check->callback([&r, poset, marking]() {
        auto p = io::poset_from_json(r.read_input(*poset, "poset"));
        auto m = io::marking_from_json(r.read_input(*marking, "marking"), p);
        auto w = is_feasible(m, p);
        Json j{{"locally_feasible", is_locally_feasible(m, p)},
               {"one_marking", is_one_marking(m)},
               {"feasible", w.has_value()}};
        j["witness"] = w ? io::to_json(*w) : Json(nullptr);
        r.emit(j);
    });
    mk->add_subcommand("cutsets", "Minimal cutsets of the 1-skeleton")->callback([&r, poset]() {
        auto p = io::poset_from_json(r.read_input(*poset, "poset"));
        Json a = Json::array();
        for (const auto& c : minimal_cutsets(p))
        {
            Json side = Json::array(), edges = Json::array();
            for (auto v : c.side)
                side.push_back(p.vertex_id(v));
            for (std::size_t e = 0; e < p.edge_count(); ++e)
                if (c.edges.test(e))
                    edges.push_back(p.edge_id(e));
            a.push_back({{"side", side}, {"edges", edges}});
        }
        r.emit(Json{{"cut_space_dim", cut_space_basis(p).size()}, {"cutsets", a}});
    });
    mk->add_subcommand("compare", "Minimal locally feasible versus minimal feasible markings")
        ->callback([&r, poset]() {
            auto p = io::poset_from_json(r.read_input(*poset, "poset"));
            auto c = compare_minimality(p, r.dd());
            r.emit(Json{{"locally_minimal", c.locally_minimal.size()},
                        {"feasible_minimal", c.feasible_minimal.size()},
                        {"locally_minimal_infeasible", c.locally_minimal_infeasible.size()},
                        {"feasible_minimal_not_locally_minimal", markings_json(c.feasible_minimal_not_locally_minimal, p)}});
        });
}

void add_metrics(CLI::App& app, Runner& r)
{
    auto* mt = app.add_subcommand("metrics", "Metrics on a poset");
    mt->require_subcommand(1);
    auto poset = std::make_shared<std::string>();
    auto subgraph = std::make_shared<std::string>();
    auto metric = std::make_shared<std::string>();
    mt->add_option("--poset", *poset, "Poset JSON");
    mt->add_flag("--allow-impure", r.g.allow_impure, "Skip the purity precondition");

    auto need_poset = [&r, poset]() {
        if (poset->empty())
            throw ValidationError("--poset is required");
        return io::poset_from_json(r.read_input(*poset, "poset"));
    };

    auto* gm = mt->add_subcommand("graph-metric", "Contraction distance of a bypassing subgraph");
    gm->add_option("--subgraph", *subgraph, "Subgraph JSON {\"edges\":[...]}")->required();
    gm->callback([&r, need_poset, subgraph]() {
        auto p = need_poset();
        auto g = io::subgraph_from_json(r.read_input(*subgraph, "subgraph"), p);
        r.emit(io::to_json(graph_metric(g, p, r.g.allow_impure), p));
    });

    auto* ce = mt->add_subcommand("check-extreme", "Extremality with the tight-row certificate");
    ce->add_option("--metric", *metric, "Metric JSON")->required();
    ce->callback([&r, need_poset, metric]() {
        auto p = need_poset();
        auto d = io::metric_from_json(r.read_input(*metric, "metric"), p);
        auto rep = is_extreme_metric(d, p, r.g.allow_impure);
        if (r.table())
        {
            r.out() << "extreme=" << (rep.extreme ? "true" : "false") << " kernel_dim=" << rep.kernel_dim << '\n';
            return;
        }
        r.emit(Json{{"extreme", rep.extreme}, {"kernel_dim", rep.kernel_dim}, {"tight_rows", tight_rows_json(rep, p)}});
    });

    auto* ic = mt->add_subcommand("ic-color", "Opposite-edge coloring over isometric even cycles");
    ic->add_option("--subgraph", *subgraph, "Subgraph JSON")->required();
    ic->callback([&r, need_poset, subgraph]() {
        auto p = need_poset();
        auto g = io::subgraph_from_json(r.read_input(*subgraph, "subgraph"), p);
        auto col = ic_coloring(g, p, r.g.cycle_bound, r.g.allow_impure);
        Json classes = Json::array(), merges = Json::array();
        for (const auto& cls : col.classes)
        {
            Json c = Json::array();
            for (auto e : cls)
                c.push_back(p.edge_id(e));
            classes.push_back(c);
        }
        for (auto [a, b] : col.merges)
            merges.push_back({p.edge_id(a), p.edge_id(b)});
        if (!col.conclusive())
            r.err() << "note: more than one class with cycle bound " << col.max_cycle_len
                    << "; longer isometric cycles may merge further\n";
        r.emit(Json{{"cycle_bound", col.max_cycle_len},
                    {"color_count", col.color_count()},
                    {"one_ic_colorable", col.conclusive()},
                    {"cycles_used", col.cycles.size()},
                    {"classes", classes},
                    {"merges", merges}});
    });

    auto side = std::make_shared<std::vector<std::string>>();
    auto* cut = mt->add_subcommand("cut", "Cut metric of a vertex subset");
    cut->add_option("--side", *side, "Vertex ids of one side")->delimiter(',');
    cut->callback([&r, need_poset, side]() {
        auto p = need_poset();
        r.emit(io::to_json(cut_metric(vertex_list(p, *side, "--side"), p), p));
    });

    auto n = std::make_shared<std::size_t>(0);
    auto hgraph = std::make_shared<std::string>();
    auto cycle = std::make_shared<std::vector<std::string>>();
    auto* hc = mt->add_subcommand("hamiltonian-cone", "Cone over a Hamiltonian graph inside the doubled skeleton");
    hc->add_option("--n", *n, "Number of vertices of the doubled skeleton (>= 5)")->required();
    hc->add_option("--graph", *hgraph, "Graph JSON on n-1 vertices (default: the cycle on n-1 vertices)");
    hc->add_option("--cycle", *cycle, "Hamiltonian cycle as vertex ids (default: vertex order)")->delimiter(',');
    hc->callback([&r, n, hgraph, cycle]() {
        std::vector<std::pair<std::size_t, std::size_t>> h;
        std::vector<std::size_t> order;
        if (*n < 5)
            throw ValidationError("--n must be at least 5");
        if (hgraph->empty())
        {
            for (std::size_t i = 0; i + 1 < *n; ++i)
            {
                h.emplace_back(i, (i + 1) % (*n - 1));
                order.push_back(i);
            }
        }
        else
        {
            auto g = io::poset_from_json(r.read_input(*hgraph, "graph"));
            if (!g.is_graph() || g.vertex_count() + 1 != *n)
                throw ValidationError("--graph must be a graph on n-1 vertices");
            for (std::size_t e = 0; e < g.edge_count(); ++e)
                h.emplace_back(g.edge_ends(e)[0], g.edge_ends(e)[1]);
            if (cycle->empty())
                for (std::size_t v = 0; v < g.vertex_count(); ++v)
                    order.push_back(v);
            else
                order = vertex_list(g, *cycle, "--cycle");
        }
        auto res = hamiltonian_cone_subgraph(h, order, *n);
        for (const auto& w : res.warnings)
            r.err() << "warning: " << w << '\n';
        Json j;
        j["poset"] = io::to_json(res.poset);
        j["subgraph"] = io::to_json(res.subgraph, res.poset);
        j["warnings"] = res.warnings;
        r.emit(j);
    });
}

void add_iso(CLI::App& app, Runner& r)
{
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto* iso = app.add_subcommand("iso", "Isomorphism test between two relation files");
    iso->add_option("rel1", *a, "Relation JSON")->required();
    iso->add_option("rel2", *b, "Relation JSON")->required();
    iso->callback([&r, a, b]() {
        auto ra = io::relation_from_json(r.read_input(*a, "rel1"));
        auto rb = io::relation_from_json(r.read_input(*b, "rel2"));
        auto m = relations_isomorphic(ra, rb);
        Json j{{"isomorphic", m.has_value()}};
        if (m)
        {
            Json map = Json::object();
            for (std::size_t i = 0; i < m->size(); ++i)
                map[ra.elements()[i]] = rb.elements()[(*m)[i]];
            j["map"] = map;
        }
        r.emit(j);
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Runner r(in, out, err);
    CLI::App app{"Ternary relations, their polytopes, markings and metrics", "ternary"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--cache-dir", r.g.cache_dir, "Directory for cached extreme rays");
    app.add_option("--max-rays", r.g.max_rays, "Abort when the double description exceeds this many rays (0 = no cap)");
    app.add_option("--cycle-bound", r.g.cycle_bound, "Longest isometric even cycle used by ic-color")
        ->check(CLI::Range(std::size_t{4}, std::size_t{64}));
    app.add_option("--format", r.g.format, "Output format")->check(CLI::IsMember({"json", "table", "off"}));
    app.add_option("--seed", r.g.seed, "Seed for randomized drivers; core commands ignore it");

    add_relation(app, r);
    add_poset(app, r);
    add_polytope(app, r);
    add_cone(app, r);
    add_markings(app, r);
    add_metrics(app, r);
    add_iso(app, r);

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        return kSuccess;
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return kSuccess;
    }
    catch (const CLI::Success&)
    {
        return kSuccess;
    }
    catch (const CLI::ParseError& e)
    {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
    catch (const ValidationError& e)
    {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
    catch (const ResourceLimitError& e)
    {
        err << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    }
    catch (const std::exception& e)
    {
        err << "internal error: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace ternary::cli
