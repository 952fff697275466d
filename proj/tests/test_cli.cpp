#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "ternary/cache.hpp"
#include "ternary/cli.hpp"
#include "ternary/errors.hpp"
#include "ternary/json_io.hpp"
#include "ternary/poset.hpp"

namespace fs = std::filesystem;
using namespace ternary;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class TempDir
{
    public:
        TempDir()
        {
            std::random_device rd;
            path_ = fs::temp_directory_path() / ("ternary-test-" + std::to_string(rd()));
            fs::create_directories(path_);
        }
        ~TempDir() { fs::remove_all(path_); }
        std::string write(const std::string& name, const std::string& text) const
        {
            auto p = path_ / name;
            std::ofstream(p) << text;
            return p.string();
        }
        const fs::path& path() const { return path_; }

    private:
        fs::path path_;
};

io::Json json(const Result& r)
{
    REQUIRE(r.code == 0);
    return io::parse(r.out, "output");
}

const char* kPath2 = R"({"vertices":["a","b","c"],"edges":[{"id":"x","ends":["a","b"]},{"id":"y","ends":["b","c"]}],"triangles":[]})";

}  // namespace

TEST_CASE("documented pipelines")
{
    auto a2 = run({"relation", "build", "--root-system", "A", "2"});
    REQUIRE(a2.code == 0);
    auto nv = json(run({"polytope", "nvolume"}, a2.out));
    CHECK(nv["normalized_volume"] == "4");
    CHECK(json(run({"polytope", "nvolume", "--check"}, a2.out))["normalized_volume"] == "4");
    CHECK(json(run({"polytope", "dim"}, a2.out))["dim"] == 2);

    TempDir dir;
    auto path2 = dir.write("path2.json", kPath2);
    auto rel = run({"relation", "build", "--graph", path2});
    REQUIRE(rel.code == 0);
    CHECK(json(run({"cone", "rays"}, rel.out))["rays"].size() == 6);

    auto k5 = dir.write("K5.json", run({"poset", "build", "--complete", "5"}).out);
    auto sub = dir.write("k32s.json", R"({"edges":["e1_4","e1_5","e2_4","e2_5","e3_4","e3_5"]})");
    auto metric = dir.write("k32.json", run({"metrics", "--poset", k5, "graph-metric", "--subgraph", sub}).out);
    auto ext = json(run({"metrics", "--poset", k5, "check-extreme", "--metric", metric}));
    CHECK(ext["extreme"] == true);
    CHECK(ext["kernel_dim"] == 1);
    CHECK(json(run({"metrics", "--poset", k5, "ic-color", "--subgraph", sub}))["color_count"] == 1);
}

TEST_CASE("validation errors exit with code 2 and name the location")
{
    TempDir dir;
    auto bad = dir.write("bad.json", R"({"vertices":["a"],"edges":[],"triangles":[{"id":"t","edges":["x","y","z"]}]})");
    auto r = run({"relation", "build", "--poset", bad});
    CHECK(r.code == cli::kValidation);
    CHECK(r.err.find("'x'") != std::string::npos);
    CHECK(r.out.empty());

    CHECK(run({"relation", "build", "--root-system", "E", "3"}).code == cli::kValidation);
    CHECK(run({"polytope", "dim"}, "{not json").code == cli::kValidation);
    CHECK(run({"relation", "build", "--poset", (dir.path() / "missing.json").string()}).code == cli::kValidation);

    auto triples = run({"polytope", "dim"}, R"({"elements":["a","b","c"],"triples":[["a","b",3]]})");
    CHECK(triples.code == cli::kValidation);
    CHECK(triples.err.find("triples[0][2]") != std::string::npos);
}

TEST_CASE("resource cap exits with code 3")
{
    auto rel = run({"relation", "build", "--root-system", "A", "4"});
    auto r = run({"--max-rays", "3", "cone", "rays"}, rel.out);
    CHECK(r.code == cli::kResourceLimit);
    CHECK(json(run({"--max-rays", "1000", "cone", "rays"}, rel.out))["rays"].size() == 25);
}

TEST_CASE("emitted JSON is accepted back")
{
    TempDir dir;
    auto k3 = dir.write("K3.json", run({"poset", "build", "--complete", "3"}).out);
    auto rel = run({"relation", "build", "--poset", k3});
    REQUIRE(rel.code == 0);
    auto rel_again = run({"relation", "build", "--poset", dir.write("K3b.json", run({"poset", "build", "--complete", "3"}).out)});
    CHECK(rel.out == rel_again.out);
    auto relfile = dir.write("rel.json", rel.out);
    CHECK(json(run({"iso", relfile, relfile}))["isomorphic"] == true);

    auto mins = json(run({"markings", "--poset", k3, "minimal"}));
    REQUIRE(mins["markings"].size() == 3);
    for (const auto& m : mins["markings"])
    {
        auto mf = dir.write("m.json", io::Json{{"corners", m["corners"]}}.dump());
        auto c = json(run({"markings", "--poset", k3, "check", mf}));
        CHECK(c["feasible"] == true);
        CHECK(c["locally_feasible"] == true);
    }

    auto cut = run({"metrics", "--poset", k3, "cut", "--side", "v1"});
    auto cutfile = dir.write("cut.json", cut.out);
    CHECK(json(run({"metrics", "--poset", k3, "check-extreme", "--metric", cutfile}))["extreme"] == true);

    auto hc = run({"metrics", "hamiltonian-cone", "--n", "5"});
    REQUIRE(hc.code == 0);
    auto hj = io::parse(hc.out, "hc");
    auto pf = dir.write("hp.json", hj["poset"].dump());
    auto sf = dir.write("hs.json", hj["subgraph"].dump());
    CHECK(json(run({"metrics", "--poset", pf, "ic-color", "--subgraph", sf}))["color_count"] == 1);
}

TEST_CASE("outputs are byte deterministic")
{
    auto a = run({"relation", "build", "--root-system", "B", "3"});
    auto b = run({"relation", "build", "--root-system", "B", "3"});
    CHECK(a.out == b.out);
    CHECK(run({"cone", "rays"}, a.out).out == run({"cone", "rays"}, b.out).out);
    CHECK(run({"--seed", "9", "cone", "rays"}, a.out).out == run({"cone", "rays"}, a.out).out);
}

TEST_CASE("cache: miss, hit and corrupted entries")
{
    TempDir dir;
    RayCache cache(dir.path());
    RationalCone cone(dual_cone_hrep(ternary_relation(complete_skeleton(4))), 6);
    const auto key = RayCache::key(cone);
    CHECK(key.size() == 64);
    CHECK_FALSE(cache.get(key).has_value());

    auto first = cached_extreme_rays(cone, {}, &cache);
    auto hit = cache.get(key);
    REQUIRE(hit.has_value());
    CHECK(hit->rays == first.rays);
    CHECK(hit->lineality == first.lineality);

    const auto file = dir.path() / (key + ".json");
    REQUIRE(fs::exists(file));
    std::ifstream f1(file);
    std::string bytes((std::istreambuf_iterator<char>(f1)), {});

    std::ofstream(file) << "{\"key\": \"garbage";
    CHECK_FALSE(cache.get(key).has_value());
    auto again = cached_extreme_rays(cone, {}, &cache);
    CHECK(again.rays == first.rays);
    std::ifstream f2(file);
    std::string rewritten((std::istreambuf_iterator<char>(f2)), {});
    CHECK(rewritten == bytes);

    // row order and duplicates do not change the key
    auto rows = cone.hrep();
    std::reverse(rows.begin(), rows.end());
    rows.push_back(rows.front());
    CHECK(RayCache::key(RationalCone(rows, 6)) == key);
}

TEST_CASE("cache through the command line")
{
    TempDir dir;
    auto rel = run({"relation", "build", "--root-system", "A", "3"}).out;
    auto cold = run({"--cache-dir", dir.path().string(), "cone", "rays"}, rel);
    auto warm = run({"--cache-dir", dir.path().string(), "cone", "rays"}, rel);
    REQUIRE(cold.code == 0);
    CHECK(cold.out == warm.out);
    CHECK(cold.out == run({"cone", "rays"}, rel).out);
    std::size_t entries = 0;
    for (const auto& e : fs::directory_iterator(dir.path()))
        entries += e.path().extension() == ".json";
    CHECK(entries == 1);
}

TEST_CASE("help and unknown commands")
{
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"frobnicate"}).code != 0);
    CHECK(run({}).code != 0);
}
