#include <doctest.h>

#include "ternary/errors.hpp"
#include "ternary/poset.hpp"
#include "ternary/relation.hpp"

using namespace ternary;

namespace {

std::size_t binom(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

void check_counts(const SimplicialPoset2& p, std::size_t v, std::size_t e, std::size_t t)
{
    CHECK(p.vertex_count() == v);
    CHECK(p.edge_count() == e);
    CHECK(p.triangle_count() == t);
}

}  // namespace

TEST_CASE("constructor resolves ids and rejects dangling references")
{
    SimplicialPoset2 p({"a", "b", "c"}, {{"x", {"a", "b"}}, {"y", {"b", "c"}}, {"z", {"a", "c"}}}, {{"T", {"x", "y", "z"}}});
    CHECK(p.edge_index("y") == 1);
    CHECK(p.triangles_of_edge(2) == std::vector<std::size_t>{0});
    CHECK(p.other_end(0, 0) == 1);
    CHECK(p.is_pure());
    CHECK_THROWS_AS(SimplicialPoset2({"a", "a"}, {}, {}), ValidationError);
    CHECK_THROWS_AS(SimplicialPoset2({"a", "b"}, {{"x", {"a", "q"}}}, {}), ValidationError);
    CHECK_THROWS_AS(SimplicialPoset2({"a", "b"}, {{"x", {"a", "b"}}}, {{"T", {"x", "x", "w"}}}), ValidationError);
    CHECK_THROWS_AS(SimplicialPoset2({"a", "b"}, {{"a", {"a", "b"}}}, {}), ValidationError);
}

TEST_CASE("validation reports non-boolean intervals")
{
    CHECK(validate(complete_skeleton(4)).empty());
    CHECK(validate(doubled_skeleton(3)).empty());
    SimplicialPoset2 flat({"a", "b", "c"},
                          {{"x", {"a", "b"}}, {"y", {"a", "b"}}, {"z", {"b", "c"}}},
                          {{"T", {"x", "y", "z"}}});
    auto v = validate(flat);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("'T'") != std::string::npos);
    CHECK_THROWS_AS(ternary_relation(flat), ValidationError);
    SimplicialPoset2 loop({"a"}, {{"x", {"a", "a"}}}, {});
    CHECK(validate(loop).size() == 1);
    SimplicialPoset2 repeat({"a", "b", "c"}, {{"x", {"a", "b"}}, {"y", {"b", "c"}}}, {{"T", {"x", "x", "y"}}});
    CHECK(validate(repeat).size() == 1);
}

TEST_CASE("purity")
{
    CHECK(complete_skeleton(3).is_pure());
    CHECK(make_graph(3, {{0, 1}, {1, 2}}).is_pure());
    SimplicialPoset2 dangling({"a", "b", "c", "d"},
                              {{"x", {"a", "b"}}, {"y", {"b", "c"}}, {"z", {"a", "c"}}, {"w", {"c", "d"}}},
                              {{"T", {"x", "y", "z"}}});
    CHECK_FALSE(dangling.is_pure());
}

TEST_CASE("builder counts")
{
    for (std::size_t n = 3; n <= 6; ++n)
    {
        CAPTURE(n);
        check_counts(complete_skeleton(n), n, binom(n, 2), binom(n, 3));
        auto d = doubled_skeleton(n);
        check_counts(d, n, n * (n - 1), binom(n, 3) + n * binom(n - 1, 2));
        check_counts(cone_skeleton2(d), n + 1, n * (n - 1) + n, d.triangle_count() + n * (n - 1));
    }
    check_counts(doubled_skeleton(2), 2, 2, 0);
    check_counts(cone_skeleton2(make_graph(2, {{0, 1}})), 3, 3, 1);
    check_counts(cone_skeleton2(make_graph(2, {{0, 1}, {0, 1}})), 3, 4, 2);
    auto c = cone_skeleton2(make_graph(2, {{0, 1}}));
    CHECK(c.vertex_id(c.vertex_count() - 1) == "v0");
    CHECK(validate(c).empty());
}

TEST_CASE("ternary relations of posets")
{
    CHECK(ternary_relation(complete_skeleton(3)).triples().size() == 1);
    auto k5 = ternary_relation(complete_skeleton(5));
    CHECK(k5.size() == 10);
    CHECK(k5.triples().size() == 10);
    CHECK(ternary_relation(doubled_skeleton(3)).triples().size() == 4);
    auto g = graph_relation(make_graph(3, {{0, 1}, {1, 2}}));
    CHECK(g.size() == 5);
    CHECK(g.triples().size() == 2);
    CHECK_THROWS_AS(graph_relation(complete_skeleton(3)), ValidationError);
}

TEST_CASE("vector configurations")
{
    auto a2 = root_system(RootType::A, 2);
    CHECK(a2.dim == 3);
    CHECK(a2.vectors.size() == 3);
    CHECK(from_vector_configuration(a2).triples().size() == 1);
    CHECK(root_system(RootType::D, 3).vectors.size() == 6);
    CHECK(root_system(RootType::B, 2).vectors.size() == 4);

    VectorConfiguration basis{3, {"a", "b", "c"}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    CHECK(from_vector_configuration(basis).triples().empty());

    VectorConfiguration bad{2, {"a", "b", "c"}, {{1, 0}, {0, 0}, {-1, 0}}};
    auto v = validate(bad);
    CHECK(v.size() == 2);
    CHECK_THROWS_AS(from_vector_configuration(bad), ValidationError);
    CHECK_THROWS_AS(root_system(RootType::D, 1), ValidationError);
    CHECK_THROWS_AS(parse_root_type("E"), ValidationError);
}

TEST_CASE("root systems match their posets")
{
    for (std::size_t n = 2; n <= 5; ++n)
    {
        CAPTURE(n);
        CHECK(relations_isomorphic(from_vector_configuration(root_system(RootType::A, n - 1)),
                                   ternary_relation(complete_skeleton(n))).has_value());
    }
    for (std::size_t n = 3; n <= 4; ++n)
    {
        CAPTURE(n);
        CHECK(relations_isomorphic(from_vector_configuration(root_system(RootType::D, n)),
                                   ternary_relation(doubled_skeleton(n))).has_value());
        CHECK(relations_isomorphic(from_vector_configuration(root_system(RootType::B, n)),
                                   ternary_relation(cone_skeleton2(doubled_skeleton(n)))).has_value());
    }
}
