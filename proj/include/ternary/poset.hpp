#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ternary/numeric.hpp"
#include "ternary/relation.hpp"

namespace ternary {

struct EdgeSpec
{
    std::string id;
    std::array<std::string, 2> ends;
};

struct TriangleSpec
{
    std::string id;
    std::array<std::string, 3> edges;
};

/**
 * A 2-dimensional simplicial poset: vertices, edges with two endpoints
 * (multi-edges allowed) and triangles with three facet edges. A graph is
 * the special case with no triangles.
 *
 * Construction only resolves identifiers; the boolean-interval conditions
 * (no loops, triangle boundaries forming a 3-cycle on three vertices) are
 * checked by validate() so that invalid inputs can be reported in full.
 */
class SimplicialPoset2
{
    public:
        SimplicialPoset2() = default;

        /** Throws ValidationError on duplicate ids or references to unknown ids. */
        SimplicialPoset2(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
                         const std::vector<TriangleSpec>& triangles);

        std::size_t vertex_count() const { return vertices_.size(); }
        std::size_t edge_count() const { return edge_ids_.size(); }
        std::size_t triangle_count() const { return triangle_ids_.size(); }

        const std::string& vertex_id(std::size_t v) const { return vertices_[v]; }
        const std::string& edge_id(std::size_t e) const { return edge_ids_[e]; }
        const std::string& triangle_id(std::size_t t) const { return triangle_ids_[t]; }
        const std::vector<std::string>& vertex_ids() const { return vertices_; }
        const std::vector<std::string>& edge_ids() const { return edge_ids_; }
        const std::vector<std::string>& triangle_ids() const { return triangle_ids_; }

        const std::array<std::size_t, 2>& edge_ends(std::size_t e) const { return ends_[e]; }
        const std::array<std::size_t, 3>& triangle_edges(std::size_t t) const { return facets_[t]; }

        /** Triangles having e as a facet, ascending. */
        const std::vector<std::size_t>& triangles_of_edge(std::size_t e) const { return cofaces_[e]; }
        /** Edges incident to v, ascending. */
        const std::vector<std::size_t>& edges_at_vertex(std::size_t v) const { return incident_[v]; }

        std::optional<std::size_t> vertex_index(const std::string& id) const;
        std::optional<std::size_t> edge_index(const std::string& id) const;
        std::optional<std::size_t> triangle_index(const std::string& id) const;

        /** Endpoint of e other than v (e must be incident to v). */
        std::size_t other_end(std::size_t e, std::size_t v) const;

        bool is_graph() const { return facets_.empty(); }

        /** Every maximal simplex has the top dimension. */
        bool is_pure() const;

        std::vector<EdgeSpec> edge_specs() const;
        std::vector<TriangleSpec> triangle_specs() const;

    private:
        std::vector<std::string> vertices_;
        std::vector<std::string> edge_ids_;
        std::vector<std::string> triangle_ids_;
        std::vector<std::array<std::size_t, 2>> ends_;
        std::vector<std::array<std::size_t, 3>> facets_;
        std::vector<std::vector<std::size_t>> cofaces_;
        std::vector<std::vector<std::size_t>> incident_;
};

/** Graph with vertices v1..vn and edges e1..em given as 0-based endpoint pairs. */
SimplicialPoset2 make_graph(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/** Empty iff every interval [0, x] is boolean; each message names the offending simplex. */
std::vector<std::string> validate(const SimplicialPoset2& p);

/** Σ = edge ids, one triple per triangle. Throws ValidationError on invalid posets. */
TernaryRelation ternary_relation(const SimplicialPoset2& p);

/** Vertex-edge-vertex relation of a graph: Σ = V ⊔ E (vertices first). */
TernaryRelation graph_relation(const SimplicialPoset2& g);

/**
 * 2-skeleton of the cone: apex "v0" (primed until unique), spoke "s:<v>"
 * per vertex, triangle "c:<e>" with facets {spoke(u), e, spoke(w)} per edge.
 */
SimplicialPoset2 cone_skeleton2(const SimplicialPoset2& p);

/** 2-skeleton of the boolean algebra B_n: v1..vn, e{i}_{j}, t{i}_{j}_{k}. */
SimplicialPoset2 complete_skeleton(std::size_t n);

/**
 * The doubled complete skeleton: edges e{i}_{j} and p{i}_{j} (the second
 * edge between v_i and v_j), triangles t{i}_{j}_{k} with facets
 * e_ij, e_jk, e_ik and t{i}^{j}_{k} (apex index i, j < k) with facets
 * p_ij, p_ik, e_jk. Requires n >= 2.
 */
SimplicialPoset2 doubled_skeleton(std::size_t n);

/** A ±-symmetric configuration listed by one representative per pair. */
struct VectorConfiguration
{
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<RatVector> vectors;
};

/** Empty iff no vector is zero, dimensions match and no two are parallel with ratio ±1. */
std::vector<std::string> validate(const VectorConfiguration& cfg);

/** Triples [i, j, k] with ±a_i ± a_j ± a_k = 0 for some signs. */
TernaryRelation from_vector_configuration(const VectorConfiguration& cfg);

enum class RootType { A, B, D };

/**
 * A_n: e_i - e_j (i < j) in R^{n+1}, named m{i}_{j}.
 * D_n: additionally e_i + e_j in R^n, named p{i}_{j}.
 * B_n: D_n plus e_i, named u{i}.
 */
VectorConfiguration root_system(RootType type, std::size_t n);

RootType parse_root_type(const std::string& s);

}  // namespace ternary
