#pragma once

#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ternary/poset.hpp"
#include "ternary/polyhedral.hpp"

namespace ternary {

/** A triangle together with an unordered pair of its facet edges (stored ascending). */
struct Corner
{
    std::size_t triangle = 0;
    std::array<std::size_t, 2> edges{};

    auto operator<=>(const Corner&) const = default;
};

/** A set of corners of one poset, sorted and deduplicated. */
struct Marking
{
    std::vector<Corner> corners;

    bool empty() const { return corners.empty(); }
    bool contains(const Corner& c) const;
    bool is_subset_of(const Marking& other) const;

    auto operator<=>(const Marking&) const = default;
};

/** Z2 cochain on the edges of a poset. */
using Cochain = boost::dynamic_bitset<>;

/** Validates every corner against p and canonicalizes. Throws ValidationError on foreign corners. */
Marking make_marking(const SimplicialPoset2& p, std::vector<Corner> corners);

/** The three corners of every triangle, in triangle order. */
std::vector<Corner> all_corners(const SimplicialPoset2& p);

/** Facet of the corner's triangle not in the corner. */
std::size_t opposite_edge(const SimplicialPoset2& p, const Corner& c);

/** Row x_e1 + x_e2 - x_e3 over the edges of p. */
IntVector corner_row(const SimplicialPoset2& p, const Corner& c);

/** Rows of all corners (in all_corners order): the dual cone of T(p) over edge coordinates. */
IntMatrix corner_rows(const SimplicialPoset2& p);

/** For every edge, the triangles marked along it are none or all of its cofaces. */
bool is_locally_feasible(const Marking& m, const SimplicialPoset2& p);

/** Witness with marked corner rows >= 1 and the others = 0, or nullopt. */
std::optional<RatVector> is_feasible(const Marking& m, const SimplicialPoset2& p);

/** Corners whose row is positive on the covector. */
Marking marking_of_ray(const RatVector& covector, const SimplicialPoset2& p);
Marking marking_of_ray(const IntVector& covector, const SimplicialPoset2& p);

struct MinimalMarking
{
    Marking marking;
    IntVector ray;
};

/** One marking per extreme ray of the dual cone, sorted by marking. */
std::vector<MinimalMarking> minimal_feasible_markings(const SimplicialPoset2& p,
                                                      const DoubleDescriptionOptions& opts = {});

/** At most one marked corner per triangle. */
bool is_one_marking(const Marking& m);

/**
 * Boundary maps of p over Z2. boundary2[t] is the edge set of triangle t,
 * boundary1[e] the endpoint set of edge e; coboundaries are their transposes.
 */
class Z2Complex
{
    public:
        explicit Z2Complex(const SimplicialPoset2& p);

        std::size_t vertex_count() const { return nv_; }
        std::size_t edge_count() const { return ne_; }
        std::size_t triangle_count() const { return boundary2_.size(); }

        /** ∂⁰: vertex set (as bitset over vertices) -> edges with exactly one endpoint in it. */
        Cochain coboundary0(const boost::dynamic_bitset<>& vertices) const;
        /** ∂¹: edge cochain -> triangles on whose boundary it sums to 1. */
        boost::dynamic_bitset<> coboundary1(const Cochain& delta) const;
        bool is_cocycle(const Cochain& delta) const;

        /** Basis of ker ∂¹ in reduced echelon form. */
        std::vector<Cochain> cocycle_basis() const;
        /** rank ∂⁰ = |V| - number of connected components of the 1-skeleton. */
        std::size_t coboundary0_rank() const;
        std::size_t h1_dim() const;

        /** ∂₁∘∂₂ = 0, checked directly on the stored matrices. */
        bool boundaries_compose_to_zero() const;

    private:
        std::size_t nv_ = 0, ne_ = 0;
        std::vector<Cochain> boundary2_;                    // per triangle
        std::vector<boost::dynamic_bitset<>> boundary1_;    // per edge, over vertices
};

/** f: indicator of the marked edges. Throws ValidationError unless m is a locally feasible 1-marking. */
Cochain marking_to_cocycle(const Marking& m, const SimplicialPoset2& p);

/** f⁻¹: marks (Δ, [e1, e2]) iff δ is nonzero exactly on e1, e2 within Δ. Throws unless δ is a cocycle. */
Marking cocycle_to_marking(const Cochain& delta, const SimplicialPoset2& p);

struct OneMarkingMinimal
{
    Marking marking;
    Cochain cocycle;
    RatVector witness;   // 1 on marked edges, 0 elsewhere
};

struct OneMarkingOptions
{
    /** Exhaustive kernel search up to this dimension; larger kernels need H¹ = 0. */
    std::size_t max_kernel_dim = 20;
    /** Cutset enumeration is exponential in the component size. */
    std::size_t max_component_vertices = 24;
};

/**
 * Minimal locally feasible markings with at most one corner per triangle,
 * through support-minimal nonzero cocycles. Sorted by marking.
 */
std::vector<OneMarkingMinimal> one_marking_minimals(const SimplicialPoset2& p, const OneMarkingOptions& opts = {});

/** Support-minimal among nonzero cocycles. */
bool is_minimal_cocycle(const Cochain& delta, const std::vector<Cochain>& cocycle_basis);

/**
 * Minimal nonempty locally feasible markings (any number of corners per
 * triangle), by enumerating marked-edge sets. Throws ResourceLimitError
 * when the candidate count would exceed `max_candidates`.
 */
std::vector<Marking> minimal_locally_feasible_markings(const SimplicialPoset2& p,
                                                       std::size_t max_candidates = 1u << 22);

struct Cutset
{
    std::vector<std::size_t> side;   // vertex indices of S (the side without the component's first vertex)
    Cochain edges;
};

/** Coboundaries of all vertices but one per connected component of the 1-skeleton. */
std::vector<Cochain> cut_space_basis(const SimplicialPoset2& g);

/** Minimal nonzero cutsets: G_S and G_{C \ S} both connected within a component C. */
std::vector<Cutset> minimal_cutsets(const SimplicialPoset2& g, std::size_t max_component_vertices = 24);

/** Both minimality notions side by side, with the markings on which they disagree. */
struct MinimalityComparison
{
    std::vector<Marking> locally_minimal;     // minimal nonempty locally feasible
    std::vector<Marking> feasible_minimal;    // minimal nonempty feasible (extreme rays)
    std::vector<Marking> locally_minimal_infeasible;
    std::vector<Marking> feasible_minimal_not_locally_minimal;
};

MinimalityComparison compare_minimality(const SimplicialPoset2& p, const DoubleDescriptionOptions& opts = {},
                                        std::size_t max_candidates = 1u << 22);

/** Vertex sets of the connected components of the 1-skeleton, each ascending, ordered by first vertex. */
std::vector<std::vector<std::size_t>> connected_components(const SimplicialPoset2& g);

}  // namespace ternary
