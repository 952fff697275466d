#pragma once

#include <optional>
#include <string>

#include "ternary/numeric.hpp"

namespace ternary {

/** Cone {x : A x >= 0} given by integer inequality rows. */
class RationalCone
{
    public:
        /** Throws ValidationError when rows disagree with `dim`. */
        RationalCone(IntMatrix hrep, std::size_t dim);

        const IntMatrix& hrep() const { return hrep_; }
        std::size_t dim() const { return dim_; }

    private:
        IntMatrix hrep_;
        std::size_t dim_;
};

struct ConeRays
{
    /** Primitive integer generators of the pointed part, lexicographically sorted. */
    IntMatrix rays;
    /** Basis of the lineality space {x : A x = 0}, read off the reduced echelon form. */
    IntMatrix lineality;
};

struct DoubleDescriptionOptions
{
    /** Abort with ResourceLimitError once the intermediate ray count exceeds this; 0 = no cap. */
    std::size_t max_rays = 0;
};

/**
 * Double description: rows are inserted most-zeros first (ties broken
 * lexicographically) and adjacency is decided by the combinatorial test.
 * Output depends only on the set of rows, not on their order.
 */
ConeRays extreme_rays(const RationalCone& cone, const DoubleDescriptionOptions& opts = {});

/** Convex hull of finitely many integer points. */
class LatticePolytope
{
    public:
        /** Throws ValidationError on ragged input. */
        explicit LatticePolytope(IntMatrix points);

        const IntMatrix& points() const { return points_; }
        std::size_t ambient_dim() const { return ambient_; }

    private:
        IntMatrix points_;
        std::size_t ambient_ = 0;
};

/** Extreme points, one exact LP separation per distinct candidate; sorted. */
IntMatrix polytope_vertices(const LatticePolytope& poly);

/** Affine dimension; -1 for the empty polytope. */
long dimension(const LatticePolytope& poly);

/** Facet inequality normal . x + offset >= 0, normal primitive within the affine hull's dual lattice. */
struct Facet
{
    IntVector normal;
    Integer offset;
};

/** Facets in ambient coordinates (unique modulo the affine hull equations). */
std::vector<Facet> polytope_facets(const LatticePolytope& poly);

/**
 * Coordinates of the polytope in the lattice Z^n ∩ aff(P), translated so
 * the lexicographically smallest vertex is the origin. Rows are the vertices
 * in polytope_vertices order.
 */
IntMatrix lattice_coordinates(const LatticePolytope& poly);

/** dim! times the volume in the affine lattice, via a placing triangulation of the vertices. */
Integer normalized_volume(const LatticePolytope& poly);

/**
 * Same quantity by a second route: pyramids over the facets not containing
 * a fixed vertex, weighted by lattice height, recursing on each facet.
 */
Integer normalized_volume_pyramids(const LatticePolytope& poly);

/** OFF text (lattice coordinates) for a 3-dimensional polytope. Throws ValidationError otherwise. */
std::string off_export(const LatticePolytope& poly);

/** Some x with eq x = 0 and strict x >= 1 componentwise, or nullopt. */
std::optional<RatVector> strict_feasible(const IntMatrix& eq_rows, const IntMatrix& strict_rows, std::size_t dim);

/** dim - rank(eq_rows). */
std::size_t solution_space_dim(const IntMatrix& eq_rows, std::size_t dim);

}  // namespace ternary
