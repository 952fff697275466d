#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ternary/numeric.hpp"

namespace ternary {

/** Three distinct element indices, sorted ascending. */
using Triple = std::array<std::size_t, 3>;

/**
 * A finite element set with a family of unordered triples of distinct
 * elements. Elements are opaque string identifiers; all computation uses
 * their dense indices. Immutable after construction.
 */
class TernaryRelation
{
    public:
        TernaryRelation() = default;

        /** Triples are canonicalized and deduplicated. Throws ValidationError. */
        TernaryRelation(std::vector<std::string> elements, const std::vector<Triple>& triples);

        /** Convenience constructor from element names. */
        static TernaryRelation from_names(std::vector<std::string> elements,
                                          const std::vector<std::array<std::string, 3>>& triples);

        const std::vector<std::string>& elements() const { return elements_; }
        const std::vector<Triple>& triples() const { return triples_; }
        std::size_t size() const { return elements_.size(); }

        std::optional<std::size_t> index_of(const std::string& id) const;

        /** Number of triples containing each element. */
        std::vector<std::size_t> degrees() const;

        bool contains(Triple t) const;

        friend bool operator==(const TernaryRelation&, const TernaryRelation&) = default;

    private:
        std::vector<std::string> elements_;
        std::vector<Triple> triples_;
};

struct GeneratorPoint
{
    IntVector coords;
    std::size_t triple = 0;      // index into the relation's triples
    std::size_t negated = 0;     // element index carrying the -1
};

/**
 * The three points 1_i + 1_j - 1_k (one per choice of negated element) for
 * every triple, deduplicated and ordered lexicographically by coordinates.
 * A duplicated point keeps the source of its first occurrence in triple order.
 */
std::vector<GeneratorPoint> generator_points(const TernaryRelation& rel);

/**
 * Rows x_i + x_j - x_k >= 0 of the dual cone, one per (triple, negated
 * element), sorted and deduplicated.
 */
IntMatrix dual_cone_hrep(const TernaryRelation& rel);

/**
 * First bijection (backtracking over a's elements in index order, b's
 * candidates in index order) carrying the triples of a onto those of b.
 * Entry i of the result is the image of a's element i.
 */
std::optional<std::vector<std::size_t>> relations_isomorphic(const TernaryRelation& a,
                                                             const TernaryRelation& b);

/** Triple canonicalization helper; throws ValidationError on repeated indices. */
Triple make_triple(std::size_t a, std::size_t b, std::size_t c);

}  // namespace ternary
