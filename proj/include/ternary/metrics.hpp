#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ternary/poset.hpp"

namespace ternary {

/** Edge sequence with its vertex sequence; edges and vertices may repeat. */
struct Walk
{
    std::vector<std::size_t> edges;
    std::vector<std::size_t> vertices;   // edges.size() + 1 entries

    std::size_t length() const { return edges.size(); }
    std::size_t front() const { return vertices.front(); }
    std::size_t back() const { return vertices.back(); }
};

/** Walk from `start` along `edges`. Throws ValidationError if empty or not consecutively incident. */
Walk make_walk(const SimplicialPoset2& p, std::size_t start, const std::vector<std::size_t>& edges);

/** Concatenation; the second walk must start where the first ends. */
Walk concatenate(const Walk& a, const Walk& b);

/** Subgraph of the 1-skeleton: sorted, deduplicated vertex and edge indices. */
struct Subgraph
{
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;

    bool has_edge(std::size_t e) const;
};

/** Subgraph with the given edges, their endpoints and any extra vertices. Throws on bad indices. */
Subgraph make_subgraph(const SimplicialPoset2& p, std::vector<std::size_t> edges,
                       const std::vector<std::size_t>& extra_vertices = {});

/** Edge-indexed nonnegative rational values. */
struct PosetMetric
{
    RatVector values;

    auto operator<=>(const PosetMetric&) const = default;
};

/** Empty iff d is nonnegative and every corner inequality holds; messages name the failure. */
std::vector<std::string> metric_violations(const PosetMetric& d, const SimplicialPoset2& p);

inline bool is_metric(const PosetMetric& d, const SimplicialPoset2& p)
{
    return metric_violations(d, p).empty();
}

/** Throws ValidationError on impure posets unless `allow_impure`. */
void require_pure(const SimplicialPoset2& p, bool allow_impure);

/** Interval DP over the walk; throws ValidationError if the walk does not join the ends of e. */
bool contracts_to(const Walk& w, std::size_t e, const SimplicialPoset2& p);

inline constexpr std::uint64_t kInfinite = std::numeric_limits<std::uint64_t>::max();

/** Length of the shortest walk in g contractible to each edge; kInfinite where none exists. */
std::vector<std::uint64_t> contraction_distance(const Subgraph& g, const SimplicialPoset2& p,
                                                bool allow_impure = false);

bool is_bypassing(const Subgraph& g, const SimplicialPoset2& p, bool allow_impure = false);

/** Contraction distance as a metric. Throws ValidationError unless g is bypassing. */
PosetMetric graph_metric(const Subgraph& g, const SimplicialPoset2& p, bool allow_impure = false);

/** w lies in g, has length d(e) and contracts to e. */
bool is_in_B(const Walk& w, std::size_t e, const Subgraph& g, const SimplicialPoset2& p,
             bool allow_impure = false);

/**
 * Closed walk with distinct vertices of even length 2n in g such that every
 * pair of antipodal vertices is joined by an edge outside g for which both
 * half-walks are shortest contractible walks. Throws ValidationError on odd
 * length or when the walk is not a cycle in g.
 */
bool is_isometric_even_cycle(const Walk& c, const Subgraph& g, const SimplicialPoset2& p,
                             bool allow_impure = false);

struct IcColoring
{
    /** Color classes of E(g), each sorted, ordered by smallest edge. */
    std::vector<std::vector<std::size_t>> classes;
    /** Opposite-edge merges in the order applied. */
    std::vector<std::pair<std::size_t, std::size_t>> merges;
    /** Isometric even cycles used, as edge sequences. */
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t max_cycle_len = 4;

    std::size_t color_count() const { return classes.size(); }
    /** One class means 1-ic-colorable; more classes may be an artifact of the length bound. */
    bool conclusive() const { return classes.size() == 1; }
};

/** Union-find over opposite edges of isometric even cycles of length <= max_cycle_len. */
IcColoring ic_coloring(const Subgraph& g, const SimplicialPoset2& p, std::size_t max_cycle_len = 4,
                       bool allow_impure = false);

struct TightRow
{
    enum class Kind { Corner, Nonnegative } kind = Kind::Corner;
    std::size_t triangle = 0;                 // Corner
    std::array<std::size_t, 2> edges{};       // Corner: the corner pair; Nonnegative: edges[0]
    IntVector row;
};

struct ExtremalityReport
{
    bool extreme = false;
    std::size_t kernel_dim = 0;
    std::vector<TightRow> tight_rows;
};

/** Extreme ray of the metric cone iff the tight subsystem has a one-dimensional solution space. */
ExtremalityReport is_extreme_metric(const PosetMetric& d, const SimplicialPoset2& p, bool allow_impure = false);

/** 1 on edges with exactly one endpoint in `side`, 0 elsewhere. */
PosetMetric cut_metric(const std::vector<std::size_t>& side, const SimplicialPoset2& p);

struct HamiltonianCone
{
    SimplicialPoset2 poset;   // doubled_skeleton(n)
    Subgraph subgraph;
    std::vector<std::string> warnings;
};

/**
 * Cone over a Hamiltonian graph inside the "+" copy of the doubled skeleton:
 * H on v1..v(n-1) (0-based pairs), apex v(n), edges p{i}_{j} for ij in H and
 * the spokes p{i}_{n}. `cycle` lists the vertices of a Hamiltonian cycle of H.
 * Requires n >= 5; warns when 3 divides n - 1.
 */
HamiltonianCone hamiltonian_cone_subgraph(const std::vector<std::pair<std::size_t, std::size_t>>& h,
                                          const std::vector<std::size_t>& cycle, std::size_t n);

}  // namespace ternary
