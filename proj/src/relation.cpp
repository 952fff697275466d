#include "ternary/relation.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "ternary/errors.hpp"

namespace ternary {

Triple make_triple(std::size_t a, std::size_t b, std::size_t c)
{
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
        throw ValidationError("triple repeats element index " + std::to_string(t[1]));
    return t;
}

TernaryRelation::TernaryRelation(std::vector<std::string> elements, const std::vector<Triple>& triples)
    : elements_(std::move(elements))
{
    {
        std::vector<std::string> sorted = elements_;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            throw ValidationError("duplicate element id '" + *dup + "'");
    }
    triples_.reserve(triples.size());
    for (const auto& t : triples)
    {
        for (auto i : t)
            if (i >= elements_.size())
                throw ValidationError("triple index " + std::to_string(i) + " out of range");
        triples_.push_back(make_triple(t[0], t[1], t[2]));
    }
    std::sort(triples_.begin(), triples_.end());
    triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
}

TernaryRelation TernaryRelation::from_names(std::vector<std::string> elements,
                                            const std::vector<std::array<std::string, 3>>& triples)
{
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
        index.emplace(elements[i], i);
    std::vector<Triple> idx;
    idx.reserve(triples.size());
    for (const auto& t : triples)
    {
        Triple r{};
        for (std::size_t k = 0; k < 3; ++k)
        {
            auto it = index.find(t[k]);
            if (it == index.end())
                throw ValidationError("triple references unknown element '" + t[k] + "'");
            r[k] = it->second;
        }
        idx.push_back(r);
    }
    return TernaryRelation(std::move(elements), idx);
}

std::optional<std::size_t> TernaryRelation::index_of(const std::string& id) const
{
    auto it = std::find(elements_.begin(), elements_.end(), id);
    if (it == elements_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::size_t> TernaryRelation::degrees() const
{
    std::vector<std::size_t> deg(elements_.size(), 0);
    for (const auto& t : triples_)
        for (auto i : t)
            ++deg[i];
    return deg;
}

bool TernaryRelation::contains(Triple t) const
{
    std::sort(t.begin(), t.end());
    return std::binary_search(triples_.begin(), triples_.end(), t);
}

std::vector<GeneratorPoint> generator_points(const TernaryRelation& rel)
{
    std::vector<GeneratorPoint> pts;
    pts.reserve(3 * rel.triples().size());
    for (std::size_t t = 0; t < rel.triples().size(); ++t)
    {
        const auto& tr = rel.triples()[t];
        for (std::size_t neg = 0; neg < 3; ++neg)
        {
            GeneratorPoint g;
            g.coords.assign(rel.size(), Integer(0));
            for (std::size_t k = 0; k < 3; ++k)
                g.coords[tr[k]] = k == neg ? -1 : 1;
            g.triple = t;
            g.negated = tr[neg];
            pts.push_back(std::move(g));
        }
    }
    std::stable_sort(pts.begin(), pts.end(),
                     [](const GeneratorPoint& a, const GeneratorPoint& b) { return a.coords < b.coords; });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const GeneratorPoint& a, const GeneratorPoint& b) { return a.coords == b.coords; }),
              pts.end());
    return pts;
}

IntMatrix dual_cone_hrep(const TernaryRelation& rel)
{
    IntMatrix rows;
    for (auto& g : generator_points(rel))
        rows.push_back(std::move(g.coords));
    return rows;
}

namespace {

using PairCounts = std::unordered_map<std::size_t, std::size_t>;

PairCounts pair_counts(const TernaryRelation& r)
{
    PairCounts counts;
    const std::size_t n = r.size();
    for (const auto& t : r.triples())
    {
        ++counts[t[0] * n + t[1]];
        ++counts[t[0] * n + t[2]];
        ++counts[t[1] * n + t[2]];
    }
    return counts;
}

std::size_t lookup(const PairCounts& c, std::size_t n, std::size_t i, std::size_t j)
{
    if (i > j)
        std::swap(i, j);
    auto it = c.find(i * n + j);
    return it == c.end() ? 0 : it->second;
}

// Degree plus the sorted multiset of co-occurrence counts with each neighbour.
std::vector<std::vector<std::size_t>> signatures(const TernaryRelation& r, const PairCounts& c)
{
    const std::size_t n = r.size();
    const auto deg = r.degrees();
    std::vector<std::vector<std::size_t>> sig(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        std::vector<std::size_t> s;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                if (auto k = lookup(c, n, i, j); k > 0)
                    s.push_back(k);
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), deg[i]);
        sig[i] = std::move(s);
    }
    return sig;
}

struct IsoSearch
{
    const TernaryRelation& a;
    const TernaryRelation& b;
    std::size_t n;
    PairCounts ca, cb;
    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::vector<Triple>> closing;   // triples of a whose largest index is i
    std::vector<std::size_t> image;
    std::vector<bool> used;

    bool extend(std::size_t i)
    {
        if (i == n)
            return true;
        for (auto j : candidates[i])
        {
            if (used[j] || !consistent(i, j))
                continue;
            image[i] = j;
            used[j] = true;
            if (extend(i + 1))
                return true;
            used[j] = false;
        }
        return false;
    }

    bool consistent(std::size_t i, std::size_t j) const
    {
        for (std::size_t k = 0; k < i; ++k)
            if (lookup(ca, n, i, k) != lookup(cb, n, j, image[k]))
                return false;
        for (const auto& t : closing[i])
        {
            Triple img{image[t[0]], image[t[1]], j};
            if (!b.contains(img))
                return false;
        }
        return true;
    }
};

}  // namespace

std::optional<std::vector<std::size_t>> relations_isomorphic(const TernaryRelation& a, const TernaryRelation& b)
{
    if (a.size() != b.size() || a.triples().size() != b.triples().size())
        return std::nullopt;
    const std::size_t n = a.size();

    IsoSearch s{a, b, n, pair_counts(a), pair_counts(b), {}, {}, std::vector<std::size_t>(n, 0),
                std::vector<bool>(n, false)};
    const auto sa = signatures(a, s.ca);
    const auto sb = signatures(b, s.cb);
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y)
            return std::nullopt;
    }
    s.candidates.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sa[i] == sb[j])
                s.candidates[i].push_back(j);
    s.closing.resize(n);
    for (const auto& t : a.triples())
        s.closing[t[2]].push_back(t);

    if (!s.extend(0))
        return std::nullopt;
    return s.image;
}

}  // namespace ternary
