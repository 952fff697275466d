#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "ternary/polyhedral.hpp"

namespace ternary {

/**
 * Content-addressed store of extreme-ray results keyed by the SHA-256 of a
 * version salt and the canonical inequality description. Entries that fail
 * to parse or carry a foreign key are treated as misses and overwritten.
 */
class RayCache
{
    public:
        explicit RayCache(std::filesystem::path dir);

        /** Hex digest of the salt, the dimension and the primitive, sorted, deduplicated rows. */
        static std::string key(const RationalCone& cone);

        std::optional<ConeRays> get(const std::string& key) const;
        void put(const std::string& key, const ConeRays& rays) const;

        const std::filesystem::path& dir() const { return dir_; }

    private:
        std::filesystem::path entry(const std::string& key) const;

        std::filesystem::path dir_;
};

/** extreme_rays through the cache when one is given; a cached result is returned as stored. */
ConeRays cached_extreme_rays(const RationalCone& cone, const DoubleDescriptionOptions& opts, const RayCache* cache);

}  // namespace ternary
