#include "ternary/cache.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <openssl/evp.h>

#include "ternary/errors.hpp"
#include "ternary/json_io.hpp"

namespace ternary {

namespace {

constexpr const char* kSalt = "ternary-rays/1";

std::string sha256_hex(const std::string& data)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i)
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return out.str();
}

/** Advisory exclusive lock held for the lifetime of the object. */
class FileLock
{
    public:
        explicit FileLock(const std::filesystem::path& path)
            : fd_(::open(path.c_str(), O_CREAT | O_RDWR, 0644))
        {
            if (fd_ >= 0)
                ::flock(fd_, LOCK_EX);
        }
        ~FileLock()
        {
            if (fd_ >= 0)
            {
                ::flock(fd_, LOCK_UN);
                ::close(fd_);
            }
        }
        FileLock(const FileLock&) = delete;
        FileLock& operator=(const FileLock&) = delete;

    private:
        int fd_;
};

}  // namespace

RayCache::RayCache(std::filesystem::path dir)
    : dir_(std::move(dir))
{
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
        throw ValidationError(dir_.string() + ": cannot create cache directory");
}

std::string RayCache::key(const RationalCone& cone)
{
    IntMatrix rows;
    for (const auto& r : cone.hrep())
        if (!is_zero(r))
            rows.push_back(make_primitive(r));
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::ostringstream text;
    text << kSalt << '\n' << cone.dim() << '\n';
    for (const auto& r : rows)
    {
        for (const auto& x : r)
            text << x << ' ';
        text << '\n';
    }
    return sha256_hex(text.str());
}

std::filesystem::path RayCache::entry(const std::string& key) const
{
    return dir_ / (key + ".json");
}

std::optional<ConeRays> RayCache::get(const std::string& key) const
{
    FileLock lock(dir_ / (key + ".lock"));
    std::ifstream in(entry(key));
    if (!in)
        return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    try
    {
        auto j = io::Json::parse(ss.str());
        if (!j.is_object() || j.value("key", std::string()) != key)
            return std::nullopt;
        return io::rays_from_json(j);
    }
    catch (const std::exception&)
    {
        return std::nullopt;
    }
}

void RayCache::put(const std::string& key, const ConeRays& rays) const
{
    FileLock lock(dir_ / (key + ".lock"));
    io::Json j;
    j["key"] = key;
    auto body = io::to_json(rays);
    j["rays"] = body["rays"];
    j["lineality"] = body["lineality"];
    auto tmp = entry(key);
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump() << '\n';
        if (!out)
            throw std::runtime_error(tmp.string() + ": cannot write cache entry");
    }
    std::filesystem::rename(tmp, entry(key));
}

ConeRays cached_extreme_rays(const RationalCone& cone, const DoubleDescriptionOptions& opts, const RayCache* cache)
{
    if (!cache)
        return extreme_rays(cone, opts);
    auto k = RayCache::key(cone);
    if (auto hit = cache->get(k))
        return *hit;
    auto rays = extreme_rays(cone, opts);
    cache->put(k, rays);
    return rays;
}

}  // namespace ternary
