#pragma once

#include <stdexcept>
#include <string>

namespace ternary {

/** Malformed input or violated precondition. Maps to CLI exit code 2. */
class ValidationError : public std::runtime_error
{
    public:
        explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/** A configured size cap (rows, rays, kernel dimension) was exceeded. Maps to exit code 3. */
class ResourceLimitError : public std::runtime_error
{
    public:
        explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ternary
