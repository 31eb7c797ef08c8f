#pragma once

#include <stdexcept>
#include <string>

namespace cds {

/// Single error type for the toolkit; messages carry the failing
/// module/operation and enough context to act on (file, line, id).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cds
