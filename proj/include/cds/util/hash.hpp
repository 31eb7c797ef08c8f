#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cds::util {

/// FNV-1a 64-bit. Stable across platforms and runs, which is what the
/// embedding cache and prompt hashes need; not cryptographic.
constexpr std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

inline std::string text_hash(std::string_view text) {
    return hex64(fnv1a64(text));
}

} // namespace cds::util
