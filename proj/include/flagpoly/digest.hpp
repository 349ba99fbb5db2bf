#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace flagpoly {

// FNV-1a, used for stable content digests in reports and cache keys.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* dig = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[std::size_t(i)] = dig[v & 0xf];
        v >>= 4;
    }
    return out;
}

} // namespace flagpoly
