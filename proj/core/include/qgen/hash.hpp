#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qgen {

/// FNV-1a 64-bit. Used wherever a stable, platform-independent hash is
/// needed (request fingerprints, run ids, feature hashing); std::hash is
/// implementation-defined and unsuitable for anything persisted.
constexpr uint64_t fnv1a64(std::string_view data, uint64_t seed = 0xcbf29ce484222325ULL) {
    uint64_t h = seed;
    for (char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string to_hex16(uint64_t v);

} // namespace qgen
