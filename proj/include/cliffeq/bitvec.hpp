#pragma once

#include <cstdint>
#include <vector>

namespace cliffeq {

using word_t = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t nbits) {
    return (nbits + kWordBits - 1) / kWordBits;
}

inline bool get_bit(const std::vector<word_t>& v, std::size_t i) {
    return (v[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set_bit(std::vector<word_t>& v, std::size_t i, bool b) {
    const word_t mask = word_t{1} << (i % kWordBits);
    if (b) {
        v[i / kWordBits] |= mask;
    } else {
        v[i / kWordBits] &= ~mask;
    }
}

inline void toggle_bit(std::vector<word_t>& v, std::size_t i) {
    v[i / kWordBits] ^= word_t{1} << (i % kWordBits);
}

}  // namespace cliffeq
