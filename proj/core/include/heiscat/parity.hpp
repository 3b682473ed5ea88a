#pragma once

#include <cstdint>
#include <span>

namespace heiscat {

// Z/2 grading. Even = 0, odd = 1.
enum class Parity : uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return Parity(uint8_t(a) ^ uint8_t(b));
}

inline bool is_odd(Parity p) { return p == Parity::odd; }

// Sign picked up when a homogeneous block with parities `right` moves past
// a block with parities `left`: (-1)^(sum(left) * sum(right)).
inline int koszul_sign(std::span<const Parity> left, std::span<const Parity> right) {
    unsigned l = 0, r = 0;
    for (Parity p : left) l ^= uint8_t(p);
    for (Parity p : right) r ^= uint8_t(p);
    return (l & r & 1u) ? -1 : 1;
}

inline int koszul_sign(Parity left, Parity right) {
    return (is_odd(left) && is_odd(right)) ? -1 : 1;
}

} // namespace heiscat
