#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace znil {

// Default guard for element-listing and brute-force operations.
inline constexpr std::uint64_t kDefaultEnumBound = std::uint64_t{1} << 24;

// Overflow is always a reported error, never a wrapped value.
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow: " + std::to_string(a) + " * " +
                                  std::to_string(b));
    }
    return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    while (exp > 0) {
        if (exp & 1) r = checked_mul(r, base);
        exp >>= 1;
        if (exp > 0) base = checked_mul(base, base);
    }
    return r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    if (n == 1) return 0;
    std::uint64_t r = 1;
    base %= n;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, n);
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    return r;
}

}  // namespace znil
