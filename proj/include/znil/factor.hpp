#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace znil {

// One p^k term of a factorization. p is prime, k >= 1.
struct PrimePower {
    std::uint64_t p = 2;
    std::uint32_t k = 1;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization of n >= 1: primes strictly increasing, product equals
// n exactly. n == 1 is the empty factorization.
struct Factorization {
    std::vector<PrimePower> factors;
    std::uint64_t n = 1;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Trial division with a Pollard-rho stage for large cofactors. Deterministic.
// Throws std::domain_error for n == 0.
Factorization factorize(std::uint64_t n);

// Builds a Factorization from explicit parts, validating every invariant
// (primality, k >= 1, strictly increasing primes, exact product).
// Throws std::domain_error on a bad part and std::overflow_error if the
// product exceeds the 64-bit range.
Factorization factorization_from_parts(std::vector<PrimePower> parts);

// Product of the distinct primes of f; radical of the empty factorization is 1.
std::uint64_t radical(const Factorization& f);

// True iff every exponent equals 1 (vacuously true for n == 1).
bool is_squarefree(const Factorization& f);

// Largest exponent appearing in f; 0 for n == 1.
std::uint32_t max_exponent(const Factorization& f);

// Largest e with p^e | m. std::nullopt is the infinity marker for m == 0.
// Throws std::domain_error if p is not prime.
std::optional<std::uint32_t> valuation(std::uint64_t m, std::uint64_t p);

}  // namespace znil
