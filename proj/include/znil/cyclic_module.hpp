#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "znil/factor.hpp"
#include "znil/intmath.hpp"

namespace znil {

// The Z-module Z/nZ with its factorization attached. Elements are canonical
// residues in [0, n). n == 1 is the zero module.
struct CyclicModule {
    Factorization f;

    std::uint64_t n() const { return f.n; }

    static CyclicModule of(std::uint64_t n) { return CyclicModule{factorize(n)}; }

    friend bool operator==(const CyclicModule&, const CyclicModule&) = default;
};

enum class ElementClass { Zero, Nilpotent, NonNilpotent };

// d = prod p_i^(k_i - 1): the nonzero multiples of d are exactly the
// non-nilpotent elements, and d generates {0} union {non-nilpotents} as a
// submodule. d == 1 for reduced modules and for the zero module.
std::uint64_t non_nilpotent_generator(const CyclicModule& M);

// Closed-form classification: Zero for m == 0, NonNilpotent for nonzero
// multiples of non_nilpotent_generator, Nilpotent otherwise.
// Throws std::domain_error when m is not a canonical residue.
ElementClass classify_element(const CyclicModule& M, std::uint64_t m);

// radical - 1; zero for the zero module. The class invariant: it depends on
// the primes only, never their exponents.
std::uint64_t non_nilpotent_count(const CyclicModule& M);

// Ascending list m*d for m = 1..radical-1, truncated to limit when given.
// Without a limit, n past enum_bound is a ResourceError.
std::vector<std::uint64_t> non_nilpotent_elements(
    const CyclicModule& M, std::optional<std::uint64_t> limit = std::nullopt,
    std::uint64_t enum_bound = kDefaultEnumBound);

// Ascending list of the nonzero nilpotent elements, same bound contract.
std::vector<std::uint64_t> nilpotent_elements(
    const CyclicModule& M, std::optional<std::uint64_t> limit = std::nullopt,
    std::uint64_t enum_bound = kDefaultEnumBound);

// True iff every exponent is 1, i.e. no nonzero nilpotent elements.
bool is_reduced(const CyclicModule& M);

// For Z/nZ semisimplicity and reducedness coincide.
bool is_semisimple(const CyclicModule& M);

// Same class <=> same radical <=> same number of non-nilpotent elements.
bool same_class(const CyclicModule& a, const CyclicModule& b);

// One reduction step: N = <d> is {0} union {non-nilpotents}, and M/N is
// cyclic of order d with each exponent dropped by one.
struct ReductionStep {
    std::uint64_t generator;  // d, as a canonical residue of M
    CyclicModule quotient;    // Z/dZ
};

// Total: a reduced module maps to the zero module (d == 1, N = M).
ReductionStep reduce_once(const CyclicModule& M);

// M = M_0, M_1, ..., M_t with M_{i+1} = reduce_once(M_i).quotient, stopping
// at the first reduced module. Length is max exponent for non-reduced M.
struct ReductionChain {
    std::vector<CyclicModule> steps;
};

ReductionChain reduction_chain(const CyclicModule& M);

}  // namespace znil
