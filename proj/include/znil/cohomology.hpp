#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "znil/abelian.hpp"
#include "znil/cyclic_module.hpp"

namespace znil {

// Least positive r with 2r+1 >= k: the exponent at which the complex of
// multiplication maps on Z_{p^k} starts. Consecutive exponents e, e+1 from r
// on satisfy e + (e+1) >= k, so the composite of neighbouring maps is zero.
std::uint32_t start_index(std::uint32_t k);

// The group p^a Z_{p^k} / p^b Z_{p^k}, cyclic of order p^(b-a).
// Invariant: 0 <= a <= b <= k.
struct QuotientPresentation {
    std::uint64_t p = 2;
    std::uint32_t k = 1;
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    bool is_trivial() const { return a == b; }
    std::uint64_t order() const;
    FiniteAbelianGroup canonical() const;

    // "0" when trivial, "Z_8" when the whole module, else e.g. "Z_8/4Z_8".
    std::string to_string() const;

    friend bool operator==(const QuotientPresentation&, const QuotientPresentation&) = default;
};

// H^n of the multiplication complex on Z_{p^k}. The position with index n
// has incoming map f_{p^n} and outgoing map f_{p^{n+1}}.
// Throws std::out_of_range for n < start_index(k): the complex has no
// position there.
QuotientPresentation cohomology_prime_power(std::uint64_t p, std::uint32_t k, std::uint32_t n);

// Least index valid for every prime of M: max over primes of start_index(k_i),
// 1 for the zero module.
std::uint32_t first_valid_index(const CyclicModule& M);

// Least index from which the cohomology sequence is constant: the maximal
// exponent, 1 for reduced modules and the zero module.
std::uint32_t stabilization_index(const CyclicModule& M);

// H^n of a composite modulus: cohomology commutes with the CRT splitting,
// so the result is the per-prime list plus their canonical product.
struct CompositeCohomology {
    std::vector<QuotientPresentation> presentations;  // one per prime of M
    FiniteAbelianGroup group;                         // trivial factors dropped
};

CompositeCohomology cohomology_composite(const CyclicModule& M, std::uint32_t n);

struct IndexedCohomology {
    std::uint32_t index = 0;
    CompositeCohomology value;
};

// The sequence H^n for n = defined_from..horizon together with its
// stabilization data. The limit is the canonical form of M itself.
struct CohomologySequence {
    CyclicModule module;
    std::uint32_t defined_from = 1;
    std::vector<IndexedCohomology> groups;
    std::uint32_t stabilization_index = 1;
    FiniteAbelianGroup limit;
};

// Requires horizon >= max exponent so stabilization is observable
// (std::domain_error otherwise).
CohomologySequence cohomology_sequence(const CyclicModule& M, std::uint32_t horizon);

// How many valid indices have H^n not isomorphic to Z_{p^k}; defined for
// k > 1 only (std::domain_error otherwise). Equals k - start_index(k).
std::uint64_t distinct_from_limit_count(std::uint64_t p, std::uint32_t k);

// True iff every group from the first valid index through horizon is
// isomorphic. Requires horizon >= max(max exponent, 2).
bool is_constant_sequence(const CyclicModule& M, std::uint32_t horizon);

}  // namespace znil
