#pragma once

#include <cstdint>
#include <vector>

#include "znil/abelian.hpp"
#include "znil/errors.hpp"
#include "znil/intmath.hpp"

// Definition-level recomputation of every closed form in the library, used
// by the property tests and the CLI verify sweep. Nothing in this namespace
// consults the closed forms it checks.
namespace znil::oracle {

// J = max(2, largest exponent of n). Valuations of r^j m are monotone in j
// and saturate at the exponents of n, so witnesses past J add nothing.
std::uint32_t witness_exponent_bound(std::uint64_t n);

// Literal witness search: m is nilpotent iff m == 0 or some r in [0, n) and
// j in [2, J] give r^j m = 0 with r m != 0.
bool nilpotent_by_definition(std::uint64_t n, std::uint64_t m,
                             std::uint64_t enum_bound = kDefaultEnumBound);

// flags[m] == nilpotent_by_definition(n, m) for every m, computed in one
// pass over the witness space.
std::vector<bool> nilpotent_flags(std::uint64_t n,
                                  std::uint64_t enum_bound = kDefaultEnumBound);

// {m in [0, p^k) : p^e m = 0 mod p^k}, ascending.
std::vector<std::uint64_t> kernel_of_multiplication(std::uint64_t p, std::uint32_t k,
                                                    std::uint32_t e,
                                                    std::uint64_t enum_bound = kDefaultEnumBound);

// {p^e m mod p^k : m in [0, p^k)}, ascending, deduplicated.
std::vector<std::uint64_t> image_of_multiplication(std::uint64_t p, std::uint32_t k,
                                                   std::uint32_t e,
                                                   std::uint64_t enum_bound = kDefaultEnumBound);

// H^n as literal ker(f_{p^{n+1}}) / im(f_{p^n}). Verifies the containment
// im <= ker first and raises ComplexViolationError when it fails, which is
// exactly what happens below the start index.
FiniteAbelianGroup cohomology_brute(std::uint64_t p, std::uint32_t k, std::uint32_t n,
                                    std::uint64_t enum_bound = kDefaultEnumBound);

// Smallest subset of Z/nZ containing every nilpotent element and closed
// under addition, ascending.
std::vector<std::uint64_t> span_of_nilpotents(std::uint64_t n,
                                              std::uint64_t enum_bound = kDefaultEnumBound);

// Builds N = {0} union {non-nilpotent elements}, checks it is a subgroup
// (StructuralViolationError otherwise), and returns the canonical form of
// the coset group, cyclic of order n/|N|.
FiniteAbelianGroup quotient_by_non_nilpotents(std::uint64_t n,
                                              std::uint64_t enum_bound = kDefaultEnumBound);

// For every prime p <= n and every m: p^2 m = 0 implies p m = 0.
bool satisfies_torsion_p2_condition(std::uint64_t n,
                                    std::uint64_t enum_bound = kDefaultEnumBound);

}  // namespace znil::oracle
