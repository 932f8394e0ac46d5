#include "znil/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "znil/factor.hpp"

namespace znil::oracle {

namespace {

void require_within(std::uint64_t value, std::uint64_t enum_bound, const char* what) {
    if (value > enum_bound) {
        throw ResourceError(std::string(what) + ": " + std::to_string(value) +
                            " exceeds the enumeration bound " + std::to_string(enum_bound));
    }
}

void require_residue(std::uint64_t n, std::uint64_t m) {
    if (m >= n) {
        throw std::domain_error("oracle: " + std::to_string(m) +
                                " is not a canonical residue mod " + std::to_string(n));
    }
}

}  // namespace

std::uint32_t witness_exponent_bound(std::uint64_t n) {
    return std::max<std::uint32_t>(2, max_exponent(factorize(n)));
}

bool nilpotent_by_definition(std::uint64_t n, std::uint64_t m, std::uint64_t enum_bound) {
    require_within(n, enum_bound, "nilpotent_by_definition");
    require_residue(n, m);
    if (m == 0) return true;
    const std::uint32_t J = witness_exponent_bound(n);
    for (std::uint64_t r = 0; r < n; ++r) {
        const std::uint64_t rm = mulmod(r, m, n);
        if (rm == 0) continue;
        std::uint64_t x = rm;  // r^j m for the current j
        for (std::uint32_t j = 2; j <= J; ++j) {
            x = mulmod(x, r, n);
            if (x == 0) return true;
        }
    }
    return false;
}

std::vector<bool> nilpotent_flags(std::uint64_t n, std::uint64_t enum_bound) {
    require_within(n, enum_bound, "nilpotent_flags");
    if (n == 0) throw std::domain_error("nilpotent_flags: n must be positive");
    std::vector<bool> nil(n, false);
    nil[0] = true;
    if (n == 1) return nil;
    const std::uint32_t J = witness_exponent_bound(n);
    // The kill-sets {m : r^j m = 0} are nested increasing in j, so their
    // union over j in [2, J] is the kill-set at J alone: exactly the
    // multiples of n / gcd(r^J, n).
    for (std::uint64_t r = 2; r < n; ++r) {  // r = 0, 1 can never witness
        std::uint64_t x = r;
        for (std::uint32_t j = 2; j <= J && x != 0; ++j) x = mulmod(x, r, n);
        const std::uint64_t g = std::gcd(x, n);  // gcd(0, n) == n
        const std::uint64_t step = n / g;
        for (std::uint64_t m = step; m < n; m += step) {
            if (!nil[m] && mulmod(r, m, n) != 0) nil[m] = true;
        }
    }
    return nil;
}

std::vector<std::uint64_t> kernel_of_multiplication(std::uint64_t p, std::uint32_t k,
                                                    std::uint32_t e, std::uint64_t enum_bound) {
    const std::uint64_t q = checked_pow(p, k);
    require_within(q, enum_bound, "kernel_of_multiplication");
    const std::uint64_t a = powmod(p, e, q);
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < q; ++m) {
        if (mulmod(a, m, q) == 0) out.push_back(m);
    }
    return out;
}

std::vector<std::uint64_t> image_of_multiplication(std::uint64_t p, std::uint32_t k,
                                                   std::uint32_t e, std::uint64_t enum_bound) {
    const std::uint64_t q = checked_pow(p, k);
    require_within(q, enum_bound, "image_of_multiplication");
    const std::uint64_t a = powmod(p, e, q);
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < q; ++m) out.push_back(mulmod(a, m, q));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FiniteAbelianGroup cohomology_brute(std::uint64_t p, std::uint32_t k, std::uint32_t n,
                                    std::uint64_t enum_bound) {
    if (n < 1) throw std::domain_error("cohomology_brute: index must be positive");
    const auto ker = kernel_of_multiplication(p, k, n + 1, enum_bound);
    const auto im = image_of_multiplication(p, k, n, enum_bound);
    if (!std::includes(ker.begin(), ker.end(), im.begin(), im.end())) {
        throw ComplexViolationError("cohomology_brute: im f_{p^" + std::to_string(n) +
                                    "} is not contained in ker f_{p^" + std::to_string(n + 1) +
                                    "} for p^k = " + std::to_string(checked_pow(p, k)));
    }
    // Quotients of cyclic groups are cyclic.
    return FiniteAbelianGroup::cyclic(ker.size() / im.size());
}

std::vector<std::uint64_t> span_of_nilpotents(std::uint64_t n, std::uint64_t enum_bound) {
    require_within(n, enum_bound, "span_of_nilpotents");
    const std::vector<bool> nil = nilpotent_flags(n, enum_bound);
    std::vector<bool> in(n, false);
    std::vector<std::uint64_t> members;
    for (std::uint64_t m = 0; m < n; ++m) {
        if (nil[m]) {
            in[m] = true;
            members.push_back(m);
        }
    }
    // Additive closure over all pairs, stopping once the whole module is in.
    for (std::size_t i = 0; i < members.size() && members.size() < n; ++i) {
        for (std::size_t j = 0; j <= i && members.size() < n; ++j) {
            const std::uint64_t s = (members[i] + members[j]) % n;
            if (!in[s]) {
                in[s] = true;
                members.push_back(s);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

FiniteAbelianGroup quotient_by_non_nilpotents(std::uint64_t n, std::uint64_t enum_bound) {
    require_within(n, enum_bound, "quotient_by_non_nilpotents");
    const std::vector<bool> nil = nilpotent_flags(n, enum_bound);
    std::vector<std::uint64_t> N;
    N.push_back(0);
    for (std::uint64_t m = 1; m < n; ++m) {
        if (!nil[m]) N.push_back(m);
    }
    // A subset of Z/nZ containing 0 is a subgroup exactly when it is the
    // full set of multiples of its least positive element g with g | n;
    // addition closure then holds and scaling closure is repeated addition.
    if (N.size() > 1) {
        const std::uint64_t g = N[1];
        if (n % g != 0 || N.size() != n / g) {
            throw StructuralViolationError(
                "quotient_by_non_nilpotents: N is not a subgroup for n = " + std::to_string(n));
        }
        for (std::size_t i = 0; i < N.size(); ++i) {
            if (N[i] != i * g) {
                throw StructuralViolationError(
                    "quotient_by_non_nilpotents: N is not a subgroup for n = " +
                    std::to_string(n));
            }
        }
    }
    return FiniteAbelianGroup::cyclic(n / N.size());
}

bool satisfies_torsion_p2_condition(std::uint64_t n, std::uint64_t enum_bound) {
    require_within(n, enum_bound, "satisfies_torsion_p2_condition");
    if (n == 0) throw std::domain_error("satisfies_torsion_p2_condition: n must be positive");
    if (n == 1) return true;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t q = p * p; q <= n; q += p) composite[q] = true;
        // The m with p^2 m = 0 are exactly the multiples of n / gcd(p^2, n);
        // check p m = 0 on each of them.
        const std::uint64_t g = std::gcd(mulmod(p % n, p % n, n), n);
        for (std::uint64_t m = 0; m < n; m += n / g) {
            if (mulmod(p % n, m, n) != 0) return false;
        }
    }
    return true;
}

}  // namespace znil::oracle
