#include "znil/cyclic_module.hpp"

#include <stdexcept>
#include <string>

#include "znil/errors.hpp"

namespace znil {

std::uint64_t non_nilpotent_generator(const CyclicModule& M) {
    std::uint64_t d = 1;
    for (const auto& pp : M.f.factors) d *= checked_pow(pp.p, pp.k - 1);  // divides n
    return d;
}

ElementClass classify_element(const CyclicModule& M, std::uint64_t m) {
    if (m >= M.n()) {
        throw std::domain_error("classify_element: " + std::to_string(m) +
                                " is not a canonical residue mod " + std::to_string(M.n()));
    }
    if (m == 0) return ElementClass::Zero;
    return m % non_nilpotent_generator(M) == 0 ? ElementClass::NonNilpotent
                                               : ElementClass::Nilpotent;
}

std::uint64_t non_nilpotent_count(const CyclicModule& M) { return radical(M.f) - 1; }

namespace {

void check_enum_bound(const CyclicModule& M, const std::optional<std::uint64_t>& limit,
                      std::uint64_t enum_bound) {
    if (!limit && M.n() > enum_bound) {
        throw ResourceError("element enumeration: n = " + std::to_string(M.n()) +
                            " exceeds the bound " + std::to_string(enum_bound) +
                            " and no limit was given");
    }
}

}  // namespace

std::vector<std::uint64_t> non_nilpotent_elements(const CyclicModule& M,
                                                  std::optional<std::uint64_t> limit,
                                                  std::uint64_t enum_bound) {
    check_enum_bound(M, limit, enum_bound);
    const std::uint64_t d = non_nilpotent_generator(M);
    std::uint64_t count = non_nilpotent_count(M);
    if (limit) count = std::min(count, *limit);
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t m = 1; m <= count; ++m) out.push_back(m * d);
    return out;
}

std::vector<std::uint64_t> nilpotent_elements(const CyclicModule& M,
                                              std::optional<std::uint64_t> limit,
                                              std::uint64_t enum_bound) {
    check_enum_bound(M, limit, enum_bound);
    const std::uint64_t d = non_nilpotent_generator(M);
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m < M.n(); ++m) {
        if (limit && out.size() >= *limit) break;
        if (m % d != 0) out.push_back(m);
    }
    return out;
}

bool is_reduced(const CyclicModule& M) { return is_squarefree(M.f); }

bool is_semisimple(const CyclicModule& M) { return is_reduced(M); }

bool same_class(const CyclicModule& a, const CyclicModule& b) {
    return radical(a.f) == radical(b.f);
}

ReductionStep reduce_once(const CyclicModule& M) {
    std::vector<PrimePower> parts;
    for (const auto& pp : M.f.factors) {
        if (pp.k >= 2) parts.push_back({pp.p, pp.k - 1});
    }
    CyclicModule quotient{factorization_from_parts(std::move(parts))};
    const std::uint64_t d = non_nilpotent_generator(M);
    return ReductionStep{d % M.n(), std::move(quotient)};
}

ReductionChain reduction_chain(const CyclicModule& M) {
    ReductionChain chain;
    chain.steps.push_back(M);
    while (!is_reduced(chain.steps.back())) {
        chain.steps.push_back(reduce_once(chain.steps.back()).quotient);
    }
    return chain;
}

}  // namespace znil
