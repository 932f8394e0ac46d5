#include "znil/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "znil/intmath.hpp"

namespace znil {

std::uint32_t start_index(std::uint32_t k) {
    if (k < 1) throw std::domain_error("start_index: k must be >= 1");
    return std::max<std::uint32_t>(1, k / 2);  // ceil((k-1)/2) == floor(k/2)
}

std::uint64_t QuotientPresentation::order() const { return checked_pow(p, b - a); }

FiniteAbelianGroup QuotientPresentation::canonical() const {
    if (is_trivial()) return FiniteAbelianGroup::trivial();
    return FiniteAbelianGroup{{order()}};
}

std::string QuotientPresentation::to_string() const {
    if (is_trivial()) return "0";
    const std::string mod = "Z_" + std::to_string(checked_pow(p, k));
    if (a == 0 && b == k) return mod;
    auto coeff = [this](std::uint32_t e) {
        return e == 0 ? std::string() : std::to_string(checked_pow(p, e));
    };
    return coeff(a) + mod + "/" + coeff(b) + mod;
}

QuotientPresentation cohomology_prime_power(std::uint64_t p, std::uint32_t k, std::uint32_t n) {
    const std::uint32_t r = start_index(k);
    if (n < r) {
        throw std::out_of_range("cohomology_prime_power: index " + std::to_string(n) +
                                " is below the start index " + std::to_string(r) + " for k = " +
                                std::to_string(k));
    }
    if (k == 1) return {p, k, 0, 1};
    if (n <= k - 1) return {p, k, k - 1 - n, n};
    return {p, k, 0, k};
}

std::uint32_t first_valid_index(const CyclicModule& M) {
    std::uint32_t r = 1;
    for (const auto& pp : M.f.factors) r = std::max(r, start_index(pp.k));
    return r;
}

std::uint32_t stabilization_index(const CyclicModule& M) {
    return std::max<std::uint32_t>(1, max_exponent(M.f));
}

CompositeCohomology cohomology_composite(const CyclicModule& M, std::uint32_t n) {
    if (n < first_valid_index(M)) {
        throw std::out_of_range("cohomology_composite: index " + std::to_string(n) +
                                " is below the first valid index " +
                                std::to_string(first_valid_index(M)));
    }
    CompositeCohomology result;
    result.group = FiniteAbelianGroup::trivial();
    for (const auto& pp : M.f.factors) {
        QuotientPresentation q = cohomology_prime_power(pp.p, pp.k, n);
        result.group = direct_sum(result.group, q.canonical());
        result.presentations.push_back(std::move(q));
    }
    return result;
}

CohomologySequence cohomology_sequence(const CyclicModule& M, std::uint32_t horizon) {
    CohomologySequence seq;
    seq.module = M;
    seq.defined_from = first_valid_index(M);
    seq.stabilization_index = stabilization_index(M);
    seq.limit = FiniteAbelianGroup::cyclic(M.n());
    if (horizon < seq.stabilization_index) {
        throw std::domain_error("cohomology_sequence: horizon " + std::to_string(horizon) +
                                " is below the stabilization index " +
                                std::to_string(seq.stabilization_index));
    }
    for (std::uint32_t n = seq.defined_from; n <= horizon; ++n) {
        seq.groups.push_back({n, cohomology_composite(M, n)});
    }
    for (const auto& g : seq.groups) {
        if (g.index >= seq.stabilization_index && g.value.group != seq.limit) {
            throw std::logic_error("cohomology_sequence: not constant past stabilization");
        }
    }
    return seq;
}

std::uint64_t distinct_from_limit_count(std::uint64_t p, std::uint32_t k) {
    if (!is_prime(p)) throw std::domain_error("distinct_from_limit_count: p must be prime");
    if (k <= 1) throw std::domain_error("distinct_from_limit_count: k must be > 1");
    return k - start_index(k);
}

bool is_constant_sequence(const CyclicModule& M, std::uint32_t horizon) {
    const std::uint32_t first = first_valid_index(M);
    if (horizon < std::max(stabilization_index(M), 2u)) {
        throw std::domain_error("is_constant_sequence: horizon too small");
    }
    const FiniteAbelianGroup head = cohomology_composite(M, first).group;
    for (std::uint32_t n = first + 1; n <= horizon; ++n) {
        if (cohomology_composite(M, n).group != head) return false;
    }
    return true;
}

}  // namespace znil
