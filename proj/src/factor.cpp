#include "znil/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "znil/intmath.hpp"

namespace znil {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // Miller-Rabin with the first twelve primes is exact below 3.3e24,
    // which covers the whole 64-bit range.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Brent's cycle variant of Pollard rho. Deterministic: the polynomial
// constant is advanced in a fixed order until a split is found.
std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto step = [n, c](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t q = 1;
        int count = 0;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            if (x == y) break;  // cycle without factor, retry with next c
            q = mulmod(q, x > y ? x - y : y - x, n);
            if (++count % 64 == 0) {
                d = std::gcd(q, n);
                q = 1;
            }
        }
        if (d == 1 && x != y) d = std::gcd(x > y ? x - y : y - x, n);
        if (d != 1 && d != n) return d;
    }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, std::uint32_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

constexpr std::uint64_t kTrialBound = 1u << 16;

}  // namespace

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    Factorization f;
    f.n = n;
    std::uint64_t rest = n;
    std::map<std::uint64_t, std::uint32_t> exps;
    for (std::uint64_t d = 2; d <= kTrialBound && d * d <= rest; d += (d == 2 ? 1 : 2)) {
        while (rest % d == 0) {
            rest /= d;
            ++exps[d];
        }
    }
    factor_into(rest, exps);
    f.factors.reserve(exps.size());
    for (auto [p, k] : exps) f.factors.push_back({p, k});
    return f;
}

Factorization factorization_from_parts(std::vector<PrimePower> parts) {
    std::uint64_t n = 1;
    std::uint64_t last = 0;
    for (const auto& pp : parts) {
        if (pp.k < 1) throw std::domain_error("factorization: exponent must be >= 1");
        if (!is_prime(pp.p)) {
            throw std::domain_error("factorization: " + std::to_string(pp.p) + " is not prime");
        }
        if (pp.p <= last) {
            throw std::domain_error("factorization: primes must be strictly increasing");
        }
        last = pp.p;
        n = checked_mul(n, checked_pow(pp.p, pp.k));
    }
    return Factorization{std::move(parts), n};
}

std::uint64_t radical(const Factorization& f) {
    std::uint64_t r = 1;
    for (const auto& pp : f.factors) r *= pp.p;  // divides f.n, cannot overflow
    return r;
}

bool is_squarefree(const Factorization& f) {
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [](const PrimePower& pp) { return pp.k == 1; });
}

std::uint32_t max_exponent(const Factorization& f) {
    std::uint32_t m = 0;
    for (const auto& pp : f.factors) m = std::max(m, pp.k);
    return m;
}

std::optional<std::uint32_t> valuation(std::uint64_t m, std::uint64_t p) {
    if (!is_prime(p)) throw std::domain_error("valuation: p must be prime");
    if (m == 0) return std::nullopt;
    std::uint32_t e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

}  // namespace znil
