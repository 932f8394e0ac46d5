// Acceptance suite: each check prints exactly one PASS/FAIL line. The heavy
// sweeps are exhaustive over their stated ranges, never sampled.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "znil/cli.hpp"
#include "znil/cohomology.hpp"
#include "znil/cyclic_module.hpp"
#include "znil/errors.hpp"
#include "znil/factor.hpp"
#include "znil/intmath.hpp"
#include "znil/oracle.hpp"
#include "znil/parallel.hpp"

using namespace znil;

namespace {

int g_failures = 0;

struct Collector {
    std::mutex mu;
    std::atomic<bool> ok{true};
    std::string detail;

    void fail(const std::string& msg) {
        const std::lock_guard<std::mutex> lock(mu);
        if (ok.load()) {
            ok.store(false);
            detail = msg;
        }
    }
};

template <typename Fn>
void criterion(int id, const std::string& name, double time_limit_s, Fn&& fn) {
    Collector c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        fn(c);
    } catch (const std::exception& e) {
        c.fail(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = c.ok.load();
    if (ok && time_limit_s > 0 && elapsed > time_limit_s) {
        ok = false;
        c.detail = "exceeded the time limit of " + std::to_string(time_limit_s) + " s";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << std::setw(2) << id << "] " << name << "  ("
              << std::fixed << std::setprecision(2) << elapsed << " s)";
    if (!ok) std::cout << "\n      " << c.detail;
    std::cout << "\n";
    if (!ok) ++g_failures;
}

std::string group_str(const FiniteAbelianGroup& g) { return g.to_string(); }

// --------------------------------------------------------------------------

void worked_example(Collector& c) {
    const CyclicModule M = CyclicModule::of(9000);

    const CompositeCohomology h1 = cohomology_composite(M, 1);
    const CompositeCohomology h2 = cohomology_composite(M, 2);
    const CompositeCohomology h3 = cohomology_composite(M, 3);
    if (h1.group != FiniteAbelianGroup{{3}}) c.fail("H^1 is " + group_str(h1.group));
    if (h2.group != FiniteAbelianGroup{{4, 9, 25}}) c.fail("H^2 is " + group_str(h2.group));
    if (h3.group != FiniteAbelianGroup{{8, 9, 125}}) c.fail("H^3 is " + group_str(h3.group));
    for (std::uint32_t m = 4; m <= 10; ++m) {
        if (cohomology_composite(M, m).group != h3.group) {
            c.fail("H^" + std::to_string(m) + " differs from H^3");
        }
    }

    auto texts = [](const CompositeCohomology& h) {
        std::vector<std::string> out;
        for (const auto& p : h.presentations) out.push_back(p.to_string());
        return out;
    };
    if (texts(h1) != std::vector<std::string>{"0", "Z_9/3Z_9", "0"}) {
        c.fail("H^1 presentations are wrong");
    }
    if (texts(h2) != std::vector<std::string>{"Z_8/4Z_8", "Z_9", "Z_125/25Z_125"}) {
        c.fail("H^2 presentations are wrong");
    }
    if (texts(h3) != std::vector<std::string>{"Z_8", "Z_9", "Z_125"}) {
        c.fail("H^3 presentations are wrong");
    }

    // The CLI must report the same thing.
    std::ostringstream out, err;
    if (cli::run({"cohomology", "9000", "--from", "1", "--to", "10"}, out, err) != 0) {
        c.fail("CLI cohomology command failed");
    }
    const std::string text = out.str();
    for (const char* needle :
         {"H^1 = 0 x Z_9/3Z_9 x 0 ~ Z_3", "H^2 = Z_8/4Z_8 x Z_9 x Z_125/25Z_125 ~ Z_4 x Z_9 x Z_25",
          "H^3 = Z_8 x Z_9 x Z_125 ~ Z_8 x Z_9 x Z_125", "stabilization index: 3"}) {
        if (text.find(needle) == std::string::npos) {
            c.fail(std::string("CLI output misses \"") + needle + "\"");
        }
    }
}

void prime_power_oracle_sweep(Collector& c) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= 1024; ++p) {
        if (is_prime(p)) primes.push_back(p);
    }
    parallel_for(0, primes.size(), [&](std::uint64_t i) {
        const std::uint64_t p = primes[i];
        for (std::uint32_t k = 1; checked_pow(p, k) <= 1024; ++k) {
            for (std::uint32_t n = start_index(k); n <= 2 * k; ++n) {
                const FiniteAbelianGroup closed = cohomology_prime_power(p, k, n).canonical();
                const FiniteAbelianGroup brute = oracle::cohomology_brute(p, k, n);
                if (closed != brute) {
                    c.fail("H^" + std::to_string(n) + "(Z_" + std::to_string(checked_pow(p, k)) +
                           "): closed " + group_str(closed) + ", brute " + group_str(brute));
                    return;
                }
            }
        }
    });
}

void vanishing_law(Collector& c) {
    for (std::uint64_t p : {2ull, 3ull}) {
        for (std::uint32_t k = 1; k <= 20; ++k) {
            for (std::uint32_t n = start_index(k); n <= 3 * k; ++n) {
                const bool trivial = cohomology_prime_power(p, k, n).is_trivial();
                if (trivial != (k == 2 * n + 1)) {
                    c.fail("p = " + std::to_string(p) + ", k = " + std::to_string(k) +
                           ", n = " + std::to_string(n));
                    return;
                }
            }
        }
    }
}

void distinct_group_count(Collector& c) {
    for (std::uint32_t k = 2; k <= 20; ++k) {
        const std::uint64_t formula = (k % 2 == 0) ? k / 2 : (k + 1) / 2;
        const std::uint64_t closed = distinct_from_limit_count(2, k);
        const FiniteAbelianGroup limit{{checked_pow(2, k)}};
        std::uint64_t scanned = 0;
        for (std::uint32_t n = start_index(k); n <= 3 * k; ++n) {
            if (cohomology_prime_power(2, k, n).canonical() != limit) ++scanned;
        }
        if (closed != formula || closed != scanned) {
            c.fail("k = " + std::to_string(k) + ": closed " + std::to_string(closed) +
                   ", formula " + std::to_string(formula) + ", scan " + std::to_string(scanned));
            return;
        }
    }
}

void nilpotency_sweep(Collector& c) {
    parallel_for(1, 5001, [&](std::uint64_t n) {
        if (!c.ok) return;
        const CyclicModule M = CyclicModule::of(n);
        const std::vector<bool> nil = oracle::nilpotent_flags(n);
        std::uint64_t non_nil = 0;
        for (std::uint64_t m = 0; m < n; ++m) {
            const bool closed_nil = classify_element(M, m) != ElementClass::NonNilpotent;
            if (closed_nil != nil[m]) {
                c.fail("n = " + std::to_string(n) + ", m = " + std::to_string(m));
                return;
            }
            if (!nil[m]) ++non_nil;
        }
        if (non_nilpotent_count(M) != non_nil || non_nil != radical(M.f) - 1) {
            c.fail("count mismatch at n = " + std::to_string(n));
        }
    });
}

void equivalences_sweep(Collector& c) {
    parallel_for(1, 5001, [&](std::uint64_t n) {
        if (!c.ok) return;
        const CyclicModule M = CyclicModule::of(n);
        const bool reduced = is_reduced(M);
        if (reduced != is_semisimple(M) || reduced != is_squarefree(M.f) ||
            reduced != oracle::satisfies_torsion_p2_condition(n)) {
            c.fail("n = " + std::to_string(n));
        }
    });
}

void constant_sequence_sweep(Collector& c) {
    parallel_for(1, 5001, [&](std::uint64_t n) {
        if (!c.ok) return;
        const CyclicModule M = CyclicModule::of(n);
        if (first_valid_index(M) != 1) return;
        const std::uint32_t horizon = stabilization_index(M) + 3;
        const bool constant = is_constant_sequence(M, horizon);
        if (constant != is_reduced(M)) {
            c.fail("n = " + std::to_string(n));
            return;
        }
        if (constant) {
            FiniteAbelianGroup primes;
            for (const auto& pp : M.f.factors) primes.cyclic_orders.push_back(pp.p);
            if (cohomology_composite(M, 1).group != primes) {
                c.fail("constant group at n = " + std::to_string(n) + " is not the prime product");
            }
        }
    });
}

void quotient_sweep(Collector& c) {
    parallel_for(1, 5001, [&](std::uint64_t n) {
        if (!c.ok) return;
        const CyclicModule M = CyclicModule::of(n);
        FiniteAbelianGroup cosets;
        try {
            cosets = oracle::quotient_by_non_nilpotents(n);
        } catch (const StructuralViolationError& e) {
            c.fail(e.what());
            return;
        }
        const std::uint64_t d = non_nilpotent_generator(M);
        const ReductionStep step = reduce_once(M);
        if (step.quotient.n() != d || cosets != FiniteAbelianGroup::cyclic(d)) {
            c.fail("n = " + std::to_string(n) + ": cosets " + group_str(cosets) +
                   ", closed order " + std::to_string(d));
        }
    });
}

void stabilization_sweep(Collector& c) {
    // Closed form on random factored moduli up to 1e12.
    std::mt19937_64 rng(20260810);
    const std::vector<std::uint64_t> pool = {2,   3,    5,    7,    11,    13,    17,    101,
                                             257, 1009, 4099, 65537, 999983};
    constexpr std::uint64_t kCap = 1000000000000ull;
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<PrimePower> parts;
        std::uint64_t product = 1;
        std::uint64_t count = 1 + rng() % 4;
        std::vector<std::uint64_t> chosen;
        while (chosen.size() < count) {
            const std::uint64_t p = pool[rng() % pool.size()];
            if (std::find(chosen.begin(), chosen.end(), p) != chosen.end()) continue;
            chosen.push_back(p);
        }
        std::sort(chosen.begin(), chosen.end());
        for (std::uint64_t p : chosen) {
            std::uint32_t emax = 0;
            std::uint64_t power = 1;
            while (power <= kCap / product / p) {
                power *= p;
                ++emax;
            }
            if (emax == 0) continue;
            const std::uint32_t e = 1 + rng() % emax;
            parts.push_back({p, e});
            product *= checked_pow(p, e);
        }
        if (parts.empty()) continue;
        const CyclicModule M{factorization_from_parts(parts)};
        const CohomologySequence seq = cohomology_sequence(M, stabilization_index(M) + 3);
        if (seq.stabilization_index != std::max<std::uint32_t>(1, max_exponent(M.f)) ||
            seq.limit != FiniteAbelianGroup::cyclic(M.n())) {
            c.fail("closed form fails at n = " + std::to_string(M.n()));
            return;
        }
    }

    // Kernel/image enumeration for every modulus up to 2000.
    parallel_for(1, 2001, [&](std::uint64_t n) {
        if (!c.ok) return;
        const CyclicModule M = CyclicModule::of(n);
        const std::uint32_t first = first_valid_index(M);
        const std::uint32_t horizon = stabilization_index(M) + 2;
        std::vector<FiniteAbelianGroup> seq;
        for (std::uint32_t idx = first; idx <= horizon; ++idx) {
            FiniteAbelianGroup g;
            for (const auto& pp : M.f.factors) {
                g = direct_sum(g, oracle::cohomology_brute(pp.p, pp.k, idx));
            }
            seq.push_back(std::move(g));
        }
        std::uint32_t least = horizon;
        while (least > first && seq[least - 1 - first] == seq.back()) --least;
        if (least != stabilization_index(M) || seq.back() != FiniteAbelianGroup::cyclic(n)) {
            c.fail("enumeration fails at n = " + std::to_string(n));
        }
    });
}

void span_collapse_sweep(Collector& c) {
    parallel_for(1, 2001, [&](std::uint64_t n) {
        if (!c.ok) return;
        const std::vector<std::uint64_t> span = oracle::span_of_nilpotents(n);
        if (is_reduced(CyclicModule::of(n))) {
            if (span != std::vector<std::uint64_t>{0}) {
                c.fail("reduced n = " + std::to_string(n) + " has span size " +
                       std::to_string(span.size()));
            }
        } else if (span.size() != n) {
            c.fail("non-reduced n = " + std::to_string(n) + " has span size " +
                   std::to_string(span.size()));
        }
    });
}

}  // namespace

int main() {
    std::cout << "acceptance suite\n";
    criterion(1, "worked example n = 9000 reproduces every group", 1.0, worked_example);
    criterion(2, "prime-power cohomology equals enumeration for p^k <= 1024", 30.0,
              prime_power_oracle_sweep);
    criterion(3, "middle groups vanish exactly at k = 2n+1 for k <= 20", 0, vanishing_law);
    criterion(4, "count of groups away from the limit for k in [2,20]", 0, distinct_group_count);
    criterion(5, "element classification sweep over all n <= 5000", 120.0, nilpotency_sweep);
    criterion(6, "reduced/semisimple/squarefree/torsion agree for n <= 5000", 0,
              equivalences_sweep);
    criterion(7, "constant sequence iff reduced for n <= 5000", 0, constant_sequence_sweep);
    criterion(8, "coset quotient matches the reduction step for n <= 5000", 0, quotient_sweep);
    criterion(9, "stabilization index and limit (500 random n <= 1e12, all n <= 2000)", 0,
              stabilization_sweep);
    criterion(10, "nilpotent span collapse for n <= 2000", 0, span_collapse_sweep);
    if (g_failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criteria failed\n";
    return 1;
}
