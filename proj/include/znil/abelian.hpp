#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace znil {

// Canonical isomorphism class of a finite abelian group: the multiset of
// prime-power cyclic orders, sorted ascending. The empty multiset is the
// trivial group. For products of cyclic p-groups this multiset is a complete
// isomorphism invariant, so equality of values is the isomorphism test.
struct FiniteAbelianGroup {
    std::vector<std::uint64_t> cyclic_orders;

    static FiniteAbelianGroup trivial() { return {}; }

    // The class of the cyclic group of the given order, split into its
    // prime-power components.
    static FiniteAbelianGroup cyclic(std::uint64_t order);

    bool is_trivial() const { return cyclic_orders.empty(); }

    // Product of the cyclic orders; throws std::overflow_error past 64 bits.
    std::uint64_t order() const;

    // "0" for the trivial group, else "Z_4 x Z_9 x Z_25".
    std::string to_string() const;

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

// Direct sum: merged multiset of cyclic orders.
FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

}  // namespace znil
