#include "znil/abelian.hpp"

#include <algorithm>

#include "znil/factor.hpp"
#include "znil/intmath.hpp"

namespace znil {

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::uint64_t order) {
    FiniteAbelianGroup g;
    for (const auto& pp : factorize(order).factors) {
        g.cyclic_orders.push_back(checked_pow(pp.p, pp.k));
    }
    std::sort(g.cyclic_orders.begin(), g.cyclic_orders.end());
    return g;
}

std::uint64_t FiniteAbelianGroup::order() const {
    std::uint64_t r = 1;
    for (std::uint64_t c : cyclic_orders) r = checked_mul(r, c);
    return r;
}

std::string FiniteAbelianGroup::to_string() const {
    if (cyclic_orders.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
        if (i > 0) s += " x ";
        s += "Z_" + std::to_string(cyclic_orders[i]);
    }
    return s;
}

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    FiniteAbelianGroup g;
    g.cyclic_orders.reserve(a.cyclic_orders.size() + b.cyclic_orders.size());
    std::merge(a.cyclic_orders.begin(), a.cyclic_orders.end(), b.cyclic_orders.begin(),
               b.cyclic_orders.end(), std::back_inserter(g.cyclic_orders));
    return g;
}

}  // namespace znil
