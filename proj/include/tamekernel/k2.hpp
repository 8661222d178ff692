#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tamekernel/arith.hpp"
#include "tamekernel/characters.hpp"
#include "tamekernel/induction.hpp"

namespace tamekernel {

/// Order of the group of roots of unity W_2 for Q(sqrt D).
std::int64_t w2(const Discriminant& D);

/// #K_2 of the ring of integers, -2 L(chi_D,-1), for D > 8.
BigInt k2_order(const Discriminant& D);

struct K2Report {
    std::int64_t D = 0;
    Rational l_value;
    Rational zeta_minus1;
    std::int64_t w2 = 0;
    BigInt k2_order;
    long v2_order = 0;
    int r2 = 0;
    std::pair<int, int> r4_bounds{0, 0};
    /// 2-power cyclic orders, ascending; absent unless forced by the rank data.
    std::optional<std::vector<BigInt>> structure;
    std::optional<long> delta;
    FamilyTag family;
};

K2Report resolve_structure(const Discriminant& D);

}  // namespace tamekernel
