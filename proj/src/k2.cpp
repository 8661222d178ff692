#include "tamekernel/k2.hpp"

#include "tamekernel/classgroups.hpp"
#include "tamekernel/lvalues.hpp"

namespace tamekernel {

std::int64_t w2(const Discriminant& D) {
    if (D.value == 5) return 120;
    if (D.value == 8) return 48;
    if (D.value > 8) return 24;
    throw DomainError("w2 needs D = 5, 8 or D > 8");
}

BigInt k2_order(const Discriminant& D) {
    if (D.value <= 8) throw DomainError("corollary requires D > 8");
    Rational order = Rational(-2) * l_at_minus1(D).value;
    if (!order.is_integer() || order.sign() <= 0) {
        throw std::logic_error("-2 L(chi_D,-1) is not a positive integer for D = " + std::to_string(D.value));
    }
    return order.num();
}

K2Report resolve_structure(const Discriminant& D) {
    if (D.value <= 8) throw DomainError("corollary requires D > 8");
    K2Report rep;
    rep.D = D.value;
    rep.l_value = l_at_minus1(D).value;
    rep.zeta_minus1 = -rep.l_value / Rational(12);
    rep.w2 = w2(D);
    rep.k2_order = k2_order(D);
    rep.v2_order = val2(rep.k2_order);
    rep.family = classify(D);
    rep.r2 = r2_k2(D);
    R4Bound bound = r4_k2_bound(D);
    rep.r4_bounds = {bound.bound_low, bound.bound_high};

    const long v2 = rep.v2_order;
    const long r2 = rep.r2;
    if (v2 == r2) {
        rep.structure = std::vector<BigInt>(static_cast<std::size_t>(r2), BigInt(2));
    } else if (bound.bound_high <= 1 && v2 > r2 && r2 >= 1) {
        // 4-rank at most one: all but one component has order 2
        std::vector<BigInt> parts(static_cast<std::size_t>(r2 - 1), BigInt(2));
        BigInt top = 1;
        top <<= static_cast<unsigned long>(v2 - r2 + 1);
        parts.push_back(top);
        rep.structure = std::move(parts);
        if (rep.family.kind == FamilyKind::Mod83Case2c) rep.delta = v2 - r2 + 1;
    }
    return rep;
}

}  // namespace tamekernel
