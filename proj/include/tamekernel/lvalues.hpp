#pragma once

#include <cstdint>
#include <vector>

#include "tamekernel/arith.hpp"
#include "tamekernel/characters.hpp"

namespace tamekernel {

/// B_n(X) with exact coefficients; coefficients[k] multiplies X^k.
struct BernoulliPolynomial {
    int degree = 0;
    std::vector<Rational> coefficients;

    Rational operator()(const Rational& x) const;
    BernoulliPolynomial derivative() const;
};

/// n-th Bernoulli number with B_1 = -1/2.
Rational bernoulli_number(int n);

/// B_n(X) = sum_k C(n,k) B_k X^{n-k}; n <= 20.
BernoulliPolynomial bernoulli_polynomial(int n);

/// L-value at s = -1. `excluded_modulus` is the g of L^{(g)}; it equals the
/// conductor for a primitive value.
struct LValue {
    Rational value;
    std::int64_t character_modulus = 0;
    std::int64_t excluded_modulus = 0;
    int s_point = -1;
};

/// B_{n,chi} = g^{n-1} sum_{a=1}^{g} chi(a) B_n(a/g). For an imprimitive chi the
/// result belongs to the imprimitive L-series.
Rational generalized_bernoulli(int n, const QuadChar& character, std::int64_t g);

/// B_{2,chi} = (1/g) sum_{a=1}^{g} chi(a) a^2, for nontrivial even chi.
Rational b2_chi(const QuadChar& character, std::int64_t g);

/// L(chi,-1) = -B_{2,chi}/2 for a primitive, nontrivial, even chi.
LValue l_at_minus1(const QuadChar& character);
LValue l_at_minus1(const Discriminant& D);

/// L^{(D)}(chi_d,-1) from the single sum over 1..D of (D d'/a) a^2, d' = D/d.
LValue l_imprimitive_direct(std::int64_t d, const Discriminant& D);

/// L^{(D)}(chi_d,-1) as prod_{p | D, p not dividing d} (1 - chi_d(p) p) times L(chi_d,-1).
LValue l_imprimitive_euler(std::int64_t d, const Discriminant& D);

/// Product of the d-factors selected by `subset` (bit i picks d_factors[i]).
std::int64_t subset_product(const Discriminant& D, std::uint32_t subset);

/// Bitmask of d-factors whose product is d; throws "invalid subfactor" otherwise.
std::uint32_t subset_of(const Discriminant& D, std::int64_t d);

/// The set G = { 1 <= a <= D : chi_{d_i}(a) = 1 for every d-factor }, ascending.
std::vector<std::int64_t> g_set(const Discriminant& D);

/// sum over a in G of a^2.
BigInt g_square_sum(const Discriminant& D);

constexpr int kMaxDFactors = 20;

}  // namespace tamekernel
