#include "tamekernel/lvalues.hpp"

#include <algorithm>

#include "tamekernel/charsum.hpp"

namespace tamekernel {

namespace {

BigInt binomial(int n, int k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt power(const BigInt& base, int e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

void require_period_divides(const QuadChar& character, std::int64_t g) {
    if (g <= 0 || g % (character.conductor() < 0 ? -character.conductor() : character.conductor()) != 0) {
        throw DomainError("modulus not a multiple of conductor");
    }
    if (g % character.period() != 0) {
        throw DomainError("modulus not a multiple of the character's period");
    }
}

void require_d_factors(const Discriminant& D) {
    if (!D.has_d_factorization()) {
        throw DomainError("discriminant " + std::to_string(D.value) + " has no d-factorization");
    }
    if (static_cast<int>(D.d_factors.size()) > kMaxDFactors) {
        throw DomainError("too many d-factors");
    }
}

}  // namespace

Rational BernoulliPolynomial::operator()(const Rational& x) const {
    Rational acc;
    for (int k = degree; k >= 0; --k) acc = acc * x + coefficients[static_cast<std::size_t>(k)];
    return acc;
}

BernoulliPolynomial BernoulliPolynomial::derivative() const {
    BernoulliPolynomial d;
    d.degree = degree > 0 ? degree - 1 : 0;
    d.coefficients.assign(static_cast<std::size_t>(d.degree + 1), Rational());
    for (int k = 1; k <= degree; ++k) {
        d.coefficients[static_cast<std::size_t>(k - 1)] = coefficients[static_cast<std::size_t>(k)] * Rational(k);
    }
    return d;
}

Rational bernoulli_number(int n) {
    if (n < 0) throw DomainError("Bernoulli index must be non-negative");
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    std::vector<Rational> b(static_cast<std::size_t>(n + 1));
    b[0] = Rational(1);
    for (int m = 1; m <= n; ++m) {
        Rational s;
        for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(m)] = -s / Rational(m + 1);
    }
    return b[static_cast<std::size_t>(n)];
}

BernoulliPolynomial bernoulli_polynomial(int n) {
    if (n < 0 || n > 20) throw DomainError("Bernoulli polynomial degree must be in [0, 20]");
    BernoulliPolynomial p;
    p.degree = n;
    p.coefficients.assign(static_cast<std::size_t>(n + 1), Rational());
    for (int k = 0; k <= n; ++k) {
        p.coefficients[static_cast<std::size_t>(n - k)] = Rational(binomial(n, k)) * bernoulli_number(k);
    }
    return p;
}

Rational generalized_bernoulli(int n, const QuadChar& character, std::int64_t g) {
    if (n < 1) throw DomainError("generalized Bernoulli index must be positive");
    require_period_divides(character, g);
    BernoulliPolynomial poly = bernoulli_polynomial(n);
    // sum_a chi(a) B_n(a/g) = sum_k c_k g^{-k} sum_a chi(a) a^k
    std::vector<BigInt> power_sums(static_cast<std::size_t>(n + 1), BigInt(0));
    for (std::int64_t a = 1; a <= g; ++a) {
        int c = character(a);
        if (c == 0) continue;
        BigInt term = 1;
        BigInt big_a = from_int64(a);
        for (int k = 0; k <= n; ++k) {
            if (c > 0) {
                power_sums[static_cast<std::size_t>(k)] += term;
            } else {
                power_sums[static_cast<std::size_t>(k)] -= term;
            }
            term *= big_a;
        }
    }
    BigInt big_g = from_int64(g);
    Rational total;
    for (int k = 0; k <= n; ++k) {
        total += poly.coefficients[static_cast<std::size_t>(k)] *
                 Rational(power_sums[static_cast<std::size_t>(k)], power(big_g, k));
    }
    return total * Rational(power(big_g, n - 1));
}

Rational b2_chi(const QuadChar& character, std::int64_t g) {
    if (character.is_trivial()) throw DomainError("B_{2,chi} formula requires a nontrivial character");
    if (!character.is_even()) throw DomainError("B_{2,chi} formula requires an even character");
    require_period_divides(character, g);
    BigInt s = character_square_sum(character.conductor_factors(), character.excluded_primes(), g);
    return Rational(s, from_int64(g));
}

LValue l_at_minus1(const QuadChar& character) {
    if (!character.is_primitive()) throw DomainError("L(chi,-1) requires a primitive character");
    Rational b2 = b2_chi(character, character.conductor());
    return LValue{-b2 / Rational(2), character.modulus(), character.conductor(), -1};
}

LValue l_at_minus1(const Discriminant& D) {
    if (D.value <= 0) throw DomainError("L(chi_D,-1) needs a positive discriminant");
    return l_at_minus1(QuadChar(D.value));
}

std::int64_t subset_product(const Discriminant& D, std::uint32_t subset) {
    std::int64_t d = 1;
    for (std::size_t i = 0; i < D.d_factors.size(); ++i) {
        if ((subset >> i) & 1u) d *= D.d_factors[i];
    }
    return d;
}

std::uint32_t subset_of(const Discriminant& D, std::int64_t d) {
    require_d_factors(D);
    if (d > 1 && D.value % d == 0) {
        const std::uint32_t all = (1u << D.d_factors.size()) - 1;
        for (std::uint32_t mask = 1; mask <= all; ++mask) {
            if (subset_product(D, mask) == d) return mask;
        }
    }
    throw DomainError("invalid subfactor " + std::to_string(d) + " of " + std::to_string(D.value));
}

LValue l_imprimitive_direct(std::int64_t d, const Discriminant& D) {
    subset_of(D, d);
    std::int64_t cofactor = D.value / d;
    __int128 modulus = static_cast<__int128>(D.value) * cofactor;
    if (modulus > INT64_MAX) throw DomainError("composite character modulus exceeds 64 bits");
    QuadChar composite(static_cast<std::int64_t>(modulus));
    Rational b2 = b2_chi(composite, D.value);
    return LValue{-b2 / Rational(2), composite.modulus(), D.value, -1};
}

LValue l_imprimitive_euler(std::int64_t d, const Discriminant& D) {
    subset_of(D, d);
    QuadChar primitive(d);
    Rational value = l_at_minus1(primitive).value;
    for (std::int64_t p : D.primes) {
        if (d % p == 0) continue;
        value *= Rational::from_int64(1 - kronecker(d, p) * p);
    }
    return LValue{value, D.value / d * D.value, D.value, -1};
}

std::vector<std::int64_t> g_set(const Discriminant& D) {
    require_d_factors(D);
    std::vector<std::int64_t> out;
    for (std::int64_t a = 1; a <= D.value; ++a) {
        bool member = true;
        for (std::int64_t di : D.d_factors) {
            if (kronecker(di, a) != 1) {
                member = false;
                break;
            }
        }
        if (member) out.push_back(a);
    }
    return out;
}

BigInt g_square_sum(const Discriminant& D) {
    require_d_factors(D);
    std::vector<std::vector<std::int64_t>> groups;
    for (std::int64_t di : D.d_factors) groups.push_back(fundamental_discriminant(di).prime_discriminants);
    SquareSumsBySign sums(groups, {});
    return sums.buckets(D.value)[0];
}

}  // namespace tamekernel
