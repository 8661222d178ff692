#include <doctest.h>

#include "../oracles.hpp"
#include "tamekernel/charsum.hpp"
#include "tamekernel/lvalues.hpp"

using namespace tamekernel;

namespace {

Rational from_mpq(const mpq_class& q) { return Rational(q.get_num(), q.get_den()); }

Rational R(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

BigInt naive_square_sum(const std::vector<std::int64_t>& stars, const std::vector<std::int64_t>& coprime,
                        std::int64_t upper) {
    std::int64_t m = 1;
    for (std::int64_t s : stars) m *= s;
    BigInt total = 0;
    for (std::int64_t a = 1; a <= upper; ++a) {
        bool skip = false;
        for (std::int64_t p : coprime) skip |= a % p == 0;
        if (skip) continue;
        int c = stars.empty() ? 1 : oracle::kronecker(m, a);
        total += BigInt(c) * BigInt(static_cast<unsigned long>(a)) * BigInt(static_cast<unsigned long>(a));
    }
    return total;
}

}  // namespace

TEST_SUITE("lvalues") {

TEST_CASE("Bernoulli numbers and polynomials") {
    CHECK(bernoulli_number(0) == R(1));
    CHECK(bernoulli_number(1) == R(-1, 2));
    CHECK(bernoulli_number(2) == R(1, 6));
    CHECK(bernoulli_number(4) == R(-1, 30));
    CHECK(bernoulli_number(12) == R(-691, 2730));
    CHECK(bernoulli_number(7) == R(0));
    BernoulliPolynomial b2 = bernoulli_polynomial(2);
    CHECK(b2.coefficients == std::vector<Rational>{R(1, 6), R(-1), R(1)});
    CHECK(b2(R(1, 2)) == R(-1, 12));
    // B_n'(x) = n B_{n-1}(x)
    for (int n = 1; n <= 10; ++n) {
        BernoulliPolynomial d = bernoulli_polynomial(n).derivative();
        BernoulliPolynomial lower = bernoulli_polynomial(n - 1);
        for (int k = 0; k <= n - 1; ++k) {
            CHECK(d.coefficients[static_cast<std::size_t>(k)] ==
                  lower.coefficients[static_cast<std::size_t>(k)] * Rational(n));
        }
    }
    CHECK_THROWS_AS(bernoulli_polynomial(21), DomainError);
    CHECK_THROWS_AS(bernoulli_number(-1), DomainError);
}

TEST_CASE("signed square sums agree with direct summation") {
    struct Case {
        std::vector<std::int64_t> stars;
        std::vector<std::int64_t> coprime;
        std::int64_t upper;
    };
    std::vector<Case> cases{
        {{5}, {}, 5},           {{5}, {}, 1000},         {{-4, -3}, {}, 12},  {{-4, -3}, {}, 777},
        {{8}, {}, 64},          {{-8, 5}, {}, 4000},     {{13}, {2, 3, 37}, 28860},
        {{-4, -3, 5, 13, 37}, {}, 28860},               {{}, {5, 7}, 350},   {{}, {}, 100},
        {{-3}, {}, 30},         {{-3}, {2}, 30},         {{5, -7, -11}, {}, 385 * 3},
    };
    for (const auto& c : cases) {
        INFO("upper=" << c.upper);
        CHECK(character_square_sum(c.stars, c.coprime, c.upper) == naive_square_sum(c.stars, c.coprime, c.upper));
    }
}

TEST_CASE("bucketed sums recover every subset character") {
    std::vector<std::vector<std::int64_t>> groups{{-4, -3}, {5}, {13}, {37}};
    SquareSumsBySign sums(groups, {});
    for (std::int64_t upper : {28860LL, 28861LL, 14430LL, 1000LL}) {
        auto b = sums.buckets(upper);
        for (std::uint32_t subset = 0; subset < 16; ++subset) {
            std::vector<std::int64_t> stars;
            for (int g = 0; g < 4; ++g) {
                if (subset >> g & 1u) stars.insert(stars.end(), groups[g].begin(), groups[g].end());
            }
            // characters outside the subset still exclude their primes
            std::vector<std::int64_t> coprime{2, 3, 5, 13, 37};
            REQUIRE(SquareSumsBySign::signed_sum(b, subset) == naive_square_sum(stars, coprime, upper));
        }
    }
    CHECK_THROWS_AS(sums.buckets(std::int64_t{1} << 33), DomainError);
}

TEST_CASE("reference L-values") {
    CHECK(l_at_minus1(make_discriminant(12)).value == R(-2));
    CHECK(l_at_minus1(make_discriminant(8)).value == R(-1));
    CHECK(l_at_minus1(make_discriminant(5)).value == R(-2, 5));
    CHECK(l_at_minus1(make_discriminant(13)).value == R(-2));
    CHECK(l_at_minus1(make_discriminant(28860)).value == R(-240480));
    CHECK(l_at_minus1(make_discriminant(105820)).value == R(-1997920));
    LValue v = l_at_minus1(QuadChar(12));
    CHECK(v.character_modulus == 12);
    CHECK(v.excluded_modulus == 12);
    CHECK(v.s_point == -1);
}

TEST_CASE("L(chi,-1) matches the Bernoulli-polynomial definition") {
    for (std::int64_t f = 5; f < 1500; ++f) {
        if (!oracle::fundamental(f)) continue;
        INFO(f);
        REQUIRE(l_at_minus1(make_discriminant(f)).value == from_mpq(oracle::l_minus1(f)));
    }
}

TEST_CASE("generalized Bernoulli numbers") {
    // B_{1,chi} = -h for imaginary fields with w = 2
    for (std::int64_t d : {-23LL, -47LL, -71LL, -7215LL, -15LL, -84LL}) {
        INFO(d);
        CHECK(generalized_bernoulli(1, QuadChar(d), -d) == Rational::from_int64(-oracle::class_number(d)));
    }
    CHECK(generalized_bernoulli(1, QuadChar(-4), 4) == R(-1, 2));
    CHECK(generalized_bernoulli(2, QuadChar(12), 12) == R(4));
    // independent of the multiple of the conductor
    for (std::int64_t f : {5LL, 8LL, 12LL, 13LL, 24LL, 60LL, 65LL}) {
        QuadChar c(f);
        Rational base = generalized_bernoulli(2, c, f);
        for (std::int64_t k : {2, 3, 7}) CHECK(generalized_bernoulli(2, c, k * f) == base);
        CHECK(b2_chi(c, 5 * f) == base);
    }
    CHECK_THROWS_WITH_AS(generalized_bernoulli(2, QuadChar(12), 18), "modulus not a multiple of conductor",
                         DomainError);
    CHECK_THROWS_AS(b2_chi(QuadChar(-3), 3), DomainError);
    CHECK_THROWS_AS(b2_chi(QuadChar(9), 3), DomainError);
    // the imprimitive character 12 * 5^2 has period 60
    CHECK_THROWS_WITH_AS(generalized_bernoulli(2, QuadChar(300), 12),
                         "modulus not a multiple of the character's period", DomainError);
}

TEST_CASE("imprimitive L-values") {
    Discriminant d65 = make_discriminant(65);
    CHECK(l_imprimitive_direct(5, d65).value == R(-28, 5));
    CHECK(l_imprimitive_euler(5, d65).value == R(-28, 5));
    CHECK(l_imprimitive_direct(65, d65).value == l_at_minus1(d65).value);
    CHECK(l_imprimitive_direct(5, d65).value == from_mpq(oracle::l_imprimitive(5, 65)));
    CHECK(l_imprimitive_direct(5, d65).character_modulus == 65 * 13);

    Discriminant big = make_discriminant(28860);
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
        std::int64_t d = subset_product(big, mask);
        CHECK(subset_of(big, d) == mask);
        Rational direct = l_imprimitive_direct(d, big).value;
        CHECK(direct == l_imprimitive_euler(d, big).value);
        CHECK(direct == from_mpq(oracle::l_imprimitive(d, 28860)));
    }
    CHECK_THROWS_WITH_AS(l_imprimitive_direct(7, d65), "invalid subfactor 7 of 65", DomainError);
    CHECK_THROWS_AS(l_imprimitive_euler(1, d65), DomainError);
    CHECK_THROWS_AS(l_imprimitive_direct(15, big), DomainError);  // divides D but is no subset product
    Discriminant no_factors = make_discriminant(21);
    CHECK_THROWS_AS(l_imprimitive_direct(21, no_factors), DomainError);
}

TEST_CASE("the set G") {
    for (std::int64_t D : {65LL, 60LL, 12LL, 5LL, 2405LL, 28860LL, 1105LL, 8LL * 17}) {
        Discriminant d = make_discriminant(D);
        std::vector<std::int64_t> g = g_set(d);
        INFO(D);
        CHECK(static_cast<std::uint64_t>(g.size()) * (1u << d.d_factors.size()) == euler_phi(static_cast<std::uint64_t>(D)));
        for (std::int64_t a : g) CHECK(std::binary_search(g.begin(), g.end(), D - a));
        BigInt sum = 0;
        for (std::int64_t a : g) sum += BigInt(static_cast<unsigned long>(a * a));
        CHECK(g_square_sum(d) == sum);
    }
}

}
