#include <doctest.h>

#include "../oracles.hpp"
#include "tamekernel/arith.hpp"

using namespace tamekernel;

TEST_SUITE("arith") {

TEST_CASE("rationals stay canonical") {
    Rational half(BigInt(6), BigInt(-12));
    CHECK(half.to_string() == "-1/2");
    CHECK(Rational(BigInt(4), BigInt(2)).is_integer());
    CHECK(Rational::parse("10/4") == Rational(BigInt(5), BigInt(2)));
    CHECK(Rational::parse("-7").to_string() == "-7/1");
    CHECK(Rational::parse(Rational(BigInt(-3), BigInt(9)).to_string()) == Rational(BigInt(-1), BigInt(3)));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/x"), DomainError);
    CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)) == Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("int128 and int64 conversions") {
    __int128 big = static_cast<__int128>(1) << 100;
    BigInt expected = 1;
    expected <<= 100;
    CHECK(from_int128(big) == expected);
    CHECK(from_int128(-big) == -expected);
    CHECK(from_int64(INT64_MIN) == BigInt("-9223372036854775808"));
    CHECK(to_int64(BigInt("123456789012")) == 123456789012);
    CHECK_THROWS_AS(to_int64(expected), DomainError);
}

TEST_CASE("kronecker agrees with Euler's criterion") {
    for (std::int64_t m = -60; m <= 60; ++m) {
        for (std::int64_t n = -60; n <= 60; ++n) {
            INFO("m=" << m << " n=" << n);
            REQUIRE(kronecker(m, n) == oracle::kronecker(m, n));
        }
    }
    CHECK(kronecker(-4, 3) == -1);
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(2, 7) == 1);
    CHECK(kronecker(INT64_MIN, 3) == oracle::kronecker(INT64_MIN % 3, 3));
}

TEST_CASE("kronecker is multiplicative in the bottom argument") {
    for (std::int64_t m : {-7215, -15, 5, 12, 28860, 1000003}) {
        for (std::int64_t a = 1; a < 200; ++a) {
            for (std::int64_t b = 1; b < 40; ++b) {
                REQUIRE(kronecker(m, a * b) == kronecker(m, a) * kronecker(m, b));
            }
        }
    }
}

TEST_CASE("primality matches trial division") {
    for (std::int64_t n = 0; n < 20000; ++n) {
        REQUIRE(is_prime(static_cast<std::uint64_t>(n)) == oracle::is_prime(n));
    }
    CHECK(is_prime((std::uint64_t{1} << 61) - 1));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(561));
    CHECK(is_prime(18446744073709551557ULL));
}

TEST_CASE("factorization multiplies back") {
    for (std::uint64_t n : {1ULL, 2ULL, 28860ULL, 999999000001ULL, 600851475143ULL, 9223372036854775783ULL,
                            4611686014132420609ULL}) {
        Factorization f = factorize(n);
        std::uint64_t product = 1;
        for (const auto& pp : f) {
            CHECK(is_prime(pp.prime));
            for (unsigned e = 0; e < pp.exponent; ++e) product *= pp.prime;
        }
        CHECK(product == n);
        CHECK(std::is_sorted(f.begin(), f.end(), [](auto& a, auto& b) { return a.prime < b.prime; }));
    }
    CHECK(factorize(28860) == Factorization{{2, 2}, {3, 1}, {5, 1}, {13, 1}, {37, 1}});
    CHECK(factorize(4611686014132420609ULL) == Factorization{{2147483647ULL, 2}});
}

TEST_CASE("multiplicative functions") {
    CHECK(euler_phi(65) == 48);
    CHECK(euler_phi(28860) == 6912);
    CHECK(euler_phi(1) == 1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(1) == 1);
    CHECK(is_squarefree(7215));
    CHECK_FALSE(is_squarefree(28860));
    CHECK(prime_divisors(28860) == std::vector<std::uint64_t>{2, 3, 5, 13, 37});
}

TEST_CASE("2-adic valuation") {
    CHECK(val2(BigInt(480960)) == 6);
    CHECK(val2(Rational(BigInt(-2), BigInt(5))) == 1);
    CHECK(val2(Rational(BigInt(3), BigInt(8))) == -3);
    CHECK(val2(Rational(BigInt(-240480))) == 5);
    CHECK_THROWS_WITH_AS(val2(BigInt(0)), "valuation of zero undefined", DomainError);
    CHECK_THROWS_AS(val2(Rational(0)), DomainError);
}

}
