#include <doctest.h>

#include "../oracles.hpp"
#include "tamekernel/induction.hpp"
#include "tamekernel/lvalues.hpp"

using namespace tamekernel;

namespace {

using Vec = std::vector<std::int64_t>;

// sum over a in G of a^2 by direct enumeration with the oracle symbol
std::int64_t naive_g_sum(std::int64_t D, const Vec& factors) {
    std::int64_t s = 0;
    for (std::int64_t a = 1; a <= D; ++a) {
        bool in = true;
        for (std::int64_t d : factors) in = in && oracle::kronecker(d, a) == 1;
        if (in) s += a * a;
    }
    return s;
}

std::int64_t half_product(const Vec& primes) {
    std::int64_t p = 1;
    for (std::int64_t q : primes) p *= (q - 1) / 2;
    return p;
}

std::int64_t mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

}  // namespace

TEST_SUITE("induction") {

TEST_CASE("identity examples") {
    for (std::int64_t D : {65LL, 28860LL, 5LL, 13LL, 12LL, 2405LL, 60LL, 136LL}) {
        INFO(D);
        IdentityReport r = verify_identity(make_discriminant(D));
        CHECK(r.equal);
        CHECK(r.lhs == r.rhs());
    }
    Vec custom{60, 481};
    CHECK(verify_identity(make_discriminant(28860, custom)).equal);
    CHECK_THROWS_AS(verify_identity(make_discriminant(21)), DomainError);
}

TEST_CASE("identity sides against oracle values") {
    Discriminant d = make_discriminant(65);
    IdentityReport r = verify_identity(d);
    mpq_class lhs = oracle::l_imprimitive(5, 65) + oracle::l_imprimitive(13, 65) + oracle::l_minus1(65);
    CHECK(r.lhs == Rational(lhs.get_num(), lhs.get_den()));
    // -(2/65) t + (65/6) 48 + (1/12)(-4)(-12)
    std::int64_t t = naive_g_sum(65, {5, 13});
    CHECK(r.rhs_terms[0] == Rational(BigInt(-2 * t), BigInt(65)));
    CHECK(r.rhs_terms[1] == Rational(BigInt(65 * 48), BigInt(6)));
    CHECK(r.rhs_terms[2] == Rational(4));
}

TEST_CASE("specialized constants") {
    CHECK(specialized_rhs_check(make_discriminant(65)));
    CHECK(specialized_rhs_check(make_discriminant(28860)));
    CHECK(specialized_rhs_check(make_discriminant(12)));
    CHECK(specialized_rhs_check(make_discriminant(5)));
    CHECK_THROWS_AS(specialized_rhs_check(make_discriminant(21)), DomainError);
    CHECK_THROWS_AS(specialized_rhs_check(make_discriminant(8)), DomainError);
}

TEST_CASE("G-sum congruences") {
    CHECK(s1_congruence(make_discriminant(65)));
    CHECK(s1_congruence(make_discriminant(2405)));
    CHECK(s1_congruence(make_discriminant(5)));
    CHECK(t1_congruence(make_discriminant(60)));
    CHECK(t1_congruence(make_discriminant(28860)));
    CHECK(t1_congruence(make_discriminant(12)));
    CHECK_THROWS_AS(s1_congruence(make_discriminant(12)), DomainError);
    CHECK_THROWS_AS(s1_congruence(make_discriminant(17)), DomainError);
    CHECK_THROWS_AS(t1_congruence(make_discriminant(65)), DomainError);
    CHECK_THROWS_AS(t1_congruence(make_discriminant(28)), DomainError);

    // the stated right-hand sides against brute-force sums
    CHECK(mod(naive_g_sum(65, {5, 13}), 4) == mod(half_product({5, 13}) / 2, 4));
    CHECK(mod(naive_g_sum(5, {5}), 4) == mod(half_product({5}) / 2, 4));
    CHECK(mod(naive_g_sum(60, {12, 5}), 16) == mod(10 * half_product({3, 5}), 16));
    CHECK(mod(naive_g_sum(12, {12}), 16) == mod(10 * half_product({3}), 16));
}

TEST_CASE("classification") {
    FamilyTag t = classify(make_discriminant(28860));
    CHECK(t.kind == FamilyKind::Mod83Case2c);
    CHECK(t.n == 4);
    CHECK(t.labeling == Vec{3, 5, 13, 37});

    t = classify(make_discriminant(4 * 26455));
    CHECK(t.kind == FamilyKind::Mod83Case2c);
    CHECK(t.labeling == Vec{11, 13, 5, 37});

    t = classify(make_discriminant(2405));
    CHECK(t.kind == FamilyKind::Mod5OddN);
    CHECK(t.n == 3);
    CHECK(t.labeling == Vec{5, 13, 37});

    CHECK(classify(make_discriminant(21)).kind == FamilyKind::None);
    CHECK(classify(make_discriminant(8)).kind == FamilyKind::None);
    CHECK(classify(make_discriminant(5)).kind == FamilyKind::Mod5OddN);
    CHECK(classify(make_discriminant(65)).kind == FamilyKind::Mod5EvenN);      // (5/13) = -1
    CHECK(classify(make_discriminant(5 * 29)).kind == FamilyKind::GeneralMod5);  // (5/29) = +1
    CHECK(classify(make_discriminant(12)).kind == FamilyKind::Mod83Case1);
    CHECK(classify(make_discriminant(4 * 3 * 5 * 53)).kind == FamilyKind::Mod83Case1);
    CHECK(classify(make_discriminant(4 * 3 * 5 * 13 * 53)).kind == FamilyKind::GeneralMod83);  // (13/53) = +1
    CHECK(classify(make_discriminant(4 * 11 * 5)).kind == FamilyKind::Mod83Case2b);
    CHECK(classify(make_discriminant(4 * 3 * 13)).kind == FamilyKind::Mod83Case2b);   // (3/13) = +1
    CHECK(classify(make_discriminant(4 * 3 * 5)).kind == FamilyKind::Mod83Case2c);   // n = 2, one -1
    CHECK(classify(make_discriminant(4 * 7 * 5)).kind == FamilyKind::None);          // 7 = 7 mod 8

    // every tag's hypotheses hold
    for (std::int64_t D = 5; D < 30000; ++D) {
        if (!oracle::fundamental(D)) continue;
        Discriminant d = make_discriminant(D);
        FamilyTag tag = classify(d);
        if (tag.kind == FamilyKind::None) continue;
        Vec sorted = tag.labeling;
        std::sort(sorted.begin(), sorted.end());
        REQUIRE(sorted == d.odd_primes);
        REQUIRE(tag.n == static_cast<int>(d.odd_primes.size()));
        if (tag.kind == FamilyKind::Mod83Case2c) {
            REQUIRE(tag.n % 2 == 0);
            REQUIRE(oracle::kronecker(tag.labeling[0], tag.labeling[1]) == -1);
            for (std::size_t i = 2; i < tag.labeling.size(); ++i) {
                REQUIRE(oracle::kronecker(tag.labeling[0], tag.labeling[i]) == 1);
            }
        }
        if (tag.kind == FamilyKind::Mod5OddN || tag.kind == FamilyKind::Mod5EvenN) {
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                for (std::size_t j = i + 1; j < sorted.size(); ++j) {
                    REQUIRE(oracle::kronecker(sorted[i], sorted[j]) == -1);
                }
            }
        }
    }
}

TEST_CASE("valuation predictions") {
    CHECK(predicted_valuation({FamilyKind::Mod5OddN, 3, {}}).bound == 3);
    CHECK(predicted_valuation({FamilyKind::Mod5OddN, 3, {}}).exact);
    CHECK(predicted_valuation({FamilyKind::Mod83Case2c, 4, {}}).bound == 5);
    CHECK_FALSE(predicted_valuation({FamilyKind::Mod83Case2c, 4, {}}).exact);
    CHECK(predicted_valuation({FamilyKind::Mod83Case2c, 2, {}}).bound == 3);
    CHECK(predicted_valuation({FamilyKind::GeneralMod83, 3, {}}).bound == 3);
    CHECK_THROWS_WITH_AS(predicted_valuation({}), "no prediction available", DomainError);

    CHECK(parse_family_kind("Mod83-Case2c") == FamilyKind::Mod83Case2c);
    CHECK(family_kind_name(FamilyKind::Mod5EvenN) == "Mod5-EvenN");
    CHECK_THROWS_AS(parse_family_kind("Case9"), DomainError);
}

TEST_CASE("single-prime sweeps") {
    for (std::int64_t p = 3; p < 400; ++p) {
        if (!oracle::is_prime(p)) continue;
        if (p % 8 == 3) REQUIRE(val2(l_at_minus1(make_discriminant(4 * p)).value) == 1);
        if (p % 8 == 5) REQUIRE(val2(l_at_minus1(make_discriminant(p)).value) == 1);
    }
}

}
