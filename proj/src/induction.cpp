#include "tamekernel/induction.hpp"

#include <algorithm>

#include "tamekernel/lvalues.hpp"

namespace tamekernel {

namespace {

bool all_pairwise_nonresidues(const std::vector<std::int64_t>& primes) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            if (kronecker(primes[i], primes[j]) != -1) return false;
        }
    }
    return true;
}

bool is_mod5_shape(const Discriminant& D) {
    if (D.is_even() || D.odd_primes.empty()) return false;
    return std::all_of(D.odd_primes.begin(), D.odd_primes.end(), [](std::int64_t p) { return p % 8 == 5; });
}

// D = 4 l_1 p_2 ... p_n with l_1 = 3 mod 8 and p_i = 5 mod 8.
bool is_mod83_shape(const Discriminant& D) {
    if (D.even_part() != -4) return false;
    int threes = 0;
    for (std::int64_t p : D.odd_primes) {
        if (p % 8 == 3) {
            ++threes;
        } else if (p % 8 != 5) {
            return false;
        }
    }
    return threes == 1;
}

Rational product_one_minus_p(const Discriminant& D) {
    Rational r(1);
    for (std::int64_t p : D.primes) r *= Rational::from_int64(1 - p);
    return r;
}

BigInt half_product(const Discriminant& D) {
    BigInt prod = 1;
    for (std::int64_t p : D.odd_primes) prod *= from_int64((p - 1) / 2);
    return prod;
}

BigInt mod(const BigInt& x, long m) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

}  // namespace

IdentityReport verify_identity(const Discriminant& D) {
    if (!D.has_d_factorization()) {
        throw DomainError("discriminant " + std::to_string(D.value) + " has no d-factorization");
    }
    const int n = static_cast<int>(D.d_factors.size());
    if (n > kMaxDFactors) throw DomainError("too many d-factors");

    const std::uint32_t all = (1u << n) - 1;
    std::vector<Rational> values(all + 1);
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t mask = 1; mask <= all; ++mask) subsets.push_back(mask);
    for (std::uint32_t mask : subsets) {
        values[mask] = l_imprimitive_direct(subset_product(D, mask), D).value;
    }
    IdentityReport report;
    for (std::uint32_t mask : subsets) report.lhs += values[mask];

    BigInt two_pow = 1;
    two_pow <<= (n - 1);
    const Rational big_d = Rational::from_int64(D.value);
    const Rational phi = Rational(BigInt(std::to_string(euler_phi(static_cast<std::uint64_t>(D.value)))));
    report.rhs_terms[0] = -Rational(two_pow * g_square_sum(D)) / big_d;
    report.rhs_terms[1] = big_d * phi / Rational(6);
    report.rhs_terms[2] = product_one_minus_p(D) / Rational(12);
    report.equal = report.lhs == report.rhs();
    return report;
}

bool specialized_rhs_check(const Discriminant& D) {
    const auto n = static_cast<long>(D.odd_primes.size());
    const Rational phi = Rational(BigInt(std::to_string(euler_phi(static_cast<std::uint64_t>(D.value)))));
    const Rational general = product_one_minus_p(D) / Rational(12);
    bool all_one_mod_4 =
        std::all_of(D.odd_primes.begin(), D.odd_primes.end(), [](std::int64_t p) { return p % 4 == 1; });
    if (!D.is_even() && all_one_mod_4) {
        Rational sign(n % 2 == 0 ? 1 : -1);
        return general == sign * phi / Rational(12);
    }
    if (D.is_even() && D.even_part() == -4) {
        int threes = static_cast<int>(std::count_if(D.odd_primes.begin(), D.odd_primes.end(),
                                                    [](std::int64_t p) { return p % 4 == 3; }));
        if (threes == 1) {
            Rational sign((n + 1) % 2 == 0 ? 1 : -1);
            return general == sign * phi / Rational(24);
        }
    }
    throw DomainError("discriminant " + std::to_string(D.value) + " is not in either family shape");
}

bool s1_congruence(const Discriminant& D) {
    if (!is_mod5_shape(D)) {
        throw DomainError("s1 congruence needs odd D with all primes = 5 mod 8");
    }
    // (1/2) prod (p_i - 1)/2 is an integer: each factor is even
    BigInt expected = half_product(D) / 2;
    return mod(g_square_sum(D), 4) == mod(expected, 4);
}

bool t1_congruence(const Discriminant& D) {
    if (!is_mod83_shape(D)) {
        throw DomainError("t1 congruence needs D = 4 l_1 p_2 ... p_n with l_1 = 3, p_i = 5 mod 8");
    }
    return mod(g_square_sum(D), 16) == mod(BigInt(10) * half_product(D), 16);
}

std::string_view family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::None: return "None";
        case FamilyKind::GeneralMod5: return "GeneralMod5";
        case FamilyKind::Mod5OddN: return "Mod5-OddN";
        case FamilyKind::Mod5EvenN: return "Mod5-EvenN";
        case FamilyKind::GeneralMod83: return "GeneralMod83";
        case FamilyKind::Mod83Case1: return "Mod83-Case1";
        case FamilyKind::Mod83Case2a: return "Mod83-Case2a";
        case FamilyKind::Mod83Case2b: return "Mod83-Case2b";
        case FamilyKind::Mod83Case2c: return "Mod83-Case2c";
    }
    return "None";
}

FamilyKind parse_family_kind(std::string_view name) {
    for (FamilyKind k : {FamilyKind::None, FamilyKind::GeneralMod5, FamilyKind::Mod5OddN, FamilyKind::Mod5EvenN,
                         FamilyKind::GeneralMod83, FamilyKind::Mod83Case1, FamilyKind::Mod83Case2a,
                         FamilyKind::Mod83Case2b, FamilyKind::Mod83Case2c}) {
        if (family_kind_name(k) == name) return k;
    }
    throw DomainError("unknown family kind: " + std::string(name));
}

FamilyTag classify(const Discriminant& D) {
    FamilyTag tag;
    if (is_mod5_shape(D)) {
        tag.n = static_cast<int>(D.odd_primes.size());
        tag.labeling = D.odd_primes;
        if (!all_pairwise_nonresidues(D.odd_primes)) {
            tag.kind = FamilyKind::GeneralMod5;
        } else {
            tag.kind = tag.n % 2 == 1 ? FamilyKind::Mod5OddN : FamilyKind::Mod5EvenN;
        }
        return tag;
    }
    if (!is_mod83_shape(D)) return tag;

    tag.n = static_cast<int>(D.odd_primes.size());
    std::int64_t l1 = 0;
    std::vector<std::int64_t> rest;
    for (std::int64_t p : D.odd_primes) {
        if (p % 8 == 3) {
            l1 = p;
        } else {
            rest.push_back(p);
        }
    }
    tag.labeling.push_back(l1);
    tag.labeling.insert(tag.labeling.end(), rest.begin(), rest.end());
    tag.kind = FamilyKind::GeneralMod83;
    if (!all_pairwise_nonresidues(rest)) return tag;

    std::vector<std::int64_t> nonresidues;
    for (std::int64_t p : rest) {
        if (kronecker(l1, p) == -1) nonresidues.push_back(p);
    }
    const bool n_even = tag.n % 2 == 0;
    if (tag.n == 1) {
        tag.kind = FamilyKind::Mod83Case1;
    } else if (n_even && nonresidues.size() == 1) {
        // for n = 2 this also satisfies case 2a; the 2c family is the one studied further
        std::int64_t l2 = nonresidues.front();
        tag.kind = FamilyKind::Mod83Case2c;
        tag.labeling = {l1, l2};
        for (std::int64_t p : rest) {
            if (p != l2) tag.labeling.push_back(p);
        }
    } else if (nonresidues.size() == rest.size()) {
        tag.kind = n_even ? FamilyKind::Mod83Case2a : FamilyKind::Mod83Case1;
    } else if (nonresidues.empty()) {
        tag.kind = FamilyKind::Mod83Case2b;
    }
    return tag;
}

ValuationPrediction predicted_valuation(const FamilyTag& tag) {
    switch (tag.kind) {
        case FamilyKind::None: throw DomainError("no prediction available");
        case FamilyKind::GeneralMod5:
        case FamilyKind::GeneralMod83: return {tag.n, false};
        case FamilyKind::Mod5OddN:
        case FamilyKind::Mod83Case1: return {tag.n, true};
        case FamilyKind::Mod5EvenN:
        case FamilyKind::Mod83Case2a:
        case FamilyKind::Mod83Case2b:
        case FamilyKind::Mod83Case2c: return {tag.n + 1, false};
    }
    throw DomainError("no prediction available");
}

}  // namespace tamekernel
