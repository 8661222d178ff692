#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tamekernel/arith.hpp"
#include "tamekernel/characters.hpp"

namespace tamekernel {

/// Both sides of the subset-sum identity for imprimitive L-values:
///   sum_{d != 1} L^{(D)}(chi_d,-1)
///     = -(2^{n-1}/D) sum_{a in G} a^2 + (D/6) phi(D) + (1/12) prod_{p | D} (1 - p).
struct IdentityReport {
    Rational lhs;
    std::array<Rational, 3> rhs_terms;
    bool equal = false;

    Rational rhs() const { return rhs_terms[0] + rhs_terms[1] + rhs_terms[2]; }
};

IdentityReport verify_identity(const Discriminant& D);

/// Checks that (1/12) prod (1 - p) agrees with the shape-specific closed forms
/// (-1)^n phi(D)/12 for odd D and (-1)^{n+1} phi(D)/24 for D = 4 * odd.
bool specialized_rhs_check(const Discriminant& D);

/// Odd D with all prime factors = 5 mod 8: sum_{a in G} a^2 = (1/2) prod (p_i - 1)/2 mod 4.
bool s1_congruence(const Discriminant& D);

/// D = 4 l_1 p_2 ... p_n (l_1 = 3, p_i = 5 mod 8): sum_{a in G} a^2 = 10 prod (p_i - 1)/2 mod 16.
bool t1_congruence(const Discriminant& D);

enum class FamilyKind {
    None,
    GeneralMod5,
    Mod5OddN,
    Mod5EvenN,
    GeneralMod83,
    Mod83Case1,
    Mod83Case2a,
    Mod83Case2b,
    Mod83Case2c,
};

std::string_view family_kind_name(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

/// The most specific family whose hypotheses all hold.
///
/// `labeling` lists the odd primes in the order the statements use: for the 4 l_1
/// families l_1 first, then (case 2c) the unique l_2 with (l_1/l_2) = -1, then the
/// rest ascending. Odd families list primes ascending.
struct FamilyTag {
    FamilyKind kind = FamilyKind::None;
    int n = 0;
    std::vector<std::int64_t> labeling;
};

FamilyTag classify(const Discriminant& D);

struct ValuationPrediction {
    int bound = 0;
    bool exact = false;
};

/// Lower bound (or exact value) for v_2(L(chi_D,-1)) implied by the family.
ValuationPrediction predicted_valuation(const FamilyTag& tag);

}  // namespace tamekernel
