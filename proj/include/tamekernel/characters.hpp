#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tamekernel/arith.hpp"

namespace tamekernel {

/// A fundamental discriminant split into prime discriminants.
///
/// `prime_discriminants[i]` is p*_i and `primes[i]` the rational prime under it;
/// the even factor (if any) comes first, then odd primes ascending.
/// `d_factors` is an admissible decomposition into discriminants of real quadratic
/// fields (pairwise gcd 1 or 4, product = value); it is empty when none is known.
struct Discriminant {
    std::int64_t value = 0;
    std::vector<std::int64_t> prime_discriminants;
    std::vector<std::int64_t> primes;
    std::vector<std::int64_t> d_factors;
    std::vector<std::int64_t> odd_primes;

    bool is_even() const { return value % 2 == 0; }
    int prime_count() const { return static_cast<int>(primes.size()); }
    bool has_d_factorization() const { return !d_factors.empty(); }
    /// 2* when the discriminant is even, otherwise 1.
    std::int64_t even_part() const { return is_even() ? prime_discriminants.front() : 1; }
};

bool is_fundamental(std::int64_t disc);

/// Any fundamental discriminant, either sign. No d-factorization is attached.
Discriminant fundamental_discriminant(std::int64_t disc);

/// Positive fundamental discriminant D >= 5 with its canonical d-factorization
/// (left empty when D has two or more odd prime factors = 3 mod 4).
Discriminant make_discriminant(std::int64_t D);

/// Same, with a caller-supplied d-factorization.
Discriminant make_discriminant(std::int64_t D, std::span<const std::int64_t> d_factors);

/// Like make_discriminant(D) but trusts `odd_primes` (ascending) instead of factoring.
/// Only the product is checked; primality and the discriminant shape are not.
Discriminant make_discriminant_from_primes(std::int64_t D, std::span<const std::int64_t> odd_primes);

/// Fundamental discriminant of Q(sqrt(-D)).
Discriminant negative_counterpart(const Discriminant& D);

/// The quadratic character a -> (M/a) for M = 0, 1 mod 4.
///
/// M = f * m^2 with f the conductor (a fundamental discriminant, or 1 when M is a
/// square); the character is chi_f restricted to integers prime to m.
class QuadChar {
public:
    explicit QuadChar(std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    std::int64_t conductor() const { return conductor_; }
    /// Smallest period: conductor times the primes of m not dividing it.
    std::int64_t period() const { return period_; }
    bool is_primitive() const { return modulus_ == conductor_; }
    bool is_trivial() const { return conductor_ == 1; }
    bool is_even() const { return modulus_ > 0; }

    /// Prime discriminants whose product is the conductor.
    const std::vector<std::int64_t>& conductor_factors() const { return conductor_factors_; }
    /// Primes dividing the modulus but not the conductor.
    const std::vector<std::int64_t>& excluded_primes() const { return excluded_primes_; }

    int operator()(std::int64_t a) const { return kronecker(modulus_, a); }

private:
    std::int64_t modulus_;
    std::int64_t conductor_ = 1;
    std::int64_t period_ = 1;
    std::vector<std::int64_t> conductor_factors_;
    std::vector<std::int64_t> excluded_primes_;
};

int chi(const QuadChar& character, std::int64_t a);

/// p* = (-1/p) p for an odd prime p.
std::int64_t prime_discriminant_of(std::int64_t odd_prime);

}  // namespace tamekernel
