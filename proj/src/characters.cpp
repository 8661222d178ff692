#include "tamekernel/characters.hpp"

#include <algorithm>
#include <numeric>

namespace tamekernel {

namespace {

std::int64_t mod4(std::int64_t v) { return ((v % 4) + 4) % 4; }

// odd_primes must be the ascending odd prime divisors of d.value
void decompose(Discriminant& d, std::span<const std::int64_t> odd_primes) {
    std::int64_t odd_product = 1;
    std::vector<std::int64_t> odd_stars;
    for (std::int64_t p : odd_primes) {
        d.odd_primes.push_back(p);
        odd_stars.push_back(prime_discriminant_of(p));
        odd_product *= odd_stars.back();
    }
    if (d.value % 2 == 0) {
        std::int64_t two_star = d.value / odd_product;
        if (two_star != -4 && two_star != 8 && two_star != -8) {
            throw DomainError("even part of a fundamental discriminant must be -4, 8 or -8");
        }
        d.prime_discriminants.push_back(two_star);
        d.primes.push_back(2);
    }
    for (std::size_t i = 0; i < odd_stars.size(); ++i) {
        d.prime_discriminants.push_back(odd_stars[i]);
        d.primes.push_back(d.odd_primes[i]);
    }
}

// Odd primes = 1 mod 4 stand alone; the even factor absorbs the single prime = 3 mod 4.
std::vector<std::int64_t> canonical_d_factors(const Discriminant& d) {
    std::vector<std::int64_t> singles;
    std::vector<std::int64_t> negatives;
    for (std::int64_t p : d.odd_primes) {
        if (p % 4 == 1) {
            singles.push_back(p);
        } else {
            negatives.push_back(p);
        }
    }
    if (negatives.size() > 1) return {};
    std::vector<std::int64_t> out;
    if (d.is_even()) {
        std::int64_t block = d.even_part();
        if (!negatives.empty()) block *= -negatives.front();
        out.push_back(block);
    }
    out.insert(out.end(), singles.begin(), singles.end());
    return out;
}

void validate_d_factors(std::int64_t D, std::span<const std::int64_t> factors) {
    if (factors.empty()) throw DomainError("d-factorization must be non-empty");
    __int128 product = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::int64_t di = factors[i];
        if (di <= 1 || !is_fundamental(di)) {
            throw DomainError("d-factor " + std::to_string(di) + " is not a real quadratic discriminant");
        }
        for (std::size_t j = 0; j < i; ++j) {
            std::int64_t g = std::gcd(di, factors[j]);
            if (g != 1 && g != 4) {
                throw DomainError("d-factors " + std::to_string(factors[j]) + " and " + std::to_string(di) +
                                  " have gcd other than 1 or 4");
            }
        }
        product *= di;
        if (product > D) break;
    }
    if (product != D) throw DomainError("d-factors do not multiply to " + std::to_string(D));
}

}  // namespace

std::int64_t prime_discriminant_of(std::int64_t odd_prime) {
    return odd_prime % 4 == 1 ? odd_prime : -odd_prime;
}

bool is_fundamental(std::int64_t disc) {
    if (disc == 0 || disc == 1) return false;
    std::int64_t r = mod4(disc);
    std::uint64_t magnitude = static_cast<std::uint64_t>(disc < 0 ? -disc : disc);
    if (r == 1) return is_squarefree(magnitude);
    if (r != 0) return false;
    std::int64_t m = disc / 4;
    std::int64_t rm = mod4(m);
    if (rm != 2 && rm != 3) return false;
    return is_squarefree(magnitude / 4);
}

Discriminant fundamental_discriminant(std::int64_t disc) {
    if (!is_fundamental(disc)) throw DomainError("not a fundamental discriminant: " + std::to_string(disc));
    Discriminant d;
    d.value = disc;
    std::vector<std::int64_t> odd;
    for (const auto& pp : factorize(static_cast<std::uint64_t>(disc < 0 ? -disc : disc))) {
        if (pp.prime != 2) odd.push_back(static_cast<std::int64_t>(pp.prime));
    }
    decompose(d, odd);
    return d;
}

Discriminant make_discriminant(std::int64_t D) {
    if (D < 5) throw DomainError("discriminant must be at least 5: " + std::to_string(D));
    Discriminant d = fundamental_discriminant(D);
    d.d_factors = canonical_d_factors(d);
    return d;
}

Discriminant make_discriminant(std::int64_t D, std::span<const std::int64_t> d_factors) {
    Discriminant d = make_discriminant(D);
    validate_d_factors(D, d_factors);
    d.d_factors.assign(d_factors.begin(), d_factors.end());
    return d;
}

Discriminant make_discriminant_from_primes(std::int64_t D, std::span<const std::int64_t> odd_primes) {
    if (D < 5) throw DomainError("discriminant must be at least 5: " + std::to_string(D));
    std::int64_t rest = D;
    for (std::size_t i = 0; i < odd_primes.size(); ++i) {
        if (i > 0 && odd_primes[i] <= odd_primes[i - 1]) throw DomainError("odd primes must be strictly ascending");
        if (odd_primes[i] < 3 || rest % odd_primes[i] != 0) throw DomainError("prime list does not match D");
        rest /= odd_primes[i];
    }
    if (rest != 1 && rest != 4 && rest != 8) throw DomainError("prime list does not match D");
    Discriminant d;
    d.value = D;
    decompose(d, odd_primes);
    d.d_factors = canonical_d_factors(d);
    return d;
}

Discriminant negative_counterpart(const Discriminant& D) {
    std::int64_t v = D.value;
    std::int64_t e;
    if (v % 2 != 0) {
        e = -4 * v;
    } else if (mod4(-v / 4) == 1) {
        e = -v / 4;
    } else {
        e = -v;
    }
    return fundamental_discriminant(e);
}

QuadChar::QuadChar(std::int64_t modulus) : modulus_(modulus) {
    std::int64_t r = mod4(modulus);
    if (modulus == 0 || (r != 0 && r != 1)) {
        throw DomainError("character modulus must be nonzero and 0 or 1 mod 4: " + std::to_string(modulus));
    }
    std::uint64_t magnitude = static_cast<std::uint64_t>(modulus < 0 ? -modulus : modulus);
    // squarefree kernel with sign, then fix up the 2-part to land on a discriminant
    std::int64_t kernel = modulus < 0 ? -1 : 1;
    Factorization fac = factorize(magnitude);
    for (const auto& pp : fac) {
        if (pp.exponent % 2 == 1) kernel *= static_cast<std::int64_t>(pp.prime);
    }
    conductor_ = mod4(kernel) == 1 ? kernel : 4 * kernel;
    if (conductor_ != 1) {
        Discriminant f = fundamental_discriminant(conductor_);
        conductor_factors_ = f.prime_discriminants;
    }
    period_ = conductor_ < 0 ? -conductor_ : conductor_;
    for (const auto& pp : fac) {
        auto p = static_cast<std::int64_t>(pp.prime);
        if (period_ % p != 0) {
            excluded_primes_.push_back(p);
            period_ *= p;
        }
    }
}

int chi(const QuadChar& character, std::int64_t a) { return character(a); }

}  // namespace tamekernel
