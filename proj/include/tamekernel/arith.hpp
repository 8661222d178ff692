#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tamekernel {

using BigInt = mpz_class;

/// Thrown for inputs outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact rational number, always stored in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(const BigInt& value) : q_(value) {}
    Rational(const BigInt& num, const BigInt& den);

    static Rational from_int64(std::int64_t value);
    static Rational parse(const std::string& text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// "num/den", denominator always printed.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

private:
    mpq_class q_;
};

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization with strictly increasing primes.
using Factorization = std::vector<PrimePower>;

BigInt from_int128(__int128 value);
BigInt from_int64(std::int64_t value);
std::int64_t to_int64(const BigInt& value);

/// Kronecker symbol (m/n). (m/-1) = -1 only for m < 0, (m/0) = 1 iff m = +-1.
int kronecker(std::int64_t m, std::int64_t n);

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

/// 2-adic valuation; throws DomainError on zero.
long val2(const Rational& q);
long val2(const BigInt& n);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace tamekernel
