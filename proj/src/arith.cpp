#include "tamekernel/arith.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace tamekernel {

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw DomainError("zero denominator");
    q_.canonicalize();
}

Rational Rational::from_int64(std::int64_t value) { return Rational(tamekernel::from_int64(value)); }

Rational Rational::parse(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational number: " + text);
    }
}

std::string Rational::to_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

BigInt from_int128(__int128 value) {
    bool negative = value < 0;
    unsigned __int128 magnitude = negative ? -static_cast<unsigned __int128>(value)
                                           : static_cast<unsigned __int128>(value);
    BigInt hi;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(magnitude >> 64));
    hi <<= 64;
    BigInt lo;
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(magnitude));
    BigInt result = hi + lo;
    return negative ? BigInt(-result) : result;
}

BigInt from_int64(std::int64_t value) {
    BigInt r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(value));
    return r;
}

std::int64_t to_int64(const BigInt& value) {
    if (!value.fits_slong_p()) throw DomainError("integer does not fit in 64 bits: " + value.get_str());
    return value.get_si();
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

int kronecker(std::int64_t m, std::int64_t n) {
    // Cohen, Algorithm 1.4.10, on 128-bit intermediates to tolerate INT64_MIN.
    __int128 a = m;
    __int128 b = n;
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && b % 2 == 0) return 0;
    int k = 1;
    int v = 0;
    while (b % 2 == 0) {
        ++v;
        b /= 2;
    }
    if (v % 2 == 1) {
        int r = static_cast<int>(((a % 8) + 8) % 8);
        if (r == 3 || r == 5) k = -k;
    }
    if (b < 0) {
        b = -b;
        if (a < 0) k = -k;
    }
    // b odd and positive from here on
    a %= b;
    if (a < 0) a += b;
    while (a != 0) {
        v = 0;
        while (a % 2 == 0) {
            ++v;
            a /= 2;
        }
        if (v % 2 == 1) {
            int r = static_cast<int>(b % 8);
            if (r == 3 || r == 5) k = -k;
        }
        if ((a & b & 2) != 0) k = -k;
        __int128 r = b % a;
        b = a;
        a = r;
    }
    return b == 1 ? k : 0;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

bool miller_rabin(std::uint64_t n) {
    // Witness set valid for every n < 2^64.
    static constexpr std::uint64_t witnesses[] = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    std::uint64_t d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    for (std::uint64_t w : witnesses) {
        std::uint64_t a = w % n;
        if (a == 0) continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        constexpr std::uint64_t m = 128;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_large(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t f = pollard_brent(n);
    split_large(f, out);
    split_large(n / f, out);
}

constexpr std::uint64_t kTrialLimit = 1'000'000;

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    return miller_rabin(n);
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("cannot factor zero");
    if (n >= (1ULL << 63)) throw DomainError("factorization input must be below 2^63");
    Factorization result;
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) result.push_back({p, e});
    };
    take(2);
    for (std::uint64_t p = 3; p <= kTrialLimit && p * p <= n; p += 2) take(p);
    if (n > 1 && is_prime(n)) {
        result.push_back({n, 1});
    } else if (n > 1) {
        std::vector<std::uint64_t> primes;
        split_large(n, primes);
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            result.push_back({primes[i], static_cast<unsigned>(j - i)});
            i = j;
        }
    }
    return result;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

bool is_squarefree(std::uint64_t n) {
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1) return false;
    }
    return true;
}

int mobius(std::uint64_t n) {
    if (n == 0) throw DomainError("mobius requires n >= 1");
    int mu = 1;
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1) return 0;
        mu = -mu;
    }
    return mu;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw DomainError("euler_phi requires n >= 1");
    std::uint64_t phi = n;
    for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

long val2(const BigInt& n) {
    if (n == 0) throw DomainError("valuation of zero undefined");
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

long val2(const Rational& q) {
    if (q.is_zero()) throw DomainError("valuation of zero undefined");
    return val2(q.num()) - val2(q.den());
}

}  // namespace tamekernel
