#include "tamekernel/classgroups.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace tamekernel {

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>((cols + 63) / 64), 0) {
    if (rows < 0 || cols < 0) throw DomainError("matrix dimensions must be non-negative");
}

bool Gf2Matrix::get(int i, int j) const {
    return (data_[static_cast<std::size_t>(i * words_ + j / 64)] >> (j % 64)) & 1u;
}

void Gf2Matrix::set(int i, int j, bool value) {
    std::uint64_t& w = data_[static_cast<std::size_t>(i * words_ + j / 64)];
    const std::uint64_t bit = std::uint64_t{1} << (j % 64);
    w = value ? (w | bit) : (w & ~bit);
}

int Gf2Matrix::rank() const {
    std::vector<std::uint64_t> m = data_;
    auto row = [&](int i) { return m.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(words_); };
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        const int w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        int pivot = -1;
        for (int i = rank; i < rows_; ++i) {
            if (row(i)[w] & bit) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) std::swap_ranges(row(pivot), row(pivot) + words_, row(rank));
        for (int i = 0; i < rows_; ++i) {
            if (i != rank && (row(i)[w] & bit)) {
                for (int k = 0; k < words_; ++k) row(i)[k] ^= row(rank)[k];
            }
        }
        ++rank;
    }
    return rank;
}

RedeiMatrix redei_matrix(std::int64_t disc) {
    if (disc > -3 && disc < 3) throw DomainError("|disc| must be at least 3");
    Discriminant d = fundamental_discriminant(disc);
    RedeiMatrix out;
    out.t = d.prime_count();
    out.bits = Gf2Matrix(out.t, out.t);
    out.prime_discriminants = d.prime_discriminants;
    for (int i = 0; i < out.t; ++i) {
        for (int j = 0; j < out.t; ++j) {
            if (i != j) out.bits.set(i, j, kronecker(d.prime_discriminants[i], d.primes[j]) == -1);
        }
    }
    for (int k = 0; k < out.t; ++k) {
        bool sum = false;
        for (int i = 0; i < out.t; ++i) {
            if (i != k) sum ^= out.bits.get(i, k);
        }
        out.bits.set(k, k, sum);
    }
    return out;
}

int gf2_rank(const RedeiMatrix& m) { return m.bits.rank(); }

bool minus_one_is_norm(const Discriminant& D) {
    if (D.value <= 0) throw DomainError("norm test needs a positive discriminant");
    return std::all_of(D.odd_primes.begin(), D.odd_primes.end(), [](std::int64_t p) { return p % 4 == 1; });
}

int ordinary_r2(std::int64_t disc, bool r4_zero) {
    if (!r4_zero) throw DomainError("hypothesis r4 = 0 required");
    if (disc <= 0) throw DomainError("ordinary 2-rank formula needs a real field");
    Discriminant d = fundamental_discriminant(disc);
    return minus_one_is_norm(d) ? d.prime_count() - 1 : d.prime_count() - 2;
}

RankReport narrow_ranks(std::int64_t disc) {
    RedeiMatrix m = redei_matrix(disc);
    RankReport r;
    r.t = m.t;
    r.redei_rank = gf2_rank(m);
    r.r2_narrow = r.t - 1;
    r.r4_narrow = r.t - 1 - r.redei_rank;
    if (disc > 0) {
        r.minus_one_norm = minus_one_is_norm(fundamental_discriminant(disc));
        if (r.r4_narrow == 0) {
            r.r4_ordinary_zero = true;
            r.r2_ordinary = ordinary_r2(disc, true);
        }
    } else {
        // imaginary: narrow and ordinary class groups coincide
        r.r2_ordinary = r.r2_narrow;
        r.r4_ordinary_zero = r.r4_narrow == 0;
    }
    return r;
}

const char* splitting_name(Splitting s) {
    switch (s) {
        case Splitting::Split: return "split";
        case Splitting::Inert: return "inert";
        case Splitting::Ramified: return "ramified";
    }
    return "inert";
}

bool norm_plus_minus_two(std::int64_t m) {
    if (m < 2) throw DomainError("norm equation needs m >= 2");
    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
    while (root * root > m) --root;
    while ((root + 1) * (root + 1) <= m) ++root;
    if (root * root == m) throw DomainError("norm equation needs a non-square m");
    if (m < 5) {
        // |x^2 - m y^2| = 2 may need non-convergent solutions here; these are tiny
        for (std::int64_t y = 0; y <= 4; ++y) {
            for (std::int64_t x = 0; x <= 8; ++x) {
                std::int64_t v = x * x - m * y * y;
                if (v == 2 || v == -2) return true;
            }
        }
        return false;
    }
    // Convergents p/q of sqrt(m) satisfy p_{k-1}^2 - m q_{k-1}^2 = (-1)^k Q_k; since
    // 2 < sqrt(m), every solution shows up as some Q_k = 2 within one period.
    std::int64_t P = 0;
    std::int64_t Q = 1;
    std::int64_t a = root;
    do {
        P = a * Q - P;
        Q = (m - P * P) / Q;
        if (Q == 2) return true;
        a = (root + P) / Q;
    } while (Q != 1);
    return false;
}

PrimeAboveTwo prime_above_2(const Discriminant& D) {
    if (D.value <= 0) throw DomainError("prime above 2 needs a positive discriminant");
    PrimeAboveTwo out;
    if (D.is_even()) {
        out.splitting = Splitting::Ramified;
        out.s = 1;
        out.principal = norm_plus_minus_two(D.value / 4);
    } else if (D.value % 8 == 1) {
        out.splitting = Splitting::Split;
        out.s = 2;
    } else {
        out.splitting = Splitting::Inert;
        out.s = 1;
    }
    return out;
}

int r2_k2(const Discriminant& D) {
    const std::string undetermined = "2-rank of S-class group not determined by implemented theory";
    RankReport ranks = narrow_ranks(D.value);
    if (!ranks.r2_ordinary) throw DomainError(undetermined);
    const int r2_cf = *ranks.r2_ordinary;
    PrimeAboveTwo p2 = prime_above_2(D);
    int r2_s;
    switch (p2.splitting) {
        case Splitting::Inert: r2_s = r2_cf; break;
        case Splitting::Ramified:
            if (*p2.principal) {
                r2_s = r2_cf;
            } else {
                // a non-principal ideal of order 2 needs a nontrivial 2-part
                if (r2_cf == 0) throw std::logic_error("non-principal ramified prime in odd class group");
                r2_s = r2_cf - 1;
            }
            break;
        default: throw DomainError(undetermined);
    }
    return 1 + r2_s + p2.s;
}

R4Bound r4_k2_bound(const Discriminant& D) {
    if (D.value <= 0) throw DomainError("4-rank bound needs a positive discriminant");
    Discriminant e = negative_counterpart(D);
    RankReport ranks = narrow_ranks(e.value);
    R4Bound out;
    out.r4_CE = ranks.r4_narrow;
    out.bound_low = std::max(0, out.r4_CE - 1);
    out.bound_high = out.r4_CE + 1;
    return out;
}

namespace {

using i128 = __int128;

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

// u a + v b = g with g = gcd(a, b) >= 0
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
    std::int64_t u0 = 1, v0 = 0, u1 = 0, v1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(u0, u1) = std::make_pair(u1, u0 - q * u1);
        std::tie(v0, v1) = std::make_pair(v1, v0 - q * v1);
    }
    if (a < 0) {
        a = -a;
        u0 = -u0;
        v0 = -v0;
    }
    u = u0;
    v = v0;
    return a;
}

// b into (-a, a] with c recomputed
Form normalize(Form f, std::int64_t disc) {
    std::int64_t two_a = 2 * f.a;
    std::int64_t b = floor_mod(f.b, two_a);
    if (b > f.a) b -= two_a;
    f.b = b;
    f.c = static_cast<std::int64_t>((static_cast<i128>(b) * b - disc) / (4 * static_cast<i128>(f.a)));
    return f;
}

}  // namespace

Form reduce(Form f) {
    const std::int64_t disc = f.discriminant();
    if (disc >= 0 || f.a <= 0) throw DomainError("reduction needs a positive-definite form");
    f = normalize(f, disc);
    while (f.a > f.c) {
        f = normalize(Form{f.c, -f.b, f.a}, disc);
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
}

Form identity_form(std::int64_t disc) {
    std::int64_t b = floor_mod(disc, 2);
    return Form{1, b, (b * b - disc) / 4};
}

Form inverse(const Form& f) { return reduce(Form{f.a, -f.b, f.c}); }

// Shanks composition of primitive forms of equal discriminant.
Form compose(const Form& f, const Form& g) {
    const std::int64_t disc = f.discriminant();
    if (g.discriminant() != disc) throw DomainError("composition needs equal discriminants");
    Form f1 = f;
    Form f2 = g;
    if (f1.a > f2.a) std::swap(f1, f2);
    const std::int64_t s = (f1.b + f2.b) / 2;
    const std::int64_t n = f2.b - s;

    std::int64_t u, v, d, y1;
    if (f2.a % f1.a == 0) {
        y1 = 0;
        d = f1.a;
    } else {
        d = ext_gcd(f2.a, f1.a, u, v);
        y1 = u;
    }
    std::int64_t d1, x2, y2;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        d1 = ext_gcd(s, d, u, v);
        x2 = u;
        y2 = -v;
    }
    const std::int64_t v1 = f1.a / d1;
    const std::int64_t v2 = f2.a / d1;
    i128 r = (static_cast<i128>(y1) * y2 % v1 * n - static_cast<i128>(x2) * f2.c) % v1;
    if (r < 0) r += v1;
    i128 b3 = f2.b + 2 * static_cast<i128>(v2) * r;
    i128 a3 = static_cast<i128>(v1) * v2;
    i128 b3m = b3 % (2 * a3);
    i128 c3 = (b3m * b3m - disc) / (4 * a3);
    return reduce(Form{static_cast<std::int64_t>(a3), static_cast<std::int64_t>(b3m), static_cast<std::int64_t>(c3)});
}

std::vector<Form> reduced_forms(std::int64_t disc) {
    if (disc >= 0 || floor_mod(disc, 4) > 1) throw DomainError("reduced forms need a negative discriminant");
    std::vector<Form> out;
    const std::int64_t limit = static_cast<std::int64_t>(std::sqrt(static_cast<double>(-disc) / 3.0)) + 1;
    for (std::int64_t a = 1; a <= limit; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (floor_mod(b - disc, 2) != 0) continue;
            std::int64_t num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if ((a == c || b == a) && b < 0) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            out.push_back(Form{a, b, c});
        }
    }
    return out;
}

int two_power_rank(const std::vector<std::int64_t>& invariants, int k) {
    const std::int64_t q = std::int64_t{1} << k;
    return static_cast<int>(std::count_if(invariants.begin(), invariants.end(),
                                          [q](std::int64_t n) { return n % q == 0; }));
}

std::vector<std::int64_t> form_class_group(std::int64_t neg_disc) {
    if (neg_disc >= 0) throw DomainError("form class group needs a negative discriminant");
    if (neg_disc <= -1000000 || neg_disc > -3) throw DomainError("discriminant out of range (-10^6, -3]");
    if (!is_fundamental(neg_disc)) throw DomainError("not a fundamental discriminant: " + std::to_string(neg_disc));

    const std::vector<Form> forms = reduced_forms(neg_disc);
    const Form id = identity_form(neg_disc);
    std::vector<std::int64_t> orders;
    orders.reserve(forms.size());
    for (const Form& f : forms) {
        std::int64_t k = 1;
        Form x = f;
        while (!(x == id)) {
            x = compose(x, f);
            ++k;
            if (k > static_cast<std::int64_t>(forms.size())) throw std::logic_error("element order exceeds class number");
        }
        orders.push_back(k);
    }

    // #A[p^k] for each prime power gives the number of cyclic factors of order >= p^k
    std::vector<std::int64_t> invariants;
    const auto h = static_cast<std::uint64_t>(forms.size());
    for (const auto& pp : factorize(h)) {
        const auto p = static_cast<std::int64_t>(pp.prime);
        std::vector<int> at_least;  // at_least[k-1]: factors of order >= p^k
        std::int64_t prev = 1;
        std::int64_t pk = 1;
        for (unsigned k = 1; k <= pp.exponent; ++k) {
            pk *= p;
            auto count = static_cast<std::int64_t>(
                std::count_if(orders.begin(), orders.end(), [pk](std::int64_t o) { return pk % o == 0; }));
            int factors = 0;
            for (std::int64_t ratio = count / prev; ratio > 1; ratio /= p) ++factors;
            if (factors == 0) break;
            at_least.push_back(factors);
            prev = count;
        }
        // j-th largest p-component has order p^{#k with at_least[k-1] > j}
        const int width = at_least.empty() ? 0 : at_least.front();
        std::vector<std::int64_t> components;
        for (int j = 0; j < width; ++j) {
            std::int64_t order = 1;
            for (int f : at_least) {
                if (f > j) order *= p;
            }
            components.push_back(order);
        }
        // merge into invariant factors, largest components into the last factor
        if (invariants.size() < components.size()) {
            invariants.insert(invariants.begin(), components.size() - invariants.size(), 1);
        }
        for (std::size_t j = 0; j < components.size(); ++j) {
            invariants[invariants.size() - 1 - j] *= components[j];
        }
    }
    return invariants;
}

}  // namespace tamekernel
