#include "tamekernel/charsum.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "tamekernel/characters.hpp"
#include "tamekernel/parallel.hpp"

namespace tamekernel {

namespace {

constexpr std::int64_t kMaxBlockModulus = 1 << 16;
constexpr std::int64_t kWindowTerms = std::int64_t{1} << 32;
constexpr std::int64_t kMaxUpper = (std::int64_t{1} << 32) - 1;  // keeps a^2 inside 64 bits
constexpr std::int64_t kTermsPerTask = 1 << 22;

struct Table {
    std::int64_t modulus;
    std::vector<std::uint16_t> code;
};

constexpr std::uint16_t kZeroCode = 0xFFFF;

std::uint16_t combine(std::uint16_t x, std::uint16_t y) {
    return (x == kZeroCode || y == kZeroCode) ? kZeroCode : static_cast<std::uint16_t>(x ^ y);
}

Table merge(const Table& x, const Table& y) {
    std::int64_t m = std::lcm(x.modulus, y.modulus);
    Table out{m, std::vector<std::uint16_t>(static_cast<std::size_t>(m))};
    for (std::int64_t r = 0; r < m; ++r) {
        out.code[r] = combine(x.code[r % x.modulus], y.code[r % y.modulus]);
    }
    return out;
}

// (a/p) for a = 0..p-1, marked by walking the squares incrementally.
Table legendre_table(std::int64_t p, std::uint16_t bit) {
    Table t{p, std::vector<std::uint16_t>(static_cast<std::size_t>(p), bit)};
    t.code[0] = kZeroCode;
    std::int64_t square = 0;
    for (std::int64_t x = 1; x <= (p - 1) / 2; ++x) {
        square += 2 * x - 1;
        if (square >= p) square -= p;
        t.code[square] = 0;
    }
    return t;
}

Table two_part_table(std::int64_t two_star, std::uint16_t bit) {
    Table t{8, std::vector<std::uint16_t>(8)};
    for (std::int64_t r = 0; r < 8; ++r) {
        int s = kronecker(two_star, r);
        t.code[r] = s == 0 ? kZeroCode : (s < 0 ? bit : 0);
    }
    return t;
}

Table coprime_table(std::int64_t p) {
    Table t{p, std::vector<std::uint16_t>(static_cast<std::size_t>(p), 0)};
    t.code[0] = kZeroCode;
    return t;
}

// When `mirror` is set the sweep also credits upper - a, whose sign mask differs by
// `odd` (the groups with an odd character); valid when every table period divides upper.
template <int NB, bool Mirror>
void run_blocks(const std::uint16_t* const* tab, const std::uint32_t* mod, int nb, std::int64_t lo,
                std::int64_t hi, int stride, std::uint64_t upper, std::uint32_t odd, __int128* acc) {
    const int count = NB >= 0 ? NB : nb;
    std::uint32_t res[16];
    for (int k = 0; k < count; ++k) res[k] = static_cast<std::uint32_t>(lo % mod[k]);
    const auto step = static_cast<std::uint32_t>(stride);
    for (std::int64_t a = lo; a <= hi; a += stride) {
        std::uint32_t mask = 0;
        bool zero = false;
        for (int k = 0; k < count; ++k) {
            std::uint16_t c = tab[k][res[k]];
            zero |= (c == kZeroCode);
            mask ^= c;
            res[k] += step;
            if (res[k] >= mod[k]) res[k] -= mod[k];
        }
        if (!zero) {
            auto ua = static_cast<std::uint64_t>(a);
            acc[mask] += ua * ua;
            if constexpr (Mirror) {
                std::uint64_t ub = upper - ua;
                acc[mask ^ odd] += ub * ub;
            }
        }
    }
}

template <bool Mirror>
void dispatch(int nb, const std::uint16_t* const* tab, const std::uint32_t* mod, std::int64_t lo, std::int64_t hi,
              int stride, std::uint64_t upper, std::uint32_t odd, __int128* acc) {
    switch (nb) {
        case 0: run_blocks<0, Mirror>(tab, mod, 0, lo, hi, stride, upper, odd, acc); break;
        case 1: run_blocks<1, Mirror>(tab, mod, 1, lo, hi, stride, upper, odd, acc); break;
        case 2: run_blocks<2, Mirror>(tab, mod, 2, lo, hi, stride, upper, odd, acc); break;
        case 3: run_blocks<3, Mirror>(tab, mod, 3, lo, hi, stride, upper, odd, acc); break;
        case 4: run_blocks<4, Mirror>(tab, mod, 4, lo, hi, stride, upper, odd, acc); break;
        default: run_blocks<-1, Mirror>(tab, mod, nb, lo, hi, stride, upper, odd, acc); break;
    }
}

}  // namespace

SquareSumsBySign::SquareSumsBySign(std::span<const std::vector<std::int64_t>> groups,
                                   std::span<const std::int64_t> coprime_to)
    : group_count_(static_cast<int>(groups.size())) {
    if (group_count_ > 15) throw DomainError("at most 15 character groups are supported");

    // one table per rational prime, merging everything that lives on that prime
    std::map<std::int64_t, Table> per_prime;
    auto add = [&](std::int64_t prime, Table t) {
        auto it = per_prime.find(prime);
        if (it == per_prime.end()) {
            per_prime.emplace(prime, std::move(t));
        } else {
            it->second = merge(it->second, t);
        }
    };
    for (int g = 0; g < group_count_; ++g) {
        auto bit = static_cast<std::uint16_t>(1u << g);
        for (std::int64_t pstar : groups[g]) {
            if (pstar == -4 || pstar == 8 || pstar == -8) {
                add(2, two_part_table(pstar, bit));
            } else {
                std::int64_t p = pstar < 0 ? -pstar : pstar;
                if (p % 2 == 0 || prime_discriminant_of(p) != pstar || !is_prime(static_cast<std::uint64_t>(p))) {
                    throw DomainError("not a prime discriminant: " + std::to_string(pstar));
                }
                add(p, legendre_table(p, bit));
            }
        }
    }
    for (std::int64_t p : coprime_to) {
        if (p < 2) throw DomainError("coprime_to entries must be primes");
        add(p, coprime_table(p));
    }
    if (per_prime.count(2) != 0) stride_ = 2;
    for (int g = 0; g < group_count_; ++g) {
        std::int64_t sign = 1;
        for (std::int64_t pstar : groups[g]) sign *= pstar < 0 ? -1 : 1;
        if (sign < 0) odd_mask_ |= 1u << g;
    }

    std::vector<Table> tables;
    for (auto& [p, t] : per_prime) tables.push_back(std::move(t));
    std::sort(tables.begin(), tables.end(), [](const Table& x, const Table& y) { return x.modulus < y.modulus; });
    for (auto& t : tables) {
        if (!blocks_.empty() && blocks_.back().modulus * t.modulus <= kMaxBlockModulus) {
            Table current{blocks_.back().modulus, std::move(blocks_.back().code)};
            Table merged = merge(current, t);
            blocks_.back() = Block{merged.modulus, std::move(merged.code)};
        } else {
            blocks_.push_back(Block{t.modulus, std::move(t.code)});
        }
    }
    if (blocks_.size() > 16) throw DomainError("too many distinct primes for the residue tables");
}

void SquareSumsBySign::accumulate(std::int64_t lo, std::int64_t hi, std::int64_t mirror_upper,
                                  std::vector<BigInt>& out) const {
    const std::size_t buckets = std::size_t{1} << group_count_;
    std::vector<__int128> acc(buckets, 0);
    std::vector<const std::uint16_t*> tab;
    std::vector<std::uint32_t> mod;
    for (const auto& b : blocks_) {
        tab.push_back(b.code.data());
        mod.push_back(static_cast<std::uint32_t>(b.modulus));
    }
    const int nb = static_cast<int>(blocks_.size());
    const auto upper = static_cast<std::uint64_t>(mirror_upper);
    // mirrored windows add two terms per step, so halve the spill interval
    const std::int64_t window = mirror_upper > 0 ? kWindowTerms / 2 : kWindowTerms;
    for (std::int64_t start = lo; start <= hi; start += window) {
        std::int64_t end = std::min(hi, start + window - 1);
        std::int64_t first = start;
        if (stride_ == 2 && first % 2 == 0) ++first;
        if (first <= end) {
            if (mirror_upper > 0) {
                dispatch<true>(nb, tab.data(), mod.data(), first, end, stride_, upper, odd_mask_, acc.data());
            } else {
                dispatch<false>(nb, tab.data(), mod.data(), first, end, stride_, 0, 0, acc.data());
            }
        }
        for (std::size_t m = 0; m < buckets; ++m) {
            if (acc[m] != 0) {
                out[m] += from_int128(acc[m]);
                acc[m] = 0;
            }
        }
    }
}

std::vector<BigInt> SquareSumsBySign::buckets(std::int64_t upper) const {
    if (upper > kMaxUpper) throw DomainError("character sums are limited to ranges below 2^32");
    const std::size_t nbuckets = std::size_t{1} << group_count_;
    std::vector<BigInt> total(nbuckets, BigInt(0));
    if (upper < 1) return total;

    // a and upper - a share every table residue up to sign when each period divides upper
    const bool mirror = std::all_of(blocks_.begin(), blocks_.end(), [&](const Block& b) { return upper % b.modulus == 0; });
    const std::int64_t swept = mirror ? (upper - 1) / 2 : upper;
    std::size_t tasks = static_cast<std::size_t>((swept + kTermsPerTask - 1) / kTermsPerTask);
    std::vector<std::vector<BigInt>> partial(tasks + 1, std::vector<BigInt>(nbuckets, BigInt(0)));
    parallel_for(tasks, [&](std::size_t i) {
        std::int64_t lo = 1 + static_cast<std::int64_t>(i) * kTermsPerTask;
        std::int64_t hi = std::min(swept, lo + kTermsPerTask - 1);
        accumulate(lo, hi, mirror ? upper : 0, partial[i]);
    });
    if (mirror) {
        // the unpaired terms: upper / 2 when upper is even, and upper itself
        if (upper % 2 == 0) accumulate(upper / 2, upper / 2, 0, partial[tasks]);
        accumulate(upper, upper, 0, partial[tasks]);
    }
    for (const auto& p : partial) {
        for (std::size_t m = 0; m < nbuckets; ++m) total[m] += p[m];
    }
    return total;
}

BigInt SquareSumsBySign::signed_sum(const std::vector<BigInt>& buckets, std::uint32_t subset) {
    BigInt s = 0;
    for (std::size_t m = 0; m < buckets.size(); ++m) {
        if (std::popcount(static_cast<std::uint32_t>(m) & subset) % 2 == 0) {
            s += buckets[m];
        } else {
            s -= buckets[m];
        }
    }
    return s;
}

BigInt character_square_sum(std::span<const std::int64_t> prime_discriminants,
                            std::span<const std::int64_t> coprime_to, std::int64_t upper) {
    std::vector<std::vector<std::int64_t>> groups{
        std::vector<std::int64_t>(prime_discriminants.begin(), prime_discriminants.end())};
    SquareSumsBySign sums(groups, coprime_to);
    auto b = sums.buckets(upper);
    return b[0] - b[1];
}

}  // namespace tamekernel
