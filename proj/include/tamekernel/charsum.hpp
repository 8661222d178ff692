#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tamekernel/arith.hpp"

namespace tamekernel {

/// Sums of a^2 over 1 <= a <= upper, bucketed by the sign pattern of several
/// quadratic characters.
///
/// Each group is a list of prime discriminants; the group's character is the product
/// of their Kronecker characters, and bit g of an integer's sign mask is set when
/// group g's character is -1 there. Integers sharing a factor with any group prime or
/// any `coprime_to` prime are skipped. The character of a set T of groups therefore
/// satisfies sum chi_T(a) a^2 = sum_mask (-1)^{|T & mask|} bucket[mask].
///
/// Per-term work runs on residue tables (periodic in a) with 128-bit bucket windows
/// spilled into BigInt every 2^32 terms; the range is split across worker threads.
class SquareSumsBySign {
public:
    SquareSumsBySign(std::span<const std::vector<std::int64_t>> groups,
                     std::span<const std::int64_t> coprime_to);

    int group_count() const { return group_count_; }

    /// bucket[mask] for mask in [0, 2^groups).
    std::vector<BigInt> buckets(std::int64_t upper) const;

    /// sum over 1 <= a <= upper of chi_T(a) a^2, T a bitmask of groups.
    static BigInt signed_sum(const std::vector<BigInt>& buckets, std::uint32_t subset);

private:
    struct Block {
        std::int64_t modulus;
        std::vector<std::uint16_t> code;  // 0xFFFF marks a shared factor, else the xor-mask contribution
    };

    // mirror_upper > 0 also credits mirror_upper - a for each a in [lo, hi]
    void accumulate(std::int64_t lo, std::int64_t hi, std::int64_t mirror_upper, std::vector<BigInt>& out) const;

    int group_count_ = 0;
    int stride_ = 1;
    std::uint32_t odd_mask_ = 0;
    std::vector<Block> blocks_;
};

/// sum_{a=1}^{upper} chi(a) a^2 for the product character of `prime_discriminants`,
/// restricted to a prime to `coprime_to`.
BigInt character_square_sum(std::span<const std::int64_t> prime_discriminants,
                            std::span<const std::int64_t> coprime_to, std::int64_t upper);

}  // namespace tamekernel
