#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tamekernel/characters.hpp"
#include "tamekernel/induction.hpp"

namespace tamekernel {

/// A family kind, optionally pinned to a prime count n.
struct FamilySelector {
    FamilyKind kind = FamilyKind::None;
    std::optional<int> n;
};

/// Accepts thm1-n<even>, thm1, thm2-1, thm2-2, mod85-general, mod83-general and the
/// raw kind names (Mod83-Case2c, ...).
FamilySelector parse_family(std::string_view text);

constexpr std::int64_t kMaxScanBound = 100'000'000;

/// Fundamental D <= max_D whose classification matches `family`, ascending.
std::vector<Discriminant> enumerate_family(const FamilySelector& family, std::int64_t max_D);

/// Every classified D <= max_D, all kinds together, ascending.
std::vector<Discriminant> enumerate_classified(std::int64_t max_D);

struct TableRow {
    std::int64_t D = 0;
    std::int64_t D_over_4 = 0;  // odd part for even D, D itself otherwise
    std::vector<std::int64_t> primes;
    Rational neg_L;  // an integer except for D = 5 and 8
    std::optional<long> delta;
};

std::vector<TableRow> build_table(const FamilySelector& family, std::int64_t max_D);

/// Integers as plain decimals, other rationals as num/den.
std::string format_value(const Rational& q);

void write_csv(std::ostream& out, const std::vector<TableRow>& rows);
void write_json_lines(std::ostream& out, const std::vector<TableRow>& rows);

}  // namespace tamekernel
