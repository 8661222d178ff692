#include "tamekernel/scanner.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "tamekernel/k2.hpp"
#include "tamekernel/lvalues.hpp"
#include "tamekernel/parallel.hpp"
#include "tamekernel/serialize.hpp"

namespace tamekernel {

namespace {

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
    std::vector<std::int64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

std::vector<std::int64_t> with_residue(const std::vector<std::int64_t>& primes, std::int64_t r, std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t p : primes) {
        if (p > limit) break;
        if (p % 8 == r) out.push_back(p);
    }
    return out;
}

bool is_mod5_kind(FamilyKind k) {
    return k == FamilyKind::GeneralMod5 || k == FamilyKind::Mod5OddN || k == FamilyKind::Mod5EvenN;
}

// Walks products of distinct primes from `pool` (ascending) not exceeding `bound`.
// `admit(chosen, p)` may prune a branch; `emit(chosen, product)` sees every non-empty set.
class ProductWalker {
public:
    using Admit = std::function<bool(const std::vector<std::int64_t>&, std::int64_t)>;
    using Emit = std::function<void(const std::vector<std::int64_t>&, std::int64_t)>;

    ProductWalker(const std::vector<std::int64_t>& pool, Admit admit, Emit emit, int max_count)
        : pool_(pool), admit_(std::move(admit)), emit_(std::move(emit)), max_count_(max_count) {}

    void run(std::int64_t bound) {
        chosen_.clear();
        walk(0, 1, bound);
    }

private:
    void walk(std::size_t start, std::int64_t product, std::int64_t bound) {
        if (static_cast<int>(chosen_.size()) >= max_count_) return;
        for (std::size_t i = start; i < pool_.size(); ++i) {
            const std::int64_t p = pool_[i];
            if (product > bound / p) break;
            if (!admit_(chosen_, p)) continue;
            chosen_.push_back(p);
            emit_(chosen_, product * p);
            walk(i + 1, product * p, bound);
            chosen_.pop_back();
        }
    }

    const std::vector<std::int64_t>& pool_;
    Admit admit_;
    Emit emit_;
    int max_count_;
    std::vector<std::int64_t> chosen_;
};

bool nonresidue_with_all(const std::vector<std::int64_t>& chosen, std::int64_t p) {
    return std::all_of(chosen.begin(), chosen.end(), [p](std::int64_t q) { return kronecker(q, p) == -1; });
}

bool matches(const FamilyTag& tag, const FamilySelector& family) {
    return tag.kind == family.kind && (!family.n || *family.n == tag.n);
}

std::vector<Discriminant> enumerate_mod5(const FamilySelector& family, std::int64_t max_D,
                                         const std::vector<std::int64_t>& primes) {
    const std::vector<std::int64_t> pool = with_residue(primes, 5, max_D);
    const bool pairwise = family.kind != FamilyKind::GeneralMod5;
    const int max_count = family.n ? *family.n : 64;
    std::vector<Discriminant> out;
    ProductWalker walker(
        pool,
        [&](const std::vector<std::int64_t>& chosen, std::int64_t p) {
            return !pairwise || nonresidue_with_all(chosen, p);
        },
        [&](const std::vector<std::int64_t>& chosen, std::int64_t D) {
            std::vector<std::int64_t> sorted = chosen;
            Discriminant d = make_discriminant_from_primes(D, sorted);
            if (matches(classify(d), family)) out.push_back(std::move(d));
        },
        max_count);
    walker.run(max_D);
    return out;
}

std::vector<Discriminant> enumerate_mod83(const FamilySelector& family, std::int64_t max_D,
                                          const std::vector<std::int64_t>& primes) {
    const std::vector<std::int64_t> threes = with_residue(primes, 3, max_D / 4);
    const std::vector<std::int64_t> fives = with_residue(primes, 5, max_D / 12);
    const FamilyKind kind = family.kind;
    const bool pairwise = kind != FamilyKind::GeneralMod83;
    const int max_count = family.n ? *family.n - 1 : 64;
    std::vector<Discriminant> out;

    for (std::int64_t l1 : threes) {
        if (family.n && *family.n < 1) break;
        auto admit = [&](const std::vector<std::int64_t>& chosen, std::int64_t p) {
            if (pairwise && !nonresidue_with_all(chosen, p)) return false;
            const int symbol = kronecker(l1, p);
            switch (kind) {
                case FamilyKind::Mod83Case1:
                case FamilyKind::Mod83Case2a: return symbol == -1;
                case FamilyKind::Mod83Case2b: return symbol == 1;
                case FamilyKind::Mod83Case2c: {
                    if (symbol == 1) return true;
                    return std::none_of(chosen.begin(), chosen.end(),
                                        [&](std::int64_t q) { return kronecker(l1, q) == -1; });
                }
                default: return true;
            }
        };
        auto emit = [&](const std::vector<std::int64_t>& chosen, std::int64_t product) {
            std::vector<std::int64_t> odd = chosen;
            odd.push_back(l1);
            std::sort(odd.begin(), odd.end());
            Discriminant d = make_discriminant_from_primes(4 * l1 * product, odd);
            if (matches(classify(d), family)) out.push_back(std::move(d));
        };
        emit({}, 1);
        ProductWalker walker(fives, admit, emit, max_count);
        walker.run(max_D / (4 * l1));
    }
    std::sort(out.begin(), out.end(), [](const Discriminant& a, const Discriminant& b) { return a.value < b.value; });
    return out;
}

void check_bound(std::int64_t max_D) {
    if (max_D > kMaxScanBound) throw DomainError("max_D must not exceed 10^8");
}

}  // namespace

FamilySelector parse_family(std::string_view text) {
    if (text == "thm1") return {FamilyKind::Mod83Case2c, std::nullopt};
    if (text.starts_with("thm1-n")) {
        std::string_view digits = text.substr(6);
        int n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || n < 2 || n % 2 != 0) {
            throw DomainError("thm1 family needs an even n >= 2: " + std::string(text));
        }
        return {FamilyKind::Mod83Case2c, n};
    }
    if (text == "thm2-1") return {FamilyKind::Mod5OddN, std::nullopt};
    if (text == "thm2-2") return {FamilyKind::Mod83Case1, std::nullopt};
    if (text == "mod85-general") return {FamilyKind::GeneralMod5, std::nullopt};
    if (text == "mod83-general") return {FamilyKind::GeneralMod83, std::nullopt};
    FamilyKind kind = parse_family_kind(text);
    if (kind == FamilyKind::None) throw DomainError("family None cannot be enumerated");
    return {kind, std::nullopt};
}

std::vector<Discriminant> enumerate_family(const FamilySelector& family, std::int64_t max_D) {
    check_bound(max_D);
    if (family.kind == FamilyKind::None) throw DomainError("family None cannot be enumerated");
    if (max_D < 5) return {};
    const std::vector<std::int64_t> primes = primes_up_to(is_mod5_kind(family.kind) ? max_D : max_D / 4);
    std::vector<Discriminant> out =
        is_mod5_kind(family.kind) ? enumerate_mod5(family, max_D, primes) : enumerate_mod83(family, max_D, primes);
    std::sort(out.begin(), out.end(), [](const Discriminant& a, const Discriminant& b) { return a.value < b.value; });
    return out;
}

std::vector<Discriminant> enumerate_classified(std::int64_t max_D) {
    check_bound(max_D);
    std::vector<Discriminant> out;
    if (max_D < 5) return out;
    const std::vector<std::int64_t> primes = primes_up_to(max_D);
    for (FamilyKind k : {FamilyKind::GeneralMod5, FamilyKind::Mod5OddN, FamilyKind::Mod5EvenN}) {
        auto part = enumerate_mod5({k, std::nullopt}, max_D, primes);
        out.insert(out.end(), part.begin(), part.end());
    }
    for (FamilyKind k : {FamilyKind::GeneralMod83, FamilyKind::Mod83Case1, FamilyKind::Mod83Case2a,
                         FamilyKind::Mod83Case2b, FamilyKind::Mod83Case2c}) {
        auto part = enumerate_mod83({k, std::nullopt}, max_D, primes);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end(), [](const Discriminant& a, const Discriminant& b) { return a.value < b.value; });
    return out;
}

std::vector<TableRow> build_table(const FamilySelector& family, std::int64_t max_D) {
    const std::vector<Discriminant> members = enumerate_family(family, max_D);
    std::vector<TableRow> rows(members.size());
    parallel_for(members.size(), [&](std::size_t i) {
        const Discriminant& d = members[i];
        TableRow& row = rows[i];
        row.D = d.value;
        row.D_over_4 = d.is_even() ? d.value / 4 : d.value;
        row.primes = classify(d).labeling;
        if (family.kind == FamilyKind::Mod83Case2c && d.value > 8) {
            K2Report rep = resolve_structure(d);
            row.neg_L = Rational(rep.k2_order) / Rational(2);
            row.delta = rep.delta;
        } else {
            row.neg_L = -l_at_minus1(d).value;
        }
    });
    return rows;
}

std::string format_value(const Rational& q) { return q.is_integer() ? q.num().get_str() : q.to_string(); }

void write_csv(std::ostream& out, const std::vector<TableRow>& rows) {
    std::size_t width = 4;
    for (const auto& r : rows) width = std::max(width, r.primes.size());
    out << "D,D_over_4";
    for (std::size_t k = 1; k <= width; ++k) out << ",p" << k;
    out << ",neg_L,delta\n";
    for (const auto& r : rows) {
        out << r.D << ',' << r.D_over_4;
        for (std::size_t k = 0; k < width; ++k) {
            out << ',';
            if (k < r.primes.size()) out << r.primes[k];
        }
        out << ',' << format_value(r.neg_L) << ',';
        if (r.delta) out << *r.delta;
        out << '\n';
    }
}

void write_json_lines(std::ostream& out, const std::vector<TableRow>& rows) {
    for (const auto& r : rows) out << to_json(r).dump() << '\n';
}

}  // namespace tamekernel
