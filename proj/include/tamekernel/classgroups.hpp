#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tamekernel/characters.hpp"

namespace tamekernel {

/// Dense matrix over GF(2) with bit-packed rows.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int i, int j) const;
    void set(int i, int j, bool value);

    /// Rank by Gaussian elimination on a copy.
    int rank() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Rédei matrix of a fundamental discriminant. Rows and columns follow the prime
/// discriminant order: the even factor first, then odd primes ascending.
struct RedeiMatrix {
    int t = 0;
    Gf2Matrix bits;
    std::vector<std::int64_t> prime_discriminants;
};

RedeiMatrix redei_matrix(std::int64_t disc);
int gf2_rank(const RedeiMatrix& m);

struct RankReport {
    int t = 0;
    int redei_rank = 0;
    int r2_narrow = 0;
    int r4_narrow = 0;
    bool minus_one_norm = false;
    std::optional<int> r2_ordinary;
    std::optional<bool> r4_ordinary_zero;
};

RankReport narrow_ranks(std::int64_t disc);

/// Whether -1 is a norm from Q(sqrt D), i.e. x^2 - D y^2 = -z^2 has a nontrivial solution.
bool minus_one_is_norm(const Discriminant& D);

/// 2-rank of the ordinary class group of a real field whose 4-rank is zero.
int ordinary_r2(std::int64_t disc, bool r4_zero);

enum class Splitting { Split, Inert, Ramified };

const char* splitting_name(Splitting s);

struct PrimeAboveTwo {
    Splitting splitting = Splitting::Inert;
    int s = 1;
    std::optional<bool> principal;  // set only when ramified
};

PrimeAboveTwo prime_above_2(const Discriminant& D);

/// Whether x^2 - m y^2 = +-2 has an integer solution (m > 1 squarefree).
bool norm_plus_minus_two(std::int64_t m);

/// 2-rank of K_2 of the ring of integers.
int r2_k2(const Discriminant& D);

struct R4Bound {
    int r4_CE = 0;
    int bound_low = 0;
    int bound_high = 0;
};

/// 4-rank bounds for K_2 from the class group of the imaginary field Q(sqrt -D).
R4Bound r4_k2_bound(const Discriminant& D);

/// Primitive positive-definite form a x^2 + b xy + c y^2.
struct Form {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    friend bool operator==(const Form&, const Form&) = default;
};

Form reduce(Form f);
Form compose(const Form& f, const Form& g);
Form identity_form(std::int64_t disc);
Form inverse(const Form& f);
std::vector<Form> reduced_forms(std::int64_t disc);

/// Cyclic decomposition of the form class group, invariant factors ascending with
/// each dividing the next. The trivial group is the empty sequence.
std::vector<std::int64_t> form_class_group(std::int64_t neg_disc);

/// Number of invariant factors divisible by 2^k.
int two_power_rank(const std::vector<std::int64_t>& invariants, int k);

}  // namespace tamekernel
