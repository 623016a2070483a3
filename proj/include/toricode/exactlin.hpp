#pragma once

// Exact integer and rational linear algebra over GMP.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace toricode {

using BigInt = mpz_class;
// mpq_class keeps itself canonical (lowest terms, positive denominator) after
// every arithmetic operation; only raw construction from a num/den pair needs
// an explicit canonicalize(), which make_rat does.
using BigRat = mpq_class;

BigRat make_rat(const BigInt& num, const BigInt& den);

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<BigRat>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(std::span<const BigInt> v) const;

    bool operator==(const IntMatrix& rhs) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row a += k * row b
    void add_row_multiple(std::size_t a, std::size_t b, const BigInt& k);
    void add_col_multiple(std::size_t a, std::size_t b, const BigInt& k);
    void negate_row(std::size_t a);
    void negate_col(std::size_t a);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

BigInt determinant(const IntMatrix& m);

struct SNFResult {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::size_t rank() const;
    // Nonzero diagonal entries d1 | d2 | ... in order.
    IntVector invariant_factors() const;
};

// U * A * V = D, with D diagonal and a divisibility chain on its nonzero entries.
SNFResult smith_normal_form(const IntMatrix& a);

struct HNFResult {
    IntMatrix H; // lower-triangular column echelon form: A * W = H
    IntMatrix W; // unimodular, cols x cols
};

HNFResult column_hermite_form(const IntMatrix& a);

// Some a with D * a = alpha, or nullopt if alpha is outside the column lattice of D.
std::optional<IntVector> integer_preimage(const IntMatrix& d, std::span<const BigInt> alpha);

using RatMatrix = std::vector<RatVector>;

// Exact Gaussian elimination. nullopt when `a` is singular.
std::optional<RatVector> solve_rational(RatMatrix a, RatVector b);

IntVector to_big(std::span<const std::int64_t> v);
std::vector<std::int64_t> to_i64(std::span<const BigInt> v);

} // namespace toricode
