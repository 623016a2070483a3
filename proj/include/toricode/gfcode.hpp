#pragma once

// Evaluation codes over prime fields: torus zero finding for Laurent systems,
// evaluation matrices, rank and brute-force minimum distance.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "toricode/field.hpp"
#include "toricode/polytope.hpp"
#include "toricode/toricfan.hpp"

namespace toricode {

inline constexpr std::uint64_t kDefaultPointBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultCodewordBudget = 10'000'000;

using TorusPoint = std::vector<std::uint32_t>;
using FqMatrix = std::vector<std::vector<std::uint32_t>>;

struct LaurentTerm {
    GF coeff;
    LatticePoint exponent;
};

class LaurentPoly {
public:
    // Merges repeated exponents and drops zero coefficients.
    LaurentPoly(std::uint32_t q, std::size_t n, std::span<const std::pair<std::int64_t, LatticePoint>> terms);

    std::uint32_t modulus() const noexcept { return q_; }
    std::size_t num_vars() const noexcept { return n_; }
    const std::vector<LaurentTerm>& terms() const noexcept { return terms_; }

    // t must have nonzero entries
    std::uint32_t evaluate(const PrimeField& f, std::span<const std::uint32_t> t) const;

private:
    std::uint32_t q_;
    std::size_t n_;
    std::vector<LaurentTerm> terms_;
};

// Torus points in (F_q^*)^n, sorted lexicographically without duplicates.
struct PointSet {
    std::vector<TorusPoint> points;

    std::size_t size() const noexcept { return points.size(); }
};

// Reduces, validates (no zero coordinates), sorts and deduplicates.
PointSet make_point_set(std::span<const LatticePoint> raw, std::uint32_t q, std::size_t n);

// Exhaustive scan of (F_q^*)^n. Throws BudgetExceeded when (q-1)^n > budget.
PointSet find_torus_zeros(std::span<const LaurentPoly> system, std::uint32_t q, std::size_t n,
                          std::uint64_t budget = kDefaultPointBudget);

struct EvalCode {
    std::uint32_t q = 2;
    std::vector<LatticePoint> monomials; // one row per lattice point
    std::vector<TorusPoint> points;      // one column per point, in caller order
    LatticePoint pivot;                  // m_0: row m holds t^(m - m_0)
    FqMatrix matrix;
    std::optional<std::size_t> dimension;
    std::optional<std::size_t> min_distance;

    std::size_t length() const noexcept { return points.size(); }
};

// Rows t^(m - pivot) for the given lattice points, evaluated at the given points.
EvalCode monomial_evaluation_matrix(std::uint32_t q, std::vector<LatticePoint> monomials,
                                    std::vector<TorusPoint> points, LatticePoint pivot);

// All of P_alpha ∩ M in lexicographic order; the pivot defaults to the least point.
// Throws EmptySection when P_alpha has no lattice points.
EvalCode evaluation_matrix(const ToricVariety& x, const DegreeClass& alpha, std::span<const TorusPoint> points,
                           std::uint32_t q, std::optional<LatticePoint> pivot = std::nullopt);

// The m in M with phi(m) = difference of two Cox exponent vectors of equal degree.
LatticePoint torus_exponent(const ToricVariety& x, std::span<const std::int64_t> cox_exponent,
                            std::span<const std::int64_t> cox_pivot);

struct RowReduction {
    FqMatrix basis;                       // reduced row echelon form, rank x N
    std::vector<std::size_t> pivot_rows;  // input rows kept greedily, in order
    std::vector<std::size_t> pivot_cols;
};

RowReduction row_reduce(const FqMatrix& m, std::uint32_t q, std::size_t cols);

std::size_t matrix_rank(const FqMatrix& m, std::uint32_t q, std::size_t cols);

std::size_t code_dimension(const EvalCode& code);

// Minimum Hamming weight over all nonzero codewords. Throws ZeroCode when k = 0
// and BudgetExceeded when q^k > budget.
std::size_t min_distance(const EvalCode& code, std::uint64_t budget = kDefaultCodewordBudget);

// Fills the cached k and (budget permitting) d.
void compute_parameters(EvalCode& code, std::uint64_t codeword_budget = kDefaultCodewordBudget);

// Row space of `shifted` equals that of diag(shift_values) applied to `base`.
// Throws DimensionMismatch when the two codes have different dimensions.
bool shift_equivalence_check(const EvalCode& base, const EvalCode& shifted,
                             std::span<const std::uint32_t> shift_values);

} // namespace toricode
