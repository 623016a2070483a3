#include "toricode/exactlin.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <utility>

namespace toricode {

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw std::domain_error("zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long v : r)
            entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntVector IntMatrix::operator*(std::span<const BigInt> v) const {
    if (cols_ != v.size())
        throw std::invalid_argument("matrix-vector shape mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] += (*this)(i, j) * v[j];
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const BigInt& k) {
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(a, j) += k * (*this)(b, j);
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const BigInt& k) {
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, a) += k * (*this)(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(a, j) = -(*this)(a, j);
}

void IntMatrix::negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, a) = -(*this)(i, a);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m(i, j);
        os << "]";
    }
    return os;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m(i, j);
    BigRat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0)
                continue;
            BigRat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j)
                a[i][j] -= f * a[c][j];
        }
    }
    assert(det.get_den() == 1);
    return det.get_num();
}

std::size_t SNFResult::rank() const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D(i, i) != 0)
            ++k;
    return k;
}

IntVector SNFResult::invariant_factors() const {
    IntVector out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D(i, i) != 0)
            out.push_back(D(i, i));
    return out;
}

namespace {

// Position of the nonzero entry of least absolute value in the trailing block.
// Position of a nonzero entry of least absolute value in the trailing block.
bool smallest_entry(const IntMatrix& d, std::size_t t, std::pair<std::size_t, std::size_t>& best) {
    bool found = false;
    BigInt best_abs;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0)
                continue;
            BigInt v = abs(d(i, j));
            if (!found || v < best_abs) {
                best = {i, j};
                best_abs = v;
                found = true;
            }
        }
    return found;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
    SNFResult res{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    IntMatrix& D = res.D;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;
    const std::size_t limit = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < limit; ++t) {
        std::pair<std::size_t, std::size_t> pos{t, t};
        if (!smallest_entry(D, t, pos))
            break;
        while (true) {
            auto [pi, pj] = pos;
            D.swap_rows(t, pi);
            U.swap_rows(t, pi);
            D.swap_cols(t, pj);
            V.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < D.rows(); ++i) {
                if (D(i, t) == 0)
                    continue;
                BigInt q = -floor_div(D(i, t), D(t, t));
                D.add_row_multiple(i, t, q);
                U.add_row_multiple(i, t, q);
                if (D(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < D.cols(); ++j) {
                if (D(t, j) == 0)
                    continue;
                BigInt q = -floor_div(D(t, j), D(t, t));
                D.add_col_multiple(j, t, q);
                V.add_col_multiple(j, t, q);
                if (D(t, j) != 0)
                    clean = false;
            }
            if (clean) {
                // Pivot must divide the whole trailing block.
                std::optional<std::size_t> bad_row;
                for (std::size_t i = t + 1; i < D.rows() && !bad_row; ++i)
                    for (std::size_t j = t + 1; j < D.cols(); ++j)
                        if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                            bad_row = i;
                            break;
                        }
                if (!bad_row)
                    break;
                D.add_row_multiple(t, *bad_row, 1);
                U.add_row_multiple(t, *bad_row, 1);
            }
            smallest_entry(D, t, pos);
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    return res;
}

HNFResult column_hermite_form(const IntMatrix& a) {
    HNFResult res{a, IntMatrix::identity(a.cols())};
    IntMatrix& H = res.H;
    IntMatrix& W = res.W;
    std::size_t pc = 0;
    for (std::size_t i = 0; i < H.rows() && pc < H.cols(); ++i) {
        while (true) {
            std::optional<std::size_t> best;
            for (std::size_t j = pc; j < H.cols(); ++j)
                if (H(i, j) != 0 && (!best || abs(H(i, j)) < abs(H(i, *best))))
                    best = j;
            if (!best)
                break;
            H.swap_cols(pc, *best);
            W.swap_cols(pc, *best);
            bool done = true;
            for (std::size_t j = pc + 1; j < H.cols(); ++j) {
                if (H(i, j) == 0)
                    continue;
                BigInt q = -floor_div(H(i, j), H(i, pc));
                H.add_col_multiple(j, pc, q);
                W.add_col_multiple(j, pc, q);
                if (H(i, j) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (H(i, pc) == 0)
            continue;
        if (H(i, pc) < 0) {
            H.negate_col(pc);
            W.negate_col(pc);
        }
        for (std::size_t j = 0; j < pc; ++j) {
            BigInt q = -floor_div(H(i, j), H(i, pc));
            if (q != 0) {
                H.add_col_multiple(j, pc, q);
                W.add_col_multiple(j, pc, q);
            }
        }
        ++pc;
    }
    return res;
}

std::optional<IntVector> integer_preimage(const IntMatrix& d, std::span<const BigInt> alpha) {
    if (alpha.size() != d.rows())
        throw std::invalid_argument("integer_preimage: target length mismatch");
    const HNFResult hnf = column_hermite_form(d);
    const IntMatrix& H = hnf.H;
    IntVector y(d.cols());
    std::size_t pc = 0;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        BigInt residual = alpha[i];
        for (std::size_t j = 0; j < pc; ++j)
            residual -= H(i, j) * y[j];
        if (pc < H.cols() && H(i, pc) != 0) {
            if (!mpz_divisible_p(residual.get_mpz_t(), H(i, pc).get_mpz_t()))
                return std::nullopt;
            y[pc] = residual / H(i, pc);
            ++pc;
        } else if (residual != 0) {
            return std::nullopt;
        }
    }
    return hnf.W * std::span<const BigInt>(y);
}

std::optional<RatVector> solve_rational(RatMatrix a, RatVector b) {
    const std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("solve_rational: rhs length mismatch");
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("solve_rational: matrix must be square");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        const BigRat inv = 1 / a[c][c];
        for (std::size_t j = c; j < n; ++j)
            a[c][j] *= inv;
        b[c] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            const BigRat f = a[i][c];
            for (std::size_t j = c; j < n; ++j)
                a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    return b;
}

IntVector to_big(std::span<const std::int64_t> v) {
    IntVector out;
    out.reserve(v.size());
    for (std::int64_t x : v)
        out.emplace_back(static_cast<long>(x));
    return out;
}

std::vector<std::int64_t> to_i64(std::span<const BigInt> v) {
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const BigInt& x : v) {
        if (!x.fits_slong_p())
            throw std::overflow_error("integer does not fit in 64 bits");
        out.push_back(x.get_si());
    }
    return out;
}

} // namespace toricode
