#include "toricode/gfcode.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "toricode/error.hpp"

namespace toricode {

LaurentPoly::LaurentPoly(std::uint32_t q, std::size_t n,
                         std::span<const std::pair<std::int64_t, LatticePoint>> terms)
    : q_(q), n_(n) {
    const PrimeField f(q);
    std::map<LatticePoint, std::uint32_t> merged;
    for (const auto& [c, e] : terms) {
        if (e.size() != n)
            throw Error(ErrorKind::InvalidInput, "exponent length differs from the number of torus variables");
        auto& slot = merged[e];
        slot = f.add(slot, f.reduce(c));
    }
    for (auto& [e, c] : merged)
        if (c != 0) {
            GF g;
            g.q = q;
            g.value = c;
            terms_.push_back({g, e});
        }
}

std::uint32_t LaurentPoly::evaluate(const PrimeField& f, std::span<const std::uint32_t> t) const {
    std::uint32_t acc = 0;
    for (const auto& term : terms_) {
        std::uint32_t v = term.coeff.value;
        for (std::size_t i = 0; i < n_; ++i)
            v = f.mul(v, f.pow(t[i], term.exponent[i]));
        acc = f.add(acc, v);
    }
    return acc;
}

PointSet make_point_set(std::span<const LatticePoint> raw, std::uint32_t q, std::size_t n) {
    const PrimeField f(q);
    PointSet out;
    for (const auto& p : raw) {
        if (p.size() != n)
            throw Error(ErrorKind::InvalidInput, "torus point has the wrong number of coordinates");
        TorusPoint t;
        for (auto c : p) {
            t.push_back(f.reduce(c));
            if (t.back() == 0)
                throw Error(ErrorKind::ZeroCoordinate, "torus point with a zero coordinate");
        }
        out.points.push_back(std::move(t));
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

PointSet find_torus_zeros(std::span<const LaurentPoly> system, std::uint32_t q, std::size_t n,
                          std::uint64_t budget) {
    const PrimeField f(q);
    for (const auto& poly : system)
        if (poly.modulus() != q || poly.num_vars() != n)
            throw Error(ErrorKind::InvalidInput, "system polynomial over a different field or torus");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= q - 1;
        if (total > budget)
            throw Error(ErrorKind::BudgetExceeded, "(q-1)^n exceeds the point budget of " + std::to_string(budget));
    }
    if (n == 0)
        return PointSet{{TorusPoint{}}};

    // One shard per value of the first coordinate; shards concatenate in sorted order.
    std::vector<std::vector<TorusPoint>> shards(q - 1);
    auto scan = [&](std::uint32_t first) {
        TorusPoint t(n, 1);
        t[0] = first;
        while (true) {
            bool zero = std::all_of(system.begin(), system.end(),
                                    [&](const LaurentPoly& p) { return p.evaluate(f, t) == 0; });
            if (zero)
                shards[first - 1].push_back(t);
            std::size_t i = n;
            while (i > 1) {
                --i;
                if (t[i] + 1 < q) {
                    ++t[i];
                    break;
                }
                t[i] = 1;
                if (i == 1)
                    return;
            }
            if (n == 1)
                return;
        }
    };
    const std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), q - 1);
    if (workers <= 1 || total < 4096) {
        for (std::uint32_t a = 1; a < q; ++a)
            scan(a);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::uint32_t a = static_cast<std::uint32_t>(w + 1); a < q; a += static_cast<std::uint32_t>(workers))
                    scan(a);
            });
    }
    PointSet out;
    for (auto& s : shards)
        for (auto& p : s)
            out.points.push_back(std::move(p));
    return out;
}

EvalCode monomial_evaluation_matrix(std::uint32_t q, std::vector<LatticePoint> monomials,
                                    std::vector<TorusPoint> points, LatticePoint pivot) {
    const PrimeField f(q);
    EvalCode code;
    code.q = q;
    code.matrix.reserve(monomials.size());
    for (const auto& m : monomials) {
        if (m.size() != pivot.size())
            throw Error(ErrorKind::InvalidInput, "monomial and pivot dimensions differ");
        std::vector<std::uint32_t> row;
        row.reserve(points.size());
        for (const auto& t : points) {
            if (t.size() != m.size())
                throw Error(ErrorKind::InvalidInput, "point and monomial dimensions differ");
            std::uint32_t v = 1 % q;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (f.reduce(t[i]) == 0)
                    throw Error(ErrorKind::ZeroCoordinate, "evaluation point off the torus");
                v = f.mul(v, f.pow(f.reduce(t[i]), m[i] - pivot[i]));
            }
            row.push_back(v);
        }
        code.matrix.push_back(std::move(row));
    }
    code.monomials = std::move(monomials);
    code.points = std::move(points);
    code.pivot = std::move(pivot);
    return code;
}

EvalCode evaluation_matrix(const ToricVariety& x, const DegreeClass& alpha, std::span<const TorusPoint> points,
                           std::uint32_t q, std::optional<LatticePoint> pivot) {
    if (points.empty())
        throw Error(ErrorKind::InvalidInput, "no evaluation points");
    LatticePointSet lp = lattice_points(polytope_of_degree(x, alpha));
    if (lp.empty())
        throw Error(ErrorKind::EmptySection, "P_alpha has no lattice points for alpha = " + to_string(alpha));
    LatticePoint m0 = pivot ? *pivot : lp.points.front();
    if (!lp.contains(m0))
        throw Error(ErrorKind::InvalidInput, "pivot monomial is not a lattice point of P_alpha");
    return monomial_evaluation_matrix(q, std::move(lp.points), std::vector<TorusPoint>(points.begin(), points.end()),
                                      std::move(m0));
}

LatticePoint torus_exponent(const ToricVariety& x, std::span<const std::int64_t> cox_exponent,
                            std::span<const std::int64_t> cox_pivot) {
    if (cox_exponent.size() != x.num_rays() || cox_pivot.size() != x.num_rays())
        throw Error(ErrorKind::InvalidInput, "Cox exponents need one entry per ray");
    std::vector<std::int64_t> diff(x.num_rays());
    for (std::size_t j = 0; j < diff.size(); ++j)
        diff[j] = cox_exponent[j] - cox_pivot[j];
    // Solve on the first cone's rays (a basis of N_Q), then verify every ray.
    const Cone& c = x.max_cones().front();
    const std::size_t n = x.dim();
    RatMatrix m(n, RatVector(n));
    RatVector b(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            m[k][i] = static_cast<long>(x.ray_vectors()[c[k]][i]);
        b[k] = static_cast<long>(diff[c[k]]);
    }
    auto sol = solve_rational(std::move(m), std::move(b));
    LatticePoint out;
    for (const auto& v : *sol) {
        if (v.get_den() != 1)
            throw Error(ErrorKind::InvalidInput, "monomials do not differ by a character");
        out.push_back(v.get_num().get_si());
    }
    for (std::size_t j = 0; j < x.num_rays(); ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            s += x.ray_vectors()[j][i] * out[i];
        if (s != diff[j])
            throw Error(ErrorKind::InvalidInput, "monomials have different degrees");
    }
    return out;
}

RowReduction row_reduce(const FqMatrix& m, std::uint32_t q, std::size_t cols) {
    const PrimeField f(q);
    RowReduction red;
    // Echelon rows kept with their pivot column; each new row is reduced against them.
    std::vector<std::vector<std::uint32_t>> echelon;
    std::vector<std::size_t> lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
        std::vector<std::uint32_t> row = m[r];
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            const std::uint32_t c = row[lead[e]];
            if (c == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                row[j] = f.sub(row[j], f.mul(c, echelon[e][j]));
        }
        std::size_t p = 0;
        while (p < cols && row[p] == 0)
            ++p;
        if (p == cols)
            continue;
        const std::uint32_t inv = f.inv(row[p]);
        for (auto& v : row)
            v = f.mul(v, inv);
        // Keep earlier rows reduced in the new pivot column.
        for (auto& prev : echelon) {
            const std::uint32_t c = prev[p];
            if (c == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                prev[j] = f.sub(prev[j], f.mul(c, row[j]));
        }
        echelon.push_back(std::move(row));
        lead.push_back(p);
        red.pivot_rows.push_back(r);
    }
    std::vector<std::size_t> order(echelon.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lead[a] < lead[b]; });
    for (std::size_t i : order) {
        red.basis.push_back(std::move(echelon[i]));
        red.pivot_cols.push_back(lead[i]);
    }
    return red;
}

std::size_t matrix_rank(const FqMatrix& m, std::uint32_t q, std::size_t cols) {
    return row_reduce(m, q, cols).basis.size();
}

std::size_t code_dimension(const EvalCode& code) {
    if (code.dimension)
        return *code.dimension;
    return matrix_rank(code.matrix, code.q, code.length());
}

std::size_t min_distance(const EvalCode& code, std::uint64_t budget) {
    const PrimeField f(code.q);
    const RowReduction red = row_reduce(code.matrix, code.q, code.length());
    const std::size_t k = red.basis.size();
    const std::size_t n = code.length();
    if (k == 0)
        throw Error(ErrorKind::ZeroCode, "the zero code has no minimum distance");
    std::uint64_t words = 1;
    for (std::size_t i = 0; i < k; ++i) {
        words *= code.q;
        if (words > budget)
            throw Error(ErrorKind::BudgetExceeded, "q^k exceeds the codeword budget of " + std::to_string(budget));
    }

    auto weight = [](const std::vector<std::uint32_t>& w) {
        return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](std::uint32_t v) { return v != 0; }));
    };
    std::size_t best = n;
    // Up to scalars every nonzero message has leading coefficient 1 at some position l.
    // Advancing digit i of the odometer (including a wrap to 0) always adds row i.
    for (std::size_t l = 0; l < k && best > 1; ++l) {
        std::vector<std::uint32_t> word = red.basis[l];
        std::vector<std::uint32_t> digits(k, 0);
        while (true) {
            best = std::min(best, weight(word));
            if (best == 1)
                break;
            std::size_t i = k;
            bool wrapped_all = true;
            while (i > l + 1) {
                --i;
                for (std::size_t j = 0; j < n; ++j)
                    word[j] = f.add(word[j], red.basis[i][j]);
                if (++digits[i] < code.q) {
                    wrapped_all = false;
                    break;
                }
                digits[i] = 0;
            }
            if (wrapped_all)
                break;
        }
    }
    return best;
}

void compute_parameters(EvalCode& code, std::uint64_t codeword_budget) {
    code.dimension = matrix_rank(code.matrix, code.q, code.length());
    code.min_distance.reset();
    if (*code.dimension == 0)
        return;
    try {
        code.min_distance = min_distance(code, codeword_budget);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded)
            throw;
    }
}

bool shift_equivalence_check(const EvalCode& base, const EvalCode& shifted,
                             std::span<const std::uint32_t> shift_values) {
    if (base.q != shifted.q || base.length() != shifted.length() || shift_values.size() != base.length())
        throw Error(ErrorKind::InvalidInput, "codes must share the field and evaluation points");
    const std::size_t n = base.length();
    const std::size_t ka = code_dimension(base);
    const std::size_t kb = code_dimension(shifted);
    if (ka != kb)
        throw Error(ErrorKind::DimensionMismatch,
                    "dimensions " + std::to_string(ka) + " and " + std::to_string(kb) + " differ");
    const PrimeField f(base.q);
    FqMatrix stacked;
    for (const auto& row : base.matrix) {
        std::vector<std::uint32_t> scaled(n);
        for (std::size_t j = 0; j < n; ++j)
            scaled[j] = f.mul(row[j], f.reduce(shift_values[j]));
        stacked.push_back(std::move(scaled));
    }
    if (matrix_rank(stacked, base.q, n) != ka)
        return false; // a zero shift value collapsed the scaled code
    for (const auto& row : shifted.matrix)
        stacked.push_back(row);
    return matrix_rank(stacked, base.q, n) == ka;
}

} // namespace toricode
