#include "toricode/toricfan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "toricode/error.hpp"
#include "toricode/field.hpp"
#include "toricode/polytope.hpp"

namespace toricode {

bool DegreeClass::is_zero() const noexcept {
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

DegreeClass& DegreeClass::operator+=(const DegreeClass& o) {
    if (o.size() != size())
        throw Error(ErrorKind::InvalidInput, "degree classes of different rank");
    for (std::size_t i = 0; i < size(); ++i)
        coords[i] += o.coords[i];
    return *this;
}

DegreeClass& DegreeClass::operator-=(const DegreeClass& o) {
    if (o.size() != size())
        throw Error(ErrorKind::InvalidInput, "degree classes of different rank");
    for (std::size_t i = 0; i < size(); ++i)
        coords[i] -= o.coords[i];
    return *this;
}

DegreeClass operator*(std::int64_t k, DegreeClass a) {
    for (auto& c : a.coords)
        c *= k;
    return a;
}

std::ostream& operator<<(std::ostream& os, const DegreeClass& d) {
    os << '(';
    for (std::size_t i = 0; i < d.size(); ++i)
        os << (i ? "," : "") << d[i];
    return os << ')';
}

std::string to_string(const DegreeClass& d) {
    std::ostringstream os;
    os << d;
    return os.str();
}

namespace {

std::string cone_name(const Cone& c) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i] + 1;
    return os.str() + '}';
}

// Coefficients of p in the basis given by the cone's rays, if all nonnegative.
std::optional<RatVector> cone_coefficients(const IntMatrix& rays, const Cone& cone, std::span<const BigInt> p) {
    const std::size_t n = rays.cols();
    RatMatrix m(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            m[i][k] = rays(cone[k], i);
    RatVector rhs(p.begin(), p.end());
    auto c = solve_rational(std::move(m), std::move(rhs));
    if (!c)
        return std::nullopt;
    for (const auto& v : *c)
        if (v < 0)
            return std::nullopt;
    return c;
}

void check_complete(const IntMatrix& rays, const std::vector<Cone>& cones) {
    const std::size_t r = rays.rows(), n = rays.cols();
    auto locate = [&](const IntVector& p) -> std::optional<std::pair<std::size_t, RatVector>> {
        for (std::size_t s = 0; s < cones.size(); ++s)
            if (auto c = cone_coefficients(rays, cones[s], p))
                return std::make_pair(s, std::move(*c));
        return std::nullopt;
    };
    auto fail = [](const std::string& what) {
        throw Error(ErrorKind::NotComplete, what + " is not covered by any maximal cone");
    };

    // Positive spanning certificate: lambda_k = 1 + sum_j c_{j,k} where -v_j = sum_k c_{j,k} v_k.
    RatVector lambda(r, BigRat(1));
    for (std::size_t j = 0; j < r; ++j) {
        if (!locate(rays.row(j)))
            fail("ray " + std::to_string(j + 1));
        IntVector neg = rays.row(j);
        for (auto& v : neg)
            v = -v;
        auto hit = locate(neg);
        if (!hit)
            fail("negated ray " + std::to_string(j + 1));
        const Cone& cone = cones[hit->first];
        for (std::size_t k = 0; k < n; ++k)
            lambda[cone[k]] += hit->second[k];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (int sign : {1, -1}) {
            IntVector e(n);
            e[i] = sign;
            if (!locate(e))
                fail(std::string(sign > 0 ? "+" : "-") + "e" + std::to_string(i + 1));
        }
    for (std::size_t i = 0; i < n; ++i) {
        BigRat s = 0;
        for (std::size_t j = 0; j < r; ++j)
            s += lambda[j] * rays(j, i);
        if (s != 0)
            throw Error(ErrorKind::NotComplete, "positive spanning certificate does not sum to zero");
    }
}

bool all_unit_factors(const SNFResult& snf, std::size_t expected_rank) {
    auto f = snf.invariant_factors();
    return f.size() == expected_rank && std::all_of(f.begin(), f.end(), [](const BigInt& d) { return d == 1; });
}

} // namespace

ToricVariety ToricVariety::build(IntMatrix rays, std::vector<Cone> max_cones, std::optional<IntMatrix> grading) {
    const std::size_t r = rays.rows(), n = rays.cols();
    if (n == 0 || r <= n)
        throw Error(ErrorKind::InvalidInput, "need n >= 1 and more rays than the lattice rank");
    if (max_cones.empty())
        throw Error(ErrorKind::InvalidInput, "no maximal cones");

    for (std::size_t j = 0; j < r; ++j) {
        BigInt g = 0;
        for (std::size_t i = 0; i < n; ++i)
            g = gcd(g, rays(j, i));
        if (g != 1)
            throw Error(ErrorKind::NotPrimitive, "ray " + std::to_string(j + 1) + " is not primitive");
    }

    for (auto& cone : max_cones) {
        for (std::size_t idx : cone)
            if (idx >= r)
                throw Error(ErrorKind::InvalidInput, "cone " + cone_name(cone) + " references a missing ray");
        std::set<std::size_t> uniq(cone.begin(), cone.end());
        if (uniq.size() != cone.size() || cone.size() != n)
            throw Error(ErrorKind::NotSimplicial, "cone " + cone_name(cone) + " does not have exactly n distinct rays");
        IntMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                m(k, i) = rays(cone[k], i);
        if (determinant(m) == 0)
            throw Error(ErrorKind::NotSimplicial, "rays of cone " + cone_name(cone) + " are linearly dependent");
    }

    check_complete(rays, max_cones);

    const SNFResult snf = smith_normal_form(rays);
    if (!all_unit_factors(snf, n))
        throw Error(ErrorKind::TorsionClassGroup, "the ray matrix has a nontrivial invariant factor");

    ToricVariety x;
    if (grading) {
        if (grading->rows() != r - n || grading->cols() != r)
            throw Error(ErrorKind::BadGrading, "grading must be (r-n) x r");
        const IntMatrix prod = *grading * rays;
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t k = 0; k < prod.cols(); ++k)
                if (prod(i, k) != 0)
                    throw Error(ErrorKind::BadGrading, "grading does not annihilate the rays");
        if (!all_unit_factors(smith_normal_form(*grading), r - n))
            throw Error(ErrorKind::BadGrading, "grading is not surjective onto Z^(r-n)");
        x.grading_ = std::move(*grading);
        x.grading_supplied_ = true;
    } else {
        // Rows n.. of U annihilate the rays and map Z^r onto the cokernel.
        x.grading_ = IntMatrix(r - n, r);
        for (std::size_t i = 0; i < r - n; ++i)
            for (std::size_t j = 0; j < r; ++j)
                x.grading_(i, j) = snf.U(n + i, j);
    }

    x.rays_ = std::move(rays);
    x.cones_ = std::move(max_cones);
    for (std::size_t j = 0; j < r; ++j) {
        x.ray_vecs_.push_back(to_i64(x.rays_.row(j)));
        x.betas_.emplace_back(to_i64(x.grading_.col(j)));
    }
    return x;
}

std::vector<std::size_t> ToricVariety::cone_complement(std::size_t cone) const {
    std::vector<std::size_t> out;
    const Cone& c = cones_.at(cone);
    for (std::size_t j = 0; j < num_rays(); ++j)
        if (std::find(c.begin(), c.end(), j) == c.end())
            out.push_back(j);
    return out;
}

DegreeClass ToricVariety::degree_of(std::span<const BigInt> divisor) const {
    return DegreeClass(to_i64(grading_ * divisor));
}

DegreeClass ToricVariety::degree_of(std::span<const std::int64_t> divisor) const {
    const IntVector big = to_big(divisor);
    return degree_of(std::span<const BigInt>(big));
}

IntVector ToricVariety::representative(const DegreeClass& alpha) const {
    if (alpha.size() != class_rank())
        throw Error(ErrorKind::InvalidInput, "degree " + to_string(alpha) + " has the wrong rank");
    const IntVector target = to_big(alpha.coords);
    auto a = integer_preimage(grading_, target);
    if (!a)
        throw Error(ErrorKind::NoPreimage, to_string(alpha) + " is not in the image of the grading");
    return *a;
}

DegreeClass ToricVariety::beta_sum() const {
    DegreeClass s = DegreeClass::zero(class_rank());
    for (const auto& b : betas_)
        s += b;
    return s;
}

bool in_semigroup(std::span<const DegreeClass> generators, const DegreeClass& target, std::int64_t bound) {
    const std::size_t k = target.size();
    const std::size_t g = generators.size();
    if (g == k && k > 0) {
        RatMatrix m(k, RatVector(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                m[i][j] = static_cast<long>(generators[j][i]);
        RatVector rhs;
        for (auto c : target.coords)
            rhs.emplace_back(static_cast<long>(c));
        if (auto sol = solve_rational(std::move(m), std::move(rhs))) {
            return std::all_of(sol->begin(), sol->end(),
                               [](const BigRat& v) { return v >= 0 && v.get_den() == 1; });
        }
    }
    if (target.is_zero())
        return true;
    bool any_nonzero = std::any_of(generators.begin(), generators.end(),
                                   [](const DegreeClass& d) { return !d.is_zero(); });
    if (!any_nonzero)
        return false;

    // Bounded exhaustive search over coefficient vectors with sum <= bound.
    std::function<bool(std::size_t, std::int64_t, DegreeClass)> search =
        [&](std::size_t idx, std::int64_t budget, DegreeClass rest) -> bool {
        if (rest.is_zero())
            return true;
        if (idx == g)
            return false;
        for (std::int64_t c = 0; c <= budget; ++c) {
            if (search(idx + 1, budget - c, rest))
                return true;
            rest -= generators[idx];
        }
        return false;
    };
    if (search(0, bound, target))
        return true;
    throw Error(ErrorKind::InconclusiveMembership,
                to_string(target) + " not reached with coefficient sum <= " + std::to_string(bound));
}

bool is_effective(const ToricVariety& x, const DegreeClass& alpha) {
    return count_lattice_points(x, alpha) > 0;
}

bool is_semiample(const ToricVariety& x, const DegreeClass& alpha, std::int64_t bound) {
    for (std::size_t s = 0; s < x.max_cones().size(); ++s) {
        std::vector<DegreeClass> gens;
        for (std::size_t j : x.cone_complement(s))
            gens.push_back(x.betas()[j]);
        if (!in_semigroup(gens, alpha, bound))
            return false;
    }
    return true;
}

bool preceq(const ToricVariety& x, const DegreeClass& alpha, const DegreeClass& alpha_prime) {
    return is_effective(x, alpha_prime - alpha);
}

std::vector<std::uint32_t> cox_to_torus(const ToricVariety& x, std::span<const std::int64_t> point, std::uint32_t q) {
    const PrimeField f(q);
    if (point.size() != x.num_rays())
        throw Error(ErrorKind::InvalidInput, "Cox point must have one coordinate per ray");
    std::vector<std::uint32_t> reduced;
    for (std::size_t j = 0; j < point.size(); ++j) {
        reduced.push_back(f.reduce(point[j]));
        if (reduced.back() == 0)
            throw Error(ErrorKind::ZeroCoordinate, "Cox coordinate " + std::to_string(j + 1) + " vanishes mod " +
                                                       std::to_string(q));
    }
    std::vector<std::uint32_t> t(x.dim(), 1 % q);
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.num_rays(); ++j)
            t[i] = f.mul(t[i], f.pow(reduced[j], x.ray_vectors()[j][i]));
    return t;
}

} // namespace toricode
