#include "toricode/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "toricode/error.hpp"

namespace toricode {

bool HPolytope::contains(std::span<const std::int64_t> m) const {
    for (std::size_t j = 0; j < normals.size(); ++j) {
        BigInt s = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            s += BigInt(static_cast<long>(normals[j][i])) * static_cast<long>(m[i]);
        if (s < -rhs[j])
            return false;
    }
    return true;
}

bool HPolytope::contains(std::span<const BigRat> m) const {
    for (std::size_t j = 0; j < normals.size(); ++j) {
        BigRat s = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            s += m[i] * static_cast<long>(normals[j][i]);
        if (s < -rhs[j])
            return false;
    }
    return true;
}

HPolytope HPolytope::dilate(std::int64_t k) const {
    HPolytope out = *this;
    for (auto& a : out.rhs)
        a *= static_cast<long>(k);
    return out;
}

bool LatticePointSet::contains(std::span<const std::int64_t> m) const {
    LatticePoint key(m.begin(), m.end());
    return std::binary_search(points.begin(), points.end(), key);
}

HPolytope polytope_of_divisor(const ToricVariety& x, IntVector a) {
    if (a.size() != x.num_rays())
        throw Error(ErrorKind::InvalidInput, "divisor needs one coefficient per ray");
    return HPolytope{x.ray_vectors(), std::move(a)};
}

HPolytope polytope_of_degree(const ToricVariety& x, const DegreeClass& alpha) {
    return polytope_of_divisor(x, x.representative(alpha));
}

std::vector<RatVector> vertices(const HPolytope& p) {
    const std::size_t r = p.normals.size();
    const std::size_t n = p.ambient_dim();
    std::set<RatVector> found;
    if (n == 0 || r < n)
        return {};

    std::vector<std::size_t> subset(n);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        RatMatrix m(n, RatVector(n));
        RatVector b(n);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i)
                m[k][i] = static_cast<long>(p.normals[subset[k]][i]);
            b[k] = -p.rhs[subset[k]];
        }
        if (auto v = solve_rational(std::move(m), std::move(b)); v && p.contains(std::span<const BigRat>(*v)))
            found.insert(std::move(*v));

        // next n-subset of [0, r)
        std::size_t k = n;
        while (k > 0 && subset[k - 1] == r - n + k - 1)
            --k;
        if (k == 0)
            break;
        ++subset[k - 1];
        for (std::size_t t = k; t < n; ++t)
            subset[t] = subset[t - 1] + 1;
    }
    return {found.begin(), found.end()};
}

namespace {

BigInt floor_of(const BigRat& v) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return out;
}

BigInt ceil_of(const BigRat& v) {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return out;
}

} // namespace

LatticePointSet lattice_points(const HPolytope& p) {
    const auto verts = vertices(p);
    LatticePointSet out;
    if (verts.empty())
        return out;
    const std::size_t n = p.ambient_dim();
    std::vector<std::int64_t> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        BigRat mn = verts.front()[i], mx = verts.front()[i];
        for (const auto& v : verts) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = ceil_of(mn).get_si();
        hi[i] = floor_of(mx).get_si();
        if (lo[i] > hi[i])
            return out;
    }
    const std::vector<std::int64_t> bounds = to_i64(p.rhs);

    // Odometer over the box, first coordinate slowest, so output is lexicographic.
    LatticePoint m = lo;
    while (true) {
        bool inside = true;
        for (std::size_t j = 0; j < p.normals.size() && inside; ++j) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < n; ++i)
                s += p.normals[j][i] * m[i];
            inside = s >= -bounds[j];
        }
        if (inside)
            out.points.push_back(m);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (m[i] < hi[i]) {
                ++m[i];
                break;
            }
            m[i] = lo[i];
            if (i == 0)
                return out;
        }
    }
}

std::uint64_t count_lattice_points(const HPolytope& p) { return lattice_points(p).size(); }

std::uint64_t count_lattice_points(const ToricVariety& x, const DegreeClass& alpha) {
    return count_lattice_points(polytope_of_degree(x, alpha));
}

bool is_lattice_polytope(const HPolytope& p) {
    for (const auto& v : vertices(p))
        for (const auto& c : v)
            if (c.get_den() != 1)
                return false;
    return true;
}

std::vector<BigRat> ehrhart_polynomial(const HPolytope& p) {
    if (!is_lattice_polytope(p))
        throw Error(ErrorKind::NotLatticePolytope, "polytope has a non-integral vertex");
    const std::size_t n = p.ambient_dim();
    if (vertices(p).empty())
        return std::vector<BigRat>(n + 1, BigRat(0));
    RatMatrix vandermonde(n + 1, RatVector(n + 1));
    RatVector counts(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        BigRat pw = 1;
        for (std::size_t e = 0; e <= n; ++e) {
            vandermonde[k][e] = pw;
            pw *= static_cast<long>(k);
        }
        counts[k] = static_cast<unsigned long>(count_lattice_points(p.dilate(static_cast<std::int64_t>(k))));
    }
    auto coeffs = solve_rational(std::move(vandermonde), std::move(counts));
    return *coeffs; // Vandermonde on distinct nodes is nonsingular
}

BigRat evaluate_polynomial(std::span<const BigRat> coeffs, std::int64_t k) {
    BigRat acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * static_cast<long>(k) + *it;
    return acc;
}

BigInt normalized_volume(const HPolytope& p) {
    const auto coeffs = ehrhart_polynomial(p);
    BigRat vol = coeffs.back();
    for (std::size_t k = 2; k < coeffs.size(); ++k)
        vol *= static_cast<long>(k);
    if (vol.get_den() != 1)
        throw Error(ErrorKind::NotLatticePolytope, "non-integral normalized volume");
    return vol.get_num();
}

} // namespace toricode
