#pragma once

// Rational polytopes {m : <m, v_j> >= -a_j} attached to torus-invariant
// divisors, with exact vertex and lattice point enumeration.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "toricode/exactlin.hpp"
#include "toricode/toricfan.hpp"

namespace toricode {

struct HPolytope {
    std::vector<LatticePoint> normals; // inward facet normals v_j, each of length n
    IntVector rhs;                     // a_j

    std::size_t ambient_dim() const noexcept { return normals.empty() ? 0 : normals.front().size(); }
    bool contains(std::span<const std::int64_t> m) const;
    bool contains(std::span<const BigRat> m) const;
    // {m : <m, v_j> >= -k a_j}
    HPolytope dilate(std::int64_t k) const;
};

struct LatticePointSet {
    std::vector<LatticePoint> points; // sorted lexicographically, no duplicates

    std::size_t size() const noexcept { return points.size(); }
    bool empty() const noexcept { return points.empty(); }
    bool contains(std::span<const std::int64_t> m) const;
};

HPolytope polytope_of_divisor(const ToricVariety& x, IntVector a);

// Uses the representative chosen by integer_preimage; other representatives
// give lattice translates of the same polytope.
HPolytope polytope_of_degree(const ToricVariety& x, const DegreeClass& alpha);

// Exact vertex set in lexicographic order; empty iff the polytope is empty.
std::vector<RatVector> vertices(const HPolytope& p);

LatticePointSet lattice_points(const HPolytope& p);

std::uint64_t count_lattice_points(const HPolytope& p);
std::uint64_t count_lattice_points(const ToricVariety& x, const DegreeClass& alpha);

bool is_lattice_polytope(const HPolytope& p);

// Coefficients c_0..c_n of k -> |kP ∩ M|, interpolated from k = 0..n.
// Throws NotLatticePolytope when a vertex is not integral.
std::vector<BigRat> ehrhart_polynomial(const HPolytope& p);

BigRat evaluate_polynomial(std::span<const BigRat> coeffs, std::int64_t k);

// n! Vol_n(P); zero when P is lower dimensional.
BigInt normalized_volume(const HPolytope& p);

} // namespace toricode
