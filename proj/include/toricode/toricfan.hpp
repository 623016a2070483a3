#pragma once

// Complete simplicial toric varieties given by fan data, their class-group
// grading, and the semigroups of effective and semi-ample degrees.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "toricode/exactlin.hpp"

namespace toricode {

// An element of the class group, in the coordinates fixed by the grading matrix.
struct DegreeClass {
    std::vector<std::int64_t> coords;

    DegreeClass() = default;
    explicit DegreeClass(std::vector<std::int64_t> c) : coords(std::move(c)) {}
    DegreeClass(std::initializer_list<std::int64_t> c) : coords(c) {}

    static DegreeClass zero(std::size_t rank) { return DegreeClass(std::vector<std::int64_t>(rank, 0)); }

    std::size_t size() const noexcept { return coords.size(); }
    std::int64_t operator[](std::size_t i) const { return coords[i]; }
    bool is_zero() const noexcept;

    DegreeClass& operator+=(const DegreeClass& o);
    DegreeClass& operator-=(const DegreeClass& o);
    friend DegreeClass operator+(DegreeClass a, const DegreeClass& b) { return a += b; }
    friend DegreeClass operator-(DegreeClass a, const DegreeClass& b) { return a -= b; }
    friend DegreeClass operator*(std::int64_t k, DegreeClass a);

    friend bool operator==(const DegreeClass&, const DegreeClass&) = default;
    friend auto operator<=>(const DegreeClass&, const DegreeClass&) = default;
};

std::ostream& operator<<(std::ostream& os, const DegreeClass& d);
std::string to_string(const DegreeClass& d);

using LatticePoint = std::vector<std::int64_t>;
using Cone = std::vector<std::size_t>; // 0-based ray indices

inline constexpr std::int64_t kDefaultMembershipBound = 64;

class ToricVariety {
public:
    // Validates every structural invariant; throws Error naming the first one violated.
    // Cone indices are 0-based. A supplied grading is validated and kept verbatim.
    static ToricVariety build(IntMatrix rays, std::vector<Cone> max_cones,
                              std::optional<IntMatrix> grading = std::nullopt);

    std::size_t dim() const noexcept { return rays_.cols(); }
    std::size_t num_rays() const noexcept { return rays_.rows(); }
    std::size_t class_rank() const noexcept { return rays_.rows() - rays_.cols(); }

    const IntMatrix& rays() const noexcept { return rays_; }
    const std::vector<LatticePoint>& ray_vectors() const noexcept { return ray_vecs_; }
    const std::vector<Cone>& max_cones() const noexcept { return cones_; }
    const IntMatrix& grading() const noexcept { return grading_; }
    const std::vector<DegreeClass>& betas() const noexcept { return betas_; }
    bool grading_supplied() const noexcept { return grading_supplied_; }

    // Ray indices outside the given maximal cone.
    std::vector<std::size_t> cone_complement(std::size_t cone) const;

    DegreeClass degree_of(std::span<const BigInt> divisor) const;
    DegreeClass degree_of(std::span<const std::int64_t> divisor) const;
    // A torus-invariant divisor a with deg(a) = alpha. Throws NoPreimage.
    IntVector representative(const DegreeClass& alpha) const;

    DegreeClass beta_sum() const;

private:
    ToricVariety() = default;

    IntMatrix rays_;
    std::vector<LatticePoint> ray_vecs_;
    std::vector<Cone> cones_;
    IntMatrix grading_;
    std::vector<DegreeClass> betas_;
    bool grading_supplied_ = false;
};

// True iff `target` is a nonnegative integer combination of `generators`.
// Independent generators are decided exactly; otherwise the search covers
// coefficient sums up to `bound` and throws InconclusiveMembership past it.
bool in_semigroup(std::span<const DegreeClass> generators, const DegreeClass& target,
                  std::int64_t bound = kDefaultMembershipBound);

// alpha in N-beta, i.e. the polytope of alpha has a lattice point.
bool is_effective(const ToricVariety& x, const DegreeClass& alpha);

// alpha lies in the semigroup generated by the betas outside sigma, for every maximal cone sigma.
bool is_semiample(const ToricVariety& x, const DegreeClass& alpha,
                  std::int64_t bound = kDefaultMembershipBound);

// alpha <= alpha' iff alpha' - alpha is effective.
bool preceq(const ToricVariety& x, const DegreeClass& alpha, const DegreeClass& alpha_prime);

// Image of a Cox point with all coordinates nonzero under the quotient map to the torus.
std::vector<std::uint32_t> cox_to_torus(const ToricVariety& x, std::span<const std::int64_t> point,
                                        std::uint32_t q);

} // namespace toricode
