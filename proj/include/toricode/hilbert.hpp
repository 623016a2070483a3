#pragma once

// Multigraded Hilbert functions of zero-dimensional complete intersections,
// computed by inclusion-exclusion over lattice point counts of shifted
// polytopes.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toricode/toricfan.hpp"

namespace toricode {

// Thread-safe memo of |P_alpha ∩ M| keyed by degree class.
class LatticeCountCache {
public:
    explicit LatticeCountCache(const ToricVariety& x) : variety_(&x) {}

    std::uint64_t count(const DegreeClass& alpha);
    std::size_t size() const;

private:
    const ToricVariety* variety_;
    mutable std::shared_mutex mutex_;
    std::map<DegreeClass, std::uint64_t> counts_;
};

class CIProblem {
public:
    // Requires exactly dim X degrees, each effective. Semi-ampleness is recorded, not required.
    CIProblem(ToricVariety x, std::vector<DegreeClass> degrees);

    const ToricVariety& variety() const noexcept { return *variety_; }
    const std::vector<DegreeClass>& degrees() const noexcept { return degrees_; }
    bool all_semiample() const noexcept { return all_semiample_; }
    DegreeClass degree_sum() const;

    // (alpha_I, (-1)^|I|) for every subset I, in bitmask order.
    const std::vector<std::pair<DegreeClass, int>>& signed_subsets() const noexcept { return subsets_; }

    LatticeCountCache& cache() const { return *cache_; }

private:
    std::shared_ptr<const ToricVariety> variety_;
    std::vector<DegreeClass> degrees_;
    bool all_semiample_ = false;
    std::vector<std::pair<DegreeClass, int>> subsets_;
    std::shared_ptr<LatticeCountCache> cache_;
};

// sum over I of (-1)^|I| |P_{alpha - alpha_I} ∩ M|. Defined for every alpha;
// ineffective alpha give 0.
std::int64_t hilbert_ci(const CIProblem& prob, const DegreeClass& alpha);

// hilbert_ci at alpha_1 + ... + alpha_n. Throws RequiresSemiample.
std::int64_t degree_of_ci(const CIProblem& prob);

// Inclusive per-coordinate box in class group coordinates.
struct Window {
    DegreeClass min;
    DegreeClass max;

    Window() = default;
    Window(DegreeClass lo, DegreeClass hi);

    std::size_t rank() const noexcept { return min.size(); }
    std::size_t extent(std::size_t axis) const { return static_cast<std::size_t>(max[axis] - min[axis] + 1); }
    std::size_t cell_count() const;
    bool contains(const DegreeClass& alpha) const;
    std::size_t index_of(const DegreeClass& alpha) const; // row-major, axis 0 slowest
    DegreeClass cell(std::size_t index) const;
};

struct HilbertTable {
    Window window;
    std::vector<std::int64_t> values; // indexed by Window::index_of

    std::int64_t at(const DegreeClass& alpha) const { return values.at(window.index_of(alpha)); }
};

HilbertTable hilbert_table(const CIProblem& prob, const Window& window);

// Grid with the highest second coordinate on top and the origin bracketed.
// Rank-1 windows render as a single row; higher ranks as one record per line.
std::string render_table(const HilbertTable& table);

struct RegularityScan {
    std::vector<DegreeClass> classes; // effective alpha in the window with H(alpha) = deg, sorted
    DegreeClass anchor;               // alpha_1 + ... + alpha_n
    std::int64_t degree = 0;
};

RegularityScan regularity_scan(const CIProblem& prob, const Window& window);

// Numerator of the Hilbert series of S/I(Y): sum over I of (-1)^|I| t^{alpha_I}.
struct KoszulNumerator {
    std::map<DegreeClass, std::int64_t> terms; // zero coefficients dropped

    std::int64_t coefficient(const DegreeClass& alpha) const;
    std::int64_t coefficient_sum() const;
};

KoszulNumerator koszul_numerator(std::span<const DegreeClass> degrees, std::size_t class_rank);
KoszulNumerator koszul_numerator(const CIProblem& prob);

// "1 - t - t^3 + t^4" for rank-1 classes, "t^(a,b)" monomials otherwise.
std::string format_numerator(const KoszulNumerator& p);

struct AInvariant {
    std::int64_t value = 0;
    // Stabilization at 1 + a needs a degree-1 non-zerodivisor in S/I(Y), which is not checked here.
    bool needs_degree_one_nonzerodivisor = true;

    std::int64_t regularity_start() const noexcept { return value + 1; }
};

// deg(numerator) - (beta_1 + ... + beta_r) on a weighted projective space.
// Throws NotRankOneGrading unless r - n = 1 with all betas positive.
AInvariant a_invariant_wps(const ToricVariety& x, const KoszulNumerator& numerator);

} // namespace toricode
