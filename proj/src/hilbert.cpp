#include "toricode/hilbert.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "toricode/error.hpp"
#include "toricode/polytope.hpp"

namespace toricode {

std::uint64_t LatticeCountCache::count(const DegreeClass& alpha) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = counts_.find(alpha); it != counts_.end())
            return it->second;
    }
    const std::uint64_t c = count_lattice_points(*variety_, alpha);
    std::unique_lock lock(mutex_);
    counts_.emplace(alpha, c);
    return c;
}

std::size_t LatticeCountCache::size() const {
    std::shared_lock lock(mutex_);
    return counts_.size();
}

CIProblem::CIProblem(ToricVariety x, std::vector<DegreeClass> degrees)
    : variety_(std::make_shared<const ToricVariety>(std::move(x))), degrees_(std::move(degrees)) {
    const ToricVariety& v = *variety_;
    if (degrees_.size() != v.dim())
        throw Error(ErrorKind::InvalidInput, "a complete intersection needs exactly " + std::to_string(v.dim()) +
                                                 " generator degrees, got " + std::to_string(degrees_.size()));
    cache_ = std::make_shared<LatticeCountCache>(v);
    all_semiample_ = true;
    for (const auto& d : degrees_) {
        if (d.size() != v.class_rank())
            throw Error(ErrorKind::InvalidInput, "degree " + to_string(d) + " has the wrong rank");
        if (cache_->count(d) == 0)
            throw Error(ErrorKind::InvalidInput, "generator degree " + to_string(d) + " is not effective");
        all_semiample_ = all_semiample_ && is_semiample(v, d);
    }
    const std::size_t n = degrees_.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        DegreeClass sum = DegreeClass::zero(v.class_rank());
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) {
                sum += degrees_[i];
                sign = -sign;
            }
        subsets_.emplace_back(std::move(sum), sign);
    }
}

DegreeClass CIProblem::degree_sum() const { return subsets_.back().first; }

std::int64_t hilbert_ci(const CIProblem& prob, const DegreeClass& alpha) {
    std::int64_t h = 0;
    for (const auto& [shift, sign] : prob.signed_subsets())
        h += sign * static_cast<std::int64_t>(prob.cache().count(alpha - shift));
    return h;
}

std::int64_t degree_of_ci(const CIProblem& prob) {
    if (!prob.all_semiample())
        throw Error(ErrorKind::RequiresSemiample, "the degree identity needs semi-ample generator degrees");
    return hilbert_ci(prob, prob.degree_sum());
}

Window::Window(DegreeClass lo, DegreeClass hi) : min(std::move(lo)), max(std::move(hi)) {
    if (min.size() != max.size())
        throw Error(ErrorKind::InvalidInput, "window bounds of different rank");
    for (std::size_t i = 0; i < min.size(); ++i)
        if (min[i] > max[i])
            throw Error(ErrorKind::InvalidInput, "window min exceeds max on axis " + std::to_string(i));
}

std::size_t Window::cell_count() const {
    std::size_t c = 1;
    for (std::size_t i = 0; i < rank(); ++i)
        c *= extent(i);
    return c;
}

bool Window::contains(const DegreeClass& alpha) const {
    if (alpha.size() != rank())
        return false;
    for (std::size_t i = 0; i < rank(); ++i)
        if (alpha[i] < min[i] || alpha[i] > max[i])
            return false;
    return true;
}

std::size_t Window::index_of(const DegreeClass& alpha) const {
    if (!contains(alpha))
        throw Error(ErrorKind::InvalidInput, to_string(alpha) + " is outside the window");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        idx = idx * extent(i) + static_cast<std::size_t>(alpha[i] - min[i]);
    return idx;
}

DegreeClass Window::cell(std::size_t index) const {
    DegreeClass out = min;
    for (std::size_t i = rank(); i-- > 0;) {
        out.coords[i] += static_cast<std::int64_t>(index % extent(i));
        index /= extent(i);
    }
    return out;
}

HilbertTable hilbert_table(const CIProblem& prob, const Window& window) {
    if (window.rank() != prob.variety().class_rank())
        throw Error(ErrorKind::InvalidInput, "window rank does not match the class group");
    HilbertTable t{window, std::vector<std::int64_t>(window.cell_count())};
    const std::size_t cells = t.values.size();
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), (cells + 31) / 32);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < cells; i = next++)
            t.values[i] = hilbert_ci(prob, window.cell(i));
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    return t;
}

std::string render_table(const HilbertTable& table) {
    const Window& w = table.window;
    std::ostringstream os;
    const DegreeClass origin = DegreeClass::zero(w.rank());
    std::size_t width = 1;
    for (auto v : table.values)
        width = std::max(width, std::to_string(v).size());
    auto cell_text = [&](const DegreeClass& alpha) {
        std::string s = std::to_string(table.at(alpha));
        if (alpha == origin)
            return "[" + s + "]";
        return " " + s + " ";
    };
    if (w.rank() == 1 || w.rank() == 2) {
        const std::int64_t b_lo = w.rank() == 2 ? w.min[1] : 0;
        const std::int64_t b_hi = w.rank() == 2 ? w.max[1] : 0;
        for (std::int64_t b = b_hi; b >= b_lo; --b) {
            if (w.rank() == 2)
                os << "b=" << std::setw(3) << b << " |";
            for (std::int64_t a = w.min[0]; a <= w.max[0]; ++a) {
                DegreeClass alpha = w.rank() == 2 ? DegreeClass{a, b} : DegreeClass{a};
                os << std::setw(static_cast<int>(width + 2)) << cell_text(alpha);
            }
            os << '\n';
        }
        if (w.rank() == 2)
            os << "       a=" << w.min[0] << ".." << w.max[0] << '\n';
        return os.str();
    }
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        DegreeClass alpha = w.cell(i);
        os << alpha << ' ' << cell_text(alpha) << '\n';
    }
    return os.str();
}

RegularityScan regularity_scan(const CIProblem& prob, const Window& window) {
    RegularityScan out;
    out.degree = degree_of_ci(prob);
    out.anchor = prob.degree_sum();
    const HilbertTable t = hilbert_table(prob, window);
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        if (t.values[i] != out.degree)
            continue;
        DegreeClass alpha = window.cell(i);
        if (prob.cache().count(alpha) > 0)
            out.classes.push_back(std::move(alpha));
    }
    std::sort(out.classes.begin(), out.classes.end());
    return out;
}

std::int64_t KoszulNumerator::coefficient(const DegreeClass& alpha) const {
    auto it = terms.find(alpha);
    return it == terms.end() ? 0 : it->second;
}

std::int64_t KoszulNumerator::coefficient_sum() const {
    std::int64_t s = 0;
    for (const auto& [d, c] : terms)
        s += c;
    return s;
}

KoszulNumerator koszul_numerator(std::span<const DegreeClass> degrees, std::size_t class_rank) {
    KoszulNumerator p;
    const std::size_t n = degrees.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        DegreeClass sum = DegreeClass::zero(class_rank);
        std::int64_t sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) {
                sum += degrees[i];
                sign = -sign;
            }
        p.terms[sum] += sign;
    }
    std::erase_if(p.terms, [](const auto& kv) { return kv.second == 0; });
    return p;
}

KoszulNumerator koszul_numerator(const CIProblem& prob) {
    return koszul_numerator(prob.degrees(), prob.variety().class_rank());
}

std::string format_numerator(const KoszulNumerator& p) {
    if (p.terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, c] : p.terms) {
        const bool constant = deg.is_zero();
        std::int64_t mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (constant) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << '*';
        os << 't';
        if (deg.size() == 1) {
            if (deg[0] != 1)
                os << '^' << deg[0];
        } else {
            os << '^' << deg;
        }
    }
    return os.str();
}

AInvariant a_invariant_wps(const ToricVariety& x, const KoszulNumerator& numerator) {
    if (x.class_rank() != 1)
        throw Error(ErrorKind::NotRankOneGrading, "class group has rank " + std::to_string(x.class_rank()));
    std::int64_t weight_sum = 0;
    for (const auto& b : x.betas()) {
        if (b[0] <= 0)
            throw Error(ErrorKind::NotRankOneGrading, "weights must all be positive");
        weight_sum += b[0];
    }
    if (numerator.terms.empty())
        throw Error(ErrorKind::InvalidInput, "zero numerator has no degree");
    if (numerator.terms.begin()->first.size() != 1)
        throw Error(ErrorKind::NotRankOneGrading, "numerator is not univariate");
    AInvariant a;
    a.value = numerator.terms.rbegin()->first[0] - weight_sum;
    return a;
}

} // namespace toricode
