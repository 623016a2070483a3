#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_support.hpp"
#include "toricode/error.hpp"
#include "toricode/gfcode.hpp"
#include "toricode/hilbert.hpp"
#include "toricode/io.hpp"
#include "toricode/polytope.hpp"

using namespace toricode;
using testsupport::fixture;
using testsupport::variety;

namespace {

std::vector<LaurentPoly> system_of(const std::string& problem) {
    ProblemSpec spec = load_problem(fixture(problem));
    ToricVariety x = load_variety(spec.variety_path);
    return build_system(spec, *spec.q, x.dim());
}

std::vector<TorusPoint> hirci_points() {
    auto sys = system_of("hirci.json");
    return find_torus_zeros(sys, 5, 2).points;
}

std::vector<TorusPoint> all_torus_points(std::uint32_t q, std::size_t n) {
    return find_torus_zeros(std::vector<LaurentPoly>{}, q, n).points;
}

// Every F_q-combination of the rows, deduplicated: the code itself.
std::set<std::vector<std::uint32_t>> all_codewords(const FqMatrix& m, std::uint32_t q, std::size_t cols) {
    std::set<std::vector<std::uint32_t>> words;
    std::vector<std::uint32_t> coeff(m.size(), 0);
    while (true) {
        std::vector<std::uint32_t> w(cols, 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                w[j] = static_cast<std::uint32_t>((w[j] + std::uint64_t{coeff[i]} * m[i][j]) % q);
        words.insert(w);
        std::size_t i = 0;
        while (i < coeff.size() && ++coeff[i] == q)
            coeff[i++] = 0;
        if (i == coeff.size())
            break;
    }
    return words;
}

std::size_t brute_dimension(const FqMatrix& m, std::uint32_t q, std::size_t cols) {
    std::size_t size = all_codewords(m, q, cols).size();
    std::size_t k = 0;
    while (size > 1) {
        size /= q;
        ++k;
    }
    return k;
}

std::size_t brute_min_distance(const FqMatrix& m, std::uint32_t q, std::size_t cols) {
    std::size_t best = cols + 1;
    for (const auto& w : all_codewords(m, q, cols)) {
        auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](std::uint32_t v) { return v != 0; }));
        if (wt > 0)
            best = std::min(best, wt);
    }
    return best;
}

std::uint64_t pow_mod(std::uint64_t b, std::int64_t e, std::uint32_t q) {
    PrimeField f(q);
    return f.pow(static_cast<std::uint32_t>(b % q), e);
}

} // namespace

TEST_CASE("prime field arithmetic") {
    CHECK_THROWS_AS(PrimeField(4), Error);
    CHECK_THROWS_AS(GF(1, 0), Error);
    GF a(7, 3), b(7, -2);
    CHECK((a + b).value == 1);
    CHECK((a * b).value == 1);
    CHECK((a * inverse(a)).value == 1);
    PrimeField f(5);
    CHECK(f.pow(2, -1) == 3);
    CHECK(f.pow(4, 2) == 1);
}

TEST_CASE("Laurent polynomials merge terms") {
    std::vector<std::pair<std::int64_t, LatticePoint>> terms{{1, {1, 0}}, {4, {1, 0}}, {2, {0, -1}}};
    LaurentPoly p(5, 2, terms);
    REQUIRE(p.terms().size() == 1);
    PrimeField f(5);
    std::vector<std::uint32_t> t{3, 2};
    CHECK(p.evaluate(f, t) == 1); // 2 * 2^-1
}

TEST_CASE("torus zeros") {
    auto pts = hirci_points();
    REQUIRE(pts.size() == 8);
    std::vector<TorusPoint> expect;
    for (std::uint32_t a : {1u, 4u})
        for (std::uint32_t b = 1; b <= 4; ++b)
            expect.push_back({a, b});
    CHECK(pts == expect);

    auto three = system_of("threefold_code.json");
    CHECK(find_torus_zeros(three, 5, 3).size() == 64);
    CHECK(all_torus_points(7, 2).size() == 36);
    CHECK_THROWS_AS(find_torus_zeros(three, 5, 3, 10), Error);

    // Larger scans shard across threads but stay sorted and exact.
    std::vector<std::pair<std::int64_t, LatticePoint>> t{{1, {0, 0, 3}}, {-1, {0, 0, 0}}};
    std::vector<LaurentPoly> cube{LaurentPoly(31, 3, t)};
    PointSet s = find_torus_zeros(cube, 31, 3);
    CHECK(s.size() == 30 * 30 * 3);
    CHECK(std::is_sorted(s.points.begin(), s.points.end()));
}

TEST_CASE("cox points of the hirci example map onto the torus zeros") {
    ProblemSpec spec = load_problem(fixture("hirci_cox_points.json"));
    ToricVariety x = load_variety(spec.variety_path);
    std::vector<TorusPoint> mapped;
    for (const auto& p : *spec.cox_points) {
        auto t = cox_to_torus(x, p, 5);
        mapped.push_back(TorusPoint(t.begin(), t.end()));
    }
    std::vector<TorusPoint> sorted = mapped;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == hirci_points());
}

TEST_CASE("hirci generator matrix on four basis monomials") {
    ProblemSpec spec = load_problem(fixture("hirci_cox_points.json"));
    ToricVariety x = load_variety(spec.variety_path);
    std::vector<TorusPoint> cols;
    for (const auto& p : *spec.cox_points) {
        auto t = cox_to_torus(x, p, 5);
        cols.push_back(TorusPoint(t.begin(), t.end()));
    }
    // x y z^2, y z^3, x w, z w with x y z^2 as pivot
    const std::vector<std::vector<std::int64_t>> cox{{1, 1, 2, 0}, {0, 1, 3, 0}, {1, 0, 0, 1}, {0, 0, 1, 1}};
    std::vector<LatticePoint> rows;
    for (const auto& e : cox)
        rows.push_back(torus_exponent(x, e, cox[0]));
    EvalCode code = monomial_evaluation_matrix(5, rows, cols, LatticePoint(2, 0));
    const FqMatrix expect{
        {1, 1, 1, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 4, 4, 4, 4},
        {1, 2, 3, 4, 1, 2, 3, 4},
        {1, 2, 3, 4, 4, 3, 2, 1},
    };
    CHECK(code.matrix == expect);
    CHECK(code_dimension(code) == 4);
    CHECK(min_distance(code) == 3);
}

TEST_CASE("hirci code parameters") {
    ToricVariety x = variety("hirzebruch_2");
    auto pts = hirci_points();
    struct Row {
        DegreeClass alpha;
        std::size_t k, d;
    };
    for (const Row& r : {Row{{1, 1}, 4, 3}, Row{{0, 2}, 5, 3}, Row{{1, 2}, 6, 2}, Row{{0, 3}, 7, 2}, Row{{1, 3}, 8, 1}}) {
        CAPTURE(r.alpha);
        EvalCode code = evaluation_matrix(x, r.alpha, pts, 5);
        compute_parameters(code);
        CHECK(code.dimension == r.k);
        CHECK(code.min_distance == r.d);
        CHECK(code.matrix.size() == count_lattice_points(x, r.alpha));
    }
    // The constant row alone gives a weight-N codeword.
    EvalCode zero_b = evaluation_matrix(x, {0, 0}, pts, 5);
    CHECK(zero_b.matrix == FqMatrix{std::vector<std::uint32_t>(8, 1)});
    CHECK(min_distance(zero_b) == 8);
}

TEST_CASE("threefold code") {
    ToricVariety x = variety("threefold");
    auto pts = all_torus_points(5, 3);
    EvalCode code = evaluation_matrix(x, {-2, 7}, pts, 5);
    CHECK(code.matrix.size() == 80);
    CHECK(code.length() == 64);
    CHECK(code_dimension(code) == 40);
    CHECK_THROWS_AS(min_distance(code, 1000), Error);
    compute_parameters(code, 1000);
    CHECK(code.dimension == 40);
    CHECK_FALSE(code.min_distance.has_value());
}

TEST_CASE("degenerate codes") {
    ToricVariety x = variety("hirzebruch_2");
    std::vector<TorusPoint> one{{1, 1}};
    EvalCode c = evaluation_matrix(x, {0, 0}, one, 5);
    CHECK(c.matrix == FqMatrix{{1}});
    CHECK(code_dimension(c) == 1);
    CHECK(min_distance(c) == 1);

    CHECK_THROWS_AS(evaluation_matrix(x, {-1, 0}, one, 5), Error);
    try {
        evaluation_matrix(x, {-1, 0}, one, 5);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptySection);
    }
    EvalCode zero = monomial_evaluation_matrix(5, {{0, 0}}, one, {0, 0});
    zero.matrix = {{0}};
    try {
        min_distance(zero);
        FAIL("expected ZeroCode");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroCode);
    }
    CHECK_THROWS_AS(evaluation_matrix(x, {1, 1}, one, 5, LatticePoint{100, 100}), Error);
}

TEST_CASE("code dimension equals the Hilbert function on the hirci window") {
    ToricVariety x = variety("hirzebruch_2");
    CIProblem prob(x, {{2, 0}, {0, 4}});
    auto pts = hirci_points();
    for (std::int64_t a = -10; a <= 10; ++a)
        for (std::int64_t b = 0; b <= 4; ++b) {
            DegreeClass alpha{a, b};
            const std::int64_t h = hilbert_ci(prob, alpha);
            if (count_lattice_points(x, alpha) == 0) {
                CHECK(h == 0);
                continue;
            }
            CAPTURE(alpha);
            CHECK(static_cast<std::int64_t>(code_dimension(evaluation_matrix(x, alpha, pts, 5))) == h);
        }
}

TEST_CASE("code dimension equals the Hilbert function on the threefold window") {
    ToricVariety x = variety("threefold");
    CIProblem prob(x, {{-4, 4}, {4, 0}, {0, 8}});
    auto pts = all_torus_points(5, 3);
    for (std::int64_t a = -4; a <= 4; ++a)
        for (std::int64_t b = 0; b <= 8; ++b) {
            DegreeClass alpha{a, b};
            if (count_lattice_points(x, alpha) == 0)
                continue;
            CAPTURE(alpha);
            CHECK(static_cast<std::int64_t>(code_dimension(evaluation_matrix(x, alpha, pts, 5))) ==
                  hilbert_ci(prob, alpha));
        }
}

TEST_CASE("trivial codes past the degree sum") {
    ToricVariety x = variety("hirzebruch_2");
    auto pts = hirci_points();
    for (DegreeClass alpha : {DegreeClass{1, 3}, DegreeClass{2, 3}, DegreeClass{5, 4}, DegreeClass{-1, 4}}) {
        REQUIRE(preceq(x, DegreeClass{1, 3}, alpha));
        CHECK(code_dimension(evaluation_matrix(x, alpha, pts, 5)) == 8);
    }
}

TEST_CASE("rank and minimum distance against exhaustive enumeration") {
    std::mt19937_64 rng(testsupport::seed());
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 15; ++trial) {
            std::size_t rows = 1 + rng() % (q == 5 ? 4 : 6), cols = 1 + rng() % 7;
            FqMatrix m(rows, std::vector<std::uint32_t>(cols));
            for (auto& row : m)
                for (auto& v : row)
                    v = static_cast<std::uint32_t>(rng() % q);
            EvalCode code;
            code.q = q;
            code.points.assign(cols, TorusPoint{1});
            code.matrix = m;
            const std::size_t k = brute_dimension(m, q, cols);
            CHECK(matrix_rank(m, q, cols) == k);
            CHECK(code_dimension(code) == k);
            if (k > 0) {
                const std::size_t d = min_distance(code);
                CHECK(d == brute_min_distance(m, q, cols));
                CHECK(k + d <= cols + 1);
            }
        }
    }
}

TEST_CASE("row reduction keeps a greedy row basis") {
    FqMatrix m{{1, 2, 0}, {2, 4, 0}, {0, 1, 1}};
    RowReduction r = row_reduce(m, 5, 3);
    CHECK(r.basis.size() == 2);
    CHECK(r.pivot_rows == std::vector<std::size_t>{0, 2});
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
}

TEST_CASE("pivot choice does not change parameters") {
    ToricVariety x = variety("hirzebruch_2");
    auto pts = hirci_points();
    for (DegreeClass alpha : {DegreeClass{1, 1}, DegreeClass{0, 2}, DegreeClass{1, 2}}) {
        EvalCode base = evaluation_matrix(x, alpha, pts, 5);
        compute_parameters(base);
        for (const auto& m0 : base.monomials) {
            EvalCode other = evaluation_matrix(x, alpha, pts, 5, m0);
            compute_parameters(other);
            CHECK(other.dimension == base.dimension);
            CHECK(other.min_distance == base.min_distance);
            CHECK(*other.dimension + *other.min_distance <= other.length() + 1);
        }
    }
}

TEST_CASE("evaluation matrix agrees with direct Cox evaluation") {
    // Entry for m at p is p^(a + phi(m)) / p^(a + phi(m0)), read off in Cox coordinates.
    ToricVariety x = variety("hirzebruch_2");
    std::mt19937_64 rng(testsupport::seed() + 1);
    const std::uint32_t q = 7;
    PrimeField f(q);
    for (DegreeClass alpha : {DegreeClass{1, 1}, DegreeClass{2, 3}, DegreeClass{-1, 2}}) {
        IntVector a = x.representative(alpha);
        std::vector<std::vector<std::int64_t>> cox_pts;
        std::vector<TorusPoint> torus;
        for (int i = 0; i < 6; ++i) {
            std::vector<std::int64_t> p(4);
            for (auto& v : p)
                v = 1 + static_cast<std::int64_t>(rng() % (q - 1));
            auto t = cox_to_torus(x, p, q);
            cox_pts.push_back(p);
            torus.push_back(TorusPoint(t.begin(), t.end()));
        }
        EvalCode code = evaluation_matrix(x, alpha, torus, q);
        auto cox_exponent = [&](const LatticePoint& m) {
            std::vector<std::int64_t> e(4);
            for (std::size_t j = 0; j < 4; ++j) {
                BigInt v = a[j];
                for (std::size_t i = 0; i < 2; ++i)
                    v += BigInt(x.rays()(j, i)) * m[i];
                e[j] = v.get_si();
            }
            return e;
        };
        const auto e0 = cox_exponent(code.pivot);
        for (std::size_t r = 0; r < code.monomials.size(); ++r) {
            const auto e = cox_exponent(code.monomials[r]);
            for (std::size_t c = 0; c < torus.size(); ++c) {
                std::uint64_t num = 1, den = 1;
                for (std::size_t j = 0; j < 4; ++j) {
                    num = num * pow_mod(cox_pts[c][j], e[j], q) % q;
                    den = den * pow_mod(cox_pts[c][j], e0[j], q) % q;
                }
                CHECK(code.matrix[r][c] == num * f.inv(static_cast<std::uint32_t>(den)) % q);
            }
        }
    }
}

TEST_CASE("shift equivalence") {
    ToricVariety x = variety("hirzebruch_2");
    auto pts = hirci_points();
    auto code_for = [&](const IntVector& a, const LatticePoint& pivot) {
        auto lp = lattice_points(polytope_of_divisor(x, a));
        return monomial_evaluation_matrix(5, lp.points, pts, pivot);
    };
    // x has degree (1,0); P_a sits inside P_(a + e_x), so a shared pivot makes the shift trivial.
    auto shift_check = [&](DegreeClass alpha) {
        IntVector a = x.representative(alpha);
        IntVector a1 = a;
        a1[0] += 1;
        EvalCode base = code_for(a, lattice_points(polytope_of_divisor(x, a)).points.front());
        EvalCode shifted = code_for(a1, base.pivot);
        std::vector<std::uint32_t> ones(pts.size(), 1);
        return shift_equivalence_check(base, shifted, ones);
    };
    CHECK(shift_check({1, 3}));
    CHECK(shift_check({2, 1}));
    CHECK_THROWS_AS(shift_check({0, 2}), Error);
    try {
        shift_check({0, 2});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }

    EvalCode c = evaluation_matrix(x, {1, 1}, pts, 5);
    std::vector<std::uint32_t> ones(pts.size(), 1);
    CHECK(shift_equivalence_check(c, c, ones));
    // A non-monomial rescaling moves the row space.
    std::vector<std::uint32_t> scramble{1, 2, 1, 1, 1, 1, 1, 1};
    CHECK_FALSE(shift_equivalence_check(c, c, scramble));
}
