#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "toricode/error.hpp"
#include "toricode/gfcode.hpp"
#include "toricode/hilbert.hpp"
#include "toricode/io.hpp"
#include "toricode/polytope.hpp"
#include "toricode/toricfan.hpp"

using namespace toricode;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBudget = 4;

struct Options {
    std::string input;
    std::string window;
    std::string alpha;
    std::uint64_t budget_points = kDefaultPointBudget;
    std::uint64_t budget_codewords = kDefaultCodewordBudget;
    bool as_json = false;
    bool degree = false;
    std::uint64_t seed = 0;
};

std::vector<std::int64_t> parse_ints(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw Error(ErrorKind::InvalidInput, "bad integer list '" + s + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw Error(ErrorKind::InvalidInput, "empty integer list");
    return out;
}

Window parse_window(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorKind::InvalidInput, "window must look like a0,b0:a1,b1");
    return Window(DegreeClass{parse_ints(s.substr(0, colon))}, DegreeClass{parse_ints(s.substr(colon + 1))});
}

std::string cl_label(std::size_t rank) {
    static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    if (rank == 1)
        return "ℤ";
    std::string digits = std::to_string(rank), out = "ℤ";
    for (char c : digits)
        out += sup[c - '0'];
    return out;
}

std::string join_indices(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i] + 1);
    return s + "}";
}

std::string point_text(std::span<const std::uint32_t> p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

int cmd_validate(const Options& o) {
    ToricVariety x = load_variety(o.input);
    if (o.as_json) {
        json cones = json::array();
        for (std::size_t c = 0; c < x.max_cones().size(); ++c) {
            std::vector<std::size_t> cone = x.max_cones()[c], comp = x.cone_complement(c);
            for (auto& i : cone)
                ++i;
            for (auto& i : comp)
                ++i;
            cones.push_back({{"cone", cone}, {"complement", comp}});
        }
        json betas = json::array();
        for (const auto& b : x.betas())
            betas.push_back(to_json(b));
        std::cout << json{{"ok", true},         {"r", x.num_rays()}, {"n", x.dim()},
                          {"class_rank", x.class_rank()}, {"torsion_free", true},
                          {"rays", x.ray_vectors()}, {"betas", betas}, {"cones", cones}}
                         .dump(2)
                  << '\n';
        return 0;
    }
    std::cout << "OK: r=" << x.num_rays() << " n=" << x.dim() << ", Cl ≅ " << cl_label(x.class_rank()) << ", betas ";
    for (const auto& b : x.betas())
        std::cout << b;
    std::cout << '\n' << "rays:";
    for (const auto& v : x.ray_vectors()) {
        std::cout << " (";
        for (std::size_t i = 0; i < v.size(); ++i)
            std::cout << (i ? "," : "") << v[i];
        std::cout << ")";
    }
    std::cout << '\n' << "class group torsion-free\n";
    for (std::size_t c = 0; c < x.max_cones().size(); ++c)
        std::cout << "cone " << join_indices(x.max_cones()[c]) << ": complement " << join_indices(x.cone_complement(c))
                  << '\n';
    return 0;
}

struct Loaded {
    ProblemSpec spec;
    ToricVariety x;
    CIProblem prob;
};

Loaded load(const Options& o) {
    ProblemSpec spec = load_problem(o.input);
    ToricVariety x = load_variety(spec.variety_path);
    CIProblem prob(x, spec.ci_degrees);
    return {std::move(spec), x, std::move(prob)};
}

Window window_for(const Options& o, const ProblemSpec& spec) {
    if (!o.window.empty())
        return parse_window(o.window);
    if (spec.window)
        return *spec.window;
    throw Error(ErrorKind::InvalidInput, "no window in problem file; pass --window");
}

int cmd_table(const Options& o) {
    Loaded l = load(o);
    Window w = window_for(o, l.spec);
    if (w.rank() != l.x.class_rank())
        throw Error(ErrorKind::InvalidInput, "window rank does not match the class group");
    HilbertTable t = hilbert_table(l.prob, w);
    std::optional<std::int64_t> deg;
    if (o.degree)
        deg = degree_of_ci(l.prob);
    if (o.as_json) {
        json out{{"window", {{"min", to_json(w.min)}, {"max", to_json(w.max)}}},
                 {"anchor", to_json(l.prob.degree_sum())},
                 {"values", table_to_json(t)}};
        if (deg)
            out["degree"] = *deg;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << render_table(t);
    std::cout << "anchor Σα_i = " << l.prob.degree_sum() << '\n';
    if (deg)
        std::cout << "deg = " << *deg << '\n';
    return 0;
}

int cmd_regularity(const Options& o) {
    Loaded l = load(o);
    Window w = window_for(o, l.spec);
    RegularityScan s = regularity_scan(l.prob, w);
    if (o.as_json) {
        json classes = json::array();
        for (const auto& c : s.classes)
            classes.push_back(to_json(c));
        std::cout << json{{"anchor", to_json(s.anchor)}, {"degree", s.degree}, {"classes", classes}}.dump(2) << '\n';
        return 0;
    }
    std::cout << "anchor Σα_i = " << s.anchor << ", deg = " << s.degree << '\n';
    std::cout << s.classes.size() << " classes with H = deg:";
    for (const auto& c : s.classes)
        std::cout << ' ' << c;
    std::cout << '\n';
    return 0;
}

std::uint32_t field_of(const ProblemSpec& spec) {
    if (!spec.q)
        throw Error(ErrorKind::InvalidInput, "problem file has no field size q");
    return *spec.q;
}

std::vector<TorusPoint> points_of(const Options& o, const ProblemSpec& spec, const ToricVariety& x) {
    const std::uint32_t q = field_of(spec);
    if (spec.points)
        return make_point_set(*spec.points, q, x.dim()).points;
    if (spec.cox_points) {
        std::vector<TorusPoint> pts;
        for (const auto& p : *spec.cox_points) {
            auto t = cox_to_torus(x, p, q);
            pts.push_back(TorusPoint(t.begin(), t.end()));
        }
        return pts;
    }
    auto sys = build_system(spec, q, x.dim());
    return find_torus_zeros(sys, q, x.dim(), o.budget_points).points;
}

int cmd_points(const Options& o) {
    ProblemSpec spec = load_problem(o.input);
    ToricVariety x = load_variety(spec.variety_path);
    auto pts = points_of(o, spec, x);
    if (o.as_json) {
        std::cout << json{{"q", field_of(spec)}, {"count", pts.size()}, {"points", pts}}.dump(2) << '\n';
        return 0;
    }
    std::cout << pts.size() << " points over F_" << field_of(spec) << '\n';
    for (const auto& p : pts)
        std::cout << point_text(p) << '\n';
    return 0;
}

int cmd_code(const Options& o) {
    Loaded l = load(o);
    const std::uint32_t q = field_of(l.spec);
    DegreeClass alpha = o.alpha.empty() ? (l.spec.alpha ? *l.spec.alpha
                                                        : throw Error(ErrorKind::InvalidInput, "no alpha given"))
                                        : DegreeClass{parse_ints(o.alpha)};
    auto pts = points_of(o, l.spec, l.x);
    if (pts.empty())
        throw Error(ErrorKind::InvalidInput, "no evaluation points");
    EvalCode code = evaluation_matrix(l.x, alpha, pts, q, l.spec.pivot);
    compute_parameters(code, o.budget_codewords);
    const std::int64_t h = hilbert_ci(l.prob, alpha);
    const std::size_t k = *code.dimension;
    const bool agree = static_cast<std::int64_t>(k) == h;
    const bool trivial = k == code.length();
    const bool past_sum = preceq(l.x, l.prob.degree_sum(), alpha);

    if (o.as_json) {
        json out{{"q", q},
                 {"N", code.length()},
                 {"k", k},
                 {"d", code.min_distance ? json(*code.min_distance) : json(nullptr)},
                 {"alpha", to_json(alpha)},
                 {"hilbert", h},
                 {"agreement", agree},
                 {"trivial", trivial},
                 {"above_degree_sum", past_sum},
                 {"monomials", code.monomials},
                 {"pivot", code.pivot},
                 {"matrix", code.matrix}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "[" << code.length() << ", " << k << ", ";
        if (code.min_distance)
            std::cout << *code.min_distance;
        else
            std::cout << "?";
        std::cout << "]_" << q;
        if (trivial)
            std::cout << "  trivial (k = N" << (past_sum ? ", α ⪰ Σα_i)" : ")");
        std::cout << '\n';
        std::cout << "k = " << k << '\n';
        if (code.min_distance)
            std::cout << "d = " << *code.min_distance << '\n';
        else
            std::cout << "d: skipped(budget)\n";
        std::cout << "generator matrix (" << code.matrix.size() << " x " << code.length() << "):\n";
        for (const auto& row : code.matrix) {
            for (std::size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " " : "") << row[j];
            std::cout << '\n';
        }
        std::cout << "agreement: H(" << to_string(alpha) << ") = " << h << ", rank = " << k
                  << (agree ? ", OK" : ", MISMATCH") << '\n';
    }
    return agree ? 0 : kExitMismatch;
}

int cmd_numerator(const Options& o) {
    Loaded l = load(o);
    KoszulNumerator p = koszul_numerator(l.prob);
    std::optional<AInvariant> a;
    if (l.x.class_rank() == 1)
        a = a_invariant_wps(l.x, p);
    if (o.as_json) {
        json terms = json::array();
        for (const auto& [deg, c] : p.terms)
            terms.push_back({{"degree", to_json(deg)}, {"coeff", c}});
        json out{{"numerator", format_numerator(p)}, {"terms", terms}};
        if (a)
            out["a_invariant"] = a->value, out["regularity_start"] = a->regularity_start();
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << format_numerator(p) << '\n';
    if (a) {
        std::cout << "a-invariant = " << a->value << ", H constant from " << a->regularity_start() << '\n';
        std::cout << "valid only when a degree-1 non-zerodivisor exists on the quotient\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric complete intersections: Hilbert functions and evaluation codes"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.as_json, "machine-readable output");
    app.add_option("--seed", o.seed, "seed for randomized operations");

    auto* validate = app.add_subcommand("validate", "check a variety file");
    validate->add_option("variety", o.input)->required();

    auto* table = app.add_subcommand("table", "print the Hilbert function over a window");
    table->add_option("problem", o.input)->required();
    table->add_option("--window", o.window, "a0,b0:a1,b1");
    table->add_flag("--degree", o.degree, "also print the degree (needs semi-ample degrees)");

    auto* regularity = app.add_subcommand("regularity", "classes in the window where H equals the degree");
    regularity->add_option("problem", o.input)->required();
    regularity->add_option("--window", o.window, "a0,b0:a1,b1");

    auto* points = app.add_subcommand("points", "torus zeros of the problem system");
    points->add_option("problem", o.input)->required();
    points->add_option("--budget-points", o.budget_points)->check(CLI::PositiveNumber);

    auto* code = app.add_subcommand("code", "evaluation code parameters and generator matrix");
    code->add_option("problem", o.input)->required();
    code->add_option("--alpha", o.alpha, "degree class, e.g. 1,1");
    code->add_option("--budget-points", o.budget_points)->check(CLI::PositiveNumber);
    code->add_option("--budget-codewords", o.budget_codewords)->check(CLI::PositiveNumber);

    auto* numerator = app.add_subcommand("numerator", "Koszul numerator of the Hilbert series");
    numerator->add_option("problem", o.input)->required();

    for (auto* sub : {validate, table, regularity, points, code, numerator}) {
        sub->add_flag("--json", o.as_json, "machine-readable output");
        sub->add_option("--seed", o.seed, "seed for randomized operations");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate)
            return cmd_validate(o);
        if (*table)
            return cmd_table(o);
        if (*regularity)
            return cmd_regularity(o);
        if (*points)
            return cmd_points(o);
        if (*code)
            return cmd_code(o);
        return cmd_numerator(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::BudgetExceeded ? kExitBudget : kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}
