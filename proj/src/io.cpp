#include "toricode/io.hpp"

#include <fstream>

#include "toricode/error.hpp"

namespace toricode {

namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidInput, path.string() + ": " + e.what());
    }
}

std::vector<std::vector<std::int64_t>> int_rows(const nlohmann::json& j, const char* what) {
    if (!j.is_array())
        throw Error(ErrorKind::InvalidInput, std::string(what) + " must be an array of arrays");
    return j.get<std::vector<std::vector<std::int64_t>>>();
}

DegreeClass degree(const nlohmann::json& j) {
    if (j.is_number_integer())
        return DegreeClass{j.get<std::int64_t>()};
    return DegreeClass(j.get<std::vector<std::int64_t>>());
}

} // namespace

ToricVariety variety_from_json(const nlohmann::json& j) {
    try {
        const auto rays = int_rows(j.at("rays"), "rays");
        const std::size_t n = j.at("n").get<std::size_t>();
        std::vector<Cone> cones;
        for (const auto& c : j.at("max_cones")) {
            Cone cone;
            for (auto idx : c.get<std::vector<std::int64_t>>()) {
                if (idx < 1)
                    throw Error(ErrorKind::InvalidInput, "cone indices are 1-based");
                cone.push_back(static_cast<std::size_t>(idx - 1));
            }
            cones.push_back(std::move(cone));
        }
        std::optional<IntMatrix> grading;
        if (j.contains("grading")) {
            const auto g = int_rows(j.at("grading"), "grading");
            grading = IntMatrix::from_rows(g, rays.size());
        }
        return ToricVariety::build(IntMatrix::from_rows(rays, n), std::move(cones), std::move(grading));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("variety file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorKind::InvalidInput, std::string("variety file: ") + e.what());
    }
}

ToricVariety load_variety(const std::filesystem::path& path) { return variety_from_json(read_json(path)); }

ProblemSpec problem_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
    ProblemSpec spec;
    try {
        std::filesystem::path v = j.at("variety").get<std::string>();
        spec.variety_path = v.is_absolute() ? v : base_dir / v;
        if (j.contains("ci_degrees"))
            for (const auto& d : j.at("ci_degrees"))
                spec.ci_degrees.push_back(degree(d));
        if (j.contains("window"))
            spec.window = Window(degree(j.at("window").at("min")), degree(j.at("window").at("max")));
        if (j.contains("q"))
            spec.q = j.at("q").get<std::uint32_t>();
        if (j.contains("system")) {
            std::vector<std::vector<std::pair<std::int64_t, LatticePoint>>> sys;
            for (const auto& poly : j.at("system")) {
                std::vector<std::pair<std::int64_t, LatticePoint>> terms;
                for (const auto& t : poly)
                    terms.emplace_back(t.at("c").get<std::int64_t>(), t.at("e").get<LatticePoint>());
                sys.push_back(std::move(terms));
            }
            spec.system = std::move(sys);
        }
        if (j.contains("points"))
            spec.points = j.at("points").get<std::vector<LatticePoint>>();
        if (j.contains("cox_points"))
            spec.cox_points = j.at("cox_points").get<std::vector<LatticePoint>>();
        if (j.contains("alpha"))
            spec.alpha = degree(j.at("alpha"));
        if (j.contains("pivot"))
            spec.pivot = j.at("pivot").get<LatticePoint>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("problem file: ") + e.what());
    }
    return spec;
}

ProblemSpec load_problem(const std::filesystem::path& path) {
    return problem_from_json(read_json(path), path.parent_path());
}

std::vector<LaurentPoly> build_system(const ProblemSpec& spec, std::uint32_t q, std::size_t n) {
    std::vector<LaurentPoly> out;
    if (spec.system)
        for (const auto& terms : *spec.system)
            out.emplace_back(q, n, terms);
    return out;
}

nlohmann::json to_json(const DegreeClass& d) { return d.coords; }

nlohmann::json table_to_json(const HilbertTable& table) {
    nlohmann::json records = nlohmann::json::array();
    for (std::size_t i = 0; i < table.values.size(); ++i)
        records.push_back({{"alpha", to_json(table.window.cell(i))}, {"h", table.values[i]}});
    return records;
}

} // namespace toricode
