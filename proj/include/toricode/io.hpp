#pragma once

// JSON file formats for varieties and problems.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "toricode/gfcode.hpp"
#include "toricode/hilbert.hpp"
#include "toricode/toricfan.hpp"

namespace toricode {

// { "n": int, "rays": [[int]], "max_cones": [[int, 1-based]], "grading": [[int]] (optional) }
ToricVariety variety_from_json(const nlohmann::json& j);
ToricVariety load_variety(const std::filesystem::path& path);

// Fields of a problem file. "variety" paths resolve relative to the problem file.
struct ProblemSpec {
    std::filesystem::path variety_path;
    std::vector<DegreeClass> ci_degrees;
    std::optional<Window> window;
    std::optional<std::uint32_t> q;
    std::optional<std::vector<std::vector<std::pair<std::int64_t, LatticePoint>>>> system;
    std::optional<std::vector<LatticePoint>> points;     // torus coordinates
    std::optional<std::vector<LatticePoint>> cox_points; // homogeneous coordinates
    std::optional<DegreeClass> alpha;
    std::optional<LatticePoint> pivot;
};

ProblemSpec problem_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
ProblemSpec load_problem(const std::filesystem::path& path);

std::vector<LaurentPoly> build_system(const ProblemSpec& spec, std::uint32_t q, std::size_t n);

nlohmann::json to_json(const DegreeClass& d);
nlohmann::json table_to_json(const HilbertTable& table);

} // namespace toricode
