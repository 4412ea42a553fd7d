#pragma once

#include "steenrod/simplicial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace steenrod {

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct SpaceLibraryEntry {
    std::string name;
    std::string description;
    std::vector<int> betti; // expected Z2 Betti numbers, degree 0..top
};

// fixed builtins plus the parametric families sphere-<n>-minimal,
// sphere-<n>-boundary, simplex-<n>, suspension-of:<ordered-complex builtin>
std::vector<SpaceLibraryEntry> space_library();

bool is_builtin(const std::string& name);
SimplicialSet make_builtin(const std::string& name);

// loads a builtin by name or a JSON file by path; accepts both the ordered
// complex format {"vertices": [...], "facets": [[...]]} and the general
// face-table format {"generators": [[...],...], "faces": {...}}
SimplicialSet load_space(const std::string& name_or_path);

SimplicialSet space_from_json(const std::string& text, const std::string& origin);
std::string space_to_json(const SimplicialSet& X);

struct CochainData {
    int degree = 0;
    std::vector<std::string> support;
};
CochainData cochain_from_json(const std::string& text, const std::string& origin);
CochainData load_cochain(const std::string& path);
std::string cochain_to_json(const CochainData& c);

} // namespace steenrod
