#include "steenrod/spaces.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace steenrod {

using nlohmann::json;

namespace {

SimplicialSet make_point() {
    return from_face_table({{"pt", 0}}, {{}}, "point");
}

SimplicialSet make_interval() {
    return from_ordered_complex({"0", "1"}, {{0, 1}}, "interval");
}

SimplicialSet make_simplex(int n) {
    std::vector<std::string> verts;
    std::vector<int> facet;
    for (int v = 0; v <= n; ++v) {
        verts.push_back(std::to_string(v));
        facet.push_back(v);
    }
    return from_ordered_complex(verts, {facet}, "simplex-" + std::to_string(n));
}

// one vertex and one n-cell whose faces are all the unique degenerate
// (n-1)-simplex s_{n-2}...s_0 pt
SimplicialSet make_sphere_minimal(int n) {
    if (n < 1) throw parse_error("sphere dimension must be >= 1");
    std::vector<GenSpec> gens{{"pt", 0}, {"cell", n}};
    std::vector<int> word;
    for (int l = n - 2; l >= 0; --l) word.push_back(l);
    std::vector<FaceSpec> cell_faces(size_t(n) + 1, FaceSpec{word, "pt"});
    return from_face_table(gens, {{}, cell_faces}, "sphere-" + std::to_string(n) + "-minimal");
}

SimplicialSet make_sphere_boundary(int n) {
    if (n < 1) throw parse_error("sphere dimension must be >= 1");
    std::vector<std::string> verts;
    for (int v = 0; v <= n + 1; ++v) verts.push_back(std::to_string(v));
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip <= n + 1; ++skip) {
        std::vector<int> f;
        for (int v = 0; v <= n + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    return from_ordered_complex(verts, facets, "sphere-" + std::to_string(n) + "-boundary");
}

SimplicialSet make_rp2() {
    // 6-vertex triangulation; every edge lies in exactly two triangles and
    // every vertex link is a 5-cycle
    std::vector<std::vector<int>> facets = {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5},
                                            {0, 4, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 5},
                                            {2, 3, 4}, {3, 4, 5}};
    return from_ordered_complex({"1", "2", "3", "4", "5", "6"}, facets, "rp2");
}

SimplicialSet make_torus() {
    // 7-vertex triangulation: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
    std::set<std::vector<int>> facets;
    for (int i = 0; i < 7; ++i) {
        std::vector<int> a{i, (i + 1) % 7, (i + 3) % 7};
        std::vector<int> b{i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        facets.insert(a);
        facets.insert(b);
    }
    std::vector<std::string> verts;
    for (int v = 0; v < 7; ++v) verts.push_back(std::to_string(v));
    return from_ordered_complex(verts, {facets.begin(), facets.end()}, "torus");
}

// grid quotient of the unit square: the y-seam is glued straight, the x-seam
// with a flip in y, each grid square split along a diagonal
SimplicialSet make_klein(int grid = 4) {
    auto vertex = [&](int x, int y) {
        if (y == grid) y = 0;
        if (x == grid) {
            x = 0;
            y = (grid - y) % grid;
        }
        return y * grid + x;
    };
    std::set<std::vector<int>> facets;
    for (int x = 0; x < grid; ++x)
        for (int y = 0; y < grid; ++y) {
            std::vector<std::vector<int>> tris = {
                {vertex(x, y), vertex(x + 1, y), vertex(x + 1, y + 1)},
                {vertex(x, y), vertex(x, y + 1), vertex(x + 1, y + 1)}};
            for (auto& t : tris) {
                std::sort(t.begin(), t.end());
                if (t[0] == t[1] || t[1] == t[2]) throw parse_error("degenerate Klein facet");
                if (facets.count(t)) throw parse_error("duplicate Klein facet");
                facets.insert(t);
            }
        }
    std::vector<std::string> verts;
    for (int v = 0; v < grid * grid; ++v) verts.push_back(std::to_string(v));
    return from_ordered_complex(verts, {facets.begin(), facets.end()}, "klein-bottle");
}

struct OrderedData {
    std::vector<std::string> vertices;
    std::vector<std::vector<int>> facets;
};

// rebuild ordered-complex data from a space built by from_ordered_complex
OrderedData ordered_data(const SimplicialSet& X) {
    OrderedData d;
    std::map<std::string, int> vid;
    for (int32_t v : X.gens_by_dim[0]) {
        vid[X.gen_names[size_t(v)]] = int(d.vertices.size());
        d.vertices.push_back(X.gen_names[size_t(v)]);
    }
    int top = X.top_dim;
    for (int32_t g : X.gens_by_dim[size_t(top)]) {
        std::vector<int> f;
        std::stringstream ss(X.gen_names[size_t(g)]);
        std::string part;
        while (std::getline(ss, part, ',')) f.push_back(vid.at(part));
        d.facets.push_back(f);
    }
    return d;
}

// two apex vertices appended after the base vertices; every base facet F
// yields F+{a0} and F+{a1}
SimplicialSet make_suspension(const std::string& base_name) {
    SimplicialSet base = make_builtin(base_name);
    if (!base.faces_nondegenerate || base.gens_by_dim.empty())
        throw parse_error("suspension-of expects an ordered-complex builtin");
    OrderedData d = ordered_data(base);
    int a0 = int(d.vertices.size());
    d.vertices.push_back("apex0");
    d.vertices.push_back("apex1");
    std::vector<std::vector<int>> facets;
    for (const auto& f : d.facets)
        for (int a : {a0, a0 + 1}) {
            std::vector<int> g = f;
            g.push_back(a);
            facets.push_back(g);
        }
    return from_ordered_complex(d.vertices, facets, "suspension-of:" + base_name);
}

std::optional<int> parse_param(const std::string& name, const std::string& prefix,
                               const std::string& suffix) {
    if (name.size() <= prefix.size() + suffix.size()) return std::nullopt;
    if (name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    if (name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0)
        return std::nullopt;
    std::string mid = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
    if (mid.empty() || mid.find_first_not_of("0123456789") != std::string::npos)
        return std::nullopt;
    return std::stoi(mid);
}

} // namespace

std::vector<SpaceLibraryEntry> space_library() {
    return {
        {"point", "one vertex", {1}},
        {"interval", "one 1-simplex with its endpoints", {1, 0}},
        {"simplex-2", "standard n-simplex as an ordered complex; any simplex-<n>", {1, 0, 0}},
        {"sphere-2-minimal", "one vertex and one n-cell; any sphere-<n>-minimal", {1, 0, 1}},
        {"sphere-2-boundary", "boundary of the standard (n+1)-simplex; any sphere-<n>-boundary",
         {1, 0, 1}},
        {"rp2", "6-vertex projective plane", {1, 1, 1}},
        {"torus", "7-vertex torus", {1, 2, 1}},
        {"klein-bottle", "16-vertex grid-quotient Klein bottle", {1, 2, 1}},
        {"suspension-of:rp2", "suspension of an ordered-complex builtin; any suspension-of:<name>",
         {1, 0, 1, 1}},
    };
}

bool is_builtin(const std::string& name) {
    if (name == "point" || name == "interval" || name == "rp2" || name == "torus" ||
        name == "klein-bottle")
        return true;
    if (parse_param(name, "simplex-", "")) return true;
    if (parse_param(name, "sphere-", "-minimal")) return true;
    if (parse_param(name, "sphere-", "-boundary")) return true;
    if (name.rfind("suspension-of:", 0) == 0) return is_builtin(name.substr(14));
    return false;
}

SimplicialSet make_builtin(const std::string& name) {
    if (name == "point") return make_point();
    if (name == "interval") return make_interval();
    if (name == "rp2") return make_rp2();
    if (name == "torus") return make_torus();
    if (name == "klein-bottle") return make_klein();
    if (auto n = parse_param(name, "simplex-", "")) return make_simplex(*n);
    if (auto n = parse_param(name, "sphere-", "-minimal")) return make_sphere_minimal(*n);
    if (auto n = parse_param(name, "sphere-", "-boundary")) return make_sphere_boundary(*n);
    if (name.rfind("suspension-of:", 0) == 0) return make_suspension(name.substr(14));
    throw parse_error("unknown builtin space '" + name + "'");
}

SimplicialSet space_from_json(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(origin + ": " + e.what());
    }
    try {
        if (j.contains("vertices") && j.contains("facets")) {
            std::vector<std::string> verts;
            std::map<std::string, int> vid;
            for (const auto& v : j.at("vertices")) {
                std::string s = v.is_string() ? v.get<std::string>() : v.dump();
                vid[s] = int(verts.size());
                verts.push_back(s);
            }
            std::vector<std::vector<int>> facets;
            for (const auto& f : j.at("facets")) {
                std::vector<int> t;
                for (const auto& v : f) {
                    if (v.is_number_integer())
                        t.push_back(v.get<int>());
                    else {
                        auto it = vid.find(v.get<std::string>());
                        if (it == vid.end())
                            throw parse_error(origin + ": unknown facet vertex " + v.dump());
                        t.push_back(it->second);
                    }
                }
                facets.push_back(t);
            }
            return from_ordered_complex(verts, facets, origin);
        }
        if (j.contains("generators") && j.contains("faces")) {
            std::vector<GenSpec> gens;
            std::vector<std::vector<FaceSpec>> faces;
            int d = 0;
            for (const auto& level : j.at("generators")) {
                for (const auto& g : level) gens.push_back({g.get<std::string>(), d});
                ++d;
            }
            const auto& fj = j.at("faces");
            for (const auto& g : gens) {
                std::vector<FaceSpec> row;
                if (g.dim > 0) {
                    if (!fj.contains(g.name))
                        throw parse_error(origin + ": missing faces for '" + g.name + "'");
                    for (const auto& e : fj.at(g.name)) {
                        FaceSpec fs;
                        fs.target = e.at("target").get<std::string>();
                        for (const auto& l : e.at("degeneracies"))
                            fs.degeneracies.push_back(l.get<int>());
                        row.push_back(fs);
                    }
                }
                faces.push_back(row);
            }
            return from_face_table(gens, faces, origin);
        }
    } catch (const json::exception& e) {
        throw parse_error(origin + ": " + e.what());
    }
    throw parse_error(origin + ": expected vertices/facets or generators/faces");
}

SimplicialSet load_space(const std::string& name_or_path) {
    if (is_builtin(name_or_path)) return make_builtin(name_or_path);
    std::ifstream in(name_or_path);
    if (!in) throw parse_error("'" + name_or_path + "' is neither a builtin space nor a file");
    std::stringstream buf;
    buf << in.rdbuf();
    SimplicialSet X = space_from_json(buf.str(), name_or_path);
    auto report = validate(X);
    if (!report.empty()) {
        std::string msg = name_or_path + ": simplicial identity violations:";
        for (const auto& r : report) msg += "\n  " + r;
        throw parse_error(msg);
    }
    return X;
}

std::string space_to_json(const SimplicialSet& X) {
    json j;
    j["generators"] = json::array();
    for (const auto& level : X.gens_by_dim) {
        json l = json::array();
        for (int32_t g : level) l.push_back(X.gen_names[size_t(g)]);
        j["generators"].push_back(l);
    }
    json faces = json::object();
    for (int32_t g = 0; g < X.gen_count(); ++g) {
        if (X.dim_of(g) == 0) continue;
        json row = json::array();
        for (const SimplexRef& f : X.face_table[size_t(g)]) {
            json e;
            json degens = json::array();
            Mask m = f.degen;
            while (m) {
                int l = 31 - std::countl_zero(m);
                degens.push_back(l);
                m ^= bit(l);
            }
            e["degeneracies"] = degens;
            e["target"] = X.gen_names[size_t(f.gen)];
            row.push_back(e);
        }
        faces[X.gen_names[size_t(g)]] = row;
    }
    j["faces"] = faces;
    return j.dump(2);
}

CochainData cochain_from_json(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(origin + ": " + e.what());
    }
    try {
        CochainData c;
        c.degree = j.at("degree").get<int>();
        for (const auto& s : j.at("support")) c.support.push_back(s.get<std::string>());
        return c;
    } catch (const json::exception& e) {
        throw parse_error(origin + ": " + e.what());
    }
}

CochainData load_cochain(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open cochain file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return cochain_from_json(buf.str(), path);
}

std::string cochain_to_json(const CochainData& c) {
    json j;
    j["degree"] = c.degree;
    j["support"] = c.support;
    return j.dump(2);
}

} // namespace steenrod
