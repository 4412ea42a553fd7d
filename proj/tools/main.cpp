#include "steenrod/bench.hpp"
#include "steenrod/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace steenrod;
using nlohmann::json;

namespace {

Cochain to_cochain(const SimplicialSet& X, const CochainData& data, const std::string& origin) {
    Cochain c = Cochain::zero(X, data.degree);
    for (const std::string& name : data.support) {
        int32_t g = X.gen_id(name);
        if (X.dim_of(g) != data.degree)
            throw parse_error(origin + ": generator '" + name + "' has dimension " +
                              std::to_string(X.dim_of(g)) + ", cochain degree is " +
                              std::to_string(data.degree));
        c.values[size_t(g)] = 1;
    }
    return c;
}

CochainData from_cochain(const SimplicialSet& X, const Cochain& c) {
    CochainData data;
    data.degree = c.degree;
    for (int32_t g = 0; g < X.gen_count(); ++g)
        if (c.values[size_t(g)]) data.support.push_back(X.gen_names[size_t(g)]);
    return data;
}

void print_cochain(const SimplicialSet& X, const Cochain& c, bool as_json) {
    CochainData data = from_cochain(X, c);
    if (as_json) {
        std::cout << cochain_to_json(data) << "\n";
        return;
    }
    std::cout << "degree " << data.degree << ", " << data.support.size() << " generators";
    if (!data.support.empty()) {
        std::cout << ":";
        for (const std::string& s : data.support) std::cout << " " << s;
    }
    std::cout << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cup-i products and Steenrod squares of finite simplicial sets"};
    app.require_subcommand(1);

    std::string ring = "z";
    std::string space;
    uint64_t seed = 1;
    bool as_json = false;
    app.add_option("--ring", ring, "coefficient ring where meaningful")
        ->check(CLI::IsMember({"z", "z2"}));
    app.add_option("--space", space, "builtin space name or JSON file path");
    app.add_option("--seed", seed, "seed for randomized cochain perturbations");
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    auto* cmd_cohomology = app.add_subcommand("cohomology", "mod-2 cohomology of a space");
    int coh_max_dim = -1;
    cmd_cohomology->add_option("--max-dim", coh_max_dim, "top degree to report");

    auto* cmd_sq = app.add_subcommand("sq", "Steenrod square of a cocycle");
    int sq_i = 0;
    std::string cocycle_path;
    cmd_sq->add_option("-i", sq_i, "square index")->required();
    cmd_sq->add_option("--cocycle", cocycle_path, "cocycle JSON file")->required();

    auto* cmd_sq_matrix =
        app.add_subcommand("sq-matrix", "matrix of Sq^i from H^j in cohomology bases");
    int sqm_i = 0, sqm_j = 0;
    cmd_sq_matrix->add_option("-i", sqm_i, "square index")->required();
    cmd_sq_matrix->add_option("-j", sqm_j, "source degree")->required();

    auto* cmd_cupi = app.add_subcommand("cupi", "cup-i product of two cochains");
    int cupi_i = 0;
    std::string left_path, right_path;
    cmd_cupi->add_option("-i", cupi_i, "cup-i index")->required();
    cmd_cupi->add_option("--left", left_path, "left cochain JSON file")->required();
    cmd_cupi->add_option("--right", right_path, "right cochain JSON file")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    SuiteParams params;
    std::vector<std::string> suite_spaces;
    cmd_verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    cmd_verify->add_option("--max-n", params.max_n, "cap on the operator index (n or i)");
    cmd_verify->add_option("--max-dim", params.max_dim, "cap on simplex dimension");
    cmd_verify->add_option("-p", params.p, "reduced-power arity");
    cmd_verify->add_option("--spaces", suite_spaces, "override the default space corpus");

    auto* cmd_bench = app.add_subcommand("bench", "count and time fast vs slow Sq evaluation");
    int bench_max_i = 4, bench_k = 2;
    cmd_bench->add_option("--max-i", bench_max_i, "largest square index");
    cmd_bench->add_option("--k", bench_k, "largest codegree (cochain degree = i + k)");

    auto* cmd_spaces = app.add_subcommand("spaces", "builtin space library");
    auto* cmd_spaces_list = cmd_spaces->add_subcommand("list", "list builtin spaces");
    cmd_spaces->require_subcommand(1);

    for (CLI::App* sc : app.get_subcommands(nullptr)) sc->fallthrough();
    cmd_spaces_list->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_spaces_list->parsed()) {
            std::vector<SpaceLibraryEntry> lib = space_library();
            if (as_json) {
                json j = json::array();
                for (const SpaceLibraryEntry& e : lib)
                    j.push_back({{"name", e.name},
                                 {"description", e.description},
                                 {"betti", e.betti}});
                std::cout << j.dump(2) << "\n";
            } else {
                for (const SpaceLibraryEntry& e : lib) {
                    std::cout << e.name << " - " << e.description << " (betti";
                    for (int b : e.betti) std::cout << " " << b;
                    std::cout << ")\n";
                }
            }
            return 0;
        }

        if (cmd_verify->parsed()) {
            params.seed = seed;
            params.ring_z2 = ring == "z2";
            params.spaces = suite_spaces;
            SuiteReport rep = run_suite(suite, params);
            std::cout << (as_json ? rep.to_json() + "\n" : rep.to_text());
            return rep.ok() ? 0 : 1;
        }

        if (cmd_bench->parsed()) {
            std::cout << bench_csv(run_bench(bench_max_i, bench_k));
            return 0;
        }

        if (space.empty()) throw parse_error("--space is required for this command");
        SimplicialSet X = load_space(space);

        if (cmd_cohomology->parsed()) {
            int top = coh_max_dim >= 0 ? coh_max_dim : X.top_dim;
            json j;
            j["space"] = X.name;
            j["betti"] = json::array();
            j["representatives"] = json::array();
            for (int d = 0; d <= top; ++d) {
                CohomologyBasis basis = cohomology_basis(X, d);
                j["betti"].push_back(basis.dim());
                json reps = json::array();
                for (const Cochain& r : basis.reps)
                    reps.push_back(from_cochain(X, r).support);
                j["representatives"].push_back(reps);
                if (!as_json) {
                    std::cout << "H^" << d << ": dim " << basis.dim() << "\n";
                    for (const Cochain& r : basis.reps) {
                        std::cout << "  representative:";
                        for (const std::string& s : from_cochain(X, r).support)
                            std::cout << " " << s;
                        std::cout << "\n";
                    }
                }
            }
            if (as_json) std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (cmd_sq->parsed()) {
            CochainData data = load_cochain(cocycle_path);
            Cochain c = to_cochain(X, data, cocycle_path);
            if (!coboundary(X, c).zero_cochain())
                std::cerr << "note: input is not a cocycle; the formula is evaluated anyway\n";
            print_cochain(X, sq(X, sq_i, c), as_json);
            return 0;
        }

        if (cmd_sq_matrix->parsed()) {
            std::vector<std::vector<uint8_t>> cols = sq_matrix(X, sqm_i, sqm_j);
            int rows = cols.empty() ? cohomology_basis(X, sqm_i + sqm_j).dim() : int(cols[0].size());
            if (as_json) {
                json j;
                j["space"] = X.name;
                j["i"] = sqm_i;
                j["j"] = sqm_j;
                j["rows"] = rows;
                j["cols"] = int(cols.size());
                json entries = json::array();
                for (int r = 0; r < rows; ++r) {
                    json row = json::array();
                    for (const std::vector<uint8_t>& col : cols) row.push_back(int(col[size_t(r)]));
                    entries.push_back(row);
                }
                j["entries"] = entries;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "Sq^" << sqm_i << ": H^" << sqm_j << " -> H^" << (sqm_i + sqm_j)
                          << " is " << rows << " x " << cols.size() << "\n";
                for (int r = 0; r < rows; ++r) {
                    for (const std::vector<uint8_t>& col : cols)
                        std::cout << int(col[size_t(r)]) << " ";
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (cmd_cupi->parsed()) {
            Cochain lhs = to_cochain(X, load_cochain(left_path), left_path);
            Cochain rhs = to_cochain(X, load_cochain(right_path), right_path);
            print_cochain(X, cup_i_cochain(X, cupi_i, lhs, rhs), as_json);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
