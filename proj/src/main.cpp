#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wangweave/desub.hpp"
#include "wangweave/jeandelrao.hpp"
#include "wangweave/json_io.hpp"
#include "wangweave/markers.hpp"
#include "wangweave/morphism.hpp"
#include "wangweave/shear.hpp"
#include "wangweave/solver.hpp"
#include "wangweave/svg.hpp"

using namespace wangweave;
using nlohmann::json;

namespace {

json read_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return json::parse(is);
}

// Accepts either a JSON file path or a builtin name such as T0.
TileSet load_tileset(const std::string& ref) {
    if (std::filesystem::exists(ref)) return tileset_from_json(read_json(ref));
    return jr::tileset(ref);
}

Morphism2D load_morphism(const std::string& ref) {
    if (std::filesystem::exists(ref)) return morphism_from_json(read_json(ref), -1);
    return jr::morphism(ref);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << text;
}

std::string external_command(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("WANGWEAVE_SAT")) return env;
    return "splr";
}

json freq_json(const Eigen::VectorXd& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wangweave: Wang tile sets, exact-cover tiling search and substitutions"};
    app.require_subcommand(1);

    std::string tileset_ref, out_path, report_path, cnf_path, solver_choice = "dlx", solver_cmd;
    std::string side_str = "left", markers_str, pattern_path, word_path, morph_ref, inner_ref;
    std::string chain;
    int axis = 2, radius = 1, width = 1, height = 1, cell_size = 64, iterations = 1;
    double budget = 0;
    bool as_json = false, skip_unsat = false, no_labels = false;
    std::vector<std::string> preassigns;

    auto* solve = app.add_subcommand("solve", "tile a rectangle or certify that none exists");
    solve->add_option("--tileset", tileset_ref)->required();
    solve->add_option("--width", width)->required();
    solve->add_option("--height", height)->required();
    solve->add_option("--preassign", preassigns, "x,y,tile (repeatable)");
    solve->add_option("--export-cnf", cnf_path, "write the DIMACS encoding and continue");
    solve->add_option("--solver", solver_choice)->check(CLI::IsMember({"dlx", "external"}));
    solve->add_option("--solver-cmd", solver_cmd, "external SAT command (default $WANGWEAVE_SAT or splr)");
    solve->add_option("--budget", budget, "seconds before giving up");
    solve->add_flag("--json", as_json);

    auto* surround = app.add_subcommand("surround", "test whether a pattern admits a surrounding");
    surround->add_option("--tileset", tileset_ref)->required();
    surround->add_option("--pattern", pattern_path, "Word2D JSON file")->required();
    surround->add_option("--radius", radius)->required();

    auto* markers_cmd = app.add_subcommand("markers", "find marker candidate subsets");
    markers_cmd->add_option("--tileset", tileset_ref)->required();
    markers_cmd->add_option("--axis", axis)->check(CLI::IsMember({1, 2}))->required();
    markers_cmd->add_option("--radius", radius)->required();

    auto* desub = app.add_subcommand("desub", "derive a tile set and morphism from a marker subset");
    desub->add_option("--tileset", tileset_ref)->required();
    desub->add_option("--markers", markers_str, "comma-separated tile indices")->required();
    desub->add_option("--axis", axis)->check(CLI::IsMember({1, 2}))->required();
    desub->add_option("--radius", radius)->required();
    desub->add_option("--side", side_str)->check(CLI::IsMember({"left", "right"}));

    auto* shear = app.add_subcommand("shear", "derive the sheared tile set");
    shear->add_option("--tileset", tileset_ref)->required();
    shear->add_option("--radius", radius)->required();

    auto* morph = app.add_subcommand("morph", "morphism operations");
    morph->require_subcommand(1);
    auto* morph_apply = morph->add_subcommand("apply", "apply a morphism to a word");
    morph_apply->add_option("--morphism", morph_ref)->required();
    morph_apply->add_option("--word", word_path, "Word2D JSON file")->required();
    auto* morph_compose = morph->add_subcommand("compose", "compose two morphisms (outer after inner)");
    morph_compose->add_option("--outer", morph_ref)->required();
    morph_compose->add_option("--inner", inner_ref)->required();
    auto* morph_freq = morph->add_subcommand("freq", "Perron letter frequencies");
    morph_freq->add_option("--morphism", morph_ref);
    morph_freq->add_option("--chain", chain)->check(CLI::IsMember({"pipeline"}));
    auto* morph_fixed = morph->add_subcommand("fixed", "seeds of fixed points of the square");
    morph_fixed->add_option("--morphism", morph_ref, "defaults to the self-similarity");
    morph_fixed->add_option("--tileset", tileset_ref, "tile set for the 2x2 factors");
    morph_fixed->add_option("--radius", radius, "surrounding radius for the factors");

    auto* pipeline = app.add_subcommand("pipeline", "replay the whole decomposition chain");
    pipeline->add_option("--budget", budget, "seconds for the 71x9 refutation");
    pipeline->add_flag("--skip-unsat-check", skip_unsat);
    pipeline->add_option("--report", report_path, "write the JSON report");
    pipeline->add_option("--solver", solver_choice)->check(CLI::IsMember({"dlx", "external"}));
    pipeline->add_option("--solver-cmd", solver_cmd);

    auto* render = app.add_subcommand("render", "render a tile set or patch to SVG");
    render->add_option("--tileset", tileset_ref)->required();
    render->add_option("--patch", pattern_path, "Word2D JSON file (omit to render the tile set)");
    render->add_option("--out", out_path)->required();
    render->add_option("--cell-size", cell_size);
    render->add_flag("--no-labels", no_labels);

    (void)iterations;
    try {
        app.parse(argc, argv);

        if (*solve) {
            TileSet T = load_tileset(tileset_ref);
            SolveInstance inst;
            inst.tileset = &T;
            inst.width = width;
            inst.height = height;
            for (const auto& p : preassigns) {
                int x, y, t;
                if (std::sscanf(p.c_str(), "%d,%d,%d", &x, &y, &t) != 3)
                    throw std::runtime_error("--preassign expects x,y,tile");
                inst.preassigned[{x, y}] = t;
            }
            if (!cnf_path.empty()) write_output(cnf_path, export_cnf(inst));
            if (solver_choice == "external") {
                SolveStatus st = solve_via_external(inst, external_command(solver_cmd));
                std::cout << (st == SolveStatus::Sat ? "SAT" : "UNSAT") << '\n';
                return st == SolveStatus::Sat ? 0 : 1;
            }
            SolveResult r = solve_rectangle(inst, budget);
            if (r.status == SolveStatus::Timeout) {
                std::cerr << "timeout\n";
                return 2;
            }
            if (r.status == SolveStatus::Unsat) {
                std::cout << "UNSAT\n";
                return 1;
            }
            std::cout << (as_json ? word2d_to_json(r.word).dump(2) : word2d_to_json(r.word).dump())
                      << '\n';
            return 0;
        }

        if (*surround) {
            TileSet T = load_tileset(tileset_ref);
            Word2D pattern = word2d_from_json(read_json(pattern_path));
            bool ok = has_surrounding(T, pattern, radius, radius);
            std::cout << (ok ? "surroundable" : "forbidden") << '\n';
            return ok ? 0 : 1;
        }

        if (*markers_cmd) {
            TileSet T = load_tileset(tileset_ref);
            json out = json::array();
            for (const auto& c : find_markers(T, axis, radius)) out.push_back(c.tiles);
            std::cout << out.dump() << '\n';
            return out.empty() ? 1 : 0;
        }

        if (*desub) {
            TileSet T = load_tileset(tileset_ref);
            std::set<int> M;
            std::stringstream ss(markers_str);
            for (std::string item; std::getline(ss, item, ',');) M.insert(std::stoi(item));
            DesubResult res =
                find_substitution(T, M, axis, radius, side_str == "left" ? Side::Left : Side::Right);
            json out = {{"tileset", tileset_to_json(res.derived)},
                        {"morphism", morphism_to_json(res.morphism)}};
            std::cout << out.dump(2) << '\n';
            return 0;
        }

        if (*shear) {
            TileSet T = load_tileset(tileset_ref);
            ShearResult res = shear_tileset(T, radius);
            json out = {{"tileset", tileset_to_json(res.derived)}, {"eta", res.eta}};
            std::cout << out.dump(2) << '\n';
            return 0;
        }

        if (*morph_apply) {
            Morphism2D m = load_morphism(morph_ref);
            Word2D w = word2d_from_json(read_json(word_path));
            std::cout << word2d_to_json(apply(m, w)).dump(2) << '\n';
            return 0;
        }

        if (*morph_compose) {
            Morphism2D outer = load_morphism(morph_ref), inner = load_morphism(inner_ref);
            std::cout << morphism_to_json(compose(outer, inner)).dump(2) << '\n';
            return 0;
        }

        if (*morph_freq) {
            if (chain == "pipeline") {
                std::cout << freq_json(jr::t0_frequencies()).dump() << '\n';
            } else if (!morph_ref.empty()) {
                std::cout << freq_json(perron_frequencies(load_morphism(morph_ref))).dump() << '\n';
            } else {
                throw std::runtime_error("morph freq needs --morphism or --chain pipeline");
            }
            return 0;
        }

        if (*morph_fixed) {
            json out = json::array();
            if (morph_ref.empty()) {
                for (const auto& s : jr::fixed_seeds()) out.push_back(word2d_to_json(s));
            } else {
                Morphism2D m = load_morphism(morph_ref);
                TileSet T = load_tileset(tileset_ref);
                auto factors = factors_with_surrounding(T, 2, 2, radius);
                for (const auto& s : square_fixed_seeds(m, factors)) out.push_back(word2d_to_json(s));
            }
            std::cout << out.dump(2) << '\n';
            return 0;
        }

        if (*pipeline) {
            jr::PipelineOptions opts;
            opts.skip_unsat_check = skip_unsat;
            if (budget > 0) opts.unsat_budget_seconds = budget;
            if (solver_choice == "external") opts.external_solver = external_command(solver_cmd);
            jr::PipelineReport rep = jr::run_pipeline(opts);
            json j = rep.to_json();
            if (!report_path.empty()) write_output(report_path, j.dump(2) + "\n");
            for (const auto& s : rep.steps)
                std::cout << (s.ok ? "ok   " : "FAIL ") << s.name << ": " << s.detail << '\n';
            return rep.ok ? 0 : 1;
        }

        if (*render) {
            TileSet T = load_tileset(tileset_ref);
            RenderSpec spec;
            spec.cell_size = cell_size;
            spec.labels = !no_labels;
            std::string svg = pattern_path.empty()
                                  ? render_svg(T, spec)
                                  : render_svg(T, word2d_from_json(read_json(pattern_path)), spec);
            write_output(out_path, svg);
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
