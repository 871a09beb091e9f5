#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "wangweave/core.hpp"
#include "wangweave/word2d.hpp"

namespace wangweave {

// A rectangle-tiling query: fill width x height with tiles so that contiguous
// edges share a color, honoring preassignments and optional boundary colors.
// Boundary vectors are either empty (unconstrained) or sized per side
// (height for left/right, width for bottom/top); an empty string entry leaves
// that single cell unconstrained.
struct SolveInstance {
    const TileSet* tileset = nullptr;
    int width = 0, height = 0;
    std::map<std::pair<int, int>, int> preassigned;  // (x,y) -> tile index
    std::vector<Color> left_colors, right_colors;
    std::vector<Color> bottom_colors, top_colors;
};

enum class SolveStatus { Sat, Unsat, Timeout };

struct SolveResult {
    SolveStatus status = SolveStatus::Unsat;
    Word2D word;  // populated when status == Sat
};

// Dancing-links exact-cover search. Deterministic: column choice is minimum
// remaining candidates with lowest-index tie-break, rows tried in tile-index
// order. budget_seconds <= 0 means no time limit.
SolveResult solve_rectangle(const SolveInstance& inst, double budget_seconds = 0);

// Number of solutions, stopping early at cap when cap >= 0.
long long count_solutions(const SolveInstance& inst, long long cap = -1);

// True iff some valid rectangle of shape (pattern + 2*margin) contains the
// pattern centered with margins (mx, my).
bool has_surrounding(const TileSet& T, const Word2D& pattern, int mx, int my);

// Ordered pairs (u,v) whose domino along axis i admits a surrounding of
// radius r (axis 1: v right of u; axis 2: v above u).
std::set<std::pair<int, int>> dominoes_with_surrounding(const TileSet& T, int axis, int r);

// All a x b words admitting a surrounding of radius r.
std::set<Word2D> factors_with_surrounding(const TileSet& T, int a, int b, int r);

// DIMACS CNF whose satisfying assignments biject with the valid tilings of
// the instance; var(x,y,t) = (y*width + x)*|T| + t + 1.
std::string export_cnf(const SolveInstance& inst);

// Runs `command <cnf-file>` on the exported CNF and maps the conventional
// exit codes (10 = satisfiable, 20 = unsatisfiable) to a status. Throws
// std::runtime_error on any other exit code.
SolveStatus solve_via_external(const SolveInstance& inst, const std::string& command);

// Independent edge-matching check of a filled rectangle.
bool patch_valid(const TileSet& T, const Word2D& w);

} // namespace wangweave
