#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wangweave/core.hpp"
#include "wangweave/morphism.hpp"
#include "wangweave/shear.hpp"
#include "wangweave/solver.hpp"
#include "wangweave/word2d.hpp"

namespace wangweave::jr {

// Embedded reference artifacts. Tile sets: T0..T12, T4p, U. Morphisms:
// omega0..omega3, omega6..omega11 (chain steps), iota (tile removal),
// jmath (decoration collapse), eta (shear letter map), rho (U relabeling),
// omegaU (self-similarity), omega0123 (the composed column substitution).
// Throws std::invalid_argument on unknown names.
const TileSet& tileset(const std::string& name);
const Morphism2D& morphism(const std::string& name);

// The marker subset the chain uses at each desubstitution step, keyed by the
// input tile set name (T0..T3, T6..T11).
const std::set<int>& chain_markers(const std::string& tileset_name);

// Letter colors of the 19-tile self-similar set expressed as colors of T12.
const std::map<Color, Color>& u_color_map();

// Horizontal-color collapse of the decorated set: 0,6 -> 0 and 1,5 -> 1.
Color decorate_color(const Color& c);

// Removes the two tiles certified unremovable-from-tilings (the 71x9
// refutation) and returns the reindexing map on the survivors. certified
// must be set by the caller after producing or importing the certificate.
std::pair<TileSet, Morphism2D> remove_forbidden_tiles(const TileSet& T4p, bool certified);

// The 71x9 instance with the forced tile whose unsatisfiability certifies
// the removal.
SolveInstance unsat_instance();

struct DecorationReport {
    bool subset_ok = false;        // decorated tiles collapse into the plain set
    bool collision_ok = false;     // exactly tiles 22,23 collapse onto tile 22
    bool dominoes_ok = false;      // surviving {22,23}-top vertical dominoes match
    std::vector<std::pair<int, int>> dominoes_with_top_2223;
    bool ok() const { return subset_ok && collision_ok && dominoes_ok; }
};
DecorationReport check_decoration(const TileSet& T5, const TileSet& T4);

struct SftForbiddenSet {
    std::set<std::pair<int, int>> d_horizontal, d_vertical;  // surviving T5 dominoes
    std::set<std::pair<int, int>> g_horizontal, g_vertical;  // edge-valid T4 dominoes minus image of D
};
SftForbiddenSet x4_sft_forbidden_set();

// Directed graph on tile indices: a -> b iff the (a,b) domino along axis i
// survives radius r.
std::map<int, std::set<int>> rauzy_graph(const TileSet& T, int i, int r);

struct Window {
    int x0, x1, y0, y1;  // inclusive bounds
};

struct FaultLineResult {
    SparsePatch patch;          // image patch on the window
    SparsePatch slid;           // lower half joined with upper half shifted right
    Color fault_color;          // "0" or "1"
    bool fault_row_ok = false;      // bottom colors of row -1 all equal fault_color
    bool slid_valid = false;        // slid composite is edge-valid on the window
    bool diagonal_ok = false;       // slope-1 class diagonals intact in the patch
    bool diagonal_broken = false;   // and broken somewhere in the slid composite
    bool ok() const { return fault_row_ok && slid_valid && diagonal_ok && diagonal_broken; }
};

// Builds the image of the fixed point generated by one of the four fault-line
// seeds through the whole chain down to the undecorated 28-tile set,
// restricted to the window, and the slid composite demonstrating a tiling
// outside the substitutive subshift. Throws std::invalid_argument for the
// other four seeds.
FaultLineResult fault_line_patch(const Word2D& seed, const Window& window);

// The eight 2x2 seeds whose fixed points generate the self-similar shift.
const std::vector<Word2D>& fixed_seeds();

// Frequencies of the 11 original tiles: the Perron vector of the
// self-similarity pushed through the whole chain of substitutions.
Eigen::VectorXd t0_frequencies();

struct PipelineOptions {
    double budget_seconds = 0;        // per-step time budget (0 = none)
    bool skip_unsat_check = false;    // accept the tile-removal certificate
    std::string external_solver;      // DIMACS solver command for the 71x9 check
    double unsat_budget_seconds = 3600;
};

struct StepReport {
    std::string name;
    bool ok = false;
    std::string detail;
    std::vector<std::set<int>> marker_candidates;  // alternatives seen by find_markers
};

struct PipelineReport {
    bool ok = false;
    std::vector<StepReport> steps;
    nlohmann::json to_json() const;
};

// Replays the whole decomposition: four desubstitutions, the certified tile
// removal, the decoration check, the shear, six more desubstitutions, and
// the final equivalence with the self-similar set; every derived tile table
// and morphism is compared with the embedded reference data.
PipelineReport run_pipeline(const PipelineOptions& opts = {});

} // namespace wangweave::jr
