#include "wangweave/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

namespace wangweave {

namespace {

using Clock = std::chrono::steady_clock;

// Toroidal doubly-linked sparse matrix for Knuth's Algorithm X.
class Dlx {
public:
    explicit Dlx(int columns) {
        int n = columns + 1;  // node 0 is the root
        left.resize(n);
        right.resize(n);
        up.resize(n);
        down.resize(n);
        col.resize(n);
        size.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            left[i] = (i + n - 1) % n;
            right[i] = (i + 1) % n;
            up[i] = down[i] = i;
            col[i] = i;
        }
    }

    void add_row(int row_id, const std::vector<int>& columns) {
        int first = -1;
        for (int c0 : columns) {
            int c = c0 + 1;  // node 0 is the root; column c lives at node c+1
            int node = static_cast<int>(left.size());
            left.push_back(node);
            right.push_back(node);
            up.push_back(up[c]);
            down.push_back(c);
            col.push_back(c);
            row.resize(node + 1);
            row[node] = row_id;
            down[up[c]] = node;
            up[c] = node;
            ++size[c];
            if (first < 0) {
                first = node;
            } else {
                left[node] = left[first];
                right[node] = first;
                right[left[first]] = node;
                left[first] = node;
            }
        }
    }

    // Runs the search. Returns number of solutions found (up to cap when
    // cap >= 0); the first solution's row ids are left in `solution`.
    // Sets timed_out when the deadline passes.
    long long solve(long long cap, Clock::time_point deadline, bool use_deadline) {
        this->cap = cap;
        this->deadline = deadline;
        this->use_deadline = use_deadline;
        timed_out = false;
        found = 0;
        stack.clear();
        search();
        return found;
    }

    std::vector<int> solution;
    bool timed_out = false;

private:
    std::vector<int> left, right, up, down, col, size, row;
    std::vector<int> stack;
    long long cap = -1, found = 0;
    Clock::time_point deadline;
    bool use_deadline = false;
    unsigned tick = 0;

    void cover(int c) {
        left[right[c]] = left[c];
        right[left[c]] = right[c];
        for (int i = down[c]; i != c; i = down[i])
            for (int j = right[i]; j != i; j = right[j]) {
                up[down[j]] = up[j];
                down[up[j]] = down[j];
                --size[col[j]];
            }
    }

    void uncover(int c) {
        for (int i = up[c]; i != c; i = up[i])
            for (int j = left[i]; j != i; j = left[j]) {
                ++size[col[j]];
                up[down[j]] = j;
                down[up[j]] = j;
            }
        left[right[c]] = c;
        right[left[c]] = c;
    }

    bool done() {
        if (timed_out) return true;
        if (cap >= 0 && found >= cap) return true;
        if (use_deadline && (++tick & 1023u) == 0 && Clock::now() > deadline) {
            timed_out = true;
            return true;
        }
        return false;
    }

    void search() {
        if (done()) return;
        if (right[0] == 0) {
            if (found++ == 0) solution = stack;
            return;
        }
        int c = right[0];
        for (int j = right[0]; j != 0; j = right[j])
            if (size[j] < size[c]) c = j;
        if (size[c] == 0) return;
        cover(c);
        for (int i = down[c]; i != c; i = down[i]) {
            stack.push_back(row[i]);
            for (int j = right[i]; j != i; j = right[j]) cover(col[j]);
            search();
            for (int j = left[i]; j != i; j = left[j]) uncover(col[j]);
            stack.pop_back();
            if (done()) break;
        }
        uncover(c);
    }
};

struct Encoding {
    const SolveInstance& inst;
    const TileSet& T;
    int W, H, n_tiles;
    std::map<Color, int> vcolor, hcolor;
    int n_vc, n_hc;
    int cell_cols, hedge_cols;

    explicit Encoding(const SolveInstance& i) : inst(i), T(*i.tileset) {
        W = inst.width;
        H = inst.height;
        n_tiles = T.size();
        for (const auto& c : T.vertical_colors()) vcolor.emplace(c, static_cast<int>(vcolor.size()));
        for (const auto& c : T.horizontal_colors()) hcolor.emplace(c, static_cast<int>(hcolor.size()));
        n_vc = static_cast<int>(vcolor.size());
        n_hc = static_cast<int>(hcolor.size());
        cell_cols = W * H;
        hedge_cols = (W - 1) * H * n_vc;
    }

    int total_columns() const { return cell_cols + hedge_cols + W * (H - 1) * n_hc; }
    int cell_col(int x, int y) const { return y * W + x; }
    int hedge_col(int x, int y, int k) const { return cell_cols + (y * (W - 1) + x) * n_vc + k; }
    int vedge_col(int x, int y, int k) const { return cell_cols + hedge_cols + (y * W + x) * n_hc + k; }
    int row_id(int x, int y, int t) const { return (y * W + x) * n_tiles + t; }

    bool tile_allowed(int x, int y, int t) const {
        auto pre = inst.preassigned.find({x, y});
        if (pre != inst.preassigned.end() && pre->second != t) return false;
        const WangTile& tile = T[t];
        auto constrained = [](const std::vector<Color>& side, int i, const Color& c) {
            return !side.empty() && !side[i].empty() && side[i] != c;
        };
        if (x == 0 && constrained(inst.left_colors, y, tile.left)) return false;
        if (x == W - 1 && constrained(inst.right_colors, y, tile.right)) return false;
        if (y == 0 && constrained(inst.bottom_colors, x, tile.bottom)) return false;
        if (y == H - 1 && constrained(inst.top_colors, x, tile.top)) return false;
        return true;
    }

    // A placement covers its cell, one color slot on each interior edge it
    // owns (right/top), and all-but-one color slots on each interior edge it
    // borders from the other side (left/bottom); the edge's color slots are
    // then each covered exactly once iff the two adjacent colors agree.
    std::vector<int> placement_columns(int x, int y, int t) const {
        const WangTile& tile = T[t];
        std::vector<int> cols;
        cols.push_back(cell_col(x, y));
        if (x < W - 1) cols.push_back(hedge_col(x, y, vcolor.at(tile.right)));
        if (x > 0) {
            int own = vcolor.at(tile.left);
            for (int k = 0; k < n_vc; ++k)
                if (k != own) cols.push_back(hedge_col(x - 1, y, k));
        }
        if (y < H - 1) cols.push_back(vedge_col(x, y, hcolor.at(tile.top)));
        if (y > 0) {
            int own = hcolor.at(tile.bottom);
            for (int k = 0; k < n_hc; ++k)
                if (k != own) cols.push_back(vedge_col(x, y - 1, k));
        }
        return cols;
    }
};

void validate(const SolveInstance& inst) {
    if (!inst.tileset) throw std::invalid_argument("solve: missing tile set");
    if (inst.width <= 0 || inst.height <= 0)
        throw std::invalid_argument("solve: rectangle dimensions must be positive");
    for (const auto& [pos, t] : inst.preassigned) {
        auto [x, y] = pos;
        if (x < 0 || x >= inst.width || y < 0 || y >= inst.height)
            throw std::invalid_argument("solve: preassigned position outside rectangle");
        if (t < 0 || t >= inst.tileset->size())
            throw std::invalid_argument("solve: preassigned tile index out of range");
    }
    auto check_side = [](const std::vector<Color>& side, size_t n, const char* name) {
        if (!side.empty() && side.size() != n)
            throw std::invalid_argument(std::string("solve: boundary size mismatch on ") + name);
    };
    check_side(inst.left_colors, inst.height, "left");
    check_side(inst.right_colors, inst.height, "right");
    check_side(inst.bottom_colors, inst.width, "bottom");
    check_side(inst.top_colors, inst.width, "top");
}

// Builds the matrix; returns false when some cell has no candidate tile.
bool build(const Encoding& enc, Dlx& dlx) {
    for (int y = 0; y < enc.H; ++y)
        for (int x = 0; x < enc.W; ++x) {
            bool any = false;
            for (int t = 0; t < enc.n_tiles; ++t) {
                if (!enc.tile_allowed(x, y, t)) continue;
                dlx.add_row(enc.row_id(x, y, t), enc.placement_columns(x, y, t));
                any = true;
            }
            if (!any) return false;
        }
    return true;
}

} // namespace

SolveResult solve_rectangle(const SolveInstance& inst, double budget_seconds) {
    validate(inst);
    Encoding enc(inst);
    Dlx dlx(enc.total_columns());
    if (!build(enc, dlx)) return {SolveStatus::Unsat, {}};
    bool use_deadline = budget_seconds > 0;
    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(budget_seconds));
    long long found = dlx.solve(1, deadline, use_deadline);
    if (dlx.timed_out) return {SolveStatus::Timeout, {}};
    if (found == 0) return {SolveStatus::Unsat, {}};
    Word2D w(enc.W, enc.H);
    for (int r : dlx.solution) {
        int t = r % enc.n_tiles;
        int cell = r / enc.n_tiles;
        w.at(cell % enc.W, cell / enc.W) = t;
    }
    return {SolveStatus::Sat, std::move(w)};
}

long long count_solutions(const SolveInstance& inst, long long cap) {
    validate(inst);
    Encoding enc(inst);
    Dlx dlx(enc.total_columns());
    if (!build(enc, dlx)) return 0;
    return dlx.solve(cap, {}, false);
}

bool has_surrounding(const TileSet& T, const Word2D& pattern, int mx, int my) {
    SolveInstance inst;
    inst.tileset = &T;
    inst.width = pattern.n1 + 2 * mx;
    inst.height = pattern.n2 + 2 * my;
    for (int y = 0; y < pattern.n2; ++y)
        for (int x = 0; x < pattern.n1; ++x)
            inst.preassigned[{mx + x, my + y}] = pattern.at(x, y);
    return solve_rectangle(inst).status == SolveStatus::Sat;
}

std::set<std::pair<int, int>> dominoes_with_surrounding(const TileSet& T, int axis, int r) {
    std::set<std::pair<int, int>> out;
    for (int u = 0; u < T.size(); ++u)
        for (int v = 0; v < T.size(); ++v) {
            if (!fuse(axis, T[u], T[v])) continue;
            Word2D d = axis == 1 ? concat(1, Word2D::letter(u), Word2D::letter(v))
                                 : concat(2, Word2D::letter(u), Word2D::letter(v));
            if (has_surrounding(T, d, r, r)) out.insert({u, v});
        }
    return out;
}

std::set<Word2D> factors_with_surrounding(const TileSet& T, int a, int b, int r) {
    std::set<Word2D> out;
    Word2D w(a, b);
    auto fill = [&](auto&& self, int idx) -> void {
        if (idx == a * b) {
            if (has_surrounding(T, w, r, r)) out.insert(w);
            return;
        }
        int x = idx % a, y = idx / a;
        for (int t = 0; t < T.size(); ++t) {
            if (x > 0 && T[w.at(x - 1, y)].right != T[t].left) continue;
            if (y > 0 && T[w.at(x, y - 1)].top != T[t].bottom) continue;
            w.at(x, y) = t;
            self(self, idx + 1);
        }
    };
    if (a > 0 && b > 0 && T.size() > 0) fill(fill, 0);
    return out;
}

std::string export_cnf(const SolveInstance& inst) {
    validate(inst);
    const TileSet& T = *inst.tileset;
    int W = inst.width, H = inst.height, n = T.size();
    auto var = [&](int x, int y, int t) { return (y * W + x) * n + t + 1; };
    std::vector<std::vector<int>> clauses;
    Encoding enc(inst);
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x) {
            std::vector<int> at_least;
            for (int t = 0; t < n; ++t) {
                if (enc.tile_allowed(x, y, t))
                    at_least.push_back(var(x, y, t));
                else
                    clauses.push_back({-var(x, y, t)});
            }
            clauses.push_back(at_least);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    clauses.push_back({-var(x, y, a), -var(x, y, b)});
        }
    for (int y = 0; y < H; ++y)
        for (int x = 0; x + 1 < W; ++x)
            for (int t = 0; t < n; ++t) {
                std::vector<int> cl{-var(x, y, t)};
                for (int s = 0; s < n; ++s)
                    if (T[s].left == T[t].right) cl.push_back(var(x + 1, y, s));
                clauses.push_back(cl);
            }
    for (int y = 0; y + 1 < H; ++y)
        for (int x = 0; x < W; ++x)
            for (int t = 0; t < n; ++t) {
                std::vector<int> cl{-var(x, y, t)};
                for (int s = 0; s < n; ++s)
                    if (T[s].bottom == T[t].top) cl.push_back(var(x, y + 1, s));
                clauses.push_back(cl);
            }
    std::ostringstream os;
    os << "p cnf " << W * H * n << ' ' << clauses.size() << '\n';
    for (const auto& cl : clauses) {
        for (int lit : cl) os << lit << ' ';
        os << "0\n";
    }
    return os.str();
}

SolveStatus solve_via_external(const SolveInstance& inst, const std::string& command) {
    std::string cnf = export_cnf(inst);
    std::filesystem::path dir = std::filesystem::temp_directory_path() /
                                ("wangweave_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::filesystem::path path = dir / "instance.cnf";
    {
        std::ofstream os(path);
        os << cnf;
    }
    // run inside the scratch directory: some solvers drop answer files in cwd
    int rc = std::system(
        ("cd " + dir.string() + " && " + command + " " + path.string() + " >/dev/null 2>&1").c_str());
    std::filesystem::remove_all(dir);
    int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    if (code == 10) return SolveStatus::Sat;
    if (code == 20) return SolveStatus::Unsat;
    throw std::runtime_error("external solver exited with code " + std::to_string(code));
}

bool patch_valid(const TileSet& T, const Word2D& w) {
    for (int y = 0; y < w.n2; ++y)
        for (int x = 0; x < w.n1; ++x) {
            int t = w.at(x, y);
            if (t < 0 || t >= T.size()) return false;
            if (x + 1 < w.n1 && T[t].right != T[w.at(x + 1, y)].left) return false;
            if (y + 1 < w.n2 && T[t].top != T[w.at(x, y + 1)].bottom) return false;
        }
    return true;
}

} // namespace wangweave
