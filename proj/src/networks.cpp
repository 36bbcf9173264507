#include "deodhar/networks.hpp"

#include <algorithm>
#include <map>

#include "deodhar/require.hpp"

namespace deodhar {

bool move_allowed(Stone s, GMove m, PathFamily fam) {
    DEODHAR_REQUIRE(s != Stone::BElbow, "grid paths are only defined on Go-diagrams");
    switch (s) {
        case Stone::Plus:
            if (m == GMove::WtoS || m == GMove::NtoE) return true;  // follow the elbows
            return fam == PathFamily::Restricted ? m == GMove::WtoE : m == GMove::NtoS;
        case Stone::Black:
            if (m == GMove::WtoE || m == GMove::NtoS) return true;  // follow the strands
            return fam == PathFamily::Restricted ? m == GMove::WtoS : m == GMove::NtoE;
        default:  // White
            return m == GMove::WtoE || m == GMove::NtoS;
    }
}

bool move_is_jump(Stone s, GMove m, PathFamily fam) {
    if (s == Stone::White) return false;
    DEODHAR_REQUIRE(move_allowed(s, m, fam), "jump query for a forbidden move");
    if (fam == PathFamily::Restricted)
        return s == Stone::Plus ? m == GMove::WtoE : m == GMove::WtoS;
    return s == Stone::Plus ? m == GMove::NtoS : m == GMove::NtoE;
}

namespace {

// Label lookup for southeast border edges keyed by (vertical, row, col).
std::map<std::tuple<bool, int, int>, int> border_lookup(const Shape& sh) {
    std::map<std::tuple<bool, int, int>, int> out;
    for (const BorderEdge& e : se_border(sh)) out[{e.vertical, e.row, e.col}] = e.label;
    return out;
}

struct PathDfs {
    const Trace& t;
    PathFamily fam;
    std::map<std::tuple<bool, int, int>, int> border;
    std::vector<GridStep> steps;
    std::vector<GridPath>* out;
    int source;

    void run(int r, int c, bool from_west) {
        const Shape& sh = t.shape();
        const int cell = sh.cell_index(r, c);
        const Stone st = t.stones[cell];
        for (GMove mv : {GMove::WtoE, GMove::WtoS, GMove::NtoE, GMove::NtoS}) {
            if (gmove_enters_west(mv) != from_west) continue;
            if (!move_allowed(st, mv, fam)) continue;
            steps.push_back(GridStep{cell, mv});
            if (gmove_exits_east(mv)) {
                if (sh.cell_exists(r, c + 1)) {
                    run(r, c + 1, true);
                } else {
                    finish(border.at({true, r, sh.lam[r]}));
                }
            } else {
                if (sh.cell_exists(r + 1, c)) {
                    run(r + 1, c, false);
                } else {
                    finish(border.at({false, r + 1, c}));
                }
            }
            steps.pop_back();
        }
    }
    void finish(int sink) { out->push_back(GridPath{source, sink, steps}); }
};

} // namespace

std::vector<GridPath> enumerate_paths(const Trace& t, int source_pipe, PathFamily fam) {
    const Shape& sh = t.shape();
    DEODHAR_REQUIRE(source_pipe >= 1 && source_pipe <= sh.n, "source pipe out of range");
    std::vector<GridPath> out;
    // Locate the pipe's northwest exit.
    int west_row = -1, north_col = -1;
    for (int r = 0; r < sh.k; ++r)
        if (t.west_labels[r] == source_pipe) west_row = r;
    for (int c = 0; c < sh.width(); ++c)
        if (t.north_labels[c] == source_pipe) north_col = c;
    DEODHAR_REQUIRE((west_row >= 0) != (north_col >= 0), "pipe must exit exactly one edge");
    // A pipe along an empty row or column admits only its trivial path.
    if ((west_row >= 0 && sh.lam[west_row] == 0) ||
        (north_col >= 0 && sh.col_height(north_col) == 0)) {
        out.push_back(GridPath{source_pipe, source_pipe, {}});
        return out;
    }
    PathDfs dfs{t, fam, border_lookup(sh), {}, &out, source_pipe};
    if (west_row >= 0) {
        dfs.run(west_row, 0, true);
    } else {
        dfs.run(0, north_col, false);
    }
    return out;
}

std::vector<int> jump_cells(const Trace& t, const GridPath& p, PathFamily fam) {
    std::vector<int> cells;
    for (const GridStep& s : p.steps)
        if (move_is_jump(t.stones[s.cell], s.mv, fam)) cells.push_back(s.cell);
    return cells;
}

namespace {

GMove reverse_move(const PipeStep& step, Tile tile) {
    // A pipe step records the side entered travelling southeast-to-northwest;
    // reversing gives the northwest-to-southeast grid move through the cell.
    if (step.enter_south) return tile == Tile::Elbow ? GMove::WtoS : GMove::NtoS;
    return tile == Tile::Elbow ? GMove::NtoE : GMove::WtoE;
}

} // namespace

std::vector<GridStep> pipe_tail(const Trace& t, int pipe, int cell) {
    const auto& route = t.routes[pipe - 1];
    const Shape& sh = t.shape();
    int pos = -1;
    for (size_t i = 0; i < route.size(); ++i)
        if (sh.cell_index(route[i].r, route[i].c) == cell) pos = static_cast<int>(i);
    DEODHAR_REQUIRE(pos >= 0, "pipe does not pass through the requested cell");
    std::vector<GridStep> tail;
    for (int i = pos - 1; i >= 0; --i) {
        const PipeStep& st = route[i];
        const int ci = sh.cell_index(st.r, st.c);
        tail.push_back(GridStep{ci, reverse_move(st, t.filling.tiles[ci])});
    }
    return tail;
}

int nearest_plus_east(const Trace& t, int cell) {
    const Shape& sh = t.shape();
    auto [r, c] = sh.cell_at(cell);
    for (int cc = c + 1; cc < sh.lam[r]; ++cc)
        if (t.stone(r, cc) == Stone::Plus) return sh.cell_index(r, cc);
    return -1;
}

int source_count_between(const Trace& t, int cell) {
    const Shape& sh = t.shape();
    auto [r, c] = sh.cell_at(cell);
    auto border = border_lookup(sh);
    const int row_east = border.at({true, r, sh.lam[r]});
    const int col_south = border.at({false, sh.col_height(c), c});
    const int lo = std::min(row_east, col_south), hi = std::max(row_east, col_south);
    int count = 0;
    for (int src : subset_from_shape(sh))
        if (src > lo && src < hi) ++count;
    return count;
}

TwNetwork tw_network(const Trace& t) {
    const Shape& sh = t.shape();
    const int cells = sh.cells();
    TwNetwork net;
    net.out.assign(cells + sh.n, {});
    auto border = border_lookup(sh);
    auto border_vertex = [&](int label) { return cells + label - 1; };

    for (int cell = 0; cell < cells; ++cell) {
        const Stone st = t.stones[cell];
        if (st == Stone::White) continue;
        DEODHAR_REQUIRE(st != Stone::BElbow, "network needs a Go-diagram");
        auto [r, c] = sh.cell_at(cell);
        // Horizontal edge from the nearest Plus cell strictly east (or the
        // row's east border vertex) into this cell, weighted by this cell.
        int chi = nearest_plus_east(t, cell);
        int from = chi >= 0 ? chi : border_vertex(border.at({true, r, sh.lam[r]}));
        net.edges.push_back(TwNetwork::Edge{from, cell, cell});
        net.out[from].push_back(static_cast<int>(net.edges.size()) - 1);
        // Vertical weight-1 edge to the nearest Plus cell below (skipping
        // Black and White cells), or to the column's south border vertex.
        int to = -1;
        for (int rr = r + 1; sh.cell_exists(rr, c); ++rr)
            if (t.stone(rr, c) == Stone::Plus) {
                to = sh.cell_index(rr, c);
                break;
            }
        if (to < 0) to = border_vertex(border.at({false, sh.col_height(c), c}));
        net.edges.push_back(TwNetwork::Edge{cell, to, -1});
        net.out[cell].push_back(static_cast<int>(net.edges.size()) - 1);
    }

    net.sources = subset_from_shape(sh);
    std::vector<bool> is_source(sh.n + 1, false);
    for (int s : net.sources) is_source[s] = true;
    for (int lab = 1; lab <= sh.n; ++lab)
        if (!is_source[lab]) net.sinks.push_back(lab);
    return net;
}

std::vector<Poly> symbolic_params(const Trace& t, Fam fam, ReadingOrder order) {
    const Shape& sh = t.shape();
    ReadingMap rm = build_reading(sh, order);
    std::vector<Poly> vals(sh.cells());
    for (int cell = 0; cell < sh.cells(); ++cell) {
        const Stone st = t.stones[cell];
        const int label = rm.label_of_cell[cell];
        switch (fam) {
            case Fam::beta:
            case Fam::beta_star:
            case Fam::gamma:
                vals[cell] = st == Stone::White ? Poly(0) : Poly::var(sym(fam, label));
                break;
            case Fam::alpha:
                vals[cell] = st == Stone::White ? Poly(1) : Poly::var(sym(fam, label));
                break;
            case Fam::tw_a:
                if (st == Stone::White) {
                    vals[cell] = Poly(0);
                } else if (st == Stone::Plus) {
                    vals[cell] = Poly::var(sym(Fam::tw_a, label));
                } else {
                    vals[cell] = Poly::var(sym(Fam::tw_c, label));
                }
                break;
            default:
                DEODHAR_REQUIRE(false, "no per-cell symbols for this family");
        }
    }
    return vals;
}

bool paths_compatible(const GridPath& a, const GridPath& b) {
    for (const GridStep& sa : a.steps)
        for (const GridStep& sb : b.steps) {
            if (sa.cell != sb.cell) continue;
            const bool ok = (sa.mv == GMove::WtoS && sb.mv == GMove::NtoE) ||
                            (sa.mv == GMove::NtoE && sb.mv == GMove::WtoS);
            if (!ok) return false;
        }
    // Trivial paths share their border edge with nothing; distinct sources and
    // sinks are checked by the system builder.
    return true;
}

std::vector<PathSystem> nonintersecting_systems(const Trace& t, const std::vector<int>& sinks,
                                                PathFamily fam) {
    const Shape& sh = t.shape();
    const int rows = fam == PathFamily::Restricted ? sh.k : sh.width();
    DEODHAR_REQUIRE(static_cast<int>(sinks.size()) == rows,
                    "need exactly one sink per source");
    std::vector<int> sorted = sinks;
    std::sort(sorted.begin(), sorted.end());
    DEODHAR_REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                    "sink labels must be distinct");

    // Sources in point-matrix row order: west edges top-to-bottom for the
    // restricted family, north edges east-to-west for the dual family.
    std::vector<int> sources(rows);
    for (int i = 0; i < rows; ++i)
        sources[i] = fam == PathFamily::Restricted ? t.west_labels[i]
                                                   : t.north_labels[sh.width() - 1 - i];
    std::vector<std::vector<GridPath>> cand(rows);
    for (int i = 0; i < rows; ++i)
        for (GridPath& p : enumerate_paths(t, sources[i], fam))
            if (std::find(sorted.begin(), sorted.end(), p.sink) != sorted.end())
                cand[i].push_back(std::move(p));

    std::vector<PathSystem> out;
    std::vector<const GridPath*> chosen(rows, nullptr);
    std::vector<bool> sink_used(sh.n + 1, false);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == rows) {
            PathSystem sys;
            std::vector<int> d(rows);
            for (int j = 0; j < rows; ++j) {
                sys.paths.push_back(*chosen[j]);
                d[j] = chosen[j]->sink;
            }
            int sign = 1;
            for (int x = 0; x < rows; ++x)
                for (int y = x + 1; y < rows; ++y)
                    if (d[x] > d[y]) sign = -sign;
            sys.sign = sign;
            out.push_back(std::move(sys));
            return;
        }
        for (const GridPath& p : cand[i]) {
            if (sink_used[p.sink]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = paths_compatible(*chosen[j], p);
            if (!ok) continue;
            chosen[i] = &p;
            sink_used[p.sink] = true;
            self(self, i + 1);
            sink_used[p.sink] = false;
            chosen[i] = nullptr;
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace deodhar
