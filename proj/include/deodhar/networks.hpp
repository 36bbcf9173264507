#pragma once
#include <cstdint>
#include <vector>

#include "deodhar/laurent.hpp"
#include "deodhar/matrix.hpp"
#include "deodhar/pipedream.hpp"
#include "deodhar/transvection.hpp"

namespace deodhar {

// ---------------------------------------------------------------------------
// Grid paths.  A path travels northwest-to-southeast through the cells: it
// enters each cell from the west or north and leaves east or south.  Which
// moves a cell admits depends on its stone and on the path family:
//
//                 Plus (+)              Black (*)             White (o)
//   restricted    W>S  N>E  W>E(jump)   W>E  N>S  W>S(jump)   W>E  N>S
//   dual          W>S  N>E  N>S(jump)   W>E  N>S  N>E(jump)   W>E  N>S
//
// The non-jump moves follow the cell's two pipes in reverse; a jump switches
// to the other pipe and is only available to restricted paths entering
// horizontally (resp. vertically for dual paths) at a Plus or Black cell.
// ---------------------------------------------------------------------------
enum class GMove : uint8_t { WtoE, WtoS, NtoE, NtoS };

inline bool gmove_enters_west(GMove m) { return m == GMove::WtoE || m == GMove::WtoS; }
inline bool gmove_exits_east(GMove m) { return m == GMove::WtoE || m == GMove::NtoE; }

enum class PathFamily : uint8_t { Restricted, Dual };

bool move_allowed(Stone s, GMove m, PathFamily fam);
bool move_is_jump(Stone s, GMove m, PathFamily fam);

struct GridStep {
    int cell;  // row-major cell index
    GMove mv;
};

struct GridPath {
    int source;  // pipe label whose northwest edge starts the path
    int sink;    // label of the southeast border edge reached
    std::vector<GridStep> steps;  // empty for a trivial pipe's path
};

// All restricted (or dual) paths that start at the northwest edge of
// `source_pipe` and run to the southeast border.
std::vector<GridPath> enumerate_paths(const Trace& t, int source_pipe, PathFamily fam);

// The cells where the path jumps.
std::vector<int> jump_cells(const Trace& t, const GridPath& p, PathFamily fam);

// The reverse course of pipe `pipe` strictly southeast of cell `cell` (which
// must lie on the pipe), as northwest-to-southeast grid steps ending on the
// southeast border.  The step at `cell` itself is not included.
std::vector<GridStep> pipe_tail(const Trace& t, int pipe, int cell);

// ---------------------------------------------------------------------------
// Weights.
// ---------------------------------------------------------------------------

// Product of `values[b]` over the jump cells b of the path.
template <class T>
T jump_weight(const Trace& t, const GridPath& p, PathFamily fam, const std::vector<T>& values,
              const T& proto) {
    T w = one_like(proto);
    for (int cell : jump_cells(t, p, fam)) w *= values[cell];
    return w;
}

// Corner weight of a single grid move at a cell: alpha on a west-to-south
// turn, -1/alpha on a north-to-east turn, 1 on straight passage.
template <class T>
T corner_weight(GMove m, const T& alpha) {
    switch (m) {
        case GMove::WtoS: return alpha;
        case GMove::NtoE: return -inv(alpha);
        default: return one_like(alpha);
    }
}

// Grid weight wt' of a sequence of steps: the product of corner weights.
template <class T>
T grid_weight(const std::vector<GridStep>& steps, const std::vector<T>& alpha, const T& proto) {
    T w = one_like(proto);
    for (const GridStep& s : steps) w *= corner_weight(s.mv, alpha[s.cell]);
    return w;
}

// ---------------------------------------------------------------------------
// Path matrices.  All are n x n, rows and columns indexed by border labels
// 1..n; entry (s,t) sums the weights of paths from the northwest edge of pipe
// s to the southeast edge t.
// ---------------------------------------------------------------------------

// Restricted-path matrix: jump weights beta (indexed by row-major cell).
// Lower unitriangular.
template <class T>
Mat<T> restricted_weight_matrix(const Trace& t, const std::vector<T>& beta, const T& proto) {
    const int n = t.shape().n;
    Mat<T> m(n, n, zero_like(proto));
    for (int s = 1; s <= n; ++s)
        for (const GridPath& p : enumerate_paths(t, s, PathFamily::Restricted)) {
            DEODHAR_REQUIRE(p.sink <= s, "restricted paths may only descend");
            m.at(s - 1, p.sink - 1) += jump_weight(t, p, PathFamily::Restricted, beta, proto);
        }
    for (int s = 1; s <= n; ++s)
        DEODHAR_REQUIRE(m.at(s - 1, s - 1) == one_like(proto),
                        "restricted-path matrix must be unitriangular");
    return m;
}

// Dual path matrix: jump weights beta*; upper unitriangular.
template <class T>
Mat<T> dual_weight_matrix(const Trace& t, const std::vector<T>& beta_star, const T& proto) {
    const int n = t.shape().n;
    Mat<T> m(n, n, zero_like(proto));
    for (int s = 1; s <= n; ++s)
        for (const GridPath& p : enumerate_paths(t, s, PathFamily::Dual)) {
            DEODHAR_REQUIRE(p.sink >= s, "dual paths may only ascend");
            m.at(s - 1, p.sink - 1) += jump_weight(t, p, PathFamily::Dual, beta_star, proto);
        }
    for (int s = 1; s <= n; ++s)
        DEODHAR_REQUIRE(m.at(s - 1, s - 1) == one_like(proto),
                        "dual-path matrix must be unitriangular");
    return m;
}

// Grid-weight matrix: restricted moves with corner weights alpha.
template <class T>
Mat<T> wtprime_weight_matrix(const Trace& t, const std::vector<T>& alpha, const T& proto) {
    const int n = t.shape().n;
    Mat<T> m(n, n, zero_like(proto));
    for (int s = 1; s <= n; ++s)
        for (const GridPath& p : enumerate_paths(t, s, PathFamily::Restricted))
            m.at(s - 1, p.sink - 1) += grid_weight(p.steps, alpha, proto);
    return m;
}

// Transvection product over the cells in decreasing reading label (leftmost
// factor = largest label): prod_b x_{sigma(b)}(beta_b).
template <class T>
Mat<T> product_formula_matrix(const Trace& t, const std::vector<T>& beta, ReadingOrder order,
                              const T& proto) {
    const Shape& sh = t.shape();
    ReadingMap rm = build_reading(sh, order);
    Mat<T> m = Mat<T>::identity(sh.n, proto);
    for (int lbl = sh.cells(); lbl >= 1; --lbl) {
        const int cell = rm.cell_of_label[lbl - 1];
        if (is_zero(beta[cell])) continue;
        m = m * transvection(sh.n, t.west_exit_pipe[cell], t.north_exit_pipe[cell], beta[cell]);
    }
    return m;
}

// Rows of the point of the Grassmannian: row r of the k x n matrix is the row
// of `mat` indexed by the pipe on the west edge of diagram row r.
template <class T>
Mat<T> point_matrix(const Trace& t, const Mat<T>& mat) {
    const Shape& sh = t.shape();
    Mat<T> r(sh.k, sh.n, zero_like(mat.at(0, 0)));
    for (int row = 0; row < sh.k; ++row)
        for (int j = 0; j < sh.n; ++j) r.at(row, j) = mat.at(t.west_labels[row] - 1, j);
    return r;
}

// Dual point: rows indexed by the pipes on the north edges, east to west.
template <class T>
Mat<T> dual_point_matrix(const Trace& t, const Mat<T>& mat) {
    const Shape& sh = t.shape();
    const int w = sh.width();
    Mat<T> r(w, sh.n, zero_like(mat.at(0, 0)));
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < sh.n; ++j) r.at(i, j) = mat.at(t.north_labels[w - 1 - i] - 1, j);
    return r;
}

// ---------------------------------------------------------------------------
// The planar network on the Plus/Black cells: each such cell has a horizontal
// edge arriving from the nearest Plus cell (or border vertex) strictly east in
// its row, weighted a_b at a Plus cell b and c_b at a Black cell b, and a
// vertical edge of weight 1 leaving to the nearest Plus cell below it (or the
// border).  Sources are the vertical southeast edges (the set I_lambda), sinks
// the horizontal ones.
// ---------------------------------------------------------------------------
struct TwNetwork {
    // Vertex ids: 0..cells-1 = internal vertices at Plus/Black cells;
    // cells + (label-1) = border vertex of southeast edge `label`.
    struct Edge {
        int from, to;
        int weight_cell;  // -1: weight 1; otherwise the value index (a_b/c_b)
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> out;  // adjacency: vertex -> edge indices
    std::vector<int> sources;           // source labels (I_lambda, ascending)
    std::vector<int> sinks;             // sink labels (complement, ascending)
};

TwNetwork tw_network(const Trace& t);

// Signed path matrix of the network: k x n over labels; column v_s of source s
// is the identity; a sink column t gets (-1)^{#sources strictly between s and
// t} times the sum over network paths from s to t of the product of edge
// weights.  `ac` holds a_b at Plus cells and c_b at Black cells.
template <class T>
Mat<T> tw_weight_matrix(const Trace& t, const std::vector<T>& ac, const T& proto) {
    const TwNetwork net = tw_network(t);
    const Shape& sh = t.shape();
    const int k = sh.k, n = sh.n, cells = sh.cells();
    // path sums from every vertex to every sink label, over the acyclic graph
    std::vector<std::vector<T>> sums(cells + n, std::vector<T>(n + 1, zero_like(proto)));
    std::vector<int8_t> done(cells + n, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (done[v]) return;
        done[v] = 1;
        if (v >= cells) {
            int label = v - cells + 1;
            bool is_sink = std::find(net.sinks.begin(), net.sinks.end(), label) != net.sinks.end();
            if (is_sink) sums[v][label] = one_like(proto);
        }
        for (int ei : net.out[v]) {
            const auto& e = net.edges[ei];
            self(self, e.to);
            T w = e.weight_cell < 0 ? one_like(proto) : ac[e.weight_cell];
            for (int lab = 1; lab <= n; ++lab)
                if (!is_zero(sums[e.to][lab])) sums[v][lab] += w * sums[e.to][lab];
        }
    };
    Mat<T> m(k, n, zero_like(proto));
    for (int si = 0; si < k; ++si) {
        const int s = net.sources[si];
        m.at(si, s - 1) = one_like(proto);  // the source's own column
        const int sv = cells + s - 1;
        rec(rec, sv);
        for (int tlab : net.sinks) {
            T total = sums[sv][tlab];
            if (is_zero(total)) continue;
            int between = 0;
            for (int other : net.sources)
                if (other > std::min(s, tlab) && other < std::max(s, tlab)) ++between;
            m.at(si, tlab - 1) += (between % 2 == 0) ? total : -total;
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Parameter transformations between the three coordinate systems on a
// Go-diagram: grid corner weights alpha, network weights (a, c), and path
// weights beta.  All vectors are indexed by row-major cell; entries at White
// cells are untouched pass-throughs (alpha there is conventionally 1 and
// never read).
// ---------------------------------------------------------------------------

// Nearest Plus cell strictly east of `cell` in its row (skipping White and
// Black cells); -1 if the row boundary comes first.
int nearest_plus_east(const Trace& t, int cell);
// Number of sources (elements of I_lambda) strictly between the label of the
// cell's row-east border edge and the label of its column-south border edge.
int source_count_between(const Trace& t, int cell);

template <class T>
std::vector<T> params_alpha_to_tw(const Trace& t, const std::vector<T>& alpha, const T& proto) {
    const Shape& sh = t.shape();
    std::vector<T> ac(sh.cells(), zero_like(proto));
    for (int cell = 0; cell < sh.cells(); ++cell) {
        Stone st = t.stones[cell];
        if (st == Stone::White) continue;
        DEODHAR_REQUIRE(st != Stone::BElbow, "network weights need a Go-diagram");
        int chi = nearest_plus_east(t, cell);
        T val = alpha[cell];
        int rho = source_count_between(t, cell);
        int rho_chi = 0;
        if (chi >= 0) {
            val *= inv(alpha[chi]);
            rho_chi = source_count_between(t, chi);
        }
        if ((rho - rho_chi) % 2 != 0) val = -val;
        ac[cell] = val;
    }
    return ac;
}

template <class T>
std::vector<T> params_tw_to_alpha(const Trace& t, const std::vector<T>& ac, const T& proto) {
    const Shape& sh = t.shape();
    ReadingMap rm = build_reading(sh, ReadingOrder::RowMajor);
    std::vector<T> alpha(sh.cells(), one_like(proto));
    // Increasing reading label: chi(b) lies strictly east of b in its row and
    // so carries a smaller label; alpha there is already recovered.
    for (int lbl = 1; lbl <= sh.cells(); ++lbl) {
        const int cell = rm.cell_of_label[lbl - 1];
        Stone st = t.stones[cell];
        if (st == Stone::White) continue;
        int chi = nearest_plus_east(t, cell);
        T val = ac[cell];
        int rho = source_count_between(t, cell);
        int rho_chi = chi >= 0 ? source_count_between(t, chi) : 0;
        if ((rho - rho_chi) % 2 != 0) val = -val;
        if (chi >= 0) val *= alpha[chi];
        alpha[cell] = val;
    }
    return alpha;
}

// beta_b = t_b * wt'(tail of the lower pipe) / wt'(tail of the higher pipe),
// with t_b = 1/alpha_b at a Plus cell and alpha_b at a Black cell; the tails
// run from b (exclusive) to the southeast border.
template <class T>
std::vector<T> params_alpha_to_beta(const Trace& t, const std::vector<T>& alpha, const T& proto) {
    const Shape& sh = t.shape();
    std::vector<T> beta(sh.cells(), zero_like(proto));
    for (int cell = 0; cell < sh.cells(); ++cell) {
        Stone st = t.stones[cell];
        if (st == Stone::White) continue;
        DEODHAR_REQUIRE(st != Stone::BElbow, "path weights need a Go-diagram");
        const int lo = t.north_exit_pipe[cell], hi = t.west_exit_pipe[cell];
        T lo_w = grid_weight(pipe_tail(t, lo, cell), alpha, proto);
        T hi_w = grid_weight(pipe_tail(t, hi, cell), alpha, proto);
        T tb = st == Stone::Plus ? inv(alpha[cell]) : alpha[cell];
        beta[cell] = tb * lo_w * inv(hi_w);
    }
    return beta;
}

template <class T>
std::vector<T> params_beta_to_alpha(const Trace& t, const std::vector<T>& beta, const T& proto) {
    const Shape& sh = t.shape();
    ReadingMap rm = build_reading(sh, ReadingOrder::RowMajor);
    std::vector<T> alpha(sh.cells(), one_like(proto));
    // Pipe tails visit cells strictly southeast of their start, i.e. with
    // strictly smaller reading labels, so increasing label order resolves.
    for (int lbl = 1; lbl <= sh.cells(); ++lbl) {
        const int cell = rm.cell_of_label[lbl - 1];
        Stone st = t.stones[cell];
        if (st == Stone::White) continue;
        const int lo = t.north_exit_pipe[cell], hi = t.west_exit_pipe[cell];
        T lo_w = grid_weight(pipe_tail(t, lo, cell), alpha, proto);
        T hi_w = grid_weight(pipe_tail(t, hi, cell), alpha, proto);
        T ratio = lo_w * inv(hi_w);
        if (st == Stone::Plus) {
            // beta = (1/alpha) ratio
            alpha[cell] = inv(beta[cell]) * ratio;
        } else {
            // beta = alpha ratio
            alpha[cell] = beta[cell] * inv(ratio);
        }
    }
    return alpha;
}

// Symbolic parameter vectors: one fresh symbol per cell, indexed by the cell's
// reading label.  For Fam::beta/beta_star the entries at White cells are 0;
// for Fam::alpha they are 1; Fam::tw_a yields a_b at Plus and c_b at Black.
std::vector<Poly> symbolic_params(const Trace& t, Fam fam, ReadingOrder order);

// ---------------------------------------------------------------------------
// Non-intersecting path systems.  Two paths are compatible when every cell
// they share is traversed by one as west-to-south and by the other as
// north-to-east (the only pair of moves with disjoint strands); shared edges
// are thereby excluded as well.
// ---------------------------------------------------------------------------
bool paths_compatible(const GridPath& a, const GridPath& b);

struct PathSystem {
    std::vector<GridPath> paths;  // indexed by source row order
    int sign;                     // parity of sorting the sink list ascending
};

// All pairwise-compatible systems joining the family's sources (west edges
// top-to-bottom, resp. north edges east-to-west) to the given sink labels,
// one path per sink.
std::vector<PathSystem> nonintersecting_systems(const Trace& t, const std::vector<int>& sinks,
                                                PathFamily fam);

} // namespace deodhar
