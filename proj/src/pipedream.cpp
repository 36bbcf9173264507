#include "deodhar/pipedream.hpp"

#include <algorithm>
#include <map>

#include "deodhar/require.hpp"

namespace deodhar {

char stone_char(Stone s) {
    switch (s) {
        case Stone::Plus: return '+';
        case Stone::BElbow: return 'b';
        case Stone::White: return 'o';
        case Stone::Black: return '*';
    }
    return '?';
}

Stone stone_from_char(char c) {
    switch (c) {
        case '+': return Stone::Plus;
        case 'b': return Stone::BElbow;
        case 'o': return Stone::White;
        case '*': return Stone::Black;
    }
    DEODHAR_REQUIRE(false, std::string("unknown stone character '") + c + "'");
}

Filling make_filling(Shape shape, std::vector<Tile> tiles) {
    DEODHAR_REQUIRE(static_cast<int>(tiles.size()) == shape.cells(),
                    "filling needs one tile per cell");
    return Filling{std::move(shape), std::move(tiles)};
}

Filling fully_crossed(const Shape& shape) {
    return Filling{shape, std::vector<Tile>(shape.cells(), Tile::Cross)};
}

Filling fully_elbowed(const Shape& shape) {
    return Filling{shape, std::vector<Tile>(shape.cells(), Tile::Elbow)};
}

int Trace::count_stone(Stone s) const {
    return static_cast<int>(std::count(stones.begin(), stones.end(), s));
}

Trace trace(const Filling& f) {
    const Shape& sh = f.shape;
    const int m = sh.cells();
    Trace t;
    t.filling = f;
    t.stones.assign(m, Stone::Plus);
    t.west_labels.assign(sh.k, 0);
    t.north_labels.assign(sh.width(), 0);
    t.west_exit_pipe.assign(m, 0);
    t.north_exit_pipe.assign(m, 0);
    t.east_enter_pipe.assign(m, 0);
    t.south_enter_pipe.assign(m, 0);
    t.routes.assign(sh.n, {});

    // Walk each pipe from its southeast border edge to the northwest border.
    for (const BorderEdge& e : se_border(sh)) {
        const int pipe = e.label;
        if (e.trivial) {
            // A pipe along an empty row occupies the row's west edge; one
            // along an empty column occupies the column's north edge.
            if (e.vertical) {
                t.west_labels[e.row] = pipe;
            } else {
                t.north_labels[e.col] = pipe;
            }
            continue;
        }
        int r, c;
        bool enter_south;
        if (e.vertical) {
            r = e.row;
            c = e.col - 1;
            enter_south = false;
        } else {
            r = e.row - 1;
            c = e.col;
            enter_south = true;
        }
        while (true) {
            DEODHAR_REQUIRE(sh.cell_exists(r, c), "pipe walked outside the shape");
            const int cell = sh.cell_index(r, c);
            t.routes[pipe - 1].push_back(PipeStep{r, c, enter_south});
            if (enter_south) {
                t.south_enter_pipe[cell] = pipe;
            } else {
                t.east_enter_pipe[cell] = pipe;
            }
            // Elbow: south->west arc and east->north arc.
            // Crossing: south->north strand and east->west strand.
            const bool exit_west = (f.tiles[cell] == Tile::Elbow) == enter_south;
            if (exit_west) {
                t.west_exit_pipe[cell] = pipe;
                if (c == 0) {
                    t.west_labels[r] = pipe;
                    break;
                }
                c -= 1;
                enter_south = false;
            } else {
                t.north_exit_pipe[cell] = pipe;
                if (r == 0) {
                    t.north_labels[c] = pipe;
                    break;
                }
                r -= 1;
                enter_south = true;
            }
        }
    }

    for (int cell = 0; cell < m; ++cell) {
        DEODHAR_REQUIRE(t.east_enter_pipe[cell] > 0 && t.south_enter_pipe[cell] > 0 &&
                            t.west_exit_pipe[cell] > 0 && t.north_exit_pipe[cell] > 0,
                        "every cell must carry two pipes");
    }

    // Configurations: visit cells from the southeast (rows bottom-up, right to
    // left — a linear extension of the southeast partial order), tracking the
    // crossing parity of each pipe pair seen so far.
    std::map<std::pair<int, int>, int> parity;
    bool any_inverted_elbow = false, any_inverted_crossing = false;
    for (int r = sh.k - 1; r >= 0; --r) {
        for (int c = sh.lam[r] - 1; c >= 0; --c) {
            const int cell = sh.cell_index(r, c);
            const int p = t.south_enter_pipe[cell], q = t.east_enter_pipe[cell];
            auto key = std::minmax(p, q);
            const bool inverted = parity[key] & 1;
            const bool crossing = f.tiles[cell] == Tile::Cross;
            Stone s = crossing ? (inverted ? Stone::Black : Stone::White)
                               : (inverted ? Stone::BElbow : Stone::Plus);
            t.stones[cell] = s;
            if (s == Stone::BElbow) any_inverted_elbow = true;
            if (s == Stone::Black) any_inverted_crossing = true;
            if (crossing) parity[key] ^= 1;
            // At an uninverted cell the east entrant is the smaller pipe; at
            // an inverted cell the south entrant is.
            const int wexit = t.west_exit_pipe[cell], nexit = t.north_exit_pipe[cell];
            if (s == Stone::Plus || s == Stone::Black) {
                DEODHAR_REQUIRE(wexit > nexit, "uninverted-entry cell must have west pipe > north pipe");
            } else {
                DEODHAR_REQUIRE(wexit < nexit, "inverted-entry cell must have west pipe < north pipe");
            }
        }
    }
    t.is_go = !any_inverted_elbow;
    t.is_le = t.is_go && !any_inverted_crossing;

    // Diagram permutation: northwest border labels, north edges read east to
    // west and then west edges read top to bottom.
    std::vector<int> line;
    line.reserve(sh.n);
    for (int c = sh.width() - 1; c >= 0; --c) {
        DEODHAR_REQUIRE(t.north_labels[c] > 0, "unlabeled north edge");
        line.push_back(t.north_labels[c]);
    }
    for (int r = 0; r < sh.k; ++r) {
        DEODHAR_REQUIRE(t.west_labels[r] > 0, "unlabeled west edge");
        line.push_back(t.west_labels[r]);
    }
    t.pi = Perm(std::move(line));
    return t;
}

GoClass classify(const Filling& f) {
    Trace t = trace(f);
    if (!t.is_go) return GoClass::NotGo;
    return t.is_le ? GoClass::Le : GoClass::Go;
}

ReadingMap build_reading(const Shape& shape, ReadingOrder order) {
    const int m = shape.cells();
    ReadingMap map;
    map.label_of_cell.assign(m, 0);
    map.cell_of_label.assign(m, -1);
    if (order == ReadingOrder::RowMajor) {
        // Row-major cells in order get labels m, m-1, ..., 1.
        for (int i = 0; i < m; ++i) map.label_of_cell[i] = m - i;
    } else {
        int next = m;
        for (int c = 0; c < shape.width(); ++c)
            for (int r = 0; r < shape.col_height(c); ++r)
                map.label_of_cell[shape.cell_index(r, c)] = next--;
        DEODHAR_REQUIRE(next == 0, "column reading must label every cell");
    }
    for (int i = 0; i < m; ++i) map.cell_of_label[map.label_of_cell[i] - 1] = i;
    return map;
}

std::vector<int> reading_word(const Shape& shape, ReadingOrder order) {
    ReadingMap map = build_reading(shape, order);
    std::vector<int> word(shape.cells());
    for (int lbl = 1; lbl <= shape.cells(); ++lbl) {
        auto [r, c] = shape.cell_at(map.cell_of_label[lbl - 1]);
        word[lbl - 1] = s_index(shape, r, c);
    }
    return word;
}

Subexpression subexpression_word(const Filling& f, ReadingOrder order) {
    const Shape& sh = f.shape;
    ReadingMap map = build_reading(sh, order);
    Subexpression sub;
    sub.order = order;
    Perm prefix = Perm::identity(sh.n);
    bool ok_distinguished = true, ok_positive = true;
    for (int lbl = 1; lbl <= sh.cells(); ++lbl) {
        const int cell = map.cell_of_label[lbl - 1];
        auto [r, c] = sh.cell_at(cell);
        SubexprPosition pos;
        pos.cell = cell;
        pos.label = lbl;
        pos.letter = s_index(sh, r, c);
        pos.kept = f.tiles[cell] == Tile::Cross;
        Perm with = prefix.then(Perm::adjacent_transposition(sh.n, pos.letter));
        pos.length_up = with.length() > prefix.length();
        if (pos.kept) {
            if (!pos.length_up) ok_positive = false;
            prefix = with;
        } else {
            if (!pos.length_up) ok_distinguished = false;
        }
        pos.prefix = prefix;
        sub.positions.push_back(std::move(pos));
    }
    sub.value = prefix;
    sub.distinguished = ok_distinguished;
    sub.positive_distinguished = ok_distinguished && ok_positive;
    return sub;
}

JumpCoords jump_coords(const Trace& t) {
    JumpCoords jc;
    const int m = t.shape().cells();
    jc.sigma.resize(m);
    jc.sigma_dual.resize(m);
    for (int cell = 0; cell < m; ++cell) {
        jc.sigma[cell] = {t.west_exit_pipe[cell], t.north_exit_pipe[cell]};
        jc.sigma_dual[cell] = {t.north_exit_pipe[cell], t.west_exit_pipe[cell]};
    }
    return jc;
}

std::vector<CrossingPair> crossing_pairs(const Trace& t) {
    const Shape& sh = t.shape();
    // Collect, per unordered pipe pair, the crossing cells in southeast-to-
    // northwest order (rows bottom-up, right to left).
    std::map<std::pair<int, int>, std::vector<int>> crossings;
    for (int r = sh.k - 1; r >= 0; --r)
        for (int c = sh.lam[r] - 1; c >= 0; --c) {
            const int cell = sh.cell_index(r, c);
            if (!stone_is_crossing(t.stones[cell])) continue;
            auto key = std::minmax(t.south_enter_pipe[cell], t.east_enter_pipe[cell]);
            crossings[key].push_back(cell);
        }
    std::vector<CrossingPair> pairs;
    for (const auto& [pipes, cells] : crossings) {
        for (size_t i = 0; i < cells.size(); i += 2) {
            CrossingPair p;
            p.white_cell = cells[i];
            p.black_cell = i + 1 < cells.size() ? cells[i + 1] : -1;
            p.i = pipes.first;
            p.j = pipes.second;
            DEODHAR_REQUIRE(t.stones[p.white_cell] == Stone::White,
                            "odd crossings of a pipe pair must be White");
            if (p.black_cell >= 0)
                DEODHAR_REQUIRE(t.stones[p.black_cell] == Stone::Black,
                                "even crossings of a pipe pair must be Black");
            pairs.push_back(p);
        }
    }
    // Canonical order: by white cell's position southeast-to-northwest is
    // irrelevant downstream; sort by (i, j, white cell) for determinism.
    std::sort(pairs.begin(), pairs.end(), [](const CrossingPair& a, const CrossingPair& b) {
        return std::tie(a.i, a.j, a.white_cell) < std::tie(b.i, b.j, b.white_cell);
    });
    return pairs;
}

std::vector<Filling> enumerate_fillings(const Shape& shape, int guard_cells) {
    const int m = shape.cells();
    DEODHAR_REQUIRE(m <= guard_cells,
                    "refusing to enumerate " + std::to_string(m) + " cells (guard " +
                        std::to_string(guard_cells) + ")");
    std::vector<Filling> out;
    out.reserve(size_t(1) << m);
    for (uint32_t bits = 0; bits < (uint32_t(1) << m); ++bits) {
        std::vector<Tile> tiles(m, Tile::Elbow);
        for (int i = 0; i < m; ++i)
            if (bits >> i & 1) tiles[i] = Tile::Cross;
        out.push_back(Filling{shape, std::move(tiles)});
    }
    return out;
}

std::vector<Filling> enumerate_go_fillings(const Shape& shape, int guard_cells) {
    std::vector<Filling> out;
    for (Filling& f : enumerate_fillings(shape, guard_cells))
        if (trace(f).is_go) out.push_back(std::move(f));
    return out;
}

} // namespace deodhar
