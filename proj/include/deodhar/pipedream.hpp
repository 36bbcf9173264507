#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "deodhar/partition.hpp"
#include "deodhar/perm.hpp"

namespace deodhar {

// A cell holds either an elbow tile (two quarter arcs: south-west and
// east-north) or a crossing tile (two straight strands: south-north and
// east-west).  Pipes enter each cell from the south or east and leave north
// or west.
enum class Tile : uint8_t { Elbow, Cross };

// Configuration of a cell once pipes are traced.  A cell's two pipes are
// "inverted" if they have crossed an odd number of times strictly southeast of
// the cell.
//   Plus      elbow,    not inverted  (rendered '+')
//   BElbow    elbow,    inverted      (forbidden in a Go-diagram)
//   White     crossing, not inverted  (rendered 'o')
//   Black     crossing, inverted      (rendered '*')
enum class Stone : uint8_t { Plus, BElbow, White, Black };

inline bool stone_is_crossing(Stone s) { return s == Stone::White || s == Stone::Black; }
char stone_char(Stone s);
Stone stone_from_char(char c);

// A tile assignment on a shape.
struct Filling {
    Shape shape;
    std::vector<Tile> tiles;  // row-major over existing cells

    Tile tile(int r, int c) const { return tiles[shape.cell_index(r, c)]; }
    void set_tile(int r, int c, Tile t) { tiles[shape.cell_index(r, c)] = t; }
};

Filling make_filling(Shape shape, std::vector<Tile> tiles);
Filling fully_crossed(const Shape& shape);
Filling fully_elbowed(const Shape& shape);

// One step of a pipe's course, southeast to northwest: the cell and the side
// through which the pipe enters it (S or E).
struct PipeStep {
    int r, c;
    bool enter_south;  // false: enters through the east edge
};

// Full combinatorial trace of a filling: pipe routes, boundary labels, the
// diagram permutation, and the stone (configuration) of every cell.
struct Trace {
    Filling filling;
    std::vector<Stone> stones;         // per cell, row-major
    std::vector<int> west_labels;      // per row: pipe on the row's west edge
    std::vector<int> north_labels;     // per column: pipe on the column's north edge
    std::vector<int> west_exit_pipe;   // per cell: pipe leaving through its west edge
    std::vector<int> north_exit_pipe;  // per cell: pipe leaving through its north edge
    std::vector<int> east_enter_pipe;  // per cell: pipe entering through its east edge
    std::vector<int> south_enter_pipe; // per cell: pipe entering through its south edge
    std::vector<std::vector<PipeStep>> routes;  // index pipe-1; empty for trivial pipes
    Perm pi;
    bool is_go = false;  // no inverted elbows
    bool is_le = false;  // is_go and no inverted crossings

    const Shape& shape() const { return filling.shape; }
    Stone stone(int r, int c) const { return stones[filling.shape.cell_index(r, c)]; }
    int count_stone(Stone s) const;
};

Trace trace(const Filling& f);

enum class GoClass : uint8_t { NotGo, Go, Le };
GoClass classify(const Filling& f);

// ---------------------------------------------------------------------------
// Reading orders.  Both assign the labels m..1 so that labels increase toward
// the southeast; cells are read in decreasing label order along rows
// (row-major) or columns (column-major).
// ---------------------------------------------------------------------------
enum class ReadingOrder : uint8_t { RowMajor, ColMajor };

struct ReadingMap {
    std::vector<int> label_of_cell;  // per row-major cell index, labels 1..m
    std::vector<int> cell_of_label;  // index label-1 -> row-major cell index
};
ReadingMap build_reading(const Shape& shape, ReadingOrder order);

// Index of the adjacent transposition attached to cell (r,c).
inline int s_index(const Shape& shape, int r, int c) { return shape.width() - c + r; }

// The word of w_lambda read off the cells in increasing reading label; the
// letter at word position j (1-based) is the s-index of the cell with reading
// label j.  Applied left to right it evaluates to w_lambda.
std::vector<int> reading_word(const Shape& shape, ReadingOrder order);

// ---------------------------------------------------------------------------
// Subexpressions.  A filling selects the crossing cells as the kept letters of
// the reading word of w_lambda; partial products run in increasing reading
// label.  The subexpression is distinguished iff skipping a letter is only
// allowed when keeping it would increase length, and positive distinguished
// iff in addition every kept letter increases length.
// ---------------------------------------------------------------------------
struct SubexprPosition {
    int cell;          // row-major cell index
    int label;         // reading label == 1-based word position
    int letter;        // s-index
    bool kept;         // cell is a crossing
    bool length_up;    // multiplying the previous prefix by the letter raises length
    Perm prefix;       // product of kept letters at positions <= label
};

struct Subexpression {
    ReadingOrder order;
    std::vector<SubexprPosition> positions;  // in increasing label order
    Perm value;                              // full product of kept letters
    bool distinguished = false;
    bool positive_distinguished = false;
};

Subexpression subexpression_word(const Filling& f, ReadingOrder order);

// ---------------------------------------------------------------------------
// Jump coordinates: sigma_D(b) = (west exit pipe, north exit pipe) of cell b,
// and the reversed dual sigma*_D(b).
// ---------------------------------------------------------------------------
struct JumpCoords {
    std::vector<std::pair<int, int>> sigma;       // per cell (i,j)
    std::vector<std::pair<int, int>> sigma_dual;  // per cell (j,i)
};
JumpCoords jump_coords(const Trace& t);

// ---------------------------------------------------------------------------
// Crossing pairs: each White cell where pipes i<j cross, matched with the
// next cell northwest along both pipes where they cross again (necessarily a
// Black cell), if any.
// ---------------------------------------------------------------------------
struct CrossingPair {
    int white_cell;  // row-major index
    int black_cell;  // -1 if the pipes never re-cross
    int i, j;        // the two pipes, i < j
};
std::vector<CrossingPair> crossing_pairs(const Trace& t);

// All 2^cells tile fillings of the shape (guarded); optionally only those
// passing a classification filter.
std::vector<Filling> enumerate_fillings(const Shape& shape, int guard_cells = 20);
std::vector<Filling> enumerate_go_fillings(const Shape& shape, int guard_cells = 20);

} // namespace deodhar
