#pragma once
#include <string>
#include <vector>

#include "deodhar/perm.hpp"

namespace deodhar {

// Young-diagram shape lambda inside the k x (n-k) box, rows weakly decreasing,
// indexing the Schubert cell of the Grassmannian Gr(k,n).  Rows and columns of
// cells are 0-based; boundary labels are 1-based.
struct Shape {
    int k = 0;
    int n = 0;
    std::vector<int> lam;  // size k, weakly decreasing, entries in [0, n-k]

    int width() const { return n - k; }
    int cells() const;
    bool cell_exists(int r, int c) const {
        return r >= 0 && r < k && c >= 0 && c < lam[r];
    }
    int col_height(int c) const;  // number of rows r with lam[r] > c
    // Row-major index of cell (r,c) among existing cells.
    int cell_index(int r, int c) const;
    std::pair<int, int> cell_at(int index) const;  // inverse of cell_index

    friend bool operator==(const Shape& a, const Shape& b) {
        return a.k == b.k && a.n == b.n && a.lam == b.lam;
    }
    friend bool operator!=(const Shape& a, const Shape& b) { return !(a == b); }
    std::string str() const;  // "(3,3,3) in Gr(3,6)"
};

Shape make_shape(int n, int k, std::vector<int> lam);

// One edge of the diagram's border.  Southeast border edges carry the labels
// 1..n assigned along the walk from the northeast corner of the box to its
// southwest corner; the same geometric edges bound empty rows/columns on the
// northwest side, in which case the edge is `trivial` and its pipe crosses no
// cell.  A vertical edge sits east of row `row` at column coordinate `col`
// (== lam[row]); a horizontal edge is the south edge of cell (row-1, col)
// (row == 0 means the north boundary of an empty column `col`).
struct BorderEdge {
    int label = 0;
    bool vertical = false;
    int row = 0;
    int col = 0;
    bool trivial = false;
};

// The southeast border edges in label order 1..n.
std::vector<BorderEdge> se_border(const Shape& s);

// Column set I_lambda in {1..n} (ascending): the labels of the vertical
// southeast border edges.
std::vector<int> subset_from_shape(const Shape& s);

// Inverse bijection: the shape whose vertical border labels are I (ascending,
// subset of {1..n}); k = |I|.
Shape shape_from_subset(int n, const std::vector<int>& I);

// Grassmannian permutation w_lambda: one-line [complement of I ascending, then
// I ascending] — the permutation of the fully crossed filling of lambda.
Perm w_lambda(const Shape& s);

// All shapes fitting in the k x (n-k) box (every partition, including empty
// rows), in lexicographically decreasing order of lam.
std::vector<Shape> all_shapes_in_box(int n, int k);

// All shapes of Gr(k,n) for any k with at most `max_cells` cells.
std::vector<Shape> all_shapes_up_to_cells(int n, int max_cells);

} // namespace deodhar
