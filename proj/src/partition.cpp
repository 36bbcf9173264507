#include "deodhar/partition.hpp"

#include <algorithm>
#include <numeric>

#include "deodhar/require.hpp"

namespace deodhar {

int Shape::cells() const { return std::accumulate(lam.begin(), lam.end(), 0); }

int Shape::col_height(int c) const {
    int h = 0;
    while (h < k && lam[h] > c) ++h;
    return h;
}

int Shape::cell_index(int r, int c) const {
    DEODHAR_REQUIRE(cell_exists(r, c), "cell index of a nonexistent cell");
    int idx = 0;
    for (int i = 0; i < r; ++i) idx += lam[i];
    return idx + c;
}

std::pair<int, int> Shape::cell_at(int index) const {
    DEODHAR_REQUIRE(index >= 0 && index < cells(), "cell index out of range");
    int r = 0;
    while (index >= lam[r]) index -= lam[r], ++r;
    return {r, index};
}

std::string Shape::str() const {
    std::string s = "(";
    for (int i = 0; i < k; ++i) {
        if (i) s += ",";
        s += std::to_string(lam[i]);
    }
    return s + ") in Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

Shape make_shape(int n, int k, std::vector<int> lam) {
    DEODHAR_REQUIRE(n >= 1 && k >= 0 && k <= n, "shape needs 0 <= k <= n");
    DEODHAR_REQUIRE(static_cast<int>(lam.size()) == k, "shape needs exactly k rows");
    for (int i = 0; i < k; ++i) {
        DEODHAR_REQUIRE(lam[i] >= 0 && lam[i] <= n - k, "row length outside the k x (n-k) box");
        if (i) DEODHAR_REQUIRE(lam[i] <= lam[i - 1], "row lengths must weakly decrease");
    }
    return Shape{k, n, std::move(lam)};
}

std::vector<BorderEdge> se_border(const Shape& s) {
    std::vector<BorderEdge> edges;
    edges.reserve(s.n);
    int r = 0, c = s.width();
    int label = 1;
    // Walk from the box's northeast corner to its southwest corner, hugging
    // the southeast boundary of lambda: a down step where the boundary is
    // vertical, a west step where it is horizontal.
    while (r < s.k || c > 0) {
        if (r < s.k && c == s.lam[r]) {
            edges.push_back(BorderEdge{label++, true, r, c, s.lam[r] == 0});
            ++r;
        } else {
            DEODHAR_REQUIRE(c > 0, "border walk ran past the southwest corner");
            --c;
            edges.push_back(BorderEdge{label++, false, r, c, r == 0});
        }
    }
    DEODHAR_REQUIRE(label == s.n + 1, "border walk must produce exactly n edges");
    return edges;
}

std::vector<int> subset_from_shape(const Shape& s) {
    std::vector<int> I;
    for (const auto& e : se_border(s))
        if (e.vertical) I.push_back(e.label);
    DEODHAR_REQUIRE(static_cast<int>(I.size()) == s.k, "I_lambda must have k elements");
    return I;
}

Shape shape_from_subset(int n, const std::vector<int>& I) {
    int k = static_cast<int>(I.size());
    std::vector<int> sorted = I;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < k; ++i) {
        DEODHAR_REQUIRE(sorted[i] >= 1 && sorted[i] <= n, "subset element out of range");
        if (i) DEODHAR_REQUIRE(sorted[i] != sorted[i - 1], "subset has repeated elements");
    }
    std::vector<int> lam(k);
    // The r-th vertical edge (0-based) has label r + (n-k-lam_r) + 1.
    for (int r = 0; r < k; ++r) lam[r] = n - k + r + 1 - sorted[r];
    Shape s = make_shape(n, k, std::move(lam));
    DEODHAR_REQUIRE(subset_from_shape(s) == sorted, "subset/shape bijection must round-trip");
    return s;
}

Perm w_lambda(const Shape& s) {
    std::vector<int> I = subset_from_shape(s);
    std::vector<bool> in_I(s.n + 1, false);
    for (int v : I) in_I[v] = true;
    std::vector<int> line;
    for (int v = 1; v <= s.n; ++v)
        if (!in_I[v]) line.push_back(v);
    for (int v : I) line.push_back(v);
    return Perm(std::move(line));
}

std::vector<Shape> all_shapes_in_box(int n, int k) {
    std::vector<Shape> out;
    std::vector<int> lam(k, 0);
    auto rec = [&](auto&& self, int row, int maxlen) -> void {
        if (row == k) {
            out.push_back(make_shape(n, k, lam));
            return;
        }
        for (int len = maxlen; len >= 0; --len) {
            lam[row] = len;
            self(self, row + 1, len);
        }
    };
    if (k == 0) {
        out.push_back(make_shape(n, 0, {}));
        return out;
    }
    rec(rec, 0, n - k);
    return out;
}

std::vector<Shape> all_shapes_up_to_cells(int n, int max_cells) {
    std::vector<Shape> out;
    for (int k = 1; k < n; ++k)
        for (const Shape& s : all_shapes_in_box(n, k))
            if (s.cells() <= max_cells) out.push_back(s);
    return out;
}

} // namespace deodhar
