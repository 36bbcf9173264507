#pragma once
#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "deodhar/require.hpp"

namespace deodhar {

// Dense matrix over an exact scalar T (Rat, Fp, Poly).  T must provide
// +, -, *, unary -, ==, and the free functions zero_like / one_like / is_zero.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, const T& fill) : rows_(rows), cols_(cols), d_(size_t(rows) * cols, fill) {}

    static Mat identity(int n, const T& proto) {
        Mat m(n, n, zero_like(proto));
        for (int i = 0; i < n; ++i) m.at(i, i) = one_like(proto);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int r, int c) {
        DEODHAR_REQUIRE(r >= 0 && r < rows_ && c >= 0 && c < cols_, "matrix index out of range");
        return d_[size_t(r) * cols_ + c];
    }
    const T& at(int r, int c) const {
        DEODHAR_REQUIRE(r >= 0 && r < rows_ && c >= 0 && c < cols_, "matrix index out of range");
        return d_[size_t(r) * cols_ + c];
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        DEODHAR_REQUIRE(a.cols_ == b.rows_, "matrix product shape mismatch");
        DEODHAR_REQUIRE(a.rows_ > 0 && b.cols_ > 0 && a.cols_ > 0, "matrix product needs nonempty operands");
        Mat r(a.rows_, b.cols_, zero_like(a.d_[0]));
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat transpose() const {
        DEODHAR_REQUIRE(rows_ > 0 && cols_ > 0, "transpose of empty matrix");
        Mat r(cols_, rows_, zero_like(d_[0]));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Mat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        DEODHAR_REQUIRE(!rows.empty() && !cols.empty(), "empty submatrix selection");
        Mat r(int(rows.size()), int(cols.size()), zero_like(d_[0]));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) r.at(int(i), int(j)) = at(rows[i], cols[j]);
        return r;
    }

private:
    int rows_, cols_;
    std::vector<T> d_;
};

// Minor of the rows `rowIdx` and columns `colIdx` (equal sizes, ascending not
// required; the determinant respects the given orderings).
// Laplace expansion along the first remaining row, memoized on the set of
// remaining columns; the memo can be shared across calls with equal rowIdx so
// that all k-subsets of columns (the Plücker vector) reuse subminors.
template <class T>
class MinorEngine {
public:
    MinorEngine(const Mat<T>& m, std::vector<int> row_idx)
        : m_(m), rows_(std::move(row_idx)) {
        DEODHAR_REQUIRE(!rows_.empty(), "minor of zero rows");
        DEODHAR_REQUIRE(rows_.size() <= 60, "minor rank too large for bitmask memo");
    }

    // colIdx.size() must equal rows_.size().
    T det(const std::vector<int>& col_idx) {
        DEODHAR_REQUIRE(col_idx.size() == rows_.size(), "minor must be square");
        uint64_t mask = 0;
        for (int c : col_idx) {
            DEODHAR_REQUIRE(c >= 0 && c < m_.cols(), "column index out of range");
            DEODHAR_REQUIRE(!(mask >> c & 1), "repeated column in minor");
            mask |= uint64_t(1) << c;
        }
        // Sign of the permutation sorting col_idx ascending.
        int sign = 1;
        std::vector<int> v = col_idx;
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j)
                if (v[i] > v[j]) {
                    std::swap(v[i], v[j]);
                    sign = -sign;
                }
        T base = go(0, mask);
        return sign > 0 ? base : -base;
    }

private:
    // Determinant of rows rows_[r..] against the ascending columns of `mask`.
    T go(size_t r, uint64_t mask) {
        if (r + 1 == rows_.size()) {
            int c = std::countr_zero(mask);
            return m_.at(rows_[r], c);
        }
        auto key = std::make_pair(r, mask);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        T acc = zero_like(m_.at(0, 0));
        uint64_t rest = mask;
        int pos = 0;
        while (rest) {
            int c = std::countr_zero(rest);
            rest &= rest - 1;
            const T& entry = m_.at(rows_[r], c);
            if (!is_zero(entry)) {
                T sub = go(r + 1, mask & ~(uint64_t(1) << c));
                T term = entry * sub;
                if (pos % 2 == 1) term = -term;
                acc += term;
            }
            ++pos;
        }
        memo_.emplace(key, acc);
        return acc;
    }

    const Mat<T>& m_;
    std::vector<int> rows_;
    std::map<std::pair<size_t, uint64_t>, T> memo_;
};

template <class T>
T det(const Mat<T>& m) {
    DEODHAR_REQUIRE(m.rows() == m.cols() && m.rows() > 0, "determinant needs a nonempty square matrix");
    std::vector<int> rows(m.rows());
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<int> cols = rows;
    MinorEngine<T> eng(m, rows);
    return eng.det(cols);
}

template <class T>
T minor_det(const Mat<T>& m, const std::vector<int>& row_idx, const std::vector<int>& col_idx) {
    MinorEngine<T> eng(m, row_idx);
    return eng.det(col_idx);
}

// All k-subsets of {0,..,n-1} in lexicographic order of the sorted index tuple.
inline std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    DEODHAR_REQUIRE(k >= 0 && k <= n, "subset size out of range");
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    if (k == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

// Maximal minors of a k x n matrix (k <= n), one per k-subset of columns, in
// lexicographic subset order.  Shares the subminor memo across subsets.
template <class T>
std::vector<std::pair<std::vector<int>, T>> plucker_vector(const Mat<T>& m) {
    int k = m.rows(), n = m.cols();
    DEODHAR_REQUIRE(k >= 1 && k <= n, "Plücker vector needs 1 <= k <= n");
    std::vector<int> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    MinorEngine<T> eng(m, rows);
    std::vector<std::pair<std::vector<int>, T>> out;
    for (const auto& cols : subsets_lex(n, k)) out.emplace_back(cols, eng.det(cols));
    return out;
}

// Independent O(n!) determinant for cross-checking the Laplace engine in tests.
template <class T>
T det_perm_expansion(const Mat<T>& m) {
    DEODHAR_REQUIRE(m.rows() == m.cols() && m.rows() > 0, "determinant needs a nonempty square matrix");
    int n = m.rows();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T acc = zero_like(m.at(0, 0));
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        T term = one_like(m.at(0, 0));
        for (int i = 0; i < n; ++i) term *= m.at(i, perm[i]);
        acc += sign > 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace deodhar
