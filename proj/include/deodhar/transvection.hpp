#pragma once
#include "deodhar/matrix.hpp"
#include "deodhar/require.hpp"

namespace deodhar {

// Transvection x_{(i,j)}(t) = Id + t E_{ij}, 1-based indices, i != j.
template <class T>
Mat<T> transvection(int n, int i, int j, const T& t) {
    DEODHAR_REQUIRE(i >= 1 && i <= n && j >= 1 && j <= n && i != j, "bad transvection indices");
    Mat<T> m = Mat<T>::identity(n, t);
    m.at(i - 1, j - 1) = t;
    return m;
}

// w_{(i,j)}(t) = x_{(i,j)}(t) x_{(j,i)}(-1/t) x_{(i,j)}(t); a signed permutation
// on the (i,j) plane scaled by t.  Requires t invertible.
template <class T>
Mat<T> weyl_factor(int n, int i, int j, const T& t) {
    T mt = -inv(t);
    return transvection(n, i, j, t) * transvection(n, j, i, mt) * transvection(n, i, j, t);
}

} // namespace deodhar
