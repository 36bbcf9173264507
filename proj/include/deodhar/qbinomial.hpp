#pragma once
#include "deodhar/laurent.hpp"
#include "deodhar/require.hpp"

namespace deodhar {

// Gaussian binomial coefficient [n choose k]_q as a polynomial in the census
// variable q, via the Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
inline Poly gaussian_binomial(int n, int k) {
    DEODHAR_REQUIRE(n >= 0, "negative n in Gaussian binomial");
    if (k < 0 || k > n) return Poly(0);
    std::vector<std::vector<Poly>> tab(n + 1, std::vector<Poly>(k + 1, Poly(0)));
    for (int i = 0; i <= n; ++i) tab[i][0] = Poly(1);
    SymId qs = sym(Fam::q, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            tab[i][j] = tab[i - 1][j - 1] + Poly::var(qs, j) * tab[i - 1][j];
    return tab[n][k];
}

} // namespace deodhar
