#include "deodhar/perm.hpp"

#include <algorithm>
#include <numeric>

#include "deodhar/require.hpp"

namespace deodhar {

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
        DEODHAR_REQUIRE(v >= 1 && v <= static_cast<int>(img_.size()), "one-line value out of range");
        DEODHAR_REQUIRE(!seen[v], "repeated value in one-line notation");
        seen[v] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
}

Perm Perm::adjacent_transposition(int n, int i) {
    DEODHAR_REQUIRE(i >= 1 && i < n, "adjacent transposition index out of range");
    Perm p = identity(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

int Perm::operator()(int x) const {
    DEODHAR_REQUIRE(x >= 1 && x <= n(), "permutation argument out of range");
    return img_[x - 1];
}

Perm Perm::then(const Perm& next) const {
    DEODHAR_REQUIRE(n() == next.n(), "composing permutations of different sizes");
    std::vector<int> v(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) v[i] = next.img_[img_[i] - 1];
    return Perm(std::move(v));
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) v[img_[i] - 1] = static_cast<int>(i) + 1;
    return Perm(std::move(v));
}

long Perm::length() const {
    long inv = 0;
    for (size_t i = 0; i < img_.size(); ++i)
        for (size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

int Perm::first_descent() const {
    for (size_t i = 0; i + 1 < img_.size(); ++i)
        if (img_[i] > img_[i + 1]) return static_cast<int>(i) + 1;
    return 0;
}

std::string Perm::str() const {
    std::string s = "[";
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(img_[i]);
    }
    return s + "]";
}

Perm eval_word(int n, const std::vector<int>& word) {
    // The word is a group product s_{i_1} s_{i_2} ... s_{i_m} under standard
    // composition: the leftmost letter is the outermost map, so appending a
    // letter multiplies on the right (it acts first on the argument).
    Perm w = Perm::identity(n);
    for (int i : word) w = Perm::adjacent_transposition(n, i).then(w);
    return w;
}

} // namespace deodhar
