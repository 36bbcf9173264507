#pragma once
#include <string>
#include <vector>

namespace deodhar {

// Permutation of {1,..,n} in one-line notation.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> one_line);
    static Perm identity(int n);
    // Adjacent transposition s_i swapping i and i+1 (1 <= i <= n-1).
    static Perm adjacent_transposition(int n, int i);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const;  // 1-based
    const std::vector<int>& one_line() const { return img_; }

    // Composition "apply *this first, then next": result(x) = next((*this)(x)).
    Perm then(const Perm& next) const;
    Perm inverse() const;
    long length() const;  // number of inversions
    bool is_identity() const;
    // Smallest position i with w(i) > w(i+1); 0 if none.
    int first_descent() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    std::string str() const;  // "[2,4,1,3]"

private:
    std::vector<int> img_;
};

// Evaluate the word s_{i_1} s_{i_2} ... s_{i_m} left to right: the leftmost
// letter acts first, so the result maps x to s_{i_m}(... s_{i_1}(x) ...).
Perm eval_word(int n, const std::vector<int>& word);

} // namespace deodhar
