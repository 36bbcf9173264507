#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "deodhar/require.hpp"

namespace deodhar {

// Arbitrary-precision rational, a thin value wrapper around GMP's mpq_class.
// The wrapper materializes every arithmetic result (GMP expression templates
// do not survive `auto`/template deduction) and keeps values canonical.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors integer literals
    Rat(long num, long den) : v_(num, den) {
        DEODHAR_REQUIRE(den != 0, "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const std::string& s) : v_(s) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        DEODHAR_REQUIRE(!o.is_zero(), "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    // "7", "-3/4"
    std::string str() const {
        mpq_class c = v_;
        c.canonicalize();
        return c.get_str();
    }

private:
    mpq_class v_;
};

inline Rat inv(const Rat& a) {
    DEODHAR_REQUIRE(!a.is_zero(), "inverse of zero rational");
    return Rat(1) / a;
}
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool is_zero(const Rat& a) { return a.is_zero(); }

inline Rat pow(const Rat& a, long e) {
    if (e < 0) return pow(inv(a), -e);
    Rat r(1), b = a;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace deodhar
