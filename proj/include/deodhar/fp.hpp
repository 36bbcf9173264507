#pragma once
#include <cstdint>
#include <string>

#include "deodhar/require.hpp"

namespace deodhar {

// Element of a prime field F_p for a word-size prime p.  Every element carries
// its modulus so that generic code can ask for a zero or one "like" a given
// element; mixing moduli is an invariant violation.  Products go through
// 128-bit intermediates, so any p < 2^63 is safe.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(uint64_t value, uint64_t p) : v_(value % p), p_(p) {
        DEODHAR_REQUIRE(p >= 2, "field modulus must be at least 2");
    }
    static Fp from_int(long long value, uint64_t p) {
        long long r = value % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<uint64_t>(r), p);
    }

    uint64_t value() const { return v_; }
    uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1 % p_; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(const Fp& o) {
        check(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check(o);
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = static_cast<uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_);
        return *this;
    }
    Fp& operator/=(const Fp& o);

    friend Fp operator+(Fp a, const Fp& b) { a += b; return a; }
    friend Fp operator-(Fp a, const Fp& b) { a -= b; return a; }
    friend Fp operator*(Fp a, const Fp& b) { a *= b; return a; }
    friend Fp operator/(Fp a, const Fp& b) { a /= b; return a; }
    friend bool operator==(const Fp& a, const Fp& b) {
        return a.v_ == b.v_ && a.p_ == b.p_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    void check(const Fp& o) const {
        DEODHAR_REQUIRE(p_ == o.p_, "mixed field moduli " + std::to_string(p_) + " and " +
                                        std::to_string(o.p_));
    }
    uint64_t v_;
    uint64_t p_;
};

inline Fp pow(Fp a, uint64_t e) {
    Fp r(1, a.modulus());
    while (e > 0) {
        if (e & 1) r *= a;
        a *= a;
        e >>= 1;
    }
    return r;
}

inline Fp inv(const Fp& a) {
    DEODHAR_REQUIRE(!a.is_zero(), "inverse of zero in F_" + std::to_string(a.modulus()));
    // p prime: a^(p-2) = a^(-1)
    return pow(a, a.modulus() - 2);
}

inline Fp& Fp::operator/=(const Fp& o) { return *this *= inv(o); }

inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }
inline bool is_zero(const Fp& a) { return a.is_zero(); }

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace deodhar
