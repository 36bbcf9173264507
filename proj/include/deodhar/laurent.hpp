#pragma once
#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deodhar/fp.hpp"
#include "deodhar/rational.hpp"
#include "deodhar/require.hpp"

namespace deodhar {

// ---------------------------------------------------------------------------
// Symbols.  A symbol is a (family, index) pair packed into an int32; the index
// is the reading label of the cell the parameter is attached to (0 for the
// lone census variable q).  Names are derived, never stored.
// ---------------------------------------------------------------------------
enum class Fam : int32_t {
    beta = 0,       // path / toggle weights            b<i>
    beta_star = 1,  // dual path weights                bs<i>
    alpha = 2,      // grid corner weights              al<i>
    tw_a = 3,       // network edge weights at + cells  a<i>
    tw_c = 4,       // network edge weights at * cells  c<i>
    gamma = 5,      // distortion parameters            g<i>
    q = 6,          // census variable                  q
};

using SymId = int32_t;

inline SymId sym(Fam f, int idx) {
    DEODHAR_REQUIRE(idx >= 0 && idx < (1 << 20), "symbol index out of range");
    return (static_cast<int32_t>(f) << 20) | idx;
}
inline Fam sym_fam(SymId s) { return static_cast<Fam>(s >> 20); }
inline int sym_idx(SymId s) { return s & ((1 << 20) - 1); }

inline std::string sym_name(SymId s) {
    static const char* prefix[] = {"b", "bs", "al", "a", "c", "g", "q"};
    Fam f = sym_fam(s);
    std::string p = prefix[static_cast<int>(f)];
    if (f == Fam::q) return p;
    return p + std::to_string(sym_idx(s));
}

// Monomial: sorted (symbol, exponent) pairs, exponents nonzero (may be negative).
using Mono = std::vector<std::pair<SymId, int32_t>>;

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            int32_t e = a[i].second + b[j].second;
            if (e != 0) r.emplace_back(a[i].first, e);
            ++i, ++j;
        }
    }
    return r;
}

inline Mono mono_inv(const Mono& a) {
    Mono r = a;
    for (auto& [s, e] : r) e = -e;
    return r;
}

// ---------------------------------------------------------------------------
// Sparse Laurent polynomial over Rat in the global symbols.  Terms live in a
// map keyed by monomial, which fixes a canonical order for printing and
// comparison.  The zero polynomial is the empty map.
// ---------------------------------------------------------------------------
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) {  // NOLINT: implicit constant embedding on purpose
        if (!c.is_zero()) terms_[Mono{}] = c;
    }
    Poly(long c) : Poly(Rat(c)) {}  // NOLINT

    static Poly var(SymId s, int32_t exp = 1, const Rat& c = Rat(1)) {
        Poly p;
        if (c.is_zero()) return p;
        Mono m;
        if (exp != 0) m.emplace_back(s, exp);
        p.terms_[m] = c;
        return p;
    }

    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rat constant_term() const {
        auto it = terms_.find(Mono{});
        return it == terms_.end() ? Rat(0) : it->second;
    }
    bool is_monomial() const { return terms_.size() == 1; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    // Arbitrary strict weak order (term-map lexicographic); used for canonical
    // sorting of polynomial collections, not for any mathematical meaning.
    friend bool operator<(const Poly& a, const Poly& b) {
        return std::lexicographical_compare(
            a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
            [](const auto& x, const auto& y) {
                if (x.first != y.first) return x.first < y.first;
                return x.second < y.second;
            });
    }

    // Exponent range of `s` across terms (terms not containing s count as 0).
    int32_t degree_in(SymId s) const {
        int32_t d = terms_.empty() ? 0 : INT32_MIN;
        for (const auto& [m, c] : terms_) d = std::max(d, exp_of(m, s));
        return terms_.empty() ? 0 : d;
    }
    int32_t min_degree_in(SymId s) const {
        int32_t d = terms_.empty() ? 0 : INT32_MAX;
        for (const auto& [m, c] : terms_) d = std::min(d, exp_of(m, s));
        return terms_.empty() ? 0 : d;
    }
    bool contains(SymId s) const {
        for (const auto& [m, c] : terms_)
            if (exp_of(m, s) != 0) return true;
        return false;
    }
    std::vector<SymId> symbols() const {
        std::vector<SymId> r;
        for (const auto& [m, c] : terms_)
            for (const auto& [s, e] : m) r.push_back(s);
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        return r;
    }

    // Sum of the terms whose exponent of `s` is exactly `e`, divided by s^e.
    Poly coeff_of(SymId s, int32_t e) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            if (exp_of(m, s) != e) continue;
            Mono stripped;
            for (const auto& p : m)
                if (p.first != s) stripped.push_back(p);
            r.add_term(stripped, c);
        }
        return r;
    }
    // Sum of the terms whose exponent of `s` is exactly `e`, with s kept.
    Poly part_of_degree(SymId s, int32_t e) const {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (exp_of(m, s) == e) r.add_term(m, c);
        return r;
    }

    // Substitute values for some symbols.  A symbol appearing with a negative
    // exponent can only be substituted by a monomial (so the inverse exists in
    // the Laurent ring); otherwise the substitution value may be any Poly.
    Poly subst(const std::map<SymId, Poly>& assign) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Poly t = Poly(c);
            Mono rest;
            for (const auto& [s, e] : m) {
                auto it = assign.find(s);
                if (it == assign.end()) {
                    rest.emplace_back(s, e);
                    continue;
                }
                t *= pow_poly(it->second, e);
            }
            Poly shell;
            shell.terms_[rest] = Rat(1);
            r += t * shell;
        }
        return r;
    }

    static Poly pow_poly(const Poly& b, int32_t e) {
        if (e < 0) return pow_poly(inv_poly(b), -e);
        Poly r(1), acc = b;
        uint32_t k = static_cast<uint32_t>(e);
        while (k > 0) {
            if (k & 1) r *= acc;
            acc *= acc;
            k >>= 1;
        }
        return r;
    }

    static Poly inv_poly(const Poly& p) {
        DEODHAR_REQUIRE(p.terms_.size() == 1, "inverse requires a single-term Laurent monomial");
        const auto& [m, c] = *p.terms_.begin();
        Poly r;
        r.terms_[mono_inv(m)] = inv(c);
        return r;
    }

    // Evaluate into a field type T given a symbol assignment.  `proto` supplies
    // the field context (e.g. the modulus for Fp).
    template <class T, class F>
    T eval(F&& value_of_symbol, const T& proto) const {
        T acc = zero_like(proto);
        for (const auto& [m, c] : terms_) {
            T t = rat_to(c, proto);
            for (const auto& [s, e] : m) {
                T v = value_of_symbol(s);
                T f = e >= 0 ? v : inv(v);
                int32_t n = e >= 0 ? e : -e;
                for (int32_t i = 0; i < n; ++i) t *= f;
            }
            acc += t;
        }
        return acc;
    }

    std::string str() const;

private:
    static int32_t exp_of(const Mono& m, SymId s) {
        for (const auto& [t, e] : m)
            if (t == s) return e;
        return 0;
    }
    void add_term(const Mono& m, const Rat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Mono, Rat> terms_;
};

inline Fp rat_to(const Rat& c, const Fp& proto) {
    uint64_t p = proto.modulus();
    const mpq_class& q = c.raw();
    uint64_t num = mpz_fdiv_ui(mpz_class(q.get_num()).get_mpz_t(), p);
    uint64_t den = mpz_fdiv_ui(mpz_class(q.get_den()).get_mpz_t(), p);
    DEODHAR_REQUIRE(den != 0, "coefficient denominator divisible by field modulus");
    return Fp(num, p) * inv(Fp(den, p));
}
inline Rat rat_to(const Rat& c, const Rat&) { return c; }

inline Poly inv(const Poly& p) { return Poly::inv_poly(p); }
inline Poly zero_like(const Poly&) { return Poly(); }
inline Poly one_like(const Poly&) { return Poly(1); }
inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline Poly pow(const Poly& p, long e) { return Poly::pow_poly(p, static_cast<int32_t>(e)); }

inline std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        first = false;
        std::string monos;
        for (const auto& [s, e] : m) {
            if (!monos.empty()) monos += "*";
            monos += sym_name(s);
            if (e != 1) monos += "^" + std::to_string(e);
        }
        if (monos.empty()) {
            out += a.str();
        } else {
            if (!a.is_one()) out += a.str() + "*";
            out += monos;
        }
    }
    return out;
}

} // namespace deodhar
