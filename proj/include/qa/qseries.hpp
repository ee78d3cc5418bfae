#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qa {

using Rat = mpq_class;

inline Rat frac(long a, long b) {
    Rat r(a, b);
    r.canonicalize();
    return r;
}

// Laurent polynomial in q_s with rational coefficients.
// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rat& c); // NOLINT: constant polynomial
    LaurentPoly(long c) : LaurentPoly(Rat(c)) {}

    static LaurentPoly monomial(int exp, const Rat& c = 1);
    // [n] in the variable q_s^e
    static LaurentPoly q_int(int n, int e);

    bool is_zero() const { return c_.empty(); }
    int top_degree() const;    // requires nonzero
    int bottom_degree() const; // requires nonzero
    Rat coeff(int exp) const;
    Rat leading() const { return c_.rbegin()->second; }
    Rat trailing() const { return c_.begin()->second; }
    const std::map<int, Rat>& terms() const { return c_; }

    LaurentPoly shifted(int k) const;
    LaurentPoly bar() const;
    bool is_bar_invariant() const { return bar() == *this; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rat& r);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
    friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

    // Exact division; returns nullopt if b does not divide a.
    static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);
    // Monic-free gcd normalized to bottom degree 0 and positive leading coefficient.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
    // Exact square root up to sign, if it exists.
    std::optional<LaurentPoly> sqrt() const;

    std::string str() const;
    static LaurentPoly parse(std::string_view s);

private:
    std::map<int, Rat> c_;
    void add_term(int e, const Rat& r);
};

// Reduced fraction of Laurent polynomials in q_s.
// Denominator has bottom degree 0 and positive leading coefficient.
class RationalFunc {
public:
    RationalFunc() : num_(), den_(1) {}
    RationalFunc(const LaurentPoly& p) : num_(p), den_(1) {} // NOLINT
    RationalFunc(const Rat& c) : num_(c), den_(1) {}         // NOLINT
    RationalFunc(long c) : num_(c), den_(1) {}               // NOLINT
    RationalFunc(const LaurentPoly& n, const LaurentPoly& d);

    static RationalFunc q_pow(int e) { return LaurentPoly::monomial(e); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.terms().size() == 1; }
    // Valid only when is_laurent().
    LaurentPoly as_laurent() const;

    RationalFunc bar() const;
    RationalFunc inverse() const;

    RationalFunc& operator+=(const RationalFunc& o);
    RationalFunc& operator-=(const RationalFunc& o);
    RationalFunc& operator*=(const RationalFunc& o);
    RationalFunc& operator/=(const RationalFunc& o);
    friend RationalFunc operator+(RationalFunc a, const RationalFunc& b) { return a += b; }
    friend RationalFunc operator-(RationalFunc a, const RationalFunc& b) { return a -= b; }
    friend RationalFunc operator*(RationalFunc a, const RationalFunc& b) { return a *= b; }
    friend RationalFunc operator/(RationalFunc a, const RationalFunc& b) { return a /= b; }
    RationalFunc operator-() const;

    friend bool operator==(const RationalFunc&, const RationalFunc&) = default;
    friend std::strong_ordering operator<=>(const RationalFunc& a, const RationalFunc& b);

    std::string str() const;
    static RationalFunc parse(std::string_view s);

private:
    LaurentPoly num_, den_;
    void normalize();
};

// nullopt stands for plus infinity (the zero function).
std::optional<int> ord_at_infinity(const RationalFunc& f);
// f in A_infinity
bool regular_at_infinity(const RationalFunc& f);
// f in q_s^{-1} A_infinity
bool vanishes_at_infinity(const RationalFunc& f);
// f in q_s^{-1} Z[q_s^{-1}]
bool in_strict_negative_integral(const RationalFunc& f);

// q-numbers in the variable q_s^e (e = exponent of q_i in q_s).
LaurentPoly q_factorial(int n, int e);
LaurentPoly q_binomial_exp(int n, int r, int e);

} // namespace qa
