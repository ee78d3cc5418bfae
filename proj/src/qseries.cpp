#include "qa/qseries.hpp"

#include <cctype>
#include <stdexcept>

namespace qa {

LaurentPoly::LaurentPoly(const Rat& c) { add_term(0, c); }

LaurentPoly LaurentPoly::monomial(int exp, const Rat& c) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
}

LaurentPoly LaurentPoly::q_int(int n, int e) {
    LaurentPoly p;
    if (n == 0) return p;
    int m = n < 0 ? -n : n;
    for (int k = 0; k < m; ++k) p.add_term(e * (m - 1 - 2 * k), 1);
    return n < 0 ? -p : p;
}

void LaurentPoly::add_term(int e, const Rat& r0) {
    if (r0 == 0) return;
    Rat r = r0;
    r.canonicalize();
    auto [it, fresh] = c_.try_emplace(e, r);
    if (!fresh) {
        it->second += r;
        if (it->second == 0) c_.erase(it);
    }
}

int LaurentPoly::top_degree() const {
    if (c_.empty()) throw std::logic_error("degree of zero polynomial");
    return c_.rbegin()->first;
}

int LaurentPoly::bottom_degree() const {
    if (c_.empty()) throw std::logic_error("degree of zero polynomial");
    return c_.begin()->first;
}

Rat LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rat(0) : it->second;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p;
    for (const auto& [e, r] : c_) p.c_.emplace(e + k, r);
    return p;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly p;
    for (const auto& [e, r] : c_) p.c_.emplace(-e, r);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, r] : o.c_) add_term(e, r);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, r] : o.c_) add_term(e, -r);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly p;
    for (const auto& [e1, r1] : c_)
        for (const auto& [e2, r2] : o.c_) p.add_term(e1 + e2, r1 * r2);
    *this = std::move(p);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& r) {
    if (r == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [e, v] : c_) v *= r;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& [e, v] : p.c_) v = -v;
    return p;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
    auto ia = a.c_.begin();
    auto ib = b.c_.begin();
    for (; ia != a.c_.end() && ib != b.c_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first <=> ib->first;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.c_.size() <=> b.c_.size();
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    LaurentPoly r = a, q;
    const int lowest = a.bottom_degree() - b.bottom_degree();
    const int bt = b.top_degree();
    const Rat bl = b.leading();
    while (!r.is_zero()) {
        int e = r.top_degree() - bt;
        if (e < lowest) return std::nullopt;
        Rat c = r.leading() / bl;
        q.add_term(e, c);
        r -= b.shifted(e) * LaurentPoly(c);
    }
    return q;
}

namespace {

// Remainder of ordinary polynomials (all exponents >= 0).
LaurentPoly poly_rem(LaurentPoly a, const LaurentPoly& b) {
    const int bt = b.top_degree();
    const Rat bl = b.leading();
    while (!a.is_zero() && a.top_degree() >= bt) {
        Rat c = a.leading() / bl;
        a -= b.shifted(a.top_degree() - bt) * LaurentPoly(c);
    }
    return a;
}

LaurentPoly normalized_gcd(LaurentPoly g) {
    g = g.shifted(-g.bottom_degree());
    g *= Rat(1) / g.leading();
    return g;
}

} // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    if (a.is_zero()) return normalized_gcd(b);
    if (b.is_zero()) return normalized_gcd(a);
    LaurentPoly x = a.shifted(-a.bottom_degree());
    LaurentPoly y = b.shifted(-b.bottom_degree());
    if (x.top_degree() < y.top_degree()) std::swap(x, y);
    while (!y.is_zero()) {
        LaurentPoly r = poly_rem(x, y);
        if (!r.is_zero()) r = r.shifted(-r.bottom_degree());
        x = std::move(y);
        y = std::move(r);
    }
    return normalized_gcd(x);
}

namespace {

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    mpz_class n = r.get_num(), d = r.get_den();
    mpz_class sn = ::sqrt(n), sd = ::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    Rat out(sn, sd);
    out.canonicalize();
    return out;
}

} // namespace

std::optional<LaurentPoly> LaurentPoly::sqrt() const {
    if (is_zero()) return LaurentPoly();
    int t = top_degree(), b = bottom_degree();
    if (t % 2 != 0 || b % 2 != 0) return std::nullopt;
    auto s0 = rat_sqrt(leading());
    if (!s0) return std::nullopt;
    const int T = t / 2;
    const int steps = T - b / 2;
    std::vector<Rat> s(steps + 1);
    s[0] = *s0;
    for (int m = 1; m <= steps; ++m) {
        Rat acc = coeff(t - m);
        for (int j = 1; j < m; ++j) acc -= s[j] * s[m - j];
        s[m] = acc / (2 * s[0]);
    }
    LaurentPoly root;
    for (int m = 0; m <= steps; ++m) root.add_term(T - m, s[m]);
    if (root * root != *this) return std::nullopt;
    return root;
}

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        int e = it->first;
        Rat c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string mono = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
        if (mono.empty())
            out += rat_str(c);
        else if (c == 1)
            out += mono;
        else
            out += rat_str(c) + "*" + mono;
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char ch) {
        skip();
        if (i < s.size() && s[i] == ch) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    bool at_end() {
        skip();
        return i >= s.size();
    }
    [[noreturn]] void fail(const char* what) const {
        throw std::invalid_argument(std::string("parse error (") + what + ") in: " + std::string(s));
    }
    long integer() {
        skip();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        if (!peek_digit()) fail("expected integer");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }
    mpz_class bigint() {
        skip();
        size_t j = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (j == i) fail("expected digits");
        return mpz_class(std::string(s.substr(j, i - j)));
    }
};

LaurentPoly parse_poly(Cursor& cur) {
    LaurentPoly p;
    bool first = true;
    while (true) {
        Rat sign = 1;
        if (cur.eat('-'))
            sign = -1;
        else if (!cur.eat('+') && !first)
            break;
        first = false;
        Rat coef = 1;
        int exp = 0;
        bool have_coef = false;
        if (cur.peek_digit()) {
            mpz_class n = cur.bigint();
            mpz_class d = 1;
            size_t save = cur.i;
            if (cur.eat('/')) {
                if (cur.peek_digit())
                    d = cur.bigint();
                else
                    cur.i = save;
            }
            coef = Rat(n, d);
            coef.canonicalize();
            have_coef = true;
        }
        bool want_q = !have_coef || cur.eat('*');
        if (want_q) {
            if (!cur.eat('q')) cur.fail("expected q");
            exp = 1;
            if (cur.eat('^')) exp = static_cast<int>(cur.integer());
        }
        p += LaurentPoly::monomial(exp, sign * coef);
        if (cur.at_end()) break;
    }
    return p;
}

} // namespace

LaurentPoly LaurentPoly::parse(std::string_view s) {
    Cursor cur{s};
    if (cur.at_end()) cur.fail("empty");
    LaurentPoly p = parse_poly(cur);
    if (!cur.at_end()) cur.fail("trailing input");
    return p;
}

RationalFunc::RationalFunc(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

void RationalFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.terms().size() > 1) {
        LaurentPoly g = LaurentPoly::gcd(num_, den_);
        if (g.terms().size() > 1) {
            num_ = *LaurentPoly::divide_exact(num_, g);
            den_ = *LaurentPoly::divide_exact(den_, g);
        }
    }
    int b = den_.bottom_degree();
    Rat lead = den_.leading();
    if (b != 0) {
        num_ = num_.shifted(-b);
        den_ = den_.shifted(-b);
    }
    if (lead != 1) {
        Rat inv = Rat(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

LaurentPoly RationalFunc::as_laurent() const {
    if (!is_laurent()) throw std::domain_error("not a Laurent polynomial: " + str());
    return num_;
}

RationalFunc RationalFunc::bar() const { return RationalFunc(num_.bar(), den_.bar()); }

RationalFunc RationalFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RationalFunc(den_, num_);
}

RationalFunc& RationalFunc::operator+=(const RationalFunc& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunc& RationalFunc::operator-=(const RationalFunc& o) { return *this += -o; }

RationalFunc& RationalFunc::operator*=(const RationalFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RationalFunc();
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunc& RationalFunc::operator/=(const RationalFunc& o) { return *this *= o.inverse(); }

RationalFunc RationalFunc::operator-() const {
    RationalFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

std::strong_ordering operator<=>(const RationalFunc& a, const RationalFunc& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
}

std::string RationalFunc::str() const {
    if (is_laurent() && den_.leading() == 1 && den_.top_degree() == 0) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunc RationalFunc::parse(std::string_view s) {
    Cursor cur{s};
    if (cur.eat('(')) {
        size_t depth = 1, j = cur.i;
        while (j < s.size() && depth > 0) {
            if (s[j] == '(') ++depth;
            if (s[j] == ')') --depth;
            ++j;
        }
        if (depth != 0) cur.fail("unbalanced parentheses");
        LaurentPoly n = LaurentPoly::parse(s.substr(cur.i, j - 1 - cur.i));
        cur.i = j;
        if (cur.at_end()) return RationalFunc(n);
        if (!cur.eat('/') || !cur.eat('(')) cur.fail("expected /(");
        size_t k = s.rfind(')');
        if (k == std::string_view::npos || k < cur.i) cur.fail("unbalanced parentheses");
        LaurentPoly d = LaurentPoly::parse(s.substr(cur.i, k - cur.i));
        cur.i = k + 1;
        if (!cur.at_end()) cur.fail("trailing input");
        return RationalFunc(n, d);
    }
    return RationalFunc(LaurentPoly::parse(s));
}

std::optional<int> ord_at_infinity(const RationalFunc& f) {
    if (f.is_zero()) return std::nullopt;
    return f.den().top_degree() - f.num().top_degree();
}

bool regular_at_infinity(const RationalFunc& f) {
    auto o = ord_at_infinity(f);
    return !o || *o >= 0;
}

bool vanishes_at_infinity(const RationalFunc& f) {
    auto o = ord_at_infinity(f);
    return !o || *o >= 1;
}

bool in_strict_negative_integral(const RationalFunc& f) {
    if (f.is_zero()) return true;
    if (!f.is_laurent()) return false;
    for (const auto& [e, r] : f.num().terms())
        if (e >= 0 || r.get_den() != 1) return false;
    return true;
}

LaurentPoly q_factorial(int n, int e) {
    LaurentPoly p(1);
    for (int k = 2; k <= n; ++k) p *= LaurentPoly::q_int(k, e);
    return p;
}

LaurentPoly q_binomial_exp(int n, int r, int e) {
    if (r < 0 || n < r) throw std::invalid_argument("q_binomial requires 0 <= r <= n");
    auto q = LaurentPoly::divide_exact(q_factorial(n, e), q_factorial(r, e) * q_factorial(n - r, e));
    return *q;
}

} // namespace qa
