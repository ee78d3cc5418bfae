#include <doctest.h>

#include "qa/qseries.hpp"

#include <random>

using namespace qa;

namespace {

LaurentPoly q(int e, long c = 1) { return LaurentPoly::monomial(e, c); }

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), ex(-4, 4), co(-5, 5), den(1, 3);
    LaurentPoly p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) p += LaurentPoly::monomial(ex(rng), Rat(co(rng), den(rng)));
    return p;
}

RationalFunc random_rf(std::mt19937& rng) {
    LaurentPoly d;
    while (d.is_zero()) d = random_poly(rng);
    return RationalFunc(random_poly(rng), d);
}

// Gaussian binomial from the product formula, with the denominator cleared
// by exact division and nothing else.
LaurentPoly binomial_by_products(int n, int r, int e) {
    LaurentPoly num(1), den(1);
    for (int k = 1; k <= r; ++k) {
        num *= q(e * (n - k + 1)) - q(-e * (n - k + 1));
        den *= q(e * k) - q(-e * k);
    }
    return *LaurentPoly::divide_exact(num, den);
}

} // namespace

TEST_CASE("ord_at_infinity") {
    RationalFunc f(1, LaurentPoly(1) - q(-2));
    CHECK(ord_at_infinity(f) == 0);
    CHECK(!ord_at_infinity(RationalFunc()).has_value());
    RationalFunc g(q(1) - q(-1), q(2) - q(-2));
    CHECK(ord_at_infinity(g) == 1);
    CHECK(g == RationalFunc(1, q(1) + q(-1)));
}

TEST_CASE("q_binomial values") {
    CHECK(q_binomial_exp(2, 1, 1) == q(1) + q(-1));
    CHECK(q_binomial_exp(5, 0, 1) == LaurentPoly(1));
    CHECK(q_binomial_exp(4, 2, 1) == q(4) + q(2) + LaurentPoly(2) + q(-2) + q(-4));
    for (int e = 1; e <= 3; ++e)
        for (int n = 0; n <= 7; ++n)
            for (int r = 0; r <= n; ++r) {
                auto b = q_binomial_exp(n, r, e);
                CHECK(b == binomial_by_products(n, r, e));
                CHECK(b.is_bar_invariant());
                CHECK(b.bottom_degree() >= -e * r * (n - r));
            }
    CHECK_THROWS(q_binomial_exp(2, 3, 1));
}

TEST_CASE("bar") {
    CHECK(RationalFunc(q(3)).bar() == RationalFunc(q(-3)));
    CHECK(RationalFunc(q(1) + q(-1)).bar() == RationalFunc(q(1) + q(-1)));
    RationalFunc f(1, LaurentPoly(1) - q(-2));
    CHECK(f.bar() == RationalFunc(1, LaurentPoly(1) - q(2)));
}

TEST_CASE("ring and field axioms on random inputs") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a - a == LaurentPoly());
    }
    for (int it = 0; it < 100; ++it) {
        auto f = random_rf(rng), g = random_rf(rng), h = random_rf(rng);
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f.bar().bar() == f);
        CHECK((f * g).bar() == f.bar() * g.bar());
        if (!f.is_zero()) {
            CHECK(f * f.inverse() == RationalFunc(1));
            if (!g.is_zero()) CHECK(*ord_at_infinity(f * g) == *ord_at_infinity(f) + *ord_at_infinity(g));
        }
        CHECK(f.den().bottom_degree() == 0);
        CHECK(f.den().leading() > 0);
    }
}

TEST_CASE("text round trip") {
    std::mt19937 rng(11);
    CHECK(LaurentPoly::parse("q^4 + q^2 + 2 + q^-2 + q^-4") == q_binomial_exp(4, 2, 1));
    CHECK(LaurentPoly::parse("-3/2*q^-1 + q") == q(1) - LaurentPoly::monomial(-1, Rat(3, 2)));
    for (int it = 0; it < 200; ++it) {
        auto f = random_rf(rng);
        CHECK(RationalFunc::parse(f.str()) == f);
        auto p = random_poly(rng);
        CHECK(LaurentPoly::parse(p.str()) == p);
    }
    CHECK_THROWS(LaurentPoly::parse("q^"));
    CHECK_THROWS(LaurentPoly::parse("2 x"));
}

TEST_CASE("gcd and sqrt") {
    auto a = (q(1) + LaurentPoly(1)) * (q(2) - LaurentPoly(3));
    auto b = (q(1) + LaurentPoly(1)) * q(-5);
    CHECK(LaurentPoly::gcd(a, b) == q(1) + LaurentPoly(1));
    auto s = (q(2) - q(-1) * LaurentPoly(Rat(1, 2)));
    auto r = (s * s).sqrt();
    REQUIRE(r.has_value());
    CHECK((*r == s || *r == -s));
    CHECK(!(q(1) + LaurentPoly(1)).sqrt().has_value());
}

TEST_CASE("predicates") {
    CHECK(in_strict_negative_integral(RationalFunc(q(-1) * LaurentPoly(3) - q(-4))));
    CHECK(!in_strict_negative_integral(RationalFunc(LaurentPoly(1))));
    CHECK(!in_strict_negative_integral(RationalFunc(LaurentPoly::monomial(-1, Rat(1, 2)))));
    CHECK(vanishes_at_infinity(RationalFunc(1, q(1) + q(-1))));
    CHECK(!vanishes_at_infinity(RationalFunc(1, LaurentPoly(1) - q(-2))));
}
