#include "quartic/upoly.hpp"

#include "doctest.h"

#include <random>

using namespace quartic;

namespace {

UniPoly poly(std::initializer_list<long> coeffs)
{
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

// Deterministic random polynomial with small integer coefficients.
UniPoly random_poly(std::mt19937& rng, int max_deg)
{
    std::uniform_int_distribution<int> degd(0, max_deg);
    std::uniform_int_distribution<int> cd(-9, 9);
    int d = degd(rng);
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = Rational(cd(rng));
    if (c.back() == 0) c.back() = 1;
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("derivative basics")
{
    // x^4 -> 4x^3
    CHECK(upoly_derivative(poly({0, 0, 0, 0, 1})) == poly({0, 0, 0, 4}));
    // constant -> 0
    CHECK(upoly_derivative(poly({5})).is_zero());
    // x^2 - 2 -> 2x
    CHECK(upoly_derivative(poly({-2, 0, 1})) == poly({0, 2}));
    // degree drops by exactly one
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        UniPoly p = random_poly(rng, 8);
        if (p.degree() < 1) continue;
        CHECK(upoly_derivative(p).degree() == p.degree() - 1);
    }
}

TEST_CASE("squarefree_part")
{
    // (x-1)^2 -> x-1
    CHECK(squarefree_part(poly({1, -2, 1})) == poly({-1, 1}));
    // x^2-2 already square-free
    CHECK(squarefree_part(poly({-2, 0, 1})) == poly({-2, 0, 1}));
    // (x^2+x)^2 (x-3) -> x(x+1)(x-3) = x^3 - 2x^2 - 3x
    UniPoly p = poly({0, 1, 1}) * poly({0, 1, 1}) * poly({-3, 1});
    CHECK(squarefree_part(p) == poly({0, -3, -2, 1}));
    CHECK_THROWS_AS(squarefree_part(UniPoly()), ZeroPolynomial);
}

TEST_CASE("resultant basics")
{
    CHECK(resultant(poly({-2, 0, 1}), poly({-3, 0, 1})) == Rational(1));
    CHECK(resultant(poly({-1, 1}), poly({-1, 1})) == Rational(0));
    CHECK(resultant(poly({1, 0, 1}), poly({0, 1})) == Rational(1));
    CHECK_THROWS_AS(resultant(UniPoly(), poly({1})), ZeroPolynomial);
}

TEST_CASE("resultant vanishes exactly on common roots")
{
    std::mt19937 rng(42);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        UniPoly p = random_poly(rng, 5);
        UniPoly q = random_poly(rng, 5);
        if (p.is_zero() || q.is_zero()) continue;
        UniPoly g = upoly_gcd(p, q);
        bool share = g.degree() >= 1;
        Rational r = resultant(p, q);
        CHECK_EQ(sign(r) == 0, share);
        ++checked;
    }
    CHECK(checked > 900);
}

TEST_CASE("resultant multiplicativity spot checks")
{
    // res(pq, r) = res(p, r) res(q, r)
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        UniPoly p = random_poly(rng, 3), q = random_poly(rng, 3),
                r = random_poly(rng, 3);
        if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
        CHECK(resultant(p * q, r) == resultant(p, r) * resultant(q, r));
    }
}

TEST_CASE("gcd and exact division")
{
    UniPoly a = poly({-1, 0, 1});            // (x-1)(x+1)
    UniPoly b = poly({-1, 1}) * poly({2, 1});  // (x-1)(x+2)
    CHECK(upoly_gcd(a, b) == poly({-1, 1}));
    CHECK(upoly_exact_div(a, poly({-1, 1})) == poly({1, 1}));
    CHECK_THROWS(upoly_exact_div(a, poly({2, 1})));
}

TEST_CASE("sturm counts match squarefree root counts")
{
    std::mt19937 rng(3);
    for (int i = 0; i < 300; ++i) {
        UniPoly p = random_poly(rng, 8);
        if (p.degree() < 1) continue;
        UniPoly sf = squarefree_part(p);
        if (sf.degree() < 1) continue;
        SturmChain chain(sf);
        Rational b = cauchy_root_bound(sf);
        CHECK(chain.count(-b, b) == chain.count_all());
    }
}

TEST_CASE("interval evaluation encloses point values")
{
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> num(-50, 50);
    for (int i = 0; i < 100; ++i) {
        UniPoly p = random_poly(rng, 6);
        Rational x(num(rng), 7);
        Interval box(x - Rational(1, 100), x + Rational(1, 100));
        Interval v = p.eval(box);
        Rational pv = p.eval(x);
        CHECK(v.lo <= pv);
        CHECK(pv <= v.hi);
    }
}
