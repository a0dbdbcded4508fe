#include "quartic/algebraic.hpp"

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

UniPoly random_poly(std::mt19937& rng, int max_deg)
{
    std::uniform_int_distribution<int> degd(1, max_deg);
    std::uniform_int_distribution<int> cd(-9, 9);
    int d = degd(rng);
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = Rational(cd(rng));
    if (c.back() == 0) c.back() = 1;
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("isolation basics")
{
    CHECK(isolate_real_roots(poly({1, 0, 1})).empty());  // x^2+1

    auto r = isolate_real_roots(poly({0, -1, 0, 1}));  // x^3 - x
    REQUIRE(r.size() == 3);
    CHECK(compare(r[0], AlgebraicReal::from_rational(Rational(-1))) == 0);
    CHECK(compare(r[1], AlgebraicReal::from_rational(Rational(0))) == 0);
    CHECK(compare(r[2], AlgebraicReal::from_rational(Rational(1))) == 0);

    auto s = isolate_real_roots(poly({-2, 0, 1}));  // x^2 - 2
    REQUIRE(s.size() == 2);
    CHECK(s[0].enclosure().hi < 0);
    CHECK(s[1].enclosure().lo > 0);
    // intervals bracket +-sqrt(2)
    CHECK(s[1].enclosure().lo * s[1].enclosure().lo <= 2);
    CHECK(s[1].enclosure().hi * s[1].enclosure().hi >= 2);
}

TEST_CASE("isolating intervals pairwise disjoint")
{
    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
        UniPoly p = random_poly(rng, 8);
        auto roots = isolate_real_roots(p);
        for (size_t a = 0; a + 1 < roots.size(); ++a)
            CHECK(roots[a].enclosure().hi < roots[a + 1].enclosure().lo);
        // count agrees with Sturm on the squarefree part
        UniPoly sf = squarefree_part(p);
        if (sf.degree() >= 1)
            CHECK(static_cast<int>(roots.size()) == SturmChain(sf).count_all());
    }
}

TEST_CASE("refine keeps the root and shrinks")
{
    auto roots = isolate_real_roots(poly({-2, 0, 1}));
    AlgebraicReal sqrt2 = roots[1];
    AlgebraicReal fine = refine(sqrt2, Rational(1, 8));
    CHECK(fine.enclosure().width() <= Rational(1, 8));
    CHECK(compare(fine, sqrt2) == 0);

    AlgebraicReal one(poly({-1, 1}), Interval(Rational(0), Rational(2)));
    CHECK(one.is_rational());
    CHECK(one.rational_value() == 1);

    auto r3 = isolate_real_roots(poly({0, -1, 0, 1}));
    AlgebraicReal m1 = refine(r3[0], Rational(1, 16));
    CHECK(m1.enclosure().width() <= Rational(1, 16));
    CHECK(compare(m1, AlgebraicReal::from_rational(Rational(-1))) == 0);
}

TEST_CASE("sign_at basics")
{
    auto roots = isolate_real_roots(poly({-2, 0, 1}));
    const AlgebraicReal& sqrt2 = roots[1];
    CHECK(sign_at(poly({-1, 0, 1}), sqrt2) == +1);  // x^2-1 at sqrt2
    CHECK(sign_at(poly({-2, 0, 1}), sqrt2) == 0);   // exact vanishing
    auto r3 = isolate_real_roots(poly({0, -1, 0, 1}));
    CHECK(sign_at(UniPoly::x(), r3[0]) == -1);
}

TEST_CASE("sign_at multiplicative and refinement-stable")
{
    std::mt19937 rng(23);
    for (int i = 0; i < 60; ++i) {
        UniPoly p = random_poly(rng, 6);
        auto roots = isolate_real_roots(p);
        if (roots.empty()) continue;
        UniPoly e1 = random_poly(rng, 4), e2 = random_poly(rng, 4);
        for (const auto& a : roots) {
            CHECK(sign_at(e1 * e2, a) == sign_at(e1, a) * sign_at(e2, a));
            AlgebraicReal fine = refine(a, Rational(1, 1 << 12));
            CHECK(sign_at(e1, a) == sign_at(e1, fine));
        }
    }
}

TEST_CASE("comparisons")
{
    auto r2 = isolate_real_roots(poly({-2, 0, 1}));
    auto r2b = isolate_real_roots(poly({-2, 0, 1}) * poly({-5, 1}));
    CHECK(compare(r2[1], r2b[1]) == 0);   // same sqrt(2) via different polys
    CHECK(compare(r2[0], r2b[1]) == -1);
    CHECK(compare(r2b[2], r2[1]) == +1);  // 5 > sqrt(2)
    CHECK(compare(AlgebraicReal::from_rational(Rational(3, 2)), r2[1]) == +1);
    CHECK(compare(AlgebraicReal::from_rational(Rational(7, 5)), r2[1]) == -1);
}

TEST_CASE("algebraic_from_enclosure picks the right root")
{
    // sqrt(2) from a slowly shrinking enclosure
    UniPoly ann = poly({-2, 0, 1}) * poly({-3, 0, 1});
    Interval wide(Rational(1), Rational(2));
    auto a = algebraic_from_enclosure(ann, [&](int round) {
        // midpoint 1.41421..., synthetic shrink around sqrt(2)
        Rational eps(1, 1 << std::min(round + 1, 40));
        Rational lo = Rational(14142, 10000) - eps;
        Rational hi = Rational(14143, 10000) + eps;
        return Interval(lo, hi);
    });
    CHECK(sign_at(poly({-2, 0, 1}), a) == 0);
}
