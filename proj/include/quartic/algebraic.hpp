#ifndef QUARTIC_ALGEBRAIC_HPP
#define QUARTIC_ALGEBRAIC_HPP

#include "quartic/upoly.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace quartic {

// A real algebraic number: a square-free defining polynomial together with
// an isolating interval containing exactly one of its real roots. Interval
// endpoints are never roots. Rational numbers are carried exactly.
class AlgebraicReal {
public:
    AlgebraicReal(UniPoly defining, Interval isolating);
    static AlgebraicReal from_rational(const Rational& r);

    const UniPoly& defining_poly() const { return poly_; }
    const Interval& isolating() const { return iv_; }
    bool is_rational() const { return exact_.has_value(); }
    const Rational& rational_value() const { return *exact_; }

    // One exact bisection step; detects a rational root at the midpoint.
    void refine_step();
    // Shrinks the isolating interval to width <= w.
    void refine_to(const Rational& w);
    // Replaces the defining polynomial by a (square-free) divisor that
    // still vanishes at this root. Used when arithmetic splits a modulus.
    void replace_defining(const UniPoly& divisor);

    // Enclosure valid for the current refinement state.
    Interval enclosure() const;

    int sign() const;  // sign of the number itself

private:
    UniPoly poly_;
    Interval iv_;
    std::optional<Rational> exact_;
    void detect_rational(const Rational& candidate);
};

// One AlgebraicReal per distinct real root of p, ascending. Sturm-exact.
std::vector<AlgebraicReal> isolate_real_roots(const UniPoly& p);

// Same number, isolating interval of width <= w. Pure.
AlgebraicReal refine(const AlgebraicReal& a, const Rational& w);

// Exact sign of expr(a). Zero is certified by a gcd with the defining
// polynomial; intervals only separate nonzero signs.
int sign_at(const UniPoly& expr, const AlgebraicReal& a);

// Three-way comparison: -1, 0, +1 as a < b, a = b, a > b.
int compare(const AlgebraicReal& a, const AlgebraicReal& b);

inline bool algebraic_equal(const AlgebraicReal& a, const AlgebraicReal& b)
{
    return compare(a, b) == 0;
}

// Builds an AlgebraicReal for a number known to be a root of `annihilator`
// (nonzero, not necessarily square-free) from a shrinking enclosure.
// `tighten` must return enclosures of the same number with width
// eventually below any positive bound.
AlgebraicReal algebraic_from_enclosure(const UniPoly& annihilator,
                                       const std::function<Interval(int)>& tighten);

}  // namespace quartic

#endif
