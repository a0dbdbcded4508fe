#ifndef QUARTIC_RATIONAL_HPP
#define QUARTIC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace quartic {

// Exact rational coefficient field. mpq_class keeps values canonical
// (coprime numerator/denominator, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& n) { return sgn(n); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Serializes as "p" or "p/q" with q > 1.
inline std::string rat_to_string(const Rational& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p", "p/q", and signs; rejects anything else.
inline Rational rat_from_string(const std::string& s)
{
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    q.canonicalize();
    return q;
}

// Fixed-point decimal rendering with the given number of fractional
// digits, rounding toward zero. Used for report output only.
std::string rat_to_decimal(const Rational& r, int digits);

// Closed interval with exact rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {}
    static Interval point(const Rational& a) { return Interval(a, a); }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    bool is_point() const { return lo == hi; }
    // Sign of every element, or nullopt if the interval straddles zero.
    std::optional<int> definite_sign() const
    {
        if (sign(lo) > 0) return +1;
        if (sign(hi) < 0) return -1;
        if (sign(lo) == 0 && sign(hi) == 0) return 0;
        return std::nullopt;
    }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& c, const Interval& a);
Interval operator+(const Interval& a, const Rational& c);
// Requires 0 outside b.
Interval interval_div(const Interval& a, const Interval& b);
// Encloses sqrt(a); requires a.lo >= 0. `slack` bounds the endpoint error.
Interval interval_sqrt(const Interval& a, const Rational& slack);

bool intervals_disjoint(const Interval& a, const Interval& b);

}  // namespace quartic

#endif
