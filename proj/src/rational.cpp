#include "quartic/rational.hpp"

#include "quartic/errors.hpp"

namespace quartic {

std::string rat_to_decimal(const Rational& r, int digits)
{
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer num = r.get_num() * scale;
    Integer whole = num / r.get_den();  // truncates toward zero
    bool neg = sign(whole) < 0;
    Integer a = abs(whole);
    Integer ip = a / scale;
    Integer fp = a % scale;
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (digits > 0) out += "." + frac;
    return out;
}

Interval operator+(const Interval& a, const Interval& b)
{
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(const Interval& a, const Interval& b)
{
    return Interval(a.lo - b.hi, a.hi - b.lo);
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b)
{
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi;
    Rational p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = p1, hi = p1;
    for (const Rational* p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return Interval(lo, hi);
}

Interval operator*(const Rational& c, const Interval& a)
{
    if (sign(c) >= 0) return Interval(c * a.lo, c * a.hi);
    return Interval(c * a.hi, c * a.lo);
}

Interval operator+(const Interval& a, const Rational& c)
{
    return Interval(a.lo + c, a.hi + c);
}

Interval interval_div(const Interval& a, const Interval& b)
{
    if (b.contains_zero())
        throw Error("interval division by interval containing zero");
    Rational q1 = a.lo / b.lo, q2 = a.lo / b.hi;
    Rational q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    Rational lo = q1, hi = q1;
    for (const Rational* q : {&q2, &q3, &q4}) {
        if (*q < lo) lo = *q;
        if (*q > hi) hi = *q;
    }
    return Interval(lo, hi);
}

namespace {

// Rational lower/upper bounds of sqrt(v) within `slack` of each other,
// by bisection on [0, max(1,v)].
Interval sqrt_bounds(const Rational& v, const Rational& slack)
{
    if (sign(v) < 0) throw Error("sqrt of negative rational");
    if (sign(v) == 0) return Interval(0, 0);
    Rational lo(0), hi = v < 1 ? Rational(1) : v;
    while (hi - lo > slack) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= v)
            lo = mid;
        else
            hi = mid;
    }
    return Interval(lo, hi);
}

}  // namespace

Interval interval_sqrt(const Interval& a, const Rational& slack)
{
    if (sign(a.lo) < 0) throw Error("interval_sqrt of negative interval");
    Interval lo_b = sqrt_bounds(a.lo, slack);
    Interval hi_b = sqrt_bounds(a.hi, slack);
    return Interval(lo_b.lo, hi_b.hi);
}

bool intervals_disjoint(const Interval& a, const Interval& b)
{
    return a.hi < b.lo || b.hi < a.lo;
}

}  // namespace quartic
