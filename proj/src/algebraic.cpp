#include "quartic/algebraic.hpp"

#include <deque>

namespace quartic {

AlgebraicReal::AlgebraicReal(UniPoly defining, Interval isolating)
    : poly_(std::move(defining)), iv_(std::move(isolating))
{
    if (poly_.is_zero()) throw ZeroPolynomial();
    if (poly_.degree() == 1) {
        exact_ = -poly_.coeff(0) / poly_.coeff(1);
        iv_ = Interval::point(*exact_);
    }
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& r)
{
    AlgebraicReal a(UniPoly::linear(Rational(1), -r), Interval::point(r));
    return a;
}

void AlgebraicReal::detect_rational(const Rational& candidate)
{
    exact_ = candidate;
    iv_ = Interval::point(candidate);
}

void AlgebraicReal::refine_step()
{
    if (exact_) return;
    Rational mid = iv_.mid();
    int sm = quartic::sign(poly_.eval(mid));
    if (sm == 0) {
        detect_rational(mid);
        return;
    }
    int slo = quartic::sign(poly_.eval(iv_.lo));
    if (slo != 0 && slo != sm)
        iv_.hi = mid;
    else
        iv_.lo = mid;
}

void AlgebraicReal::refine_to(const Rational& w)
{
    while (!exact_ && iv_.width() > w) refine_step();
}

void AlgebraicReal::replace_defining(const UniPoly& divisor)
{
    if (exact_) return;
    // The divisor must keep exactly one sign change over the interval.
    int slo = quartic::sign(divisor.eval(iv_.lo));
    int shi = quartic::sign(divisor.eval(iv_.hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw Error("replace_defining: divisor does not isolate the root");
    poly_ = divisor.monic();
    if (poly_.degree() == 1) {
        exact_ = -poly_.coeff(0) / poly_.coeff(1);
        iv_ = Interval::point(*exact_);
    }
}

Interval AlgebraicReal::enclosure() const { return iv_; }

int AlgebraicReal::sign() const
{
    if (exact_) return quartic::sign(*exact_);
    return sign_at(UniPoly::x(), *this);
}

std::vector<AlgebraicReal> isolate_real_roots(const UniPoly& p)
{
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<AlgebraicReal> out;
    if (p.degree() == 0) return out;
    UniPoly sf = squarefree_part(p);
    if (sf.degree() == 0) return out;
    SturmChain chain(sf);
    Rational bound = cauchy_root_bound(sf);

    struct Seg {
        Rational lo, hi;
        int count;
    };
    std::deque<Seg> work;
    int total = chain.count(-bound, bound);
    if (total > 0) work.push_back({-bound, bound, total});

    std::vector<AlgebraicReal> found;
    while (!work.empty()) {
        Seg s = work.front();
        work.pop_front();
        if (s.count == 0) continue;
        if (s.count == 1) {
            found.emplace_back(sf, Interval(s.lo, s.hi));
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        if (sign(sf.eval(mid)) == 0) {
            // Rational root exactly at the midpoint. Carve out a hole
            // around it that contains no other root.
            Rational delta = (s.hi - s.lo) / 4;
            while (true) {
                Rational l = mid - delta, r = mid + delta;
                if (sign(sf.eval(l)) != 0 && sign(sf.eval(r)) != 0 &&
                    chain.count(l, r) == 1) {
                    AlgebraicReal a(sf, Interval(l, r));
                    a.refine_step();  // snaps to the exact rational
                    found.push_back(std::move(a));
                    int left = chain.count(s.lo, l);
                    int right = chain.count(r, s.hi);
                    if (left > 0) work.push_back({s.lo, l, left});
                    if (right > 0) work.push_back({r, s.hi, right});
                    break;
                }
                delta /= 2;
            }
        } else {
            int left = chain.count(s.lo, mid);
            if (left > 0) work.push_back({s.lo, mid, left});
            if (s.count - left > 0) work.push_back({mid, s.hi, s.count - left});
        }
    }
    std::sort(found.begin(), found.end(),
              [](const AlgebraicReal& a, const AlgebraicReal& b) {
                  return compare(a, b) < 0;
              });
    // Bisection halves can touch at a shared endpoint; separate them.
    for (size_t i = 0; i + 1 < found.size(); ++i) {
        while (found[i].enclosure().hi >= found[i + 1].enclosure().lo) {
            found[i].refine_step();
            found[i + 1].refine_step();
        }
    }
    return found;
}

AlgebraicReal refine(const AlgebraicReal& a, const Rational& w)
{
    if (sign(w) <= 0) throw Error("refine: width must be positive");
    AlgebraicReal r = a;
    r.refine_to(w);
    return r;
}

int sign_at(const UniPoly& expr, const AlgebraicReal& a)
{
    if (expr.is_zero()) return 0;
    if (a.is_rational()) return sign(expr.eval(a.rational_value()));

    Interval e = expr.eval(a.isolating());
    if (auto s = e.definite_sign()) return *s;

    // Undecided: settle zero exactly before refining.
    UniPoly g = upoly_gcd(expr, a.defining_poly());
    if (g.degree() >= 1) {
        int slo = sign(g.eval(a.isolating().lo));
        int shi = sign(g.eval(a.isolating().hi));
        if (slo != shi) return 0;  // expr shares this very root
    }
    AlgebraicReal local = a;
    while (true) {
        local.refine_step();
        if (local.is_rational()) return sign(expr.eval(local.rational_value()));
        Interval v = expr.eval(local.isolating());
        if (auto s = v.definite_sign()) return *s;
    }
}

namespace {

int compare_rational_algebraic(const Rational& r, const AlgebraicReal& b)
{
    if (r < b.enclosure().lo) return -1;
    if (r > b.enclosure().hi) return +1;
    if (sign(b.defining_poly().eval(r)) == 0) return 0;  // r is the root
    AlgebraicReal v = b;
    while (true) {
        v.refine_step();
        if (v.is_rational()) {
            const Rational& y = v.rational_value();
            return r < y ? -1 : (r == y ? 0 : 1);
        }
        if (r < v.enclosure().lo) return -1;
        if (r > v.enclosure().hi) return +1;
    }
}

}  // namespace

int compare(const AlgebraicReal& a, const AlgebraicReal& b)
{
    if (a.is_rational() && b.is_rational()) {
        const Rational &x = a.rational_value(), &y = b.rational_value();
        return x < y ? -1 : (x == y ? 0 : 1);
    }
    if (a.is_rational()) return compare_rational_algebraic(a.rational_value(), b);
    if (b.is_rational()) return -compare_rational_algebraic(b.rational_value(), a);

    AlgebraicReal u = a, v = b;
    UniPoly g = upoly_gcd(u.defining_poly(), v.defining_poly());
    while (true) {
        if (u.enclosure().hi < v.enclosure().lo) return -1;
        if (v.enclosure().hi < u.enclosure().lo) return +1;
        if (g.degree() >= 1) {
            Rational l = std::max(u.enclosure().lo, v.enclosure().lo);
            Rational r = std::min(u.enclosure().hi, v.enclosure().hi);
            if (l <= r) {
                int sl = sign(g.eval(l)), sr = sign(g.eval(r));
                if (sl != 0 && sr != 0 && sl != sr) return 0;
            }
        }
        u.refine_step();
        v.refine_step();
        if (u.is_rational() || v.is_rational()) return compare(u, v);
    }
}

AlgebraicReal algebraic_from_enclosure(const UniPoly& annihilator,
                                       const std::function<Interval(int)>& tighten)
{
    // The enclosed number is one of the annihilator's real roots; shrink
    // the enclosure until it overlaps exactly one of their (pairwise
    // disjoint) isolating intervals.
    std::vector<AlgebraicReal> roots = isolate_real_roots(annihilator);
    if (roots.empty()) throw Error("enclosed number is not a real root");
    for (int round = 0;; ++round) {
        Interval box = tighten(round);
        const AlgebraicReal* hit = nullptr;
        bool multiple = false;
        for (const auto& r : roots) {
            if (intervals_disjoint(box, r.enclosure())) continue;
            if (hit) { multiple = true; break; }
            hit = &r;
        }
        if (hit && !multiple) return *hit;
        if (!hit) throw Error("enclosure drifted off every root");
    }
}

}  // namespace quartic
