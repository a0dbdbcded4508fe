#ifndef QUARTIC_UPOLY_HPP
#define QUARTIC_UPOLY_HPP

#include "quartic/errors.hpp"
#include "quartic/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace quartic {

// Dense univariate polynomial over the rationals, coefficient of x^i at
// index i. The zero polynomial has an empty coefficient vector; otherwise
// the leading coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coeffs)
        : c_(coeffs) { trim(); }
    explicit UniPoly(std::vector<Rational> coeffs)
        : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& a)
    {
        return UniPoly(std::vector<Rational>{a});
    }
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
    // a*x + b
    static UniPoly linear(const Rational& a, const Rational& b)
    {
        return UniPoly(std::vector<Rational>{b, a});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of x^i; zero beyond the degree.
    const Rational& coeff(size_t i) const
    {
        static const Rational zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    Interval eval(const Interval& x) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // x^k * this
    UniPoly shifted(int k) const;
    UniPoly monic() const;
    // Scales so all coefficients are coprime integers with positive leading
    // coefficient.
    UniPoly primitive() const;
    // p(a*x + b)
    UniPoly compose_linear(const Rational& a, const Rational& b) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Formal derivative.
UniPoly upoly_derivative(const UniPoly& p);

// Quotient and remainder over the rationals; divisor must be nonzero.
std::pair<UniPoly, UniPoly> upoly_divmod(const UniPoly& a, const UniPoly& b);
UniPoly upoly_rem(const UniPoly& a, const UniPoly& b);
// Exact division; throws if the division leaves a remainder.
UniPoly upoly_exact_div(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0,0) = 0.
UniPoly upoly_gcd(const UniPoly& a, const UniPoly& b);

// p / gcd(p, p'), made monic. Same roots as p, all simple.
UniPoly squarefree_part(const UniPoly& p);

// Sylvester resultant. Both arguments nonzero.
Rational resultant(const UniPoly& p, const UniPoly& q);

// Number of distinct real roots of squarefree p in the half-open
// interval (a, b], by Sturm's theorem. Chain may be reused across queries.
struct SturmChain {
    explicit SturmChain(const UniPoly& p);
    int variations(const Rational& x) const;
    int count(const Rational& a, const Rational& b) const;
    int count_all() const;  // all real roots
    const UniPoly& poly() const { return chain_.front(); }

private:
    std::vector<UniPoly> chain_;
    int variations_at_minus_inf() const;
    int variations_at_plus_inf() const;
};

// 1 + max |c_i / c_n|; every real root lies in (-bound, bound).
Rational cauchy_root_bound(const UniPoly& p);

}  // namespace quartic

#endif
