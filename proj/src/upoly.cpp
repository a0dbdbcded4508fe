#include "quartic/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace quartic {

Rational UniPoly::eval(const Rational& x) const
{
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Interval UniPoly::eval(const Interval& x) const
{
    Interval acc(Rational(0), Rational(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator-() const
{
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s)
{
    if (sign(s) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UniPoly UniPoly::shifted(int k) const
{
    if (is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + static_cast<size_t>(k), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + static_cast<size_t>(k)] = c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const
{
    if (is_zero()) return *this;
    UniPoly r = *this;
    Rational inv = 1 / leading();
    for (auto& c : r.c_) c *= inv;
    return r;
}

UniPoly UniPoly::primitive() const
{
    if (is_zero()) return *this;
    Integer num_gcd(0), den_lcm(1);
    for (const auto& c : c_) {
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    Rational scale(den_lcm, num_gcd);  // canonicalized by mpq_class
    scale.canonicalize();
    UniPoly r = *this;
    for (auto& c : r.c_) c *= scale;
    if (sign(r.leading()) < 0)
        for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::compose_linear(const Rational& a, const Rational& b) const
{
    UniPoly acc;
    UniPoly lin = UniPoly::linear(a, b);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= lin;
        acc += UniPoly::constant(*it);
    }
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(static_cast<size_t>(i));
        if (sign(c) == 0) continue;
        if (!first) os << (sign(c) > 0 ? " + " : " - ");
        else if (sign(c) < 0) os << "-";
        first = false;
        Rational a = rat_abs(c);
        if (i == 0 || a != 1) os << rat_to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly upoly_derivative(const UniPoly& p)
{
    if (p.degree() < 1) return UniPoly();
    std::vector<Rational> r(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i)
        r[static_cast<size_t>(i - 1)] = Rational(i) * p.coeff(static_cast<size_t>(i));
    return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> upoly_divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) throw ZeroPolynomial();
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot(static_cast<size_t>(a.degree() - b.degree()) + 1,
                               Rational(0));
    const Rational& lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + b.degree())] / lead;
        quot[static_cast<size_t>(k)] = q;
        if (sign(q) == 0) continue;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(k + i)] -= q * b.coeff(static_cast<size_t>(i));
    }
    rem.resize(static_cast<size_t>(std::max(b.degree(), 0)));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly upoly_rem(const UniPoly& a, const UniPoly& b)
{
    return upoly_divmod(a, b).second;
}

UniPoly upoly_exact_div(const UniPoly& a, const UniPoly& b)
{
    auto [q, r] = upoly_divmod(a, b);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

namespace {

// Integer image of a rational polynomial: primitive integer coefficients.
std::vector<Integer> to_primitive_z(const UniPoly& p)
{
    Integer den_lcm(1);
    for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
    std::vector<Integer> z;
    z.reserve(p.coeffs().size());
    Integer g(0);
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (den_lcm / c.get_den());
        g = gcd(g, v);
        z.push_back(v);
    }
    if (g != 0)
        for (auto& v : z) v /= g;
    return z;
}

int zdeg(const std::vector<Integer>& p) { return static_cast<int>(p.size()) - 1; }

void ztrim(std::vector<Integer>& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zcontent(const std::vector<Integer>& p)
{
    Integer g(0);
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed in place over Z.
std::vector<Integer> zpseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b)
{
    int db = zdeg(b);
    const Integer& lead = b.back();
    while (zdeg(a) >= db) {
        int k = zdeg(a) - db;
        Integer top = a.back();
        for (auto& c : a) c *= lead;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(k + i)] -= top * b[static_cast<size_t>(i)];
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

UniPoly upoly_gcd(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // Primitive PRS over the integers to avoid rational blowup.
    std::vector<Integer> u = to_primitive_z(a), v = to_primitive_z(b);
    if (zdeg(u) < zdeg(v)) std::swap(u, v);
    while (!v.empty()) {
        std::vector<Integer> r = zpseudo_rem(u, v);
        if (!r.empty()) {
            Integer cont = zcontent(r);
            for (auto& c : r) c /= cont;
        }
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> out;
    out.reserve(u.size());
    for (const auto& c : u) out.emplace_back(c);
    return UniPoly(std::move(out)).monic();
}

UniPoly squarefree_part(const UniPoly& p)
{
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly g = upoly_gcd(p, upoly_derivative(p));
    return upoly_exact_div(p, g).monic();
}

namespace {

// Bareiss fraction-free determinant; destroys m. Size n x n.
Integer bareiss_det(std::vector<std::vector<Integer>>& m)
{
    const size_t n = m.size();
    if (n == 0) return Integer(1);
    int sgn_flip = 1;
    Integer prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Integer(0);
            std::swap(m[k], m[swap_row]);
            sgn_flip = -sgn_flip;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sgn_flip > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

}  // namespace

Rational resultant(const UniPoly& p, const UniPoly& q)
{
    if (p.is_zero() || q.is_zero()) throw ZeroPolynomial();
    const int dp = p.degree(), dq = q.degree();
    if (dp == 0) {
        Rational r(1);
        for (int i = 0; i < dq; ++i) r *= p.leading();
        return r;
    }
    if (dq == 0) {
        Rational r(1);
        for (int i = 0; i < dp; ++i) r *= q.leading();
        return r;
    }
    // Clear denominators: res(a*P, Q) = a^dq * res(P, Q).
    Integer dena(1), denb(1);
    for (const auto& c : p.coeffs()) dena = lcm(dena, c.get_den());
    for (const auto& c : q.coeffs()) denb = lcm(denb, c.get_den());
    std::vector<Integer> zp, zq;
    for (const auto& c : p.coeffs()) zp.push_back(c.get_num() * (dena / c.get_den()));
    for (const auto& c : q.coeffs()) zq.push_back(c.get_num() * (denb / c.get_den()));

    const size_t n = static_cast<size_t>(dp + dq);
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, Integer(0)));
    // dq rows of p's coefficients, then dp rows of q's.
    for (int r = 0; r < dq; ++r)
        for (int i = 0; i <= dp; ++i)
            m[static_cast<size_t>(r)][static_cast<size_t>(r + i)] =
                zp[static_cast<size_t>(dp - i)];
    for (int r = 0; r < dp; ++r)
        for (int i = 0; i <= dq; ++i)
            m[static_cast<size_t>(dq + r)][static_cast<size_t>(r + i)] =
                zq[static_cast<size_t>(dq - i)];
    Integer det = bareiss_det(m);

    Rational scale(1);
    Integer da(1), db(1);
    for (int i = 0; i < dq; ++i) da *= dena;
    for (int i = 0; i < dp; ++i) db *= denb;
    return Rational(det) / (Rational(da) * Rational(db));
}

SturmChain::SturmChain(const UniPoly& p)
{
    if (p.is_zero()) throw ZeroPolynomial();
    chain_.push_back(p.primitive());
    if (p.degree() >= 1) {
        chain_.push_back(upoly_derivative(chain_[0]).primitive());
        while (!chain_.back().is_zero() && chain_.back().degree() >= 0) {
            const UniPoly& a = chain_[chain_.size() - 2];
            const UniPoly& b = chain_.back();
            if (b.degree() == 0) break;
            UniPoly r = -upoly_rem(a, b);
            if (r.is_zero()) break;
            chain_.push_back(r.primitive());
        }
    }
}

int SturmChain::variations(const Rational& x) const
{
    int var = 0, last = 0;
    for (const auto& f : chain_) {
        int s = sign(f.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int SturmChain::variations_at_minus_inf() const
{
    int var = 0, last = 0;
    for (const auto& f : chain_) {
        int s = sign(f.leading());
        if (f.degree() % 2 != 0) s = -s;
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int SturmChain::variations_at_plus_inf() const
{
    int var = 0, last = 0;
    for (const auto& f : chain_) {
        int s = sign(f.leading());
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int SturmChain::count(const Rational& a, const Rational& b) const
{
    return variations(a) - variations(b);
}

int SturmChain::count_all() const
{
    return variations_at_minus_inf() - variations_at_plus_inf();
}

Rational cauchy_root_bound(const UniPoly& p)
{
    if (p.is_zero()) throw ZeroPolynomial();
    Rational best(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational v = rat_abs(p.coeff(static_cast<size_t>(i)) / p.leading());
        if (v > best) best = v;
    }
    return best + 1;
}

}  // namespace quartic
