#include "leibniz/poly.hpp"

#include "leibniz/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace leibniz {

Poly::Poly(std::vector<Rational> coeffs)
    : c_(std::move(coeffs))
{
    trim();
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, int degree)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Rational>& roots)
{
    Poly p = constant(1);
    for (const auto& r : roots)
        p = p * Poly({-r, Rational(1)});
    return p;
}

void Poly::trim()
{
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

Rational Poly::coefficient(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return 0;
    return c_[i];
}

Rational Poly::eval(const Rational& t) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

Poly Poly::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::monic() const
{
    if (is_zero())
        return *this;
    const Rational lead = leading();
    std::vector<Rational> v = c_;
    for (auto& x : v)
        x /= lead;
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const Rational& c, const Poly& a)
{
    std::vector<Rational> v = a.c_;
    for (auto& x : v)
        x *= c;
    return Poly(std::move(v));
}

Poly Poly::operator-() const { return Rational(-1) * *this; }

std::string Poly::str() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (sgn(c) == 0)
            continue;
        if (!out.empty())
            out += sgn(c) > 0 ? " + " : " - ";
        else if (sgn(c) < 0)
            out += "-";
        const Rational a = abs(c);
        if (i == 0 || a != 1)
            out += to_string(a);
        if (i >= 1)
            out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw UsageError("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    const int dq = a.degree() - db;
    if (dq < 0)
        return {Poly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(dq) + 1, Rational(0));
    const Rational lead = b.leading();
    for (int k = dq; k >= 0; --k) {
        const Rational f = r[k + db] / lead;
        q[k] = f;
        if (sgn(f) == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            r[k + j] -= f * b.coeffs()[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<Poly> sturm_sequence(const Poly& p)
{
    std::vector<Poly> seq;
    if (p.is_zero())
        return seq;
    seq.push_back(p);
    Poly d = p.derivative();
    if (d.is_zero())
        return seq;
    seq.push_back(d);
    while (true) {
        Poly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero())
            break;
        seq.push_back(-r);
    }
    return seq;
}

namespace {

// Sign of p at +infinity (positive side) or -infinity.
int sign_at_infinity(const Poly& p, bool positive)
{
    const int s = sgn(p.leading());
    if (positive || p.degree() % 2 == 0)
        return s;
    return -s;
}

int sign_changes(const std::vector<int>& signs)
{
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace

int real_root_count(const Poly& p)
{
    if (p.is_zero())
        throw UsageError("real_root_count of the zero polynomial");
    const auto seq = sturm_sequence(p);
    std::vector<int> neg, pos;
    for (const auto& q : seq) {
        neg.push_back(sign_at_infinity(q, false));
        pos.push_back(sign_at_infinity(q, true));
    }
    return sign_changes(neg) - sign_changes(pos);
}

namespace {

std::vector<mpz_class> divisors(mpz_class v)
{
    v = abs(v);
    std::vector<mpz_class> out;
    if (v == 0)
        return out;
    for (mpz_class d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v)
                out.push_back(v / d);
        }
    return out;
}

} // namespace

std::vector<Rational> rational_roots(const Poly& p)
{
    if (p.is_zero())
        throw UsageError("rational_roots of the zero polynomial");
    std::set<Rational> found;
    // Strip the factor t^m; zero is a root when m > 0.
    std::size_t low = 0;
    while (sgn(p.coeffs()[low]) == 0)
        ++low;
    if (low > 0)
        found.insert(Rational(0));
    // Clear denominators to an integer polynomial.
    mpz_class l = 1;
    for (std::size_t i = low; i < p.coeffs().size(); ++i)
        l = lcm(l, p.coeffs()[i].get_den());
    std::vector<mpz_class> z;
    for (std::size_t i = low; i < p.coeffs().size(); ++i) {
        Rational v = p.coeffs()[i] * l;
        z.push_back(v.get_num());
    }
    for (const auto& num : divisors(z.front()))
        for (const auto& den : divisors(z.back()))
            for (int s : {1, -1}) {
                Rational cand(num * s, den);
                cand.canonicalize();
                if (sgn(p.eval(cand)) == 0)
                    found.insert(cand);
            }
    return {found.begin(), found.end()};
}

} // namespace leibniz
