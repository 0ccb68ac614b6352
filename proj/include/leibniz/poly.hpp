#pragma once

#include "leibniz/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace leibniz {

// Univariate polynomial over Q, coefficients in ascending degree.
// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int degree);
    // prod (t - r_i)
    static Poly from_roots(const std::vector<Rational>& roots);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Rational& leading() const { return c_.back(); }
    Rational coefficient(int i) const;

    Rational eval(const Rational& t) const;
    Poly derivative() const;
    Poly monic() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& a);
    Poly operator-() const;

    bool operator==(const Poly& o) const = default;

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient and remainder; throws UsageError on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// p, p', -rem(p, p'), ... down to the last nonzero remainder.
std::vector<Poly> sturm_sequence(const Poly& p);
// Number of distinct real roots. The zero polynomial is rejected.
int real_root_count(const Poly& p);

// Rational roots by the rational root theorem, each listed once. Intended as
// an independent check on the Sturm count.
std::vector<Rational> rational_roots(const Poly& p);

} // namespace leibniz
