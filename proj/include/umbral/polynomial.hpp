#pragma once

#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/**
 * Dense polynomial in x over the rationals.  Trailing zero coefficients
 * are trimmed on construction, so equality ignores them and the zero
 * polynomial is the empty sequence (degree -1).
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial x();
    static Polynomial monomial(int degree, const Rational& coeff);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational evaluate(const Rational& x) const;

    /// p(x + c)
    Polynomial shifted(const Rational& c) const;
    /// p(-x)
    Polynomial reflected() const;
    /// d/dx
    Polynomial derivative() const;
    /// p(x)/x; requires p(0) = 0.
    Polynomial divided_by_x() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim();

    std::vector<Rational> c_;
};

}  // namespace umbral
