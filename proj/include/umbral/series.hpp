#pragma once

#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/**
 * Truncated formal power series of a fixed truncation order N over the
 * rationals: exactly N+1 coefficients, coeff(i) multiplying t^i.
 *
 * These are the ordinary coefficients c_i; the divided coefficients
 * used by the linear-functional pairing are i! * c_i (see functional.hpp).
 *
 * Binary operations require equal orders and reject mismatches; callers
 * truncate explicitly.  Silent order promotion would hide precision
 * bugs in the identity harness.
 */
class Series {
public:
    explicit Series(int order);
    Series(int order, std::vector<Rational> coeffs);

    static Series zero(int order) { return Series(order); }
    static Series one(int order);
    static Series t(int order);
    static Series constant(const Rational& c, int order);

    int order() const { return order_; }
    const Rational& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
    void set_coeff(int i, Rational value) { c_.at(static_cast<std::size_t>(i)) = std::move(value); }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Order-1 series: zero constant term, nonzero linear term.
    bool is_delta() const { return order_ >= 1 && c_[0].is_zero() && !c_[1].is_zero(); }
    /// Nonzero constant term; admits a multiplicative inverse.
    bool is_invertible() const { return !c_[0].is_zero(); }

    Series truncated(int new_order) const;

    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    int order_;
    std::vector<Rational> c_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& c, const Series& a);
Series operator-(const Series& a);

/// outer(inner(t)); inner must have zero constant term.
Series compose(const Series& outer, const Series& inner);

/// The unique fbar with f(fbar(t)) = t mod t^{N+1}; f must be a delta series.
Series compositional_inverse(const Series& f);

/// Multiplicative inverse; f must be invertible.
Series multiplicative_inverse(const Series& f);

/// Formal log; requires constant term 1.
Series log(const Series& f);

/// Formal exp; requires zero constant term.
Series exp(const Series& f);

/**
 * f^alpha.  Integer alpha works for any invertible series (repeated
 * multiplication, inverting first when alpha < 0); non-integer rational
 * alpha requires constant term 1 and goes through exp(alpha log f).
 */
Series pow(const Series& f, const Rational& alpha);

/// Formal d/dt, padded back to the same order with a trailing zero.
/// The top coefficient of the result is unreliable by construction;
/// callers work at order >= n+2 for degree-n questions.
Series derivative(const Series& f);

/// (1+t)^lambda: coefficients rat_binomial(lambda, i).
Series one_plus_t_pow(const Rational& lambda, int order);

/// log(1+t) = t - t^2/2 + t^3/3 - ...
Series log_one_plus_t(int order);

/// e^{ct}.
Series exp_t(const Rational& c, int order);

}  // namespace umbral
