#pragma once

#include <utility>

#include "umbral/polynomial.hpp"
#include "umbral/series.hpp"

namespace umbral {

/**
 * Pairing of a series with a polynomial: with f = sum a_k t^k / k!
 * (so a_k = k! c_k in ordinary coefficients), <f | x^n> = a_n and the
 * action extends linearly.  Defined only for deg(p) <= order(f);
 * insufficient truncation is rejected rather than silently dropped.
 */
Rational pairing(const Series& f, const Polynomial& p);

/**
 * Series acting on polynomials as a differential operator via
 * t^k x^n = (n)_k x^{n-k}, i.e. f(t) p(x) = sum_k c_k p^(k)(x).
 * Exact whenever order(f) >= deg(p); higher terms annihilate p.
 */
Polynomial apply_series(const Series& f, const Polynomial& p);

/// A series viewed as a linear functional on polynomials.
class LinearFunctional {
public:
    explicit LinearFunctional(Series s) : series_(std::move(s)) {}

    int order() const { return series_.order(); }
    const Series& series() const { return series_; }

    Rational operator()(const Polynomial& p) const { return pairing(series_, p); }

private:
    Series series_;
};

/// Both sides of <f(t) | x p(x)> = <d/dt f(t) | p(x)>; they must agree.
std::pair<Rational, Rational> functional_xp_check(const Series& f, const Polynomial& p);

}  // namespace umbral
