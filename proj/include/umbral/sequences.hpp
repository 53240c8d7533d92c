#pragma once

#include <vector>

#include "umbral/gf.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/series.hpp"

namespace umbral {

/**
 * Signed Stirling number of the first kind S1(n, m), so that
 * (x)_n = sum_m S1(n, m) x^m.  Out-of-range indices (m > n, negatives)
 * return 0; S1(0, 0) = 1 and S1(n, 0) = 0 for n >= 1.
 *
 * Values come from a memoized triangular table grown on demand; the
 * table fill is idempotent and guarded, so concurrent readers are safe.
 */
Rational stirling1(int n, int m);

/// (x)_n as a polynomial.
Polynomial falling_poly(int n);
/// x^(n) = x (x+1) ... (x+n-1) as a polynomial.
Polynomial rising_poly(int n);

/// Coefficient of t^n is 1/(n! (n+1)^k); any integer k.
Series lif_series(int k, int order);

// Every family below is defined by expanding its generating function
// through gf_expand.  The *_polys forms return all rows p_0..p_n at once,
// which is what the identity harness consumes; the single-row forms are
// conveniences that expand and index.

/// (t/(e^t-1))^order_alpha e^{xt}
std::vector<Polynomial> bernoulli_polys(int order_alpha, int n_max);
Polynomial bernoulli_poly(int order_alpha, int n);

/// ((1-lambda)/(e^t-lambda))^order_alpha e^{xt}, lambda != 1
std::vector<Polynomial> frobenius_euler_polys(int order_alpha, const Rational& fe_lambda, int n_max);
Polynomial frobenius_euler_poly(int order_alpha, const Rational& fe_lambda, int n);

/// (t/log(1+t))^order_alpha (1+t)^{-x}
std::vector<Polynomial> cauchy1_polys(int order_alpha, int n_max);
Polynomial cauchy1_poly(int order_alpha, int n);

/// (t/((1+t) log(1+t)))^order_alpha (1+t)^{x}
std::vector<Polynomial> cauchy2_polys(int order_alpha, int n_max);
Polynomial cauchy2_poly(int order_alpha, int n);

/// (1+(1+t)^lambda)^{-mu}, the Peters prefactor.
Series peters_base_series(const Rational& lambda, long mu, int order);

/**
 * The same Peters prefactor assembled coefficient-by-coefficient from
 * the binomial composition sums instead of the power-series route; the
 * two must agree and the harness checks that they do.
 */
Series peters_base_series_composition_sum(const Rational& lambda, long mu, int order);

/// (1+(1+t)^lambda)^{-mu} (1+t)^{x}
std::vector<Polynomial> peters_polys(const Rational& lambda, long mu, int n_max);
Polynomial peters_poly(const Rational& lambda, long mu, int n);

/// Lif_k(log(1+t)) (1+t)^{-x}
std::vector<Polynomial> poly_cauchy1_polys(int k, int n_max);
Polynomial poly_cauchy1(int k, int n);

/// Lif_k(-log(1+t)) (1+t)^{x}
std::vector<Polynomial> poly_cauchy2_polys(int k, int n_max);
Polynomial poly_cauchy2(int k, int n);

}  // namespace umbral
