#pragma once

#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/series.hpp"
#include "umbral/sheffer.hpp"

namespace umbral {

/**
 * Parameter triple for the mixed-type families: the polylog-factorial
 * index k (any integer), the Peters lambda (any rational) and the
 * Peters mu (any integer; integer mu keeps every coefficient rational).
 */
struct MixedParams {
    int k = 1;
    Rational lambda = Rational(1);
    long mu = 1;

    friend bool operator==(const MixedParams& a, const MixedParams& b) {
        return a.k == b.k && a.lambda == b.lambda && a.mu == b.mu;
    }
};

/**
 * CP_0..CP_n from the defining generating function
 * (1+(1+t)^lambda)^{-mu} Lif_k(log(1+t)) (1+t)^{-x}.
 * This expansion is the kernel's ground truth for the mixed family of
 * the first kind; every other construction is checked against it.
 */
std::vector<Polynomial> cp_oracle(const MixedParams& params, int n_max);

/**
 * The second-kind analogue, from
 * (1+(1+t)^lambda)^{-mu} Lif_k(-log(1+t)) (1+t)^{x}.
 */
std::vector<Polynomial> cphat_oracle(const MixedParams& params, int n_max);

/// ((1+e^{-lambda t})^mu / Lif_k(-t), e^{-t}-1): the CP Sheffer pair.
ShefferPair cp_sheffer_pair(const MixedParams& params, int order);

/// ((1+e^{lambda t})^mu / Lif_k(-t), e^{t}-1): the hat-CP Sheffer pair.
ShefferPair cphat_sheffer_pair(const MixedParams& params, int order);

/// (1 + e^{c t})^mu via the power-series route.
Series one_plus_exp_pow(const Rational& c, long mu, int order);

/**
 * The same series assembled from the multinomial composition sums,
 * coefficient by coefficient; must agree with one_plus_exp_pow.
 */
Series one_plus_exp_pow_composition_sum(const Rational& c, long mu, int order);

}  // namespace umbral
