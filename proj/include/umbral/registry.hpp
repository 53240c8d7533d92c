#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umbral/mixed.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/report.hpp"

namespace umbral {

enum class IdentityKind {
    PolyInX,   // polynomial identity in x for each n
    PolyInXY,  // polynomial identity in x for each n and shift y
    ScalarNM,  // scalar identity over pairs (n, m), 1 <= m <= n-1
};

enum class Suite { A, B };

/// Auxiliary parameters an identity may require.
struct AuxValues {
    std::optional<int> s;
    std::optional<Rational> y;
};

/**
 * Per-evaluation cache of family tables at one parameter point and one
 * working truncation order.  Keyed lookups cover the shifted parameter
 * variants (k-1, mu+1) the recurrence identities reach for, plus the
 * two composition-sum kernels shared by the explicit multi-index
 * formulas.
 */
class EvalCache {
public:
    EvalCache(MixedParams base, int order);

    const MixedParams& base() const { return base_; }
    int order() const { return order_; }

    const std::vector<Polynomial>& cp(int k, long mu);
    const std::vector<Polynomial>& cphat(int k, long mu);
    const std::vector<Polynomial>& cp() { return cp(base_.k, base_.mu); }
    const std::vector<Polynomial>& cphat() { return cphat(base_.k, base_.mu); }

    const std::vector<Polynomial>& peters();
    const std::vector<Polynomial>& poly_cauchy1();
    const std::vector<Polynomial>& poly_cauchy2();
    const std::vector<Polynomial>& bernoulli(int order_alpha);
    const std::vector<Polynomial>& frobenius_euler(int order_alpha);
    const std::vector<Polynomial>& cauchy1(int order_alpha);
    const std::vector<Polynomial>& cauchy2(int order_alpha);

    /// Cauchy numbers of the second kind, order 1, evaluated at 0.
    const std::vector<Rational>& cauchy2_numbers();

    /// Sum over compositions of w into i parts of prod rat_binomial(lambda, part+1).
    const Rational& binom_composition_sum(int w, int i);
    /// Sum over compositions of w into i parts of multinomial(w+i, parts+1).
    const Rational& multinomial_composition_sum(int w, int i);

private:
    MixedParams base_;
    int order_;
    std::map<std::pair<int, long>, std::vector<Polynomial>> cp_;
    std::map<std::pair<int, long>, std::vector<Polynomial>> cphat_;
    std::optional<std::vector<Polynomial>> peters_;
    std::optional<std::vector<Polynomial>> pc1_;
    std::optional<std::vector<Polynomial>> pc2_;
    std::map<int, std::vector<Polynomial>> bernoulli_;
    std::map<int, std::vector<Polynomial>> frobenius_euler_;
    std::map<int, std::vector<Polynomial>> cauchy1_;
    std::map<int, std::vector<Polynomial>> cauchy2_;
    std::optional<std::vector<Rational>> cauchy2_numbers_;
    std::map<std::pair<int, int>, Rational> binom_comp_;
    std::map<std::pair<int, int>, Rational> multinomial_comp_;
};

struct EvalInput {
    int n = 0;
    int m = 0;        // ScalarNM inner index
    int s = 0;        // auxiliary order
    Rational y;       // auxiliary shift
};

using Evaluator = std::function<Polynomial(EvalCache&, const EvalInput&)>;

/**
 * One registered identity: the stated closed form (rhs) against the
 * generating-function ground truth (lhs), plus an optional minimal
 * correction when the stated form is known to need one.
 */
struct IdentityDescriptor {
    std::string id;
    std::string statement;
    IdentityKind kind = IdentityKind::PolyInX;
    Suite suite = Suite::B;
    int min_n = 0;
    int lhs_index_offset = 0;  // rows n+offset are consumed, capping usable n
    bool lambda_must_be_one = false;
    bool lambda_must_differ_from_one = false;
    bool uses_s = false;
    bool uses_y = false;
    Evaluator lhs;
    Evaluator rhs;
    std::string correction;    // one-token fix description; empty if none registered
    Evaluator corrected_rhs;   // present exactly when correction is nonempty
};

/// The thirty registered identities, in canonical registry order.
const std::vector<IdentityDescriptor>& identity_registry();

/// Null when the id is unknown.
const IdentityDescriptor* find_identity(const std::string& id);

/// Working truncation order for a given maximal degree; the
/// UMBRAL_KERNEL_ORDER environment variable may raise it.
int working_order(int n_max);

/**
 * Evaluates one identity exactly over n = min_n..n_max at one parameter
 * point (and the aux value it requires), comparing every coefficient.
 * With `corrected` set, the registered correction replaces the stated
 * right-hand side; requesting a correction that does not exist is an error.
 */
IdentityReport identity_eval(const std::string& id, const MixedParams& params, int n_max,
                             const AuxValues& aux = {}, bool corrected = false);

/**
 * Exactness-in-mu certificate at fixed (k, lambda, n): both sides are
 * 2^{-mu} times polynomials in mu of degree at most D(n) = 2n+2 (0 for
 * n = 0), so exact agreement at the D(n)+1 integer points mu = 1..D+1
 * certifies the identity as a function of mu.
 */
IdentityReport mu_certification(const std::string& id, int k, const Rational& lambda, int n,
                                const AuxValues& aux = {});

}  // namespace umbral
