#include "umbral/registry.hpp"

#include <cstdlib>
#include <stdexcept>

#include "umbral/combinatorics.hpp"
#include "umbral/sequences.hpp"

namespace umbral {

EvalCache::EvalCache(MixedParams base, int order) : base_(base), order_(order) {}

const std::vector<Polynomial>& EvalCache::cp(int k, long mu) {
    auto key = std::make_pair(k, mu);
    auto it = cp_.find(key);
    if (it == cp_.end()) {
        MixedParams p{k, base_.lambda, mu};
        it = cp_.emplace(key, cp_oracle(p, order_)).first;
    }
    return it->second;
}

const std::vector<Polynomial>& EvalCache::cphat(int k, long mu) {
    auto key = std::make_pair(k, mu);
    auto it = cphat_.find(key);
    if (it == cphat_.end()) {
        MixedParams p{k, base_.lambda, mu};
        it = cphat_.emplace(key, cphat_oracle(p, order_)).first;
    }
    return it->second;
}

const std::vector<Polynomial>& EvalCache::peters() {
    if (!peters_) peters_ = peters_polys(base_.lambda, base_.mu, order_);
    return *peters_;
}

const std::vector<Polynomial>& EvalCache::poly_cauchy1() {
    if (!pc1_) pc1_ = poly_cauchy1_polys(base_.k, order_);
    return *pc1_;
}

const std::vector<Polynomial>& EvalCache::poly_cauchy2() {
    if (!pc2_) pc2_ = poly_cauchy2_polys(base_.k, order_);
    return *pc2_;
}

const std::vector<Polynomial>& EvalCache::bernoulli(int order_alpha) {
    auto it = bernoulli_.find(order_alpha);
    if (it == bernoulli_.end()) {
        it = bernoulli_.emplace(order_alpha, bernoulli_polys(order_alpha, order_)).first;
    }
    return it->second;
}

const std::vector<Polynomial>& EvalCache::frobenius_euler(int order_alpha) {
    auto it = frobenius_euler_.find(order_alpha);
    if (it == frobenius_euler_.end()) {
        it = frobenius_euler_
                 .emplace(order_alpha, frobenius_euler_polys(order_alpha, base_.lambda, order_))
                 .first;
    }
    return it->second;
}

const std::vector<Polynomial>& EvalCache::cauchy1(int order_alpha) {
    auto it = cauchy1_.find(order_alpha);
    if (it == cauchy1_.end()) {
        it = cauchy1_.emplace(order_alpha, cauchy1_polys(order_alpha, order_)).first;
    }
    return it->second;
}

const std::vector<Polynomial>& EvalCache::cauchy2(int order_alpha) {
    auto it = cauchy2_.find(order_alpha);
    if (it == cauchy2_.end()) {
        it = cauchy2_.emplace(order_alpha, cauchy2_polys(order_alpha, order_)).first;
    }
    return it->second;
}

const std::vector<Rational>& EvalCache::cauchy2_numbers() {
    if (!cauchy2_numbers_) {
        std::vector<Rational> numbers;
        for (const Polynomial& p : cauchy2(1)) numbers.push_back(p.coeff(0));
        cauchy2_numbers_ = std::move(numbers);
    }
    return *cauchy2_numbers_;
}

const Rational& EvalCache::binom_composition_sum(int w, int i) {
    auto key = std::make_pair(w, i);
    auto it = binom_comp_.find(key);
    if (it == binom_comp_.end()) {
        Rational sum(0);
        for_each_composition(w, i, [&](std::span<const int> parts) {
            Rational product(1);
            for (int p : parts) product *= rat_binomial(base_.lambda, p + 1);
            sum += product;
        });
        it = binom_comp_.emplace(key, std::move(sum)).first;
    }
    return it->second;
}

const Rational& EvalCache::multinomial_composition_sum(int w, int i) {
    auto key = std::make_pair(w, i);
    auto it = multinomial_comp_.find(key);
    if (it == multinomial_comp_.end()) {
        Rational sum(0);
        for_each_composition(w, i, [&](std::span<const int> parts) {
            std::vector<int> bumped(parts.begin(), parts.end());
            for (int& p : bumped) ++p;
            sum += multinomial(w + i, bumped);
        });
        it = multinomial_comp_.emplace(key, std::move(sum)).first;
    }
    return it->second;
}

int working_order(int n_max) {
    int order = n_max + 2;
    if (const char* env = std::getenv("UMBRAL_KERNEL_ORDER")) {
        int requested = std::atoi(env);
        if (requested > order) order = requested;
    }
    return order;
}

namespace {

Rational binom(long n, int r) { return rat_binomial(Rational(n), r); }

Polynomial scalar(const Rational& v) { return Polynomial::constant(v); }

Rational value_at_zero(const Polynomial& p) { return p.coeff(0); }

// ---- convolution identities --------------------------------------------

Polynomial t1_rhs(EvalCache& c, const EvalInput& in) {
    Polynomial out;
    for (int l = 0; l <= in.n; ++l) {
        out = out + binom(in.n, l) * value_at_zero(c.peters()[in.n - l]) * c.poly_cauchy1()[l];
    }
    return out;
}

Polynomial t2_rhs(EvalCache& c, const EvalInput& in) {
    Polynomial out;
    for (int l = 0; l <= in.n; ++l) {
        out = out + binom(in.n, l) * value_at_zero(c.poly_cauchy1()[in.n - l]) *
                        c.peters()[l].reflected();
    }
    return out;
}

Polynomial r34_rhs(EvalCache& c, const EvalInput& in) {
    Polynomial out;
    for (int l = 0; l <= in.n; ++l) {
        out = out + binom(in.n, l) * value_at_zero(c.peters()[in.n - l]) * c.poly_cauchy2()[l];
    }
    return out;
}

Polynomial r35_rhs(EvalCache& c, const EvalInput& in) {
    Polynomial out;
    for (int l = 0; l <= in.n; ++l) {
        out = out + binom(in.n, l) * value_at_zero(c.poly_cauchy2()[in.n - l]) * c.peters()[l];
    }
    return out;
}

// ---- explicit multi-index coefficient formulas ---------------------------

Polynomial t3_style_rhs(EvalCache& c, const EvalInput& in, bool hat) {
    const MixedParams& p = c.base();
    std::vector<Rational> coeffs(static_cast<std::size_t>(in.n) + 1, Rational(0));
    for (int j = 0; j <= in.n; ++j) {
        Rational acc(0);
        for (int m = 0; m <= in.n - j; ++m) {
            Rational m_block = Rational(m + 1).pow(-p.k) * Rational(factorial(m + j)) /
                               Rational(factorial(m));
            if (hat && m % 2 == 1) m_block = -m_block;
            for (int l = 0; l <= in.n - j - m; ++l) {
                Rational s1 = stirling1(l + m + j, m + j);
                if (s1.is_zero()) continue;
                Rational inner(0);
                for (int i = 0; i <= in.n - j - m - l; ++i) {
                    inner += Rational(2).pow(-i) * binom(-p.mu, i) *
                             c.binom_composition_sum(in.n - j - m - l - i, i);
                }
                acc += m_block / Rational(factorial(l + m + j)) * s1 * inner;
            }
        }
        Rational front = Rational(2).pow(-p.mu) * Rational(factorial(in.n)) /
                         Rational(factorial(j));
        if (!hat && j % 2 == 1) front = -front;
        coeffs[static_cast<std::size_t>(j)] = front * acc;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial t4_style_rhs(EvalCache& c, const EvalInput& in, bool hat, bool corrected) {
    const MixedParams& p = c.base();
    const int n = in.n;
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int r = 0; r <= n; ++r) {
        Rational acc(0);
        for (int l = 0; l <= n - r; ++l) {
            Rational l_block = binom(n - 1, l);
            if (l_block.is_zero()) continue;
            for (int m = 0; m <= n - r - l; ++m) {
                int bern_order = (hat && !corrected) ? m : n;
                Rational mid = l_block * p.lambda.pow(-(l + m)) * Rational(m + 1).pow(-p.k) *
                               binom(n - l, m) * binom(n - l - m, r) *
                               value_at_zero(c.bernoulli(bern_order)[l]);
                if (hat && m % 2 == 1) mid = -mid;
                if (mid.is_zero()) continue;
                Rational inner(0);
                for (int i = 0; i <= n - r - l - m; ++i) {
                    inner += Rational(2).pow(-i) * binom(-p.mu, i) *
                             c.multinomial_composition_sum(n - r - l - m - i, i);
                }
                acc += mid * inner;
            }
        }
        Rational front = p.lambda.pow(n) * Rational(2).pow(-p.mu) * p.lambda.pow(-r);
        if (!hat && r % 2 == 1) front = -front;
        coeffs[static_cast<std::size_t>(r)] = front * acc;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial t5_style_rhs(EvalCache& c, const EvalInput& in, bool hat) {
    const MixedParams& p = c.base();
    const int n = in.n;
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int r = 0; r <= n; ++r) {
        Rational acc(0);
        for (int l = r; l <= n; ++l) {
            Rational s1 = stirling1(n, l);
            if (s1.is_zero()) continue;
            for (int m = 0; m <= l - r; ++m) {
                Rational mid = s1 * p.lambda.pow(l - m) * Rational(m + 1).pow(-p.k) *
                               binom(l, m) * binom(l - m, r);
                if (hat && m % 2 == 1) mid = -mid;
                Rational inner(0);
                for (int i = 0; i <= l - r - m; ++i) {
                    inner += Rational(2).pow(-i) * binom(-p.mu, i) *
                             c.multinomial_composition_sum(l - r - m - i, i);
                }
                acc += mid * inner;
            }
        }
        Rational front = Rational(2).pow(-p.mu) * p.lambda.pow(-r);
        if (!hat && r % 2 == 1) front = -front;
        coeffs[static_cast<std::size_t>(r)] = front * acc;
    }
    return Polynomial(std::move(coeffs));
}

// ---- Stirling-weighted coefficient formulas ------------------------------

Polynomial t6_rhs(EvalCache& c, const EvalInput& in) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(in.n) + 1, Rational(0));
    for (int j = 0; j <= in.n; ++j) {
        Rational acc(0);
        for (int m = 0; m <= in.n; ++m) {
            acc += binom(in.n, m) * stirling1(in.n - m, j) * value_at_zero(c.cp()[m]);
        }
        coeffs[static_cast<std::size_t>(j)] = (j % 2 == 0) ? acc : -acc;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial r54_rhs(EvalCache& c, const EvalInput& in, bool corrected) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(in.n) + 1, Rational(0));
    for (int j = 0; j <= in.n; ++j) {
        Rational acc(0);
        for (int m = 0; m <= in.n; ++m) {
            int index = corrected ? m : in.n;
            acc += binom(in.n, m) * stirling1(in.n - m, j) * value_at_zero(c.cphat()[index]);
        }
        coeffs[static_cast<std::size_t>(j)] = acc;
    }
    return Polynomial(std::move(coeffs));
}

// ---- addition and difference formulas ------------------------------------

Polynomial add55_lhs(EvalCache& c, const EvalInput& in) {
    return c.cp()[in.n].shifted(in.y);
}

Polynomial add55_rhs(EvalCache& c, const EvalInput& in) {
    Polynomial out;
    for (int j = 0; j <= in.n; ++j) {
        Rational w = binom(in.n, j) * rising_factorial(in.y, j);
        if (j % 2 == 1) w = -w;
        out = out + w * c.cp()[in.n - j];
    }
    return out;
}

Polynomial add56_lhs(EvalCache& c, const EvalInput& in) {
    return c.cphat()[in.n].shifted(in.y);
}

Polynomial add56_rhs(EvalCache& c, const EvalInput& in) {
    Polynomial out;
    for (int j = 0; j <= in.n; ++j) {
        out = out + binom(in.n, j) * falling_factorial(in.y, j) * c.cphat()[in.n - j];
    }
    return out;
}

Polynomial t7_lhs(EvalCache& c, const EvalInput& in) {
    return c.cp()[in.n].shifted(Rational(-1)) - c.cp()[in.n];
}

Polynomial t7_rhs(EvalCache& c, const EvalInput& in) {
    if (in.n == 0) return Polynomial();
    return Rational(in.n) * c.cp()[in.n - 1];
}

Polynomial r59_lhs(EvalCache& c, const EvalInput& in) {
    return c.cphat()[in.n].shifted(Rational(1)) - c.cphat()[in.n];
}

Polynomial r59_rhs(EvalCache& c, const EvalInput& in) {
    if (in.n == 0) return Polynomial();
    return Rational(in.n) * c.cphat()[in.n - 1];
}

// ---- three-term recurrences at lambda = 1 ---------------------------------

Polynomial rec60_rhs(EvalCache& c, const EvalInput& in) {
    const MixedParams& p = c.base();
    const int n = in.n;
    Polynomial out = -(Polynomial::x() * c.cp()[n].shifted(Rational(1)));
    Polynomial middle;
    for (int m = 0; m <= n; ++m) {
        middle = middle + Rational(-1, 2).pow(m + 1) * falling_factorial(Rational(n), m) *
                              c.cp()[n - m];
    }
    out = out + Rational(p.mu) * middle;
    Polynomial x_plus_1({Rational(1), Rational(1)});
    Polynomial shifted_power = Polynomial::constant(Rational(1));
    for (int r = 0; r <= n; ++r) {
        Rational acc(0);
        for (int m = r; m <= n; ++m) {
            Rational s1 = stirling1(n, m);
            if (s1.is_zero()) continue;
            for (int l = r; l <= m; ++l) {
                Rational inner(0);
                for (int i = 0; i <= l - r; ++i) {
                    inner += Rational(2).pow(-i) * binom(-p.mu, i) *
                             c.multinomial_composition_sum(l - i - r, i);
                }
                acc += s1 * Rational(m - l + 2).pow(-p.k) * binom(m, l) * binom(l, r) * inner;
            }
        }
        Rational front = Rational(2).pow(-p.mu);
        if (r % 2 == 1) front = -front;
        out = out + front * acc * shifted_power;
        shifted_power = shifted_power * x_plus_1;
    }
    return out;
}

Polynomial rec61_rhs(EvalCache& c, const EvalInput& in) {
    const MixedParams& p = c.base();
    const int n = in.n;
    Polynomial out = Polynomial::x() * c.cphat()[n].shifted(Rational(-1));
    Polynomial middle;
    for (int m = 0; m <= n; ++m) {
        middle = middle + Rational(-1, 2).pow(m + 1) * falling_factorial(Rational(n), m) *
                              c.cphat()[n - m];
    }
    out = out + Rational(p.mu) * middle;
    Polynomial x_minus_1({Rational(-1), Rational(1)});
    Polynomial shifted_power = Polynomial::constant(Rational(1));
    for (int r = 0; r <= n; ++r) {
        Rational acc(0);
        for (int m = r; m <= n; ++m) {
            Rational s1 = stirling1(n, m);
            if (s1.is_zero()) continue;
            for (int l = r; l <= m; ++l) {
                Rational inner(0);
                for (int i = 0; i <= l - r; ++i) {
                    inner += Rational(2).pow(-i) * binom(-p.mu, i) *
                             c.multinomial_composition_sum(l - i - r, i);
                }
                Rational term = s1 * Rational(m - l + 2).pow(-p.k) * binom(m, l) * binom(l, r) *
                                inner;
                if ((m - l) % 2 == 1) term = -term;
                acc += term;
            }
        }
        out = out - Rational(2).pow(-p.mu) * acc * shifted_power;
        shifted_power = shifted_power * x_minus_1;
    }
    return out;
}

// ---- derivative-of-GF recurrences -----------------------------------------

Polynomial t8_rhs(EvalCache& c, const EvalInput& in) {
    const MixedParams& p = c.base();
    const int n = in.n;
    Polynomial out = Rational(-p.mu) * p.lambda *
                     c.cp(p.k, p.mu + 1)[n - 1].shifted(Rational(1) - p.lambda);
    out = out - Polynomial::x() * c.cp()[n - 1].shifted(Rational(1));
    Polynomial tail;
    for (int l = 0; l <= n - 1; ++l) {
        tail = tail + binom(n, l + 1) * c.cauchy2_numbers()[n - 1 - l] *
                          (c.cp(p.k - 1, p.mu)[l + 1] - c.cp()[l + 1]);
    }
    return out + Rational(1, n) * tail;
}

Polynomial r64_rhs(EvalCache& c, const EvalInput& in) {
    const MixedParams& p = c.base();
    const int n = in.n;
    Polynomial out = Rational(-p.mu) * p.lambda *
                     c.cphat(p.k, p.mu + 1)[n - 1].shifted(p.lambda - Rational(1));
    out = out + Polynomial::x() * c.cphat()[n - 1].shifted(Rational(-1));
    Polynomial tail;
    for (int l = 0; l <= n - 1; ++l) {
        tail = tail + binom(n, l + 1) * c.cauchy2_numbers()[n - 1 - l] *
                          (c.cphat(p.k - 1, p.mu)[l + 1] - c.cphat()[l + 1]);
    }
    return out + Rational(1, n) * tail;
}

// ---- x-derivative expansions ----------------------------------------------

Polynomial d65_rhs(EvalCache& c, const EvalInput& in) {
    Polynomial out;
    for (int l = 0; l <= in.n - 1; ++l) {
        Rational w = Rational(factorial(in.n)) /
                     (Rational(in.n - l) * Rational(factorial(l)));
        if ((in.n - l) % 2 == 1) w = -w;
        out = out + w * c.cp()[l];
    }
    return out;
}

Polynomial d66_rhs(EvalCache& c, const EvalInput& in) {
    Polynomial out;
    for (int l = 0; l <= in.n - 1; ++l) {
        Rational w = Rational(factorial(in.n)) /
                     (Rational(in.n - l) * Rational(factorial(l)));
        if ((in.n - l - 1) % 2 != 0) w = -w;
        out = out + w * c.cphat()[l];
    }
    return out;
}

// ---- scalar (n, m) identities ---------------------------------------------

Polynomial t9_lhs(EvalCache& c, const EvalInput& in) {
    Rational acc(0);
    for (int l = 0; l <= in.n - in.m; ++l) {
        acc += binom(in.n, l) * stirling1(in.n - l, in.m) * value_at_zero(c.cphat()[l]);
    }
    return scalar(Rational(in.m) * acc);
}

Polynomial t9_rhs(EvalCache& c, const EvalInput& in) {
    const MixedParams& p = c.base();
    const int n = in.n, m = in.m;
    Rational first(0);
    for (int l = 0; l <= n - 1 - m; ++l) {
        first += binom(n - 1, l) * stirling1(n - 1 - l, m) *
                 c.cphat(p.k, p.mu + 1)[l].evaluate(p.lambda - Rational(1));
    }
    Rational second(0), third(0);
    for (int l = 0; l <= n - m; ++l) {
        Rational s1 = stirling1(n - 1 - l, m - 1);
        if (s1.is_zero()) continue;
        Rational b = binom(n - 1, l);
        second += b * s1 * c.cphat(p.k - 1, p.mu)[l].evaluate(Rational(-1));
        third += b * s1 * c.cphat()[l].evaluate(Rational(-1));
    }
    return scalar(Rational(-p.mu) * p.lambda * Rational(m) * first + second +
                  Rational(m - 1) * third);
}

Polynomial r9_lhs(EvalCache& c, const EvalInput& in) {
    Rational acc(0);
    for (int l = 0; l <= in.n - in.m; ++l) {
        acc += binom(in.n, l) * stirling1(in.n - l, in.m) * value_at_zero(c.cp()[l]);
    }
    return scalar(Rational(in.m) * acc);
}

Polynomial r9_rhs(EvalCache& c, const EvalInput& in, bool corrected) {
    const MixedParams& p = c.base();
    const int n = in.n, m = in.m;
    Rational first(0);
    for (int l = 0; l <= n - 1 - m; ++l) {
        first += binom(n - 1, l) * stirling1(n - 1 - l, m) *
                 c.cp(p.k, p.mu + 1)[l].evaluate(Rational(1) - p.lambda);
    }
    Rational second(0), third(0);
    Rational third_arg = corrected ? Rational(1) : Rational(-1);
    for (int l = 0; l <= n - m; ++l) {
        Rational s1 = stirling1(n - 1 - l, m - 1);
        if (s1.is_zero()) continue;
        Rational b = binom(n - 1, l);
        second += b * s1 * c.cp(p.k - 1, p.mu)[l].evaluate(Rational(1));
        third += b * s1 * c.cp()[l].evaluate(third_arg);
    }
    return scalar(Rational(-p.mu) * p.lambda * Rational(m) * first + second +
                  Rational(m - 1) * third);
}

// ---- expansions over other Sheffer bases -----------------------------------

Polynomial t10_rhs(EvalCache& c, const EvalInput& in, bool corrected) {
    const int n = in.n, s = in.s;
    Polynomial out;
    for (int m = 0; m <= n; ++m) {
        Rational coeff(0);
        for (int l = 0; l <= n - m; ++l) {
            Rational s1 = stirling1(n - l, m);
            if (s1.is_zero()) continue;
            for (int i = 0; i <= l; ++i) {
                coeff += binom(n, l) * binom(l, i) * s1 *
                         value_at_zero(c.cauchy1(s)[i]) *
                         c.cp()[l - i].evaluate(Rational(s));
            }
        }
        if (m % 2 == 1) coeff = -coeff;
        const Polynomial& basis = corrected ? c.bernoulli(s)[m] : c.bernoulli(s)[n];
        out = out + coeff * basis;
    }
    return out;
}

Polynomial r73_rhs(EvalCache& c, const EvalInput& in) {
    const int n = in.n, s = in.s;
    Polynomial out;
    for (int m = 0; m <= n; ++m) {
        Rational coeff(0);
        for (int l = 0; l <= n - m; ++l) {
            Rational s1 = stirling1(n - l, m);
            if (s1.is_zero()) continue;
            for (int i = 0; i <= l; ++i) {
                coeff += binom(n, l) * binom(l, i) * s1 *
                         value_at_zero(c.cauchy2(s)[i]) *
                         c.cphat()[l - i].evaluate(Rational(s));
            }
        }
        out = out + coeff * c.bernoulli(s)[m];
    }
    return out;
}

Polynomial t11_rhs(EvalCache& c, const EvalInput& in) {
    const MixedParams& p = c.base();
    const int n = in.n, s = in.s;
    Rational weight_base = p.lambda / (p.lambda - Rational(1));
    Polynomial out;
    for (int m = 0; m <= n; ++m) {
        Rational coeff(0);
        for (int l = 0; l <= n - m; ++l) {
            Rational s1 = stirling1(n - l, m);
            if (s1.is_zero()) continue;
            for (int i = 0; i <= std::min(s, l); ++i) {
                coeff += binom(n, l) * binom(s, i) * falling_factorial(Rational(l), i) *
                         weight_base.pow(i) * s1 * c.cp()[l - i].evaluate(Rational(s));
            }
        }
        if (m % 2 == 1) coeff = -coeff;
        out = out + coeff * c.frobenius_euler(s)[m];
    }
    return out;
}

Polynomial r11_rhs(EvalCache& c, const EvalInput& in) {
    const MixedParams& p = c.base();
    const int n = in.n, s = in.s;
    Rational weight_base = Rational(1) / (Rational(1) - p.lambda);
    Polynomial out;
    for (int m = 0; m <= n; ++m) {
        Rational coeff(0);
        for (int l = 0; l <= n - m; ++l) {
            Rational s1 = stirling1(n - l, m);
            if (s1.is_zero()) continue;
            for (int i = 0; i <= std::min(s, l); ++i) {
                coeff += binom(n, l) * binom(s, i) * falling_factorial(Rational(l), i) *
                         weight_base.pow(i) * s1 * value_at_zero(c.cphat()[l - i]);
            }
        }
        out = out + coeff * c.frobenius_euler(s)[m];
    }
    return out;
}

Polynomial t12_rhs(EvalCache& c, const EvalInput& in) {
    Polynomial out;
    for (int m = 0; m <= in.n; ++m) {
        Rational w = binom(in.n, m) * value_at_zero(c.cp()[in.n - m]);
        if (m % 2 == 1) w = -w;
        out = out + w * rising_poly(m);
    }
    return out;
}

Polynomial r78_rhs(EvalCache& c, const EvalInput& in) {
    Polynomial out;
    for (int m = 0; m <= in.n; ++m) {
        out = out + binom(in.n, m) * value_at_zero(c.cphat()[in.n - m]) * falling_poly(m);
    }
    return out;
}

// ---- registry assembly -----------------------------------------------------

Evaluator cp_row() {
    return [](EvalCache& c, const EvalInput& in) { return c.cp()[in.n]; };
}

Evaluator cphat_row() {
    return [](EvalCache& c, const EvalInput& in) { return c.cphat()[in.n]; };
}

std::vector<IdentityDescriptor> build_registry() {
    std::vector<IdentityDescriptor> reg;
    auto add = [&reg](IdentityDescriptor d) { reg.push_back(std::move(d)); };

    {
        IdentityDescriptor d;
        d.id = "T1";
        d.statement = "CP_n(x) = sum_l C(n,l) S_{n-l}(0) C_l(x)";
        d.suite = Suite::A;
        d.lhs = cp_row();
        d.rhs = t1_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "T2";
        d.statement = "CP_n(x) = sum_l C(n,l) C_{n-l}(0) S_l(-x)";
        d.suite = Suite::A;
        d.lhs = cp_row();
        d.rhs = t2_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "R34";
        d.statement = "CPh_n(x) = sum_l C(n,l) S_{n-l}(0) Ch_l(x)";
        d.suite = Suite::A;
        d.lhs = cphat_row();
        d.rhs = r34_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "R35";
        d.statement = "CPh_n(x) = sum_l C(n,l) Ch_{n-l}(0) S_l(x)";
        d.suite = Suite::A;
        d.lhs = cphat_row();
        d.rhs = r35_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "T3";
        d.statement = "CP_n(x) = 2^-mu n! sum_j (-1)^j/j! {quadruple Stirling/binomial sum} x^j";
        d.lhs = cp_row();
        d.rhs = [](EvalCache& c, const EvalInput& in) { return t3_style_rhs(c, in, false); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "R38";
        d.statement = "CPh_n(x) = 2^-mu n! sum_j 1/j! {quadruple sum with (-1)^m} x^j";
        d.lhs = cphat_row();
        d.rhs = [](EvalCache& c, const EvalInput& in) { return t3_style_rhs(c, in, true); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "T4";
        d.statement = "CP_n(x) = lambda^n 2^-mu sum_r (-1/lambda)^r {B_l^(n)-weighted sum} x^r";
        d.lhs = cp_row();
        d.rhs = [](EvalCache& c, const EvalInput& in) { return t4_style_rhs(c, in, false, false); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "R43";
        d.statement = "CPh_n(x) = lambda^n 2^-mu sum_r lambda^-r {B_l^(m)-weighted sum} x^r";
        d.lhs = cphat_row();
        d.rhs = [](EvalCache& c, const EvalInput& in) { return t4_style_rhs(c, in, true, false); };
        d.correction = "Bernoulli-number order: B_l^(m) -> B_l^(n)";
        d.corrected_rhs = [](EvalCache& c, const EvalInput& in) {
            return t4_style_rhs(c, in, true, true);
        };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "T5";
        d.statement = "CP_n(x) = 2^-mu sum_r (-1/lambda)^r {S1(n,l)-weighted sum} x^r";
        d.lhs = cp_row();
        d.rhs = [](EvalCache& c, const EvalInput& in) { return t5_style_rhs(c, in, false); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "R51";
        d.statement = "CPh_n(x) = 2^-mu sum_r lambda^-r {S1(n,l)-weighted sum, (-1)^m} x^r";
        d.lhs = cphat_row();
        d.rhs = [](EvalCache& c, const EvalInput& in) { return t5_style_rhs(c, in, true); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "T6";
        d.statement = "CP_n(x) = sum_j (-1)^j {sum_m C(n,m) S1(n-m,j) CP_m(0)} x^j";
        d.suite = Suite::A;
        d.lhs = cp_row();
        d.rhs = t6_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "R54";
        d.statement = "CPh_n(x) = sum_j {sum_m C(n,m) S1(n-m,j) CPh_n(0)} x^j";
        d.lhs = cphat_row();
        d.rhs = [](EvalCache& c, const EvalInput& in) { return r54_rhs(c, in, false); };
        d.correction = "mixed-number subscript: CPh_n(0) -> CPh_m(0)";
        d.corrected_rhs = [](EvalCache& c, const EvalInput& in) { return r54_rhs(c, in, true); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "ADD55";
        d.statement = "CP_n(x+y) = sum_j (-1)^j C(n,j) CP_{n-j}(x) y^(j)";
        d.kind = IdentityKind::PolyInXY;
        d.suite = Suite::A;
        d.uses_y = true;
        d.lhs = add55_lhs;
        d.rhs = add55_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "ADD56";
        d.statement = "CPh_n(x+y) = sum_j C(n,j) CPh_{n-j}(x) (y)_j";
        d.kind = IdentityKind::PolyInXY;
        d.suite = Suite::A;
        d.uses_y = true;
        d.lhs = add56_lhs;
        d.rhs = add56_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "T7";
        d.statement = "CP_n(x-1) - CP_n(x) = n CP_{n-1}(x)";
        d.suite = Suite::A;
        d.lhs = t7_lhs;
        d.rhs = t7_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "R59";
        d.statement = "CPh_n(x+1) - CPh_n(x) = n CPh_{n-1}(x)";
        d.suite = Suite::A;
        d.lhs = r59_lhs;
        d.rhs = r59_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "REC60";
        d.statement = "CP_{n+1}(x;1,mu) = -x CP_n(x+1) + mu sum (-1/2)^{m+1} (n)_m CP_{n-m}(x) + {(x+1)^r sum}";
        d.lambda_must_be_one = true;
        d.lhs_index_offset = 1;
        d.lhs = [](EvalCache& c, const EvalInput& in) { return c.cp()[in.n + 1]; };
        d.rhs = rec60_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "REC61";
        d.statement = "CPh_{n+1}(x;1,mu) = x CPh_n(x-1) + mu sum (-1/2)^{m+1} (n)_m CPh_{n-m}(x) - {(x-1)^r sum}";
        d.lambda_must_be_one = true;
        d.lhs_index_offset = 1;
        d.lhs = [](EvalCache& c, const EvalInput& in) { return c.cphat()[in.n + 1]; };
        d.rhs = rec61_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "T8";
        d.statement =
            "CP_n(x) = -mu lambda CP_{n-1}(x-lambda+1; mu+1) - x CP_{n-1}(x+1) + (1/n) sum "
            "C(n,l+1) Ch_{n-1-l} (CP_{l+1}^{k-1} - CP_{l+1}^{k})";
        d.min_n = 1;
        d.lhs = cp_row();
        d.rhs = t8_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "R64";
        d.statement =
            "CPh_n(x) = -mu lambda CPh_{n-1}(x+lambda-1; mu+1) + x CPh_{n-1}(x-1) + (1/n) sum "
            "C(n,l+1) Ch_{n-1-l} (CPh_{l+1}^{k-1} - CPh_{l+1}^{k})";
        d.min_n = 1;
        d.lhs = cphat_row();
        d.rhs = r64_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "D65";
        d.statement = "d/dx CP_n(x) = n! sum_l (-1)^{n-l}/((n-l) l!) CP_l(x)";
        d.suite = Suite::A;
        d.lhs = [](EvalCache& c, const EvalInput& in) { return c.cp()[in.n].derivative(); };
        d.rhs = d65_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "D66";
        d.statement = "d/dx CPh_n(x) = n! sum_l (-1)^{n-l-1}/((n-l) l!) CPh_l(x)";
        d.suite = Suite::A;
        d.lhs = [](EvalCache& c, const EvalInput& in) { return c.cphat()[in.n].derivative(); };
        d.rhs = d66_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "T9";
        d.statement =
            "m sum_l C(n,l) S1(n-l,m) CPh_l(0) = -mu lambda m {...}(lambda-1; mu+1) + "
            "{...}^{k-1}(-1) + (m-1){...}(-1)";
        d.kind = IdentityKind::ScalarNM;
        d.min_n = 2;
        d.lhs = t9_lhs;
        d.rhs = t9_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "R9";
        d.statement =
            "m sum_l C(n,l) S1(n-l,m) CP_l(0) = -mu lambda m {...}(1-lambda; mu+1) + "
            "{...}^{k-1}(1) + (m-1){...}(-1)";
        d.kind = IdentityKind::ScalarNM;
        d.min_n = 2;
        d.lhs = r9_lhs;
        d.rhs = [](EvalCache& c, const EvalInput& in) { return r9_rhs(c, in, false); };
        d.correction = "argument of the final mixed-polynomial value: -1 -> 1";
        d.corrected_rhs = [](EvalCache& c, const EvalInput& in) { return r9_rhs(c, in, true); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "T10";
        d.statement = "CP_n(x) = sum_m (-1)^m {C- and CP-weighted sum} B_n^(s)(x)";
        d.uses_s = true;
        d.lhs = cp_row();
        d.rhs = [](EvalCache& c, const EvalInput& in) { return t10_rhs(c, in, false); };
        d.correction = "Bernoulli basis subscript: B_n^(s)(x) -> B_m^(s)(x)";
        d.corrected_rhs = [](EvalCache& c, const EvalInput& in) { return t10_rhs(c, in, true); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "R73";
        d.statement = "CPh_n(x) = sum_m {Ch- and CPh-weighted sum} B_m^(s)(x)";
        d.uses_s = true;
        d.lhs = cphat_row();
        d.rhs = r73_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "T11";
        d.statement = "CP_n(x) = sum_m (-1)^m {(lambda/(lambda-1))^i-weighted sum} H_m^(s)(x;lambda)";
        d.uses_s = true;
        d.lambda_must_differ_from_one = true;
        d.lhs = cp_row();
        d.rhs = t11_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "R11";
        d.statement = "CPh_n(x) = sum_m {(1/(1-lambda))^i-weighted sum, CPh(0)} H_m^(s)(x;lambda)";
        d.uses_s = true;
        d.lambda_must_differ_from_one = true;
        d.lhs = cphat_row();
        d.rhs = r11_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "T12";
        d.statement = "CP_n(x) = sum_m (-1)^m C(n,m) CP_{n-m}(0) x^(m)";
        d.suite = Suite::A;
        d.lhs = cp_row();
        d.rhs = t12_rhs;
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "R78";
        d.statement = "CPh_n(x) = sum_m C(n,m) CPh_{n-m}(0) (x)_m";
        d.suite = Suite::A;
        d.lhs = cphat_row();
        d.rhs = r78_rhs;
        add(std::move(d));
    }
    return reg;
}

}  // namespace

const std::vector<IdentityDescriptor>& identity_registry() {
    static const std::vector<IdentityDescriptor> registry = build_registry();
    return registry;
}

const IdentityDescriptor* find_identity(const std::string& id) {
    for (const auto& d : identity_registry()) {
        if (d.id == id) return &d;
    }
    return nullptr;
}

namespace {

// T4/T5-style displays pull out inverse powers of lambda, so evaluating
// them verbatim needs lambda != 0.
bool requires_nonzero_lambda(const std::string& id) {
    return id == "T4" || id == "R43" || id == "T5" || id == "R51";
}

}  // namespace

IdentityReport identity_eval(const std::string& id, const MixedParams& params, int n_max,
                             const AuxValues& aux, bool corrected) {
    const IdentityDescriptor* desc = find_identity(id);
    if (!desc) throw std::invalid_argument("identity_eval: unknown identity '" + id + "'");
    if (n_max < 0) throw std::invalid_argument("identity_eval: negative n_max");
    if (desc->lambda_must_be_one && params.lambda != Rational(1)) {
        throw std::invalid_argument(id + ": stated only for lambda = 1");
    }
    if (desc->lambda_must_differ_from_one && params.lambda == Rational(1)) {
        throw std::invalid_argument(id + ": requires lambda != 1");
    }
    if (requires_nonzero_lambda(id) && params.lambda.is_zero()) {
        throw std::invalid_argument(id + ": stated form needs lambda != 0");
    }
    if (desc->uses_s && !aux.s) throw std::invalid_argument(id + ": auxiliary order s required");
    if (desc->uses_y && !aux.y) throw std::invalid_argument(id + ": auxiliary shift y required");
    if (corrected && desc->correction.empty()) {
        throw std::invalid_argument(id + ": no correction registered");
    }

    IdentityReport report;
    report.id = id;
    report.params = params;
    report.n_max = n_max;
    if (desc->uses_s) report.aux["s"] = std::to_string(*aux.s);
    if (desc->uses_y) report.aux["y"] = aux.y->str();
    report.status = "verified";

    EvalCache cache(params, working_order(n_max));
    EvalInput in;
    if (desc->uses_s) in.s = *aux.s;
    if (desc->uses_y) in.y = *aux.y;

    const Evaluator& rhs_eval = corrected ? desc->corrected_rhs : desc->rhs;
    const int hi = n_max - desc->lhs_index_offset;
    for (int n = desc->min_n; n <= hi && report.status == "verified"; ++n) {
        in.n = n;
        std::vector<int> m_values;
        if (desc->kind == IdentityKind::ScalarNM) {
            for (int m = 1; m <= n - 1; ++m) m_values.push_back(m);
        } else {
            m_values.push_back(0);
        }
        for (int m : m_values) {
            in.m = m;
            Polynomial lhs = desc->lhs(cache, in);
            Polynomial rhs = rhs_eval(cache, in);
            if (lhs == rhs) continue;
            int top = std::max(lhs.degree(), rhs.degree());
            for (int idx = 0; idx <= top; ++idx) {
                if (lhs.coeff(idx) == rhs.coeff(idx)) continue;
                FirstFail fail;
                fail.n = n;
                if (desc->kind == IdentityKind::ScalarNM) fail.m = m;
                fail.coeff_index = idx;
                fail.lhs = lhs.coeff(idx).str();
                fail.rhs = rhs.coeff(idx).str();
                report.first_fail = fail;
                break;
            }
            report.status = "failed";
            break;
        }
    }
    return report;
}

IdentityReport mu_certification(const std::string& id, int k, const Rational& lambda, int n,
                                const AuxValues& aux) {
    if (n < 0) throw std::invalid_argument("mu_certification: negative n");
    const int degree_bound = n == 0 ? 0 : 2 * n + 2;
    for (long mu = 1; mu <= degree_bound + 1; ++mu) {
        MixedParams params{k, lambda, mu};
        IdentityReport r = identity_eval(id, params, n, aux);
        if (!r.verified()) {
            r.certificate = "mu-certification failed at mu = " + std::to_string(mu);
            return r;
        }
    }
    IdentityReport report;
    report.id = id;
    report.params = MixedParams{k, lambda, 1};
    report.n_max = n;
    report.status = "verified";
    report.aux["mu_range"] = "1.." + std::to_string(degree_bound + 1);
    report.certificate =
        "after clearing the shared 2^-mu factor both sides are polynomials in mu of degree <= " +
        std::to_string(degree_bound) + "; exact agreement at mu = 1.." +
        std::to_string(degree_bound + 1) + " certifies the identity in mu at this (k, lambda, n)";
    return report;
}

}  // namespace umbral
