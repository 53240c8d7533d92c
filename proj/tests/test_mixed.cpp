#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "umbral/combinatorics.hpp"
#include "umbral/gf.hpp"
#include "umbral/mixed.hpp"
#include "umbral/sequences.hpp"
#include "umbral/sheffer.hpp"

#include "test_util.hpp"

using namespace umbral;
using testutil::poly;
using testutil::rat;

namespace {

const std::vector<MixedParams> kProbe = {
    {1, Rational(1), 1},   {2, rat("1/2"), 2}, {-1, Rational(2), -1},
    {0, Rational(3), 0},   {1, Rational(-1), 3}, {3, rat("1/2"), -2},
};

}  // namespace

TEST_CASE("frozen small tables for the mixed families") {
    auto cp = cp_oracle({1, Rational(1), 1}, 4);
    CHECK(cp[0] == poly({"1/2"}));
    CHECK(cp[1] == poly({"0", "-1/2"}));
    CHECK(cp[2] == poly({"-1/12", "1/2", "1/2"}));
    CHECK(cp[3] == poly({"1/4", "-3/4", "-3/2", "-1/2"}));
    CHECK(cp[4] == poly({"-49/60", "3/2", "5", "3", "1/2"}));

    auto cph = cphat_oracle({1, Rational(1), 1}, 4);
    CHECK(cph[0] == poly({"1/2"}));
    CHECK(cph[1] == poly({"-1/2", "1/2"}));
    CHECK(cph[2] == poly({"11/12", "-3/2", "1/2"}));
    CHECK(cph[3] == poly({"-5/2", "21/4", "-3", "1/2"}));
    CHECK(cph[4] == poly({"551/60", "-45/2", "17", "-5", "1/2"}));

    auto cp2 = cp_oracle({2, rat("1/2"), 2}, 3);
    CHECK(cp2[1] == poly({"-1/16", "-1/4"}));
    CHECK(cp2[2] == poly({"17/288", "3/8", "1/4"}));
    CHECK(cp2[3] == poly({"-13/128", "-83/96", "-15/16", "-1/4"}));

    auto cp3 = cp_oracle({-1, Rational(2), -1}, 3);
    CHECK(cp3[0] == poly({"2"}));
    CHECK(cp3[1] == poly({"6", "-2"}));
    CHECK(cp3[2] == poly({"12", "-10", "2"}));
    CHECK(cp3[3] == poly({"16", "-22", "12", "-2"}));

    auto cp4 = cp_oracle({0, Rational(3), 0}, 3);
    CHECK(cp4[1] == poly({"1", "-1"}));
    CHECK(cp4[2] == poly({"0", "-1", "1"}));
    CHECK(cp4[3] == poly({"0", "1", "0", "-1"}));
}

TEST_CASE("first-order closed forms across the probe set") {
    for (const auto& p : kProbe) {
        Rational scale = Rational(2).pow(-p.mu);
        auto cp = cp_oracle(p, 1);
        CHECK(cp[0] == Polynomial::constant(scale));
        Polynomial cp1_expected =
            scale * Polynomial({Rational(2).pow(-p.k) - Rational(p.mu) * p.lambda / Rational(2),
                                Rational(-1)});
        CHECK(cp[1] == cp1_expected);

        auto cph = cphat_oracle(p, 1);
        CHECK(cph[0] == Polynomial::constant(scale));
        Polynomial cph1_expected =
            scale * Polynomial({-Rational(2).pow(-p.k) - Rational(p.mu) * p.lambda / Rational(2),
                                Rational(1)});
        CHECK(cph[1] == cph1_expected);
    }
}

TEST_CASE("k = 0 degenerates to a (1+t) prefactor") {
    // Lif_0(log(1+t)) = e^{log(1+t)} = 1 + t exactly.
    const int n_max = 8;
    for (const auto& lambda : {Rational(3), rat("1/2")}) {
        for (long mu : {0L, 2L, -1L}) {
            Series base = peters_base_series(lambda, mu, n_max);
            Series one_plus = Series::one(n_max);
            one_plus.set_coeff(1, Rational(1));
            auto expected =
                gf_expand(GFRecipe::one_plus_t_exponent(base * one_plus, -1), n_max);
            auto got = cp_oracle({0, lambda, mu}, n_max);
            for (int n = 0; n <= n_max; ++n) CHECK(got[n] == expected[n]);
        }
    }
}

TEST_CASE("lambda = 0 collapses the prefactor to a constant") {
    const int n_max = 6;
    for (long mu : {0L, 1L, -2L}) {
        auto got = cp_oracle({1, Rational(0), mu}, n_max);
        auto pc = poly_cauchy1_polys(1, n_max);
        for (int n = 0; n <= n_max; ++n) {
            CHECK(got[n] == Rational(2).pow(-mu) * pc[n]);
        }
    }
}

TEST_CASE("sheffer pairs for the mixed families") {
    MixedParams p{1, Rational(1), 1};
    ShefferPair sp = cp_sheffer_pair(p, 8);
    CHECK(sp.f().coeff(0) == Rational(0));
    CHECK(sp.f().coeff(1) == Rational(-1));
    CHECK(sp.f().coeff(2) == rat("1/2"));
    CHECK(sp.f().coeff(3) == rat("-1/6"));
    CHECK(sp.g().coeff(0) == Rational(2));

    ShefferPair sph = cphat_sheffer_pair({0, rat("1/2"), -2}, 8);
    CHECK(sph.g().coeff(0) == rat("1/4"));

    auto polys = sheffer_polys(cp_sheffer_pair(p, 4), 1);
    CHECK(polys[0] == poly({"1/2"}));
    CHECK(polys[1] == poly({"0", "-1/2"}));
}

TEST_CASE("generating-function oracle equals the Sheffer construction") {
    const int n_max = 8;
    const int order = n_max + 2;
    for (const auto& p : kProbe) {
        auto cp = cp_oracle(p, n_max);
        auto via_sheffer = sheffer_polys(cp_sheffer_pair(p, order), n_max);
        auto cph = cphat_oracle(p, n_max);
        auto via_sheffer_hat = sheffer_polys(cphat_sheffer_pair(p, order), n_max);
        for (int n = 0; n <= n_max; ++n) {
            CHECK(cp[n] == via_sheffer[n]);
            CHECK(cph[n] == via_sheffer_hat[n]);
        }
    }
}

TEST_CASE("both mixed-pair constructions match the coefficient formula") {
    for (const auto& p : kProbe) {
        ShefferPair sp = cp_sheffer_pair(p, 10);
        auto rows = sheffer_polys(sp, 8);
        for (int n = 0; n <= 8; ++n) CHECK(sheffer_coeff_formula(sp, n) == rows[n]);
        ShefferPair sph = cphat_sheffer_pair(p, 10);
        auto rows_hat = sheffer_polys(sph, 8);
        for (int n = 0; n <= 8; ++n) CHECK(sheffer_coeff_formula(sph, n) == rows_hat[n]);
    }
}

TEST_CASE("lowering law for the mixed families") {
    const int n_max = 8;
    Series down = exp_t(Rational(-1), n_max);
    down.set_coeff(0, Rational(0));  // e^{-t} - 1
    Series up = exp_t(Rational(1), n_max);
    up.set_coeff(0, Rational(0));
    for (const auto& p : kProbe) {
        auto cp = cp_oracle(p, n_max);
        auto cph = cphat_oracle(p, n_max);
        for (int n = 1; n <= n_max; ++n) {
            CHECK(apply_series(down, cp[n]) == Rational(n) * cp[n - 1]);
            CHECK(apply_series(up, cph[n]) == Rational(n) * cph[n - 1]);
        }
    }
}

TEST_CASE("shift identity behind the difference equation") {
    // (e^{-t}-1) p = p(x-1) - p(x) holds by construction of apply_series.
    Series down = exp_t(Rational(-1), 8);
    down.set_coeff(0, Rational(0));
    auto cp = cp_oracle({2, rat("1/2"), 1}, 6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(apply_series(down, cp[n]) == cp[n].shifted(Rational(-1)) - cp[n]);
    }
}

TEST_CASE("exponential prefactor: power route equals composition-sum route") {
    for (long mu : {-1L, 0L, 1L, 2L, 3L}) {
        for (const auto& c : {Rational(1), Rational(-1), rat("1/2"), rat("-1/2"), Rational(2),
                              Rational(-3), Rational(0)}) {
            CHECK(one_plus_exp_pow(c, mu, 10) == one_plus_exp_pow_composition_sum(c, mu, 10));
        }
    }
}

TEST_CASE("addition formulas hold as two-variable identities") {
    // Degree <= 8 in y, so 9 distinct y points certify the full bivariate claim.
    const std::vector<Rational> ys = {Rational(0), Rational(1),  Rational(-1),
                                      rat("1/2"),  Rational(7),  Rational(-3),
                                      Rational(2), rat("-5/3"),  Rational(4)};
    const int n_max = 8;
    for (const auto& p : {kProbe[0], kProbe[1], kProbe[2]}) {
        auto cp = cp_oracle(p, n_max);
        auto cph = cphat_oracle(p, n_max);
        for (const auto& y : ys) {
            for (int n = 0; n <= n_max; ++n) {
                Polynomial rhs;
                Polynomial rhs_hat;
                for (int j = 0; j <= n; ++j) {
                    Rational w = rat_binomial(Rational(n), j) * rising_factorial(y, j);
                    if (j % 2 == 1) w = -w;
                    rhs = rhs + w * cp[n - j];
                    rhs_hat = rhs_hat + rat_binomial(Rational(n), j) *
                                            falling_factorial(y, j) * cph[n - j];
                }
                CHECK(cp[n].shifted(y) == rhs);
                CHECK(cph[n].shifted(y) == rhs_hat);
            }
        }
    }
}

TEST_CASE("derivative expansions match the formal derivative") {
    const int n_max = 8;
    for (const auto& p : kProbe) {
        auto cp = cp_oracle(p, n_max);
        auto cph = cphat_oracle(p, n_max);
        for (int n = 0; n <= n_max; ++n) {
            Polynomial rhs;
            Polynomial rhs_hat;
            for (int l = 0; l <= n - 1; ++l) {
                Rational w = Rational(factorial(n)) /
                             (Rational(n - l) * Rational(factorial(l)));
                rhs = rhs + ((n - l) % 2 == 1 ? -w : w) * cp[l];
                rhs_hat = rhs_hat + ((n - l - 1) % 2 != 0 ? -w : w) * cph[l];
            }
            CHECK(cp[n].derivative() == rhs);
            CHECK(cph[n].derivative() == rhs_hat);
        }
    }
}

TEST_CASE("hand-computed convolution at (1, 1, 1), n = 1") {
    // S_1(0) C_0(x) + S_0(0) C_1(x) = -1/4 + (1/2)(1/2 - x) = -x/2
    auto peters = peters_polys(Rational(1), 1, 1);
    CHECK(peters[1].evaluate(Rational(0)) == rat("-1/4"));
    CHECK(peters[0].evaluate(Rational(0)) == rat("1/2"));
    auto pc = poly_cauchy1_polys(1, 1);
    CHECK(pc[1] == poly({"1/2", "-1"}));
    Polynomial rhs = peters[1].evaluate(Rational(0)) * pc[0] +
                     peters[0].evaluate(Rational(0)) * pc[1];
    CHECK(rhs == poly({"0", "-1/2"}));
    CHECK(rhs == cp_oracle({1, Rational(1), 1}, 1)[1]);
}

TEST_CASE("mixed numbers at the base point") {
    auto cp = cp_oracle({1, Rational(1), 1}, 6);
    std::vector<std::string> expected{"1/2", "0", "-1/12", "1/4", "-49/60", "19/6", "-2459/168"};
    for (int n = 0; n <= 6; ++n) CHECK(cp[n].coeff(0) == rat(expected[n]));
    auto cph = cphat_oracle({1, Rational(1), 1}, 6);
    std::vector<std::string> expected_hat{"1/2",    "-1/2",   "11/12", "-5/2",
                                          "551/60", "-171/4", "40633/168"};
    for (int n = 0; n <= 6; ++n) CHECK(cph[n].coeff(0) == rat(expected_hat[n]));
}
