#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "umbral/combinatorics.hpp"
#include "umbral/functional.hpp"
#include "umbral/mixed.hpp"
#include "umbral/sequences.hpp"
#include "umbral/sheffer.hpp"

#include "test_util.hpp"

using namespace umbral;
using testutil::poly;
using testutil::rat;
using testutil::series;

namespace {

const int kOrder = 12;

ShefferPair monomial_pair() {
    return ShefferPair(Series::one(kOrder), Series::t(kOrder));
}

ShefferPair falling_pair() {
    Series f = exp_t(Rational(1), kOrder);
    f.set_coeff(0, Rational(0));
    return ShefferPair(Series::one(kOrder), f);
}

ShefferPair rising_pair() {
    Series f = -exp_t(Rational(-1), kOrder);
    f.set_coeff(0, Rational(0));  // 1 - e^{-t}
    return ShefferPair(Series::one(kOrder), f);
}

/// Independent route for connection constants: peel leading coefficients.
std::vector<Rational> connection_by_triangular_solve(const std::vector<Polynomial>& source,
                                                     const std::vector<Polynomial>& target,
                                                     int n) {
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1, Rational(0));
    Polynomial residual = source[static_cast<std::size_t>(n)];
    for (int m = n; m >= 0; --m) {
        const Polynomial& r_m = target[static_cast<std::size_t>(m)];
        Rational c = residual.coeff(m) / r_m.coeff(m);
        row[static_cast<std::size_t>(m)] = c;
        residual = residual - c * r_m;
    }
    REQUIRE(residual.is_zero());
    return row;
}

}  // namespace

TEST_CASE("pairing basics") {
    Series t2(4);
    t2.set_coeff(2, Rational(1));
    CHECK(pairing(t2, Polynomial::monomial(2, Rational(1))) == Rational(2));
    CHECK(pairing(t2, Polynomial::monomial(3, Rational(1))) == Rational(0));

    // <e^{yt} | x^n> = y^n
    Series eyt = exp_t(Rational(3), 6);
    CHECK(pairing(eyt, Polynomial::monomial(4, Rational(1))) == Rational(81));

    CHECK(pairing(log_one_plus_t(4), Polynomial::monomial(2, Rational(1))) == Rational(-1));

    CHECK_THROWS_AS(pairing(t2, Polynomial::monomial(5, Rational(1))), std::invalid_argument);
}

TEST_CASE("linear functional wrapper") {
    LinearFunctional ell(log_one_plus_t(4));
    CHECK(ell.order() == 4);
    CHECK(ell(Polynomial::monomial(2, Rational(1))) == Rational(-1));
    CHECK(ell(poly({"3"})) == Rational(0));
    CHECK_THROWS_AS(ell(Polynomial::monomial(5, Rational(1))), std::invalid_argument);
}

TEST_CASE("series act as differential operators") {
    CHECK(apply_series(Series::t(3), poly({"0", "0", "1"})) == poly({"0", "2"}));

    // e^{yt} p(x) = p(x+y)
    Series e2t = exp_t(Rational(2), 5);
    CHECK(apply_series(e2t, poly({"0", "0", "1"})) == poly({"4", "4", "1"}));

    Series shift_minus = exp_t(Rational(-1), 5);
    shift_minus.set_coeff(0, shift_minus.coeff(0) - Rational(1));  // e^{-t} - 1
    CHECK(apply_series(shift_minus, Polynomial::x()) == poly({"-1"}));

    std::mt19937 rng(5150);
    std::uniform_int_distribution<long> num(-8, 8);
    for (int trial = 0; trial < 20; ++trial) {
        Rational y(num(rng), 3);
        Polynomial p({Rational(num(rng)), Rational(num(rng)), Rational(num(rng)),
                      Rational(num(rng))});
        CHECK(apply_series(exp_t(y, 6), p) == p.shifted(y));
    }
}

TEST_CASE("functional and polynomial views agree on x-multiplication") {
    Series t2(4);
    t2.set_coeff(2, Rational(1));
    auto [lhs1, rhs1] = functional_xp_check(t2, Polynomial::x());
    CHECK(lhs1 == Rational(2));
    CHECK(rhs1 == Rational(2));

    auto [lhs2, rhs2] = functional_xp_check(Series::one(4), poly({"5", "1", "3"}));
    CHECK(lhs2 == Rational(0));
    CHECK(rhs2 == Rational(0));

    auto [lhs3, rhs3] = functional_xp_check(log_one_plus_t(4), Polynomial::x());
    CHECK(lhs3 == Rational(-1));
    CHECK(rhs3 == Rational(-1));

    std::mt19937 rng(6);
    std::uniform_int_distribution<long> num(-6, 6);
    for (int trial = 0; trial < 25; ++trial) {
        Series f(6);
        for (int i = 0; i <= 6; ++i) f.set_coeff(i, Rational(num(rng), 2));
        Polynomial p({Rational(num(rng)), Rational(num(rng)), Rational(num(rng))});
        auto [lhs, rhs] = functional_xp_check(f, p);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sheffer sequences of the three classical pairs") {
    auto xs = sheffer_polys(monomial_pair(), 8);
    for (int n = 0; n <= 8; ++n) CHECK(xs[n] == Polynomial::monomial(n, Rational(1)));

    auto falling = sheffer_polys(falling_pair(), 8);
    auto rising = sheffer_polys(rising_pair(), 8);
    for (int n = 0; n <= 8; ++n) {
        CHECK(falling[n] == falling_poly(n));
        CHECK(rising[n] == rising_poly(n));
    }

    CHECK_THROWS_AS(sheffer_polys(monomial_pair(), kOrder), std::invalid_argument);
    CHECK_THROWS_AS(ShefferPair(Series::t(4), Series::t(4)), std::domain_error);
    CHECK_THROWS_AS(ShefferPair(Series::one(4), Series::one(4)), std::domain_error);
}

TEST_CASE("generating-function and coefficient-formula constructions agree") {
    std::vector<ShefferPair> pairs = {monomial_pair(), falling_pair(), rising_pair(),
                                      cp_sheffer_pair({1, Rational(1), 1}, kOrder),
                                      cp_sheffer_pair({2, rat("1/2"), -1}, kOrder),
                                      cphat_sheffer_pair({-1, Rational(2), 2}, kOrder)};
    for (const auto& sp : pairs) {
        auto via_gf = sheffer_polys(sp, 10);
        for (int n = 0; n <= 10; ++n) {
            CHECK(sheffer_coeff_formula(sp, n) == via_gf[n]);
        }
    }
}

TEST_CASE("defining orthogonality") {
    std::vector<ShefferPair> pairs = {falling_pair(), rising_pair(),
                                      cp_sheffer_pair({1, Rational(1), 1}, kOrder),
                                      cphat_sheffer_pair({0, Rational(3), 0}, kOrder)};
    for (const auto& sp : pairs) {
        auto polys = sheffer_polys(sp, 8);
        Series power = sp.g();
        for (int k = 0; k <= 8; ++k) {
            if (k > 0) power = power * sp.f();
            for (int n = 0; n <= 8; ++n) {
                Rational expected = (n == k) ? Rational(factorial(n)) : Rational(0);
                CHECK(pairing(power, polys[n]) == expected);
            }
        }
    }
}

TEST_CASE("lowering, raising and derivative laws") {
    std::vector<ShefferPair> pairs = {monomial_pair(), falling_pair(), rising_pair(),
                                      cp_sheffer_pair({1, Rational(1), 1}, kOrder),
                                      cphat_sheffer_pair({2, rat("-1"), 3}, kOrder)};
    for (const auto& sp : pairs) {
        auto polys = sheffer_polys(sp, 10);
        for (int n = 1; n <= 10; ++n) {
            CHECK(sheffer_lowering(sp, n) == Rational(n) * polys[n - 1]);
        }
        for (int n = 0; n <= 9; ++n) {
            CHECK(sheffer_raising(sp, n) == polys[n + 1]);
        }
        for (int n = 0; n <= 10; ++n) {
            CHECK(sheffer_derivative(sp, n) == polys[n].derivative());
        }
    }

    // spot values
    CHECK(sheffer_lowering(falling_pair(), 2) == poly({"0", "2"}));
    CHECK(sheffer_lowering(monomial_pair(), 3) == poly({"0", "0", "3"}));
    CHECK(sheffer_raising(falling_pair(), 1) == falling_poly(2));
    CHECK(sheffer_derivative(falling_pair(), 2) == poly({"-1", "2"}));
}

TEST_CASE("binomial expansion theorem") {
    std::vector<Rational> ys = {Rational(0), Rational(1), Rational(-1), rat("1/2"), Rational(7)};
    std::vector<ShefferPair> pairs = {monomial_pair(), falling_pair(),
                                      cp_sheffer_pair({1, Rational(1), 1}, kOrder)};
    for (const auto& sp : pairs) {
        auto polys = sheffer_polys(sp, 8);
        for (const auto& y : ys) {
            for (int n = 0; n <= 8; ++n) {
                CHECK(binomial_expand(sp, n, y) == polys[n].shifted(y));
            }
        }
    }
    CHECK(binomial_expand(falling_pair(), 2, Rational(1)) == poly({"0", "1", "1"}));
}

TEST_CASE("transfer formula") {
    Series t_series = Series::t(kOrder);
    Series down = exp_t(Rational(-1), kOrder);
    down.set_coeff(0, Rational(0));  // e^{-t} - 1

    CHECK(transfer(t_series, down, 1) == poly({"0", "-1"}));
    CHECK(transfer(t_series, down, 2) == poly({"0", "1", "1"}));
    for (int n = 1; n <= 8; ++n) {
        CHECK(transfer(t_series, t_series, n) == Polynomial::monomial(n, Rational(1)));
        Polynomial expected = (n % 2 == 0) ? rising_poly(n) : -rising_poly(n);
        CHECK(transfer(t_series, down, n) == expected);
    }
    CHECK_THROWS_AS(transfer(t_series, down, 0), std::invalid_argument);
    CHECK_THROWS_AS(transfer(Series::one(kOrder), down, 1), std::domain_error);
}

TEST_CASE("connection constants") {
    auto identity_row = connection_constants(falling_pair(), falling_pair(), 3);
    CHECK(identity_row == std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)});

    // x^2 = (x)_2 + (x)_1: the Stirling-2 row
    auto row = connection_constants(monomial_pair(), falling_pair(), 2);
    CHECK(row == std::vector<Rational>{Rational(0), Rational(1), Rational(1)});

    // expansion over rising factorials with mixed-family source
    MixedParams params{1, Rational(1), 1};
    ShefferPair cp_pair = cp_sheffer_pair(params, kOrder);
    auto cp = cp_oracle(params, kOrder);
    for (int n = 0; n <= 6; ++n) {
        auto cs = connection_constants(cp_pair, rising_pair(), n);
        for (int m = 0; m <= n; ++m) {
            Rational expected = rat_binomial(Rational(n), m) * cp[n - m].coeff(0);
            if (m % 2 == 1) expected = -expected;
            CHECK(cs[m] == expected);
        }
    }
}

TEST_CASE("connection constants against the triangular-solve oracle") {
    std::vector<std::pair<ShefferPair, ShefferPair>> cases = {
        {monomial_pair(), falling_pair()},
        {falling_pair(), rising_pair()},
        {cp_sheffer_pair({1, Rational(1), 1}, kOrder), rising_pair()},
        {cphat_sheffer_pair({2, rat("1/2"), 2}, kOrder), falling_pair()},
        {cp_sheffer_pair({-1, Rational(2), -1}, kOrder),
         cphat_sheffer_pair({-1, Rational(2), -1}, kOrder)},
    };
    for (const auto& [source, target] : cases) {
        auto source_polys = sheffer_polys(source, 6);
        auto target_polys = sheffer_polys(target, 6);
        for (int n = 0; n <= 6; ++n) {
            auto via_functional = connection_constants(source, target, n);
            auto via_solve = connection_by_triangular_solve(source_polys, target_polys, n);
            CHECK(via_functional == via_solve);
        }
    }
}

TEST_CASE("connection constants reproduce the source sequence") {
    ShefferPair source = cp_sheffer_pair({2, rat("1/2"), 2}, kOrder);
    ShefferPair target = falling_pair();
    auto source_polys = sheffer_polys(source, 8);
    auto target_polys = sheffer_polys(target, 8);
    for (int n = 0; n <= 8; ++n) {
        auto cs = connection_constants(source, target, n);
        Polynomial rebuilt;
        for (int m = 0; m <= n; ++m) rebuilt = rebuilt + cs[m] * target_polys[m];
        CHECK(rebuilt == source_polys[n]);
    }
}
