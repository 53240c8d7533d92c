#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "umbral/combinatorics.hpp"
#include "umbral/sequences.hpp"

#include "test_util.hpp"

using namespace umbral;
using testutil::poly;
using testutil::rat;
using testutil::series;

TEST_CASE("stirling numbers of the first kind") {
    CHECK(stirling1(0, 0) == Rational(1));
    CHECK(stirling1(3, 2) == Rational(-3));
    CHECK(stirling1(4, 2) == Rational(11));
    for (int n = 0; n <= 9; ++n) CHECK(stirling1(n, n) == Rational(1));
    for (int n = 1; n <= 9; ++n) CHECK(stirling1(n, 0) == Rational(0));
    CHECK(stirling1(2, 5) == Rational(0));
    CHECK(stirling1(-1, 0) == Rational(0));
    CHECK(stirling1(3, -2) == Rational(0));
    // row sums vanish from n = 2 on: falling_poly(n) at x = 1
    for (int n = 2; n <= 12; ++n) {
        CHECK(falling_poly(n).evaluate(Rational(1)) == Rational(0));
    }
}

TEST_CASE("falling and rising factorial polynomials") {
    CHECK(falling_poly(0) == poly({"1"}));
    CHECK(falling_poly(2) == poly({"0", "-1", "1"}));
    CHECK(rising_poly(2) == poly({"0", "1", "1"}));
    CHECK(rising_poly(3) == poly({"0", "2", "3", "1"}));
    CHECK(falling_poly(4) == poly({"0", "-6", "11", "-6", "1"}));
    // reflection: x^(n) = (-1)^n (-x)_n
    for (int n = 0; n <= 12; ++n) {
        Polynomial reflected = falling_poly(n).reflected();
        Polynomial expected = (n % 2 == 0) ? reflected : -reflected;
        CHECK(rising_poly(n) == expected);
    }
}

TEST_CASE("log powers expand over Stirling numbers") {
    const int order = 12;
    Series power = Series::one(order);
    for (int m = 0; m <= 6; ++m) {
        if (m > 0) power = power * log_one_plus_t(order);
        for (int l = 0; l <= order; ++l) {
            Rational expected = Rational(factorial(m)) * stirling1(l, m) /
                                Rational(factorial(l));
            CHECK(power.coeff(l) == expected);
        }
    }
}

TEST_CASE("polylog-factorial series") {
    Series k0 = lif_series(0, 6);
    CHECK(k0 == exp_t(Rational(1), 6));
    CHECK(lif_series(1, 4).coeff(2) == rat("1/6"));
    CHECK(lif_series(-1, 6) == series({"1", "2", "3/2", "2/3", "5/24", "1/20", "7/720"}));
    CHECK(lif_series(-2, 5) == series({"1", "4", "9/2", "8/3", "25/24", "3/10"}));
}

TEST_CASE("Bernoulli polynomials of integer order") {
    auto b1 = bernoulli_polys(1, 3);
    CHECK(b1[0] == poly({"1"}));
    CHECK(b1[1] == poly({"-1/2", "1"}));
    CHECK(b1[2] == poly({"1/6", "-1", "1"}));
    CHECK(b1[3] == poly({"0", "1/2", "-3/2", "1"}));
    auto b2 = bernoulli_polys(2, 2);
    CHECK(b2[1] == poly({"-1", "1"}));
    CHECK(b2[2] == poly({"5/6", "-2", "1"}));
    // order-4 numbers
    auto b4 = bernoulli_polys(4, 3);
    CHECK(b4[0].coeff(0) == Rational(1));
    CHECK(b4[1].coeff(0) == Rational(-2));
    CHECK(b4[2].coeff(0) == rat("11/3"));
    CHECK(b4[3].coeff(0) == Rational(-6));
    CHECK(bernoulli_poly(0, 3) == poly({"0", "0", "0", "1"}));
}

TEST_CASE("Frobenius-Euler polynomials") {
    CHECK(frobenius_euler_poly(5, rat("2/3"), 0) == poly({"1"}));
    CHECK(frobenius_euler_poly(1, Rational(-1), 1) == poly({"-1/2", "1"}));
    CHECK(frobenius_euler_poly(1, Rational(2), 1) == poly({"1", "1"}));
    auto h = frobenius_euler_polys(2, rat("1/2"), 2);
    CHECK(h[2] == poly({"20", "-8", "1"}));
    CHECK_THROWS_AS(frobenius_euler_polys(1, Rational(1), 2), std::domain_error);
}

TEST_CASE("higher-order Cauchy polynomials") {
    CHECK(cauchy1_poly(3, 0) == poly({"1"}));
    CHECK(cauchy1_poly(1, 1) == poly({"1/2", "-1"}));
    CHECK(cauchy2_poly(1, 1) == poly({"-1/2", "1"}));
    CHECK(cauchy2_poly(1, 1).evaluate(Rational(0)) == rat("-1/2"));
    auto c2 = cauchy2_polys(3, 2);
    CHECK(c2[1] == poly({"-3/2", "1"}));
    CHECK(c2[2] == poly({"4", "-4", "1"}));
    // second-kind numbers
    auto nums = cauchy2_polys(1, 6);
    std::vector<std::string> expected{"1", "-1/2", "5/6", "-9/4", "251/30", "-475/12", "19087/84"};
    for (int i = 0; i <= 6; ++i) CHECK(nums[i].coeff(0) == rat(expected[i]));
    // first-kind numbers
    auto nums1 = cauchy1_polys(1, 6);
    std::vector<std::string> expected1{"1", "1/2", "-1/6", "1/4", "-19/30", "9/4", "-863/84"};
    for (int i = 0; i <= 6; ++i) CHECK(nums1[i].coeff(0) == rat(expected1[i]));
}

TEST_CASE("Peters polynomials and specializations") {
    for (long mu : {-2L, -1L, 0L, 1L, 2L, 3L}) {
        for (const auto& lambda : {rat("1"), rat("-1"), rat("1/2"), rat("2"), rat("3"), rat("0")}) {
            auto rows = peters_polys(lambda, mu, 1);
            CHECK(rows[0] == Polynomial::constant(Rational(2).pow(-mu)));
            Polynomial expected =
                Rational(2).pow(-mu - 1) * poly({(-lambda * Rational(mu)).str(), "2"});
            CHECK(rows[1] == expected);
        }
    }
    CHECK(peters_poly(Rational(2), 1, 1) == poly({"-1/2", "1/2"}));
    auto p21 = peters_polys(Rational(2), 1, 3);
    CHECK(p21[2] == poly({"1/2", "-3/2", "1/2"}));
    CHECK(p21[3] == poly({"0", "4", "-3", "1/2"}));
    auto phalf = peters_polys(rat("1/2"), -2, 2);
    CHECK(phalf[2] == poly({"-1/2", "0", "4"}));
}

TEST_CASE("Changhee specialization matches 1/(t+2) (1+t)^x") {
    const int n_max = 10;
    Series denom(n_max);
    denom.set_coeff(0, Rational(2));
    denom.set_coeff(1, Rational(1));
    auto changhee =
        gf_expand(GFRecipe::one_plus_t_exponent(multiplicative_inverse(denom), +1), n_max);
    auto peters11 = peters_polys(Rational(1), 1, n_max);
    for (int n = 0; n <= n_max; ++n) CHECK(peters11[n] == changhee[n]);
    CHECK(peters11[1] == poly({"-1/4", "1/2"}));
}

TEST_CASE("Peters prefactor series") {
    CHECK(peters_base_series(Rational(0), 3, 4) ==
          series({"1/8", "0", "0", "0", "0"}));
    for (long mu : {-1L, 0L, 2L}) {
        for (const auto& lambda : {rat("3"), rat("1/2"), rat("-1")}) {
            Series base = peters_base_series(lambda, mu, 4);
            CHECK(base.coeff(0) == Rational(2).pow(-mu));
            CHECK(base.coeff(1) == Rational(-mu) * lambda * Rational(2).pow(-mu - 1));
        }
    }
    CHECK(peters_base_series(Rational(2), 1, 6) ==
          series({"1/2", "-1/2", "1/4", "0", "-1/8", "1/8", "-1/16"}));
    CHECK(peters_base_series(rat("1/2"), -1, 5) ==
          series({"2", "1/2", "-1/8", "1/16", "-5/128", "7/256"}));
}

TEST_CASE("Peters prefactor: power route equals composition-sum route") {
    for (long mu : {-1L, 0L, 1L, 2L, 3L}) {
        for (const auto& lambda :
             {rat("1"), rat("-1"), rat("1/2"), rat("2"), rat("3"), rat("0")}) {
            CHECK(peters_base_series(lambda, mu, 10) ==
                  peters_base_series_composition_sum(lambda, mu, 10));
        }
    }
}

TEST_CASE("poly-Cauchy polynomials") {
    for (int k : {-2, 0, 1, 3}) {
        CHECK(poly_cauchy1(k, 0) == poly({"1"}));
        CHECK(poly_cauchy2(k, 0) == poly({"1"}));
        CHECK(poly_cauchy1(k, 1) == Polynomial({Rational(2).pow(-k), Rational(-1)}));
        CHECK(poly_cauchy2(k, 1) == Polynomial({-Rational(2).pow(-k), Rational(1)}));
    }
    auto pc1 = poly_cauchy1_polys(1, 3);
    CHECK(pc1[2] == poly({"-1/6", "0", "1"}));
    CHECK(pc1[3] == poly({"1/4", "0", "-3/2", "-1"}));
    auto pc2 = poly_cauchy2_polys(1, 3);
    CHECK(pc2[2] == poly({"5/6", "-2", "1"}));
    CHECK(pc2[3] == poly({"-9/4", "6", "-9/2", "1"}));
    auto pc1m2 = poly_cauchy1_polys(-2, 2);
    CHECK(pc1m2[1] == poly({"4", "-1"}));
    CHECK(pc1m2[2] == poly({"5", "-7", "1"}));
    // Lif_1(u) = (e^u - 1)/u makes the k = 1 family the order-1 Cauchy family.
    auto pc1_k1 = poly_cauchy1_polys(1, 6);
    auto c1 = cauchy1_polys(1, 6);
    for (int n = 0; n <= 6; ++n) CHECK(pc1_k1[n] == c1[n]);
}

TEST_CASE("expansion recipe rejects malformed input") {
    CHECK_THROWS_AS(GFRecipe::one_plus_t_exponent(Series::one(4), 2), std::invalid_argument);
    CHECK_THROWS_AS(GFRecipe(Series::one(4), Series::one(4)), std::domain_error);
    CHECK_THROWS_AS(GFRecipe(Series::one(4), Series::t(3)), std::invalid_argument);
    CHECK_THROWS_AS(gf_expand(GFRecipe::one_plus_t_exponent(Series::one(4), 1), 7),
                    std::invalid_argument);
}

TEST_CASE("polynomial division by x") {
    CHECK(testutil::poly({"0", "2", "3"}).divided_by_x() == testutil::poly({"2", "3"}));
    CHECK(Polynomial().divided_by_x() == Polynomial());
    CHECK_THROWS_AS(testutil::poly({"1", "2"}).divided_by_x(), std::logic_error);
}

TEST_CASE("degree and leading coefficient structure") {
    // p_n has degree exactly n; the leading coefficient is the prefactor
    // constant times kernel'(0)^n.
    auto check_family = [](const std::vector<Polynomial>& rows, const Rational& a0, int sign) {
        for (int n = 0; n < static_cast<int>(rows.size()); ++n) {
            CHECK(rows[static_cast<std::size_t>(n)].degree() == n);
            Rational lead = a0 * Rational(sign).pow(n);
            CHECK(rows[static_cast<std::size_t>(n)].coeff(n) == lead);
        }
    };
    check_family(poly_cauchy1_polys(2, 6), Rational(1), -1);
    check_family(poly_cauchy2_polys(-1, 6), Rational(1), +1);
    check_family(peters_polys(rat("1/2"), 2, 6), rat("1/4"), +1);
    check_family(bernoulli_polys(3, 6), Rational(1), +1);
    check_family(frobenius_euler_polys(2, Rational(3), 6), Rational(1), +1);
    check_family(cauchy1_polys(2, 6), Rational(1), -1);
    check_family(cauchy2_polys(2, 6), Rational(1), +1);
}
