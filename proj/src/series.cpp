#include "umbral/series.hpp"

#include <stdexcept>

#include "umbral/combinatorics.hpp"

namespace umbral {

namespace {

void require_equal_orders(const Series& a, const Series& b, const char* op) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": series order mismatch");
    }
}

}  // namespace

Series::Series(int order) {
    if (order < 0) throw std::invalid_argument("series: order must be nonnegative");
    order_ = order;
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

Series::Series(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (order < 0 || c_.size() != static_cast<std::size_t>(order) + 1) {
        throw std::invalid_argument("series: need exactly order+1 coefficients");
    }
}

Series Series::one(int order) {
    Series s(order);
    s.c_[0] = Rational(1);
    return s;
}

Series Series::t(int order) {
    if (order < 1) throw std::invalid_argument("series: t needs order >= 1");
    Series s(order);
    s.c_[1] = Rational(1);
    return s;
}

Series Series::constant(const Rational& c, int order) {
    Series s(order);
    s.c_[0] = c;
    return s;
}

Series Series::truncated(int new_order) const {
    if (new_order < 0 || new_order > order_) {
        throw std::invalid_argument("series: truncation order out of range");
    }
    return Series(new_order,
                  std::vector<Rational>(c_.begin(), c_.begin() + new_order + 1));
}

Series operator+(const Series& a, const Series& b) {
    require_equal_orders(a, b, "add");
    Series out(a.order());
    for (int i = 0; i <= a.order(); ++i) out.set_coeff(i, a.coeff(i) + b.coeff(i));
    return out;
}

Series operator-(const Series& a, const Series& b) {
    require_equal_orders(a, b, "sub");
    Series out(a.order());
    for (int i = 0; i <= a.order(); ++i) out.set_coeff(i, a.coeff(i) - b.coeff(i));
    return out;
}

Series operator*(const Series& a, const Series& b) {
    require_equal_orders(a, b, "mul");
    const int n = a.order();
    Series out(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j + i <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

Series operator*(const Rational& c, const Series& a) {
    Series out(a.order());
    for (int i = 0; i <= a.order(); ++i) out.set_coeff(i, c * a.coeff(i));
    return out;
}

Series operator-(const Series& a) {
    return Rational(-1) * a;
}

Series compose(const Series& outer, const Series& inner) {
    require_equal_orders(outer, inner, "compose");
    if (!inner.coeff(0).is_zero()) {
        throw std::domain_error("compose: inner series must have zero constant term");
    }
    const int n = outer.order();
    // Horner evaluation in the truncated ring.
    Series result = Series::constant(outer.coeff(n), n);
    for (int i = n - 1; i >= 0; --i) {
        result = result * inner;
        result.set_coeff(0, result.coeff(0) + outer.coeff(i));
    }
    return result;
}

Series compositional_inverse(const Series& f) {
    if (!f.is_delta()) {
        throw std::domain_error("compositional_inverse: delta series required");
    }
    const int n = f.order();
    // Order-by-order triangular solve: with g known through order m-1 and
    // g_m unknown, [t^m] f(g) = (current composition)_m + f_1 g_m.
    Series g(n);
    g.set_coeff(1, f.coeff(1).inverse());
    for (int m = 2; m <= n; ++m) {
        Series comp = compose(f, g);
        g.set_coeff(m, -(comp.coeff(m) / f.coeff(1)));
    }
    return g;
}

Series multiplicative_inverse(const Series& f) {
    if (!f.is_invertible()) {
        throw std::domain_error("multiplicative_inverse: invertible series required");
    }
    const int n = f.order();
    Series b(n);
    b.set_coeff(0, f.coeff(0).inverse());
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int i = 1; i <= m; ++i) acc += f.coeff(i) * b.coeff(m - i);
        b.set_coeff(m, -(acc / f.coeff(0)));
    }
    return b;
}

Series log(const Series& f) {
    if (f.coeff(0) != Rational(1)) {
        throw std::domain_error("log: constant term must be 1");
    }
    const int n = f.order();
    Series q = derivative(f) * multiplicative_inverse(f);
    Series out(n);
    for (int i = 1; i <= n; ++i) out.set_coeff(i, q.coeff(i - 1) / Rational(i));
    return out;
}

Series exp(const Series& f) {
    if (!f.coeff(0).is_zero()) {
        throw std::domain_error("exp: constant term must be 0");
    }
    const int n = f.order();
    Series out(n);
    out.set_coeff(0, Rational(1));
    // out' = f' * out, solved coefficient by coefficient.
    Series fp = derivative(f);
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int i = 0; i < m; ++i) acc += fp.coeff(i) * out.coeff(m - 1 - i);
        out.set_coeff(m, acc / Rational(m));
    }
    return out;
}

Series pow(const Series& f, const Rational& alpha) {
    if (alpha.is_integer()) {
        long e = alpha.numerator().get_si();
        if (e == 0) return Series::one(f.order());
        Series base = e < 0 ? multiplicative_inverse(f) : f;
        long reps = e < 0 ? -e : e;
        Series out = Series::one(f.order());
        for (long i = 0; i < reps; ++i) out = out * base;
        return out;
    }
    if (f.coeff(0) != Rational(1)) {
        throw std::domain_error("pow: non-integer exponent requires constant term 1");
    }
    return exp(alpha * log(f));
}

Series derivative(const Series& f) {
    const int n = f.order();
    Series out(n);
    for (int i = 0; i + 1 <= n; ++i) out.set_coeff(i, Rational(i + 1) * f.coeff(i + 1));
    return out;
}

Series one_plus_t_pow(const Rational& lambda, int order) {
    Series out(order);
    for (int i = 0; i <= order; ++i) out.set_coeff(i, rat_binomial(lambda, i));
    return out;
}

Series log_one_plus_t(int order) {
    Series out(order);
    for (int i = 1; i <= order; ++i) {
        out.set_coeff(i, Rational(i % 2 == 1 ? 1 : -1, i));
    }
    return out;
}

Series exp_t(const Rational& c, int order) {
    Series out(order);
    Rational power(1);
    for (int i = 0; i <= order; ++i) {
        out.set_coeff(i, power / Rational(factorial(i)));
        power *= c;
    }
    return out;
}

}  // namespace umbral
