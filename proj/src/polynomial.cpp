#include "umbral/polynomial.hpp"

#include <stdexcept>

#include "umbral/combinatorics.hpp"

namespace umbral {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial({c});
}

Polynomial Polynomial::x() {
    return Polynomial({Rational(0), Rational(1)});
}

Polynomial Polynomial::monomial(int degree, const Rational& coeff) {
    if (degree < 0) throw std::invalid_argument("polynomial: negative degree");
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
    c.back() = coeff;
    return Polynomial(std::move(c));
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const {
    if (c.is_zero()) return *this;
    std::vector<Rational> out;
    for (int n = 0; n <= degree(); ++n) {
        const Rational& a = c_[static_cast<std::size_t>(n)];
        if (a.is_zero()) continue;
        Rational cpow(1);
        for (int j = n; j >= 0; --j) {
            // coefficient of x^j in a (x+c)^n
            if (static_cast<int>(out.size()) <= j) out.resize(static_cast<std::size_t>(j) + 1, Rational(0));
            out[static_cast<std::size_t>(j)] += a * rat_binomial(Rational(n), j) * cpow;
            cpow *= c;
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::reflected() const {
    std::vector<Rational> out = c_;
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> out;
    for (int i = 1; i <= degree(); ++i) out.push_back(Rational(i) * c_[static_cast<std::size_t>(i)]);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::divided_by_x() const {
    if (is_zero()) return Polynomial();
    if (!c_[0].is_zero()) {
        throw std::logic_error("polynomial: division by x needs zero constant term");
    }
    return Polynomial(std::vector<Rational>(c_.begin() + 1, c_.end()));
}

Polynomial Polynomial::operator-() const {
    return Rational(-1) * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.c_.size()) out[i] += a.c_[i];
        if (i < b.c_.size()) out[i] += b.c_[i];
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> out = p.c_;
    for (auto& v : out) v *= c;
    return Polynomial(std::move(out));
}

}  // namespace umbral
