#include "umbral/functional.hpp"

#include <stdexcept>

#include "umbral/combinatorics.hpp"

namespace umbral {

Rational pairing(const Series& f, const Polynomial& p) {
    if (p.degree() > f.order()) {
        throw std::invalid_argument("pairing: polynomial degree exceeds functional order");
    }
    Rational acc(0);
    for (int n = 0; n <= p.degree(); ++n) {
        if (p.coeff(n).is_zero()) continue;
        acc += p.coeff(n) * Rational(factorial(n)) * f.coeff(n);
    }
    return acc;
}

Polynomial apply_series(const Series& f, const Polynomial& p) {
    Polynomial out;
    Polynomial current = p;
    const int top = std::min(f.order(), p.degree());
    for (int k = 0; k <= top && !current.is_zero(); ++k) {
        if (!f.coeff(k).is_zero()) out = out + f.coeff(k) * current;
        current = current.derivative();
    }
    return out;
}

std::pair<Rational, Rational> functional_xp_check(const Series& f, const Polynomial& p) {
    if (p.degree() + 1 > f.order()) {
        throw std::invalid_argument("functional_xp_check: insufficient order");
    }
    Rational lhs = pairing(f, Polynomial::x() * p);
    Rational rhs = pairing(derivative(f), p);
    return {lhs, rhs};
}

}  // namespace umbral
