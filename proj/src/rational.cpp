#include "umbral/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace umbral {

namespace {

void require_nonzero_denominator(const BigInt& den) {
    if (sgn(den) == 0) {
        throw std::domain_error("rational: zero denominator");
    }
}

}  // namespace

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    require_nonzero_denominator(den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    // Strict form: [+-]digits[/digits].  GMP would accept more (whitespace,
    // signs after '/'), which we reject so file output round-trips uniquely.
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++digits; }
    if (digits == 0) throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (i < text.size()) {
        if (text[i] != '/') throw std::invalid_argument("rational: cannot parse '" + text + "'");
        ++i;
        digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++digits; }
        if (digits == 0 || i != text.size()) {
            throw std::invalid_argument("rational: cannot parse '" + text + "'");
        }
    }
    // GMP rejects a leading '+', which the strict scan above allows.
    mpq_class parsed(text[0] == '+' ? text.substr(1) : text, 10);
    require_nonzero_denominator(BigInt(parsed.get_den()));
    parsed.canonicalize();
    Rational out;
    out.v_ = std::move(parsed);
    return out;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool negative = e < 0;
    unsigned long ue = negative ? 0UL - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    if (negative && is_zero()) throw std::domain_error("rational: zero to a negative power");
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
    if (negative) std::swap(num, den);
    return Rational(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("rational: inverse of zero");
    return Rational(denominator(), numerator());
}

Rational Rational::abs() const {
    return is_negative() ? -*this : *this;
}

Rational Rational::operator-() const {
    Rational out;
    out.v_ = -v_;
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace umbral
