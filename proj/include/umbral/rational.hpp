#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace umbral {

using BigInt = mpz_class;

/**
 * Arbitrary-precision rational number, always held in canonical form:
 * denominator > 0 and gcd(|num|, den) = 1.  Equality is structural
 * equality of canonical forms.  Values are immutable in spirit; all
 * operations return new values and there is no shared state.
 *
 * The text form is "p/q" with "/q" omitted when q = 1; this is the
 * form used in every file format the kernel emits.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p" or "p/q" (optional leading sign on p, q > 0).
    static Rational parse(const std::string& text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    std::string str() const { return v_.get_str(); }

    /// x^e for integer e; e < 0 requires x != 0.
    Rational pow(long e) const;
    Rational inverse() const;
    Rational abs() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace umbral
