#include "umbral/combinatorics.hpp"

#include <stdexcept>

namespace umbral {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Rational rat_binomial(const Rational& alpha, int n) {
    if (n < 0) throw std::invalid_argument("rat_binomial: negative lower index");
    Rational product(1);
    for (int i = 0; i < n; ++i) {
        product *= alpha - Rational(i);
    }
    return product / Rational(factorial(n));
}

Rational multinomial(int total, std::span<const int> parts) {
    long sum = 0;
    for (int p : parts) {
        if (p <= 0) throw std::invalid_argument("multinomial: parts must be positive");
        sum += p;
    }
    if (sum != total) throw std::invalid_argument("multinomial: parts do not sum to total");
    BigInt denom(1);
    for (int p : parts) denom *= factorial(p);
    return Rational(factorial(total), denom);
}

Rational falling_factorial(const Rational& x, int n) {
    if (n < 0) throw std::invalid_argument("falling_factorial: negative index");
    Rational product(1);
    for (int i = 0; i < n; ++i) product *= x - Rational(i);
    return product;
}

Rational rising_factorial(const Rational& x, int n) {
    if (n < 0) throw std::invalid_argument("rising_factorial: negative index");
    Rational product(1);
    for (int i = 0; i < n; ++i) product *= x + Rational(i);
    return product;
}

namespace {

void compositions_rec(int remaining, int slot, std::vector<int>& scratch,
                      const std::function<void(std::span<const int>)>& fn) {
    int parts = static_cast<int>(scratch.size());
    if (slot == parts - 1) {
        scratch[slot] = remaining;
        fn(scratch);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        scratch[slot] = v;
        compositions_rec(remaining - v, slot + 1, scratch, fn);
    }
}

}  // namespace

void for_each_composition(int total, int parts,
                          const std::function<void(std::span<const int>)>& fn) {
    if (total < 0 || parts < 0) throw std::invalid_argument("for_each_composition: negative input");
    if (parts == 0) {
        if (total == 0) fn(std::span<const int>{});
        return;
    }
    std::vector<int> scratch(static_cast<std::size_t>(parts), 0);
    compositions_rec(total, 0, scratch, fn);
}

}  // namespace umbral
