#pragma once

#include <string>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/series.hpp"

namespace testutil {

inline umbral::Rational rat(const std::string& text) {
    return umbral::Rational::parse(text);
}

inline umbral::Polynomial poly(const std::vector<std::string>& coeffs) {
    std::vector<umbral::Rational> c;
    for (const auto& v : coeffs) c.push_back(rat(v));
    return umbral::Polynomial(std::move(c));
}

inline umbral::Series series(const std::vector<std::string>& coeffs) {
    std::vector<umbral::Rational> c;
    for (const auto& v : coeffs) c.push_back(rat(v));
    const int order = static_cast<int>(c.size()) - 1;
    return umbral::Series(order, std::move(c));
}

}  // namespace testutil
