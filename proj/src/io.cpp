#include "umbral/io.hpp"

#include <stdexcept>

namespace umbral {

nlohmann::ordered_json series_to_json(const Series& s) {
    nlohmann::ordered_json j;
    j["order"] = s.order();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (int i = 0; i <= s.order(); ++i) coeffs.push_back(s.coeff(i).str());
    j["coeffs"] = coeffs;
    return j;
}

Series series_from_json(const nlohmann::json& j) {
    int order = j.at("order").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return Series(order, std::move(coeffs));
}

nlohmann::ordered_json polynomial_row_to_json(const std::string& family,
                                              const nlohmann::ordered_json& params, int n,
                                              const Polynomial& p) {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["params"] = params;
    j["n"] = n;
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (int i = 0; i <= n; ++i) coeffs.push_back(p.coeff(i).str());
    j["coeffs"] = coeffs;
    return j;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return Polynomial(std::move(coeffs));
}

std::string coefficient_row(const Polynomial& p, int width, const std::string& separator) {
    if (width < 1) throw std::invalid_argument("coefficient_row: width must be >= 1");
    std::string out;
    for (int i = 0; i < width; ++i) {
        if (i > 0) out += separator;
        out += p.coeff(i).str();
    }
    return out;
}

}  // namespace umbral
