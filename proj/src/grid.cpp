#include "umbral/grid.hpp"

#include <stdexcept>

namespace umbral {

namespace {

Rational rational_from_json(const nlohmann::json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw std::invalid_argument("grid: rational values must be strings or integers");
}

std::vector<Rational> rational_list(const nlohmann::json& arr) {
    std::vector<Rational> out;
    for (const auto& v : arr) out.push_back(rational_from_json(v));
    return out;
}

}  // namespace

GridConfig GridConfig::defaults() {
    GridConfig g;
    g.k_values = {-2, -1, 0, 1, 2, 3};
    g.lambda_values = {Rational(1), Rational(-1), Rational(1, 2), Rational(2), Rational(3)};
    g.mu_values = {0, 1, 2, 3, -1};
    g.s_values = {0, 1, 2, 3};
    g.y_values = {Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(7),
                  Rational(-3)};
    g.n_max = 8;
    return g;
}

GridConfig GridConfig::from_json(const nlohmann::json& j) {
    GridConfig g = defaults();
    if (!j.is_object()) throw std::invalid_argument("grid: config must be a JSON object");
    if (j.contains("k")) g.k_values = j.at("k").get<std::vector<int>>();
    if (j.contains("lambda")) g.lambda_values = rational_list(j.at("lambda"));
    if (j.contains("mu")) g.mu_values = j.at("mu").get<std::vector<long>>();
    if (j.contains("s")) g.s_values = j.at("s").get<std::vector<int>>();
    if (j.contains("y")) g.y_values = rational_list(j.at("y"));
    if (j.contains("n_max")) g.n_max = j.at("n_max").get<int>();
    g.validate();
    return g;
}

nlohmann::ordered_json GridConfig::to_json() const {
    nlohmann::ordered_json j;
    j["k"] = k_values;
    nlohmann::ordered_json lambdas = nlohmann::ordered_json::array();
    for (const auto& l : lambda_values) lambdas.push_back(l.str());
    j["lambda"] = lambdas;
    j["mu"] = mu_values;
    j["s"] = s_values;
    nlohmann::ordered_json ys = nlohmann::ordered_json::array();
    for (const auto& y : y_values) ys.push_back(y.str());
    j["y"] = ys;
    j["n_max"] = n_max;
    return j;
}

void GridConfig::validate() const {
    if (k_values.empty() || lambda_values.empty() || mu_values.empty() || s_values.empty() ||
        y_values.empty()) {
        throw std::invalid_argument("grid: parameter lists must be nonempty");
    }
    if (n_max < 1) throw std::invalid_argument("grid: n_max must be >= 1");
    for (const auto& s : s_values) {
        if (s < 0) throw std::invalid_argument("grid: s values must be nonnegative");
    }
}

}  // namespace umbral
