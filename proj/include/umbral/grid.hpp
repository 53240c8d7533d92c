#pragma once

#include <vector>

#include "umbral/rational.hpp"

#include "json.hpp"

namespace umbral {

/**
 * Parameter grid for verification runs.  The defaults cover negative,
 * zero and fractional parameters while keeping a full run fast; runs of
 * identities that constrain lambda filter the lambda list accordingly.
 */
struct GridConfig {
    std::vector<int> k_values;
    std::vector<Rational> lambda_values;
    std::vector<long> mu_values;
    std::vector<int> s_values;
    std::vector<Rational> y_values;
    int n_max = 8;

    static GridConfig defaults();

    /// Reads a JSON object with keys k, lambda, mu, s, y, n_max; absent
    /// keys keep their default values.
    static GridConfig from_json(const nlohmann::json& j);

    nlohmann::ordered_json to_json() const;

    /// Nonempty lists and n_max >= 1.
    void validate() const;
};

}  // namespace umbral
