#pragma once

#include <string>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/series.hpp"

#include "json.hpp"

namespace umbral {

nlohmann::ordered_json series_to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

/**
 * One table row: the polynomial p_n of a named family, coefficients
 * padded to n+1 entries of canonical rational text.
 */
nlohmann::ordered_json polynomial_row_to_json(const std::string& family,
                                              const nlohmann::ordered_json& params, int n,
                                              const Polynomial& p);

/// Reads back the coeffs field of a table row.
Polynomial polynomial_from_json(const nlohmann::json& j);

/// "c0, c1, ..." (text) or "c0,c1,..." (csv), padded to `width` coefficients.
std::string coefficient_row(const Polynomial& p, int width, const std::string& separator);

}  // namespace umbral
