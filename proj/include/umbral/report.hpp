#pragma once

#include <map>
#include <optional>
#include <string>

#include "umbral/mixed.hpp"

#include "json.hpp"

namespace umbral {

/// Location and values of the first exact-equality violation found.
struct FirstFail {
    int n = 0;
    std::optional<int> m;  // inner index for scalar (n, m) identities
    int coeff_index = 0;
    std::string lhs;
    std::string rhs;
};

/**
 * Outcome record for one identity at one parameter point.  "verified"
 * means exact rational equality of every compared coefficient over the
 * whole evaluated range; anything less is "failed" with the first
 * discrepancy pinned down.
 */
struct IdentityReport {
    std::string id;
    MixedParams params;
    std::map<std::string, std::string> aux;  // "s" / "y" as canonical text
    int n_max = 0;
    std::string status;  // "verified" | "failed"
    std::optional<FirstFail> first_fail;
    std::optional<std::string> certificate;

    bool verified() const { return status == "verified"; }

    nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json params_to_json(const MixedParams& params);

}  // namespace umbral
