#include "umbral/report.hpp"

namespace umbral {

nlohmann::ordered_json params_to_json(const MixedParams& params) {
    nlohmann::ordered_json j;
    j["k"] = params.k;
    j["lambda"] = params.lambda.str();
    j["mu"] = params.mu;
    return j;
}

nlohmann::ordered_json IdentityReport::to_json() const {
    nlohmann::ordered_json j;
    j["id"] = id;
    j["params"] = params_to_json(params);
    if (!aux.empty()) {
        nlohmann::ordered_json a;
        for (const auto& [key, value] : aux) a[key] = value;
        j["aux"] = a;
    }
    j["n_max"] = n_max;
    j["status"] = status;
    if (first_fail) {
        nlohmann::ordered_json f;
        f["n"] = first_fail->n;
        if (first_fail->m) f["m"] = *first_fail->m;
        f["coeff_index"] = first_fail->coeff_index;
        f["lhs"] = first_fail->lhs;
        f["rhs"] = first_fail->rhs;
        j["first_fail"] = f;
    }
    if (certificate) j["certificate"] = *certificate;
    return j;
}

}  // namespace umbral
