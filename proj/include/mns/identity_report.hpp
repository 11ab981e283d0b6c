#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mns/rational.hpp"

namespace mns {

/// Outcome of evaluating both sides of an identity exactly.
struct IdentityReport {
    std::string identity;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<Rational> lhs;
    std::vector<Rational> rhs;

    bool equal() const { return lhs == rhs; }
};

/// {"identity", "params", "lhs", "rhs", "equal"}; single values are emitted
/// as "p/q" strings, multi-valued sides (matrix identities) as arrays.
nlohmann::ordered_json to_json(const IdentityReport& report);

} // namespace mns
