#include "mns/json_io.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mns {

namespace {

Json side(const std::vector<Rational>& values) {
    if (values.size() == 1) return Json(values.front().str());
    Json array = Json::array();
    for (const Rational& x : values) array.push_back(x.str());
    return array;
}

} // namespace

Json to_json(const Sequence& f) {
    Json array = Json::array();
    for (const Rational& x : f.values()) array.push_back(x.str());
    return array;
}

Json to_json(const TriMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 1; i <= m.dim(); ++i) {
        Json row = Json::array();
        for (const Rational& x : m.row(i)) row.push_back(x.str());
        rows.push_back(std::move(row));
    }
    Json out;
    out["n"] = m.dim();
    out["rows"] = std::move(rows);
    return out;
}

TriMatrix tri_matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows")) {
        throw std::invalid_argument("matrix JSON needs \"n\" and \"rows\"");
    }
    const auto n = j.at("n").get<std::size_t>();
    const Json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != n) {
        throw std::invalid_argument("matrix JSON must have " + std::to_string(n) + " rows");
    }
    std::vector<Rational> packed;
    packed.reserve(TriMatrix::packed_size(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != i + 1) {
            throw std::invalid_argument("row " + std::to_string(i + 1) + " must have " +
                                        std::to_string(i + 1) + " entries");
        }
        for (const Json& x : rows[i]) packed.push_back(Rational::parse(x.get<std::string>()));
    }
    return TriMatrix::from_packed(n, std::move(packed));
}

Json to_json(const EigenDecomposition& eig) {
    Json out;
    out["lambda"] = to_json(eig.eigenvalues);
    out["D"] = to_json(eig.vectors);
    out["E"] = to_json(eig.inverse_vectors);
    return out;
}

Json to_json(const Rational& exact, const MonteCarloEstimate& mc) {
    Json out;
    out["exact"] = exact.str();
    out["estimate"] = mc.estimate;
    out["stderr"] = mc.standard_error;
    out["samples"] = mc.samples;
    out["seed"] = mc.seed;
    return out;
}

nlohmann::ordered_json to_json(const IdentityReport& report) {
    Json out;
    out["identity"] = report.identity;
    out["params"] = report.params;
    out["lhs"] = side(report.lhs);
    out["rhs"] = side(report.rhs);
    out["equal"] = report.equal();
    return out;
}

} // namespace mns
