#pragma once

#include <json.hpp>

#include "mns/identity_report.hpp"
#include "mns/matrix_algebra.hpp"
#include "mns/random_walk.hpp"
#include "mns/sequence.hpp"
#include "mns/tri_matrix.hpp"

namespace mns {

using Json = nlohmann::ordered_json;

/// ["p/q", ...]
Json to_json(const Sequence& f);

/// {"n": N, "rows": [["p/q", ...], ...]} with row i holding columns 1..i.
Json to_json(const TriMatrix& m);

/// Inverse of to_json(TriMatrix); throws std::invalid_argument on bad shape.
TriMatrix tri_matrix_from_json(const Json& j);

/// {"lambda": [...], "D": {...}, "E": {...}}
Json to_json(const EigenDecomposition& eig);

/// {"exact": "p/q", "estimate": x, "stderr": s, "samples": n, "seed": s}
Json to_json(const Rational& exact, const MonteCarloEstimate& mc);

} // namespace mns
