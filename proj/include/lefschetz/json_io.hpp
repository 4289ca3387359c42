#pragma once

#include "lefschetz/construct.hpp"
#include "lefschetz/gorenstein.hpp"
#include "lefschetz/points.hpp"

#include <json.hpp>

namespace lefschetz {

// Keys are emitted in insertion order so that equal inputs serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

Json to_json(const HVector& h);
Json to_json(const LinearFormS& ell);

/// {"n_vars": k, "ring": "R", "terms": [{"exp": [...], "coef": "p/q"}, ...]}
Json to_json(const Poly& F);
Poly poly_from_json(const Json& j);

/// {"n": n, "points": [["1","0","0"], ...]}, plus "hilbert" and "tau" when
/// `with_invariants` is set.
Json to_json(const PointSet& X, bool with_invariants = true);
PointSet points_from_json(const Json& j);

Json to_json(const LefschetzCertificate& c);
Json to_json(const StructuredGenerator& g);
Json to_json(const ConstructionResult& r);

}  // namespace lefschetz
