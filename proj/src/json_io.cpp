#include "lefschetz/json_io.hpp"

#include "lefschetz/error.hpp"

namespace lefschetz {

Json to_json(const Scalar& x) { return to_string(x); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(Integer(j.dump()));
  throw Error(ErrorCode::ParseError, "expected a fraction string or an integer, got " + j.dump());
}

Json to_json(const HVector& h) { return Json(h.entries()); }

Json to_json(const LinearFormS& ell) {
  Json out = Json::array();
  for (const auto& c : ell.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Poly& F) {
  Json terms = Json::array();
  for (const auto& [m, c] : F.display_terms()) terms.push_back(Json{{"exp", m.exponents()}, {"coef", to_json(c)}});
  return Json{{"n_vars", F.n_vars()}, {"ring", F.ring() == Ring::R ? "R" : "S"}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const Json& j) {
  try {
    const auto n = j.at("n_vars").get<std::size_t>();
    Ring ring = Ring::R;
    if (j.contains("ring")) {
      const auto r = j.at("ring").get<std::string>();
      if (r != "R" && r != "S") throw Error(ErrorCode::ParseError, "ring must be \"R\" or \"S\"");
      ring = r == "R" ? Ring::R : Ring::S;
    }
    Poly F(n, ring);
    for (const auto& t : j.at("terms")) {
      auto exps = t.at("exp").get<std::vector<unsigned>>();
      if (exps.size() != n) throw Error(ErrorCode::ParseError, "exponent vector length differs from n_vars");
      F.add_term(Monomial(std::move(exps)), scalar_from_json(t.at("coef")));
    }
    return F;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json to_json(const PointSet& X, bool with_invariants) {
  Json pts = Json::array();
  for (const auto& p : X.points()) {
    Json row = Json::array();
    for (const auto& c : p) row.push_back(to_json(c));
    pts.push_back(std::move(row));
  }
  Json out{{"n", X.n()}, {"points", std::move(pts)}};
  if (with_invariants) {
    out["hilbert"] = X.hilbert_prefix(X.tau() + 2);
    out["tau"] = X.tau();
  }
  return out;
}

PointSet points_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Point> pts;
    for (const auto& row : j.at("points")) {
      Point p;
      for (const auto& c : row) p.push_back(scalar_from_json(c));
      pts.push_back(std::move(p));
    }
    return PointSet(n, std::move(pts));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json to_json(const LefschetzCertificate& c) {
  Json degrees = Json::array();
  for (const auto& r : c.degrees) {
    Json d{{"j", r.j}, {"method", r.method == DegreeMethod::HessianDet ? "hessian_det" : "map_rank"}};
    if (r.method == DegreeMethod::HessianDet) d["det"] = to_json(r.det);
    d["power"] = r.power;
    d["rank"] = r.rank;
    d["required"] = r.required;
    d["ok"] = r.ok;
    degrees.push_back(std::move(d));
  }
  return Json{{"kind", c.kind == LefschetzKind::Strong ? "SLP" : "WLP"},
              {"ell", c.ell ? to_json(*c.ell) : Json()},
              {"degrees", std::move(degrees)},
              {"verdict", c.verdict},
              {"seed", c.seed},
              {"attempts", c.attempts}};
}

Json to_json(const StructuredGenerator& g) {
  Json alphas = Json::array();
  for (const auto& a : g.alphas) alphas.push_back(to_json(a));
  return Json{{"points", to_json(g.X)}, {"alphas", std::move(alphas)}, {"d", g.d}, {"F", to_json(g.expanded)}};
}

Json to_json(const ConstructionResult& r) {
  return Json{{"h", to_json(r.input_h)},
              {"generator", to_json(r.generator)},
              {"hilbert", to_json(r.algebra.hilbert())},
              {"certificate", to_json(r.certificate)},
              {"seed", r.seed},
              {"attempts_used", r.attempts_used}};
}

}  // namespace lefschetz
