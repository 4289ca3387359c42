#include "commands.hpp"

#include "lefschetz/theorems.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lefschetz::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoWitnessFound:
    case ErrorCode::InternalInconsistency:
    case ErrorCode::RealizationMismatch:
      return 1;
    default:
      return 2;
  }
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '[' && c != ']') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Scalar> parse_scalars(std::string_view text) {
  std::vector<Scalar> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_scalar(tok));
  return out;
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

Json summary(const Json& records) {
  std::size_t passed = 0;
  for (const auto& r : records) passed += r.at("passed").get<bool>() ? 1 : 0;
  return Json{{"total", records.size()},
              {"passed", passed},
              {"failed", records.size() - passed},
              {"all_passed", passed == records.size()}};
}

}  // namespace

CommandResult error_result(const Error& e) {
  return {Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}, exit_code_for(e.code())};
}

std::vector<Monomial> parse_monomials(std::string_view text, std::size_t n_vars) {
  std::vector<Monomial> out;
  for (const auto& tok : split(text, ',')) {
    std::vector<unsigned> e(n_vars, 0);
    if (tok != "1") {
      for (const auto& factor : split(tok, '*')) {
        const auto caret = factor.find('^');
        const std::string var = factor.substr(0, caret);
        if (var.size() < 2 || var[0] != 'x')
          throw Error(ErrorCode::ParseError, "bad monomial factor '" + factor + "'");
        std::size_t idx = 0;
        unsigned power = 1;
        try {
          idx = std::stoul(var.substr(1));
          if (caret != std::string::npos) power = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
        } catch (const std::exception&) {
          throw Error(ErrorCode::ParseError, "bad monomial factor '" + factor + "'");
        }
        if (idx < 1 || idx > n_vars)
          throw Error(ErrorCode::ParseError, "variable " + var + " outside x1..x" + std::to_string(n_vars));
        e[idx - 1] += power;
      }
    }
    out.emplace_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------- seq check

CommandResult cmd_seq_check(std::string_view text) {
  try {
    const HVector h = HVector::parse(text);
    const auto& e = h.entries();
    const auto violation = first_macaulay_violation(e);
    const std::size_t half = h.empty() ? 0 : static_cast<std::size_t>(h.socle_degree()) / 2 + 1;
    Json out{{"h", to_json(h)},
             {"is_O", !violation.has_value()},
             {"first_macaulay_violation", violation ? Json(*violation) : Json()},
             {"is_differentiable", is_differentiable(h)},
             {"first_half_differentiable", is_differentiable(std::span(e).first(half))},
             {"is_unimodal", is_unimodal(h)},
             {"is_symmetric", is_symmetric(h)},
             {"is_SI", is_SI(h)}};
    return {std::move(out), 0};
  } catch (const Error& e) {
    return error_result(e);
  }
}

// ---------------------------------------------------------------- construct

CommandResult cmd_construct(std::string_view h_text, const RunConfig& cfg) {
  try {
    const HVector h = HVector::parse(h_text);
    Rng rng = Rng(cfg.seed).stream("construct");
    const auto result = construct_slp_algebra(h, rng, cfg.search);
    Json out = to_json(result);
    out["seed"] = cfg.seed;
    out["formula"] = hilbert_formula_check(result.generator).holds;
    return {std::move(out), result.certificate.verdict ? 0 : 1};
  } catch (const Error& e) {
    return error_result(e);
  }
}

// ---------------------------------------------------------------- analyze

namespace {

Json analysis(const GorensteinAlgebra& A, const RunConfig& cfg, int& exit_code) {
  Rng base = Rng(cfg.seed).stream("analyze");
  Rng slp_rng = base.stream("slp");
  Rng wlp_rng = base.stream("wlp");
  const auto slp = check_slp(A, slp_rng, cfg.search);
  const auto wlp = check_wlp(A, wlp_rng, cfg.search);
  exit_code = slp.verdict ? 0 : 1;
  return Json{{"seed", cfg.seed},
              {"hilbert", to_json(A.hilbert())},
              {"is_SI", is_SI(A.hilbert())},
              {"slp", to_json(slp)},
              {"wlp", to_json(wlp)}};
}

}  // namespace

CommandResult cmd_analyze_poly(const Json& poly, const RunConfig& cfg) {
  try {
    const GorensteinAlgebra A(poly_from_json(poly));
    int code = 0;
    Json out = analysis(A, cfg, code);
    out["F"] = to_json(A.generator());
    return {std::move(out), code};
  } catch (const Error& e) {
    return error_result(e);
  }
}

CommandResult cmd_analyze_points(const Json& points, std::string_view alphas_text, unsigned d, const RunConfig& cfg) {
  try {
    PointSet X = points_from_json(points);
    auto alphas = alphas_text.empty() ? std::vector<Scalar>(X.size(), 1) : parse_scalars(alphas_text);
    const StructuredGenerator g(std::move(X), std::move(alphas), d);
    const GorensteinAlgebra A(g.expanded);
    int code = 0;
    Json out = analysis(A, cfg, code);
    out["generator"] = to_json(g);
    if (d + 1 >= 2 * g.X.tau()) {
      const auto f = hilbert_formula_check(g);
      out["formula"] = Json{{"predicted", to_json(f.predicted)}, {"holds", f.holds}};
      if (!f.holds) code = 1;
    } else {
      out["formula"] = Json{{"predicted", nullptr}, {"holds", nullptr}, {"note", "d < 2 tau(X) - 1"}};
    }
    return {std::move(out), code};
  } catch (const Error& e) {
    return error_result(e);
  }
}

// ---------------------------------------------------------------- points gen

CommandResult cmd_points_gen(const PointsParams& p, const RunConfig& cfg) {
  try {
    auto need = [](bool ok, const std::string& what) {
      if (!ok) throw Error(ErrorCode::PreconditionViolated, what);
    };
    std::optional<PointSet> X;
    if (p.kind == "generic") {
      need(p.s >= 1, "generic needs --s >= 1");
      Rng rng = Rng(cfg.seed).stream("points-gen");
      X = gen_generic(p.n, p.s, rng, cfg.search.coord_box);
    } else if (p.kind == "collinear") {
      need(p.s >= 1, "collinear needs --s >= 1");
      X = gen_collinear(p.n, p.s);
    } else if (p.kind == "two-lines") {
      X = gen_two_lines(p.s1, p.s2, p.share);
    } else if (p.kind == "rnc") {
      std::vector<Scalar> params;
      if (!p.params.empty()) {
        params = parse_scalars(p.params);
      } else {
        need(p.s >= 1, "rnc needs --params or --s");
        for (std::size_t t = 0; t < p.s; ++t) params.emplace_back(static_cast<long>(t));
      }
      X = gen_rnc(p.n, params);
    } else if (p.kind == "distraction") {
      need(p.monomials.empty() != p.delta.empty(), "distraction needs exactly one of --monomials, --delta");
      if (!p.delta.empty())
        X = gen_distraction(lex_order_ideal(HVector::parse(p.delta).entries(), p.n));
      else
        X = gen_distraction(OrderIdeal(p.n, parse_monomials(p.monomials, p.n)));
    } else {
      throw Error(ErrorCode::ParseError, "unknown point configuration '" + p.kind + "'");
    }
    Json out{{"kind", p.kind}};
    out.update(to_json(*X));
    return {std::move(out), 0};
  } catch (const Error& e) {
    return error_result(e);
  }
}

// ---------------------------------------------------------------- verify

namespace {

Json tension_json(const std::vector<std::string>& t) { return strings(t); }

// runs one grid point; a library error becomes a failed record
Json guarded(Json key, const std::function<Json()>& body) {
  try {
    Json r = body();
    key.update(r);
    return key;
  } catch (const Error& e) {
    key["error"] = std::string(to_string(e.code()));
    key["message"] = e.what();
    key["passed"] = false;
    return key;
  }
}

Json verify_detlemma(const VerifyParams& p, Rng& rng) {
  Json records = Json::array();
  for (std::size_t m = 1; m <= p.max_m; ++m) {
    Rng r = rng.stream(m);
    records.push_back(guarded(Json{{"m", m}}, [&] {
      std::size_t mismatches = 0;
      for (std::size_t i = 0; i < p.count; ++i) mismatches += block_det_identity(random_block_pair(m, r)).equal ? 0 : 1;
      return Json{{"instances", p.count}, {"mismatches", mismatches}, {"passed", mismatches == 0}};
    }));
  }
  return records;
}

Json verify_rnc(const VerifyParams& p, const RunConfig& cfg, Rng& rng) {
  Json records = Json::array();
  const std::size_t s_max = p.s_max ? p.s_max : 8;
  std::uint64_t index = 0;
  for (std::size_t n : {2, 3})
    for (std::size_t s = 3; s <= s_max; ++s) {
      const unsigned tau = static_cast<unsigned>((s - 1 + n - 1) / n);
      for (unsigned d : {2 * tau, 2 * tau + 1})
        for (std::size_t draw = 0; draw < p.draws; ++draw) {
          Rng r = rng.stream(index++);
          records.push_back(guarded(Json{{"n", n}, {"s", s}, {"d", d}, {"draw", draw}}, [&] {
            const auto run = verify_rnc_slp(n, s, d, r, cfg.search);
            return Json{{"tau", run.generator.X.tau()},
                        {"h", to_json(run.hilbert)},
                        {"verdict", run.certificate.verdict},
                        {"attempts", run.certificate.attempts},
                        {"tension", tension_json(run.tension)},
                        {"passed", run.passed()}};
          }));
        }
    }
  return records;
}

Json verify_conic(const VerifyParams& p, const RunConfig& cfg, Rng& rng) {
  Json records = Json::array();
  const std::size_t s_max = p.s_max ? p.s_max : 5;
  std::uint64_t index = 0;
  for (std::size_t s1 = 2; s1 <= s_max; ++s1)
    for (std::size_t s2 = 2; s2 <= s_max; ++s2)
      for (bool share : {false, true}) {
        Rng r = rng.stream(index++);
        const unsigned d = 2 * gen_two_lines(s1, s2, share).tau();
        records.push_back(guarded(Json{{"s1", s1}, {"s2", s2}, {"share", share}, {"d", d}}, [&] {
          const auto run = verify_conic_slp(s1, s2, share, d, r, cfg.search);
          return Json{{"h", to_json(run.hilbert)},
                      {"display_holds", run.display_holds},
                      {"decomposition_points", run.decomposition_points},
                      {"decomposition_holds", run.decomposition_holds},
                      {"verdict", run.certificate.verdict},
                      {"tension", tension_json(run.tension)},
                      {"passed", run.passed()}};
        }));
      }
  return records;
}

Json verify_tail(TailKind kind, const RunConfig& cfg, Rng& rng) {
  // (tau, points off the curve) pairs whose tail hypothesis is satisfiable
  const std::vector<std::pair<unsigned, std::size_t>> grid =
      kind == TailKind::Conic
          ? std::vector<std::pair<unsigned, std::size_t>>{{2, 0}, {3, 0}, {4, 0}, {4, 1}, {5, 2}, {5, 3}}
          : std::vector<std::pair<unsigned, std::size_t>>{{3, 1}, {4, 1}, {4, 2}, {4, 3}};
  Json records = Json::array();
  std::uint64_t index = 0;
  for (auto [tau, off] : grid) {
    Rng r = rng.stream(index++);
    const std::size_t on = kind == TailKind::Conic ? 2 * tau + 1 : tau + 1;
    records.push_back(guarded(Json{{"tau", tau}, {"on", on}, {"off", off}, {"d", 2 * tau}}, [&] {
      const PointSet X = gen_curve_with_off_points(kind, on, off, r);
      if (X.tau() != tau) throw Error(ErrorCode::ShapeMismatch, "configuration has tau " + std::to_string(X.tau()));
      const auto rep = verify_tail_nonvanishing(kind, X, 2 * tau, r, cfg.search);
      Json degrees = Json::array();
      for (const auto& t : rep.degrees)
        degrees.push_back(Json{{"j", t.j},
                               {"det", t.witness ? to_json(t.det) : Json()},
                               {"zero_forcing", t.zero_forcing_holds}});
      return Json{{"points", to_json(X, false)},
                  {"k", rep.k},
                  {"j_range", Json{rep.j_begin, rep.j_end}},
                  {"factored_indices", rep.factored_indices},
                  {"degrees", std::move(degrees)},
                  {"tension", tension_json(rep.tension)},
                  {"passed", rep.complete()}};
    }));
  }
  return records;
}

Json verify_corslp(const RunConfig& cfg, Rng& rng) {
  const std::vector<std::pair<Family, std::string>> families = {{Family::OnesAfter12, "1,2,1..."},
                                                                {Family::OnesAfter122, "1,2,2,1..."},
                                                                {Family::OnesAfter123, "1,2,3,1..."},
                                                                {Family::Twos, "1,2..."},
                                                                {Family::TwosAfter123, "1,2,3,2..."}};
  Json records = Json::array();
  std::uint64_t index = 0;
  for (const auto& [f, name] : families)
    for (std::size_t m : {2, 3, 4}) {
      Rng r = rng.stream(index++);
      records.push_back(guarded(Json{{"family", name}, {"m", m}, {"delta", family_delta(f, m)}}, [&] {
        const auto run = verify_corollary_families(f, m, std::nullopt, r, cfg.search);
        return Json{{"d", run.generator.d},
                    {"h", to_json(run.hilbert)},
                    {"verdict", run.certificate.verdict},
                    {"tension", tension_json(run.tension)},
                    {"passed", run.passed()}};
      }));
    }
  return records;
}

Json verify_props(const RunConfig& cfg, Rng& rng) {
  struct Case {
    int kind;
    std::size_t n, s;
    unsigned d, j;
  };
  const std::vector<Case> cases = {{1, 2, 4, 4, 1}, {1, 2, 7, 6, 2}, {1, 3, 5, 4, 1},
                                   {2, 2, 5, 3, 1}, {2, 2, 5, 4, 1}, {2, 2, 8, 5, 2}, {2, 2, 8, 6, 2}};
  Json records = Json::array();
  std::uint64_t index = 0;
  for (const auto& c : cases) {
    Rng r = rng.stream(index++);
    records.push_back(
        guarded(Json{{"kind", c.kind}, {"n", c.n}, {"s", c.s}, {"d", c.d}, {"j", c.j}}, [&] {
          const PointSet X = gen_generic(c.n, c.s, r, cfg.search.coord_box);
          const auto rep = verify_prop_s_minus(c.kind, X, c.d, c.j, r, cfg.search);
          return Json{{"h_j", rep.h_j},
                      {"witness_det", rep.witness.nonzero ? to_json(rep.witness.value) : Json()},
                      {"tension", tension_json(rep.tension)},
                      {"passed", rep.witness.nonzero && rep.tension.empty()}};
        }));
  }
  return records;
}

}  // namespace

CommandResult cmd_verify(const VerifyParams& p, const RunConfig& cfg) {
  Rng rng = Rng(cfg.seed).stream("verify").stream(p.theorem);
  Json records;
  if (p.theorem == "detlemma")
    records = verify_detlemma(p, rng);
  else if (p.theorem == "rnc")
    records = verify_rnc(p, cfg, rng);
  else if (p.theorem == "conic")
    records = verify_conic(p, cfg, rng);
  else if (p.theorem == "conic-tail")
    records = verify_tail(TailKind::Conic, cfg, rng);
  else if (p.theorem == "line-tail")
    records = verify_tail(TailKind::Line, cfg, rng);
  else if (p.theorem == "corslp")
    records = verify_corslp(cfg, rng);
  else if (p.theorem == "props")
    records = verify_props(cfg, rng);
  else
    return error_result(Error(ErrorCode::ParseError, "unknown theorem '" + p.theorem + "'"));
  Json sum = summary(records);
  const bool ok = sum.at("all_passed").get<bool>();
  return {Json{{"theorem", p.theorem}, {"seed", cfg.seed}, {"records", std::move(records)}, {"summary", std::move(sum)}},
          ok ? 0 : 1};
}

}  // namespace lefschetz::cli
