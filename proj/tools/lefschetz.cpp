#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using lefschetz::Json;
using lefschetz::cli::CommandResult;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lefschetz::Error(lefschetz::ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw lefschetz::Error(lefschetz::ErrorCode::ParseError, path + ": " + e.what());
  }
}

int emit(const CommandResult& r, const std::string& out_path) {
  const std::string text = r.body.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein algebras, higher Hessians and Lefschetz certificates"};
  // --h names the sequence for construct, so help is long-form only
  app.set_help_flag("--help", "Print this help message and exit");
  app.fallthrough();
  app.require_subcommand(1);

  lefschetz::cli::RunConfig cfg;
  std::string out_path;
  app.add_option("--seed", cfg.seed, "seed for every randomized search");
  app.add_option("--attempts", cfg.search.attempts, "candidate linear forms per search")->check(CLI::PositiveNumber);
  app.add_option("--trials", cfg.search.trials, "evaluation points per nonvanishing test")->check(CLI::PositiveNumber);
  app.add_option("--coord-box", cfg.search.coord_box, "coordinates drawn from [-box, box]")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write JSON here instead of stdout");

  auto* seq = app.add_subcommand("seq", "sequence classification")->require_subcommand(1);
  auto* seq_check = seq->add_subcommand("check", "O-sequence, differentiable, unimodal, symmetric, SI");
  std::string seq_text;
  seq_check->add_option("sequence", seq_text, "comma-separated entries, e.g. 1,3,5,3,1")->required();

  auto* construct = app.add_subcommand("construct", "SI-sequence to an SLP Gorenstein algebra");
  std::string h_text;
  construct->add_option("--h", h_text, "the SI-sequence")->required();

  auto* analyze = app.add_subcommand("analyze", "Hilbert function and Lefschetz verdicts");
  std::string poly_path, points_path, alphas_text;
  unsigned analyze_d = 0;
  auto* poly_opt = analyze->add_option("--poly", poly_path, "dual generator JSON file");
  auto* points_opt = analyze->add_option("--points", points_path, "points JSON file");
  analyze->add_option("--alphas", alphas_text, "weights, default all 1")->needs(points_opt);
  auto* d_opt = analyze->add_option("--d", analyze_d, "degree of the power sum")->needs(points_opt);
  points_opt->needs(d_opt);
  poly_opt->excludes(points_opt);

  auto* points = app.add_subcommand("points", "point configurations")->require_subcommand(1);
  auto* gen = points->add_subcommand("gen", "generate a configuration");
  lefschetz::cli::PointsParams pp;
  gen->add_option("kind", pp.kind, "generic | collinear | two-lines | rnc | distraction")->required();
  gen->add_option("--n", pp.n, "ambient dimension (variables for distraction)");
  gen->add_option("--s", pp.s, "number of points");
  gen->add_option("--s1", pp.s1, "points on the first line");
  gen->add_option("--s2", pp.s2, "points on the second line");
  gen->add_flag("--share", pp.share, "include the intersection point");
  gen->add_option("--params", pp.params, "curve parameters");
  gen->add_option("--monomials", pp.monomials, "order ideal, e.g. 1,x1,x2");
  gen->add_option("--delta", pp.delta, "degree counts of a lex order ideal");

  auto* verify = app.add_subcommand("verify", "theorem verification campaigns");
  lefschetz::cli::VerifyParams vp;
  verify->add_option("theorem", vp.theorem, "rnc | conic | conic-tail | line-tail | corslp | props | detlemma")
      ->required();
  verify->add_option("--max-m", vp.max_m, "detlemma: largest block size");
  verify->add_option("--count", vp.count, "detlemma: instances per block size");
  verify->add_option("--s-max", vp.s_max, "rnc, conic: largest point count per curve");
  verify->add_option("--draws", vp.draws, "rnc: parameter draws per grid point");

  CLI11_PARSE(app, argc, argv);

  try {
    if (seq_check->parsed()) return emit(lefschetz::cli::cmd_seq_check(seq_text), out_path);
    if (construct->parsed()) return emit(lefschetz::cli::cmd_construct(h_text, cfg), out_path);
    if (analyze->parsed()) {
      if (!poly_path.empty()) return emit(lefschetz::cli::cmd_analyze_poly(read_json(poly_path), cfg), out_path);
      if (!points_path.empty())
        return emit(lefschetz::cli::cmd_analyze_points(read_json(points_path), alphas_text, analyze_d, cfg), out_path);
      throw lefschetz::Error(lefschetz::ErrorCode::ParseError, "analyze needs --poly or --points");
    }
    if (gen->parsed()) return emit(lefschetz::cli::cmd_points_gen(pp, cfg), out_path);
    if (verify->parsed()) return emit(lefschetz::cli::cmd_verify(vp, cfg), out_path);
  } catch (const lefschetz::Error& e) {
    return emit(lefschetz::cli::error_result(e), out_path);
  }
  return 2;
}
