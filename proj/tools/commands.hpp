#pragma once

#include "lefschetz/error.hpp"
#include "lefschetz/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lefschetz::cli {

struct RunConfig {
  std::uint64_t seed = 0;
  SearchConfig search;
};

/// JSON body plus process exit code: 0 verified, 1 search exhausted or a
/// property failed, 2 bad input.
struct CommandResult {
  Json body;
  int exit_code = 0;
};

/// Maps a library error onto {"error": ..., "message": ...} and an exit code.
CommandResult error_result(const Error& e);

CommandResult cmd_seq_check(std::string_view text);
CommandResult cmd_construct(std::string_view h_text, const RunConfig& cfg);

CommandResult cmd_analyze_poly(const Json& poly, const RunConfig& cfg);
CommandResult cmd_analyze_points(const Json& points, std::string_view alphas_text, unsigned d, const RunConfig& cfg);

struct PointsParams {
  std::string kind;  // generic | collinear | two-lines | rnc | distraction
  std::size_t n = 2;
  std::size_t s = 0;
  std::size_t s1 = 0, s2 = 0;
  bool share = false;
  std::string params;     // rnc: comma-separated curve parameters
  std::string monomials;  // distraction: "1,x1,x2,x1^2"
  std::string delta;      // distraction: lex order ideal with these degree counts
};
CommandResult cmd_points_gen(const PointsParams& p, const RunConfig& cfg);

struct VerifyParams {
  std::string theorem;  // rnc | conic | conic-tail | line-tail | corslp | props | detlemma
  std::size_t max_m = 5;
  std::size_t count = 200;  // detlemma instances per m
  std::size_t s_max = 0;    // 0 selects the theorem's default grid bound
  std::size_t draws = 5;    // rnc parameter draws per grid point
};
CommandResult cmd_verify(const VerifyParams& p, const RunConfig& cfg);

/// Parses "1,x1,x2,x1^2,x1*x2" into monomials in x_1..x_n.
std::vector<Monomial> parse_monomials(std::string_view text, std::size_t n_vars);

}  // namespace lefschetz::cli
