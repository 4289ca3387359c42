#include "lefschetz/random.hpp"

#include "lefschetz/error.hpp"

#include <limits>

namespace lefschetz {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSI: return "NotSI";
    case ErrorCode::NotOSequence: return "NotOSequence";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::DuplicateParameter: return "DuplicateParameter";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::NotOrderIdeal: return "NotOrderIdeal";
    case ErrorCode::RealizationMismatch: return "RealizationMismatch";
    case ErrorCode::NotPlaneConfig: return "NotPlaneConfig";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BadSubsetSize: return "BadSubsetSize";
    case ErrorCode::NoWitnessFound: return "NoWitnessFound";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorCode::PreconditionViolated, "empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

std::int64_t Rng::nonzero(std::int64_t lo, std::int64_t hi) {
  if (lo == 0 && hi == 0) throw Error(ErrorCode::PreconditionViolated, "range contains only zero");
  for (;;) {
    if (auto v = uniform(lo, hi); v != 0) return v;
  }
}

Rng Rng::stream(std::string_view name) const {
  // FNV-1a over the name, mixed with the parent seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Rng(splitmix64(seed_ ^ splitmix64(h)));
}

Rng Rng::stream(std::uint64_t index) const {
  return Rng(splitmix64(seed_ + splitmix64(index + 0x632be59bd9b4e019ULL)));
}

}  // namespace lefschetz
