#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lefschetz {

/// Binomial coefficient C(n, k), saturating at UINT64_MAX. Saturation keeps
/// every comparison against sequence entries correct.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// h = C(m_i, i) + C(m_{i-1}, i-1) + ... + C(m_j, j) with m_i > ... > m_j >= j >= 1.
struct BinomialExpansion {
  std::uint64_t h = 0;
  unsigned i = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> parts;  // (m_k, k), k descending
};

/// The unique i-binomial expansion of h (greedy). Requires h >= 1, i >= 1.
BinomialExpansion binomial_expand(std::uint64_t h, unsigned i);

/// Macaulay's growth bound h^<i>; 0^<i> = 0.
std::uint64_t macaulay_bound(std::uint64_t h, unsigned i);

/// A finite h-vector (h_0, ..., h_d) with h_d != 0; trailing zeros are trimmed.
class HVector {
 public:
  HVector() = default;
  explicit HVector(std::vector<std::int64_t> entries);
  HVector(std::initializer_list<std::int64_t> entries)
      : HVector(std::vector<std::int64_t>(entries)) {}

  /// Parses "1,3,5" or a JSON array "[1,3,5]".
  static HVector parse(std::string_view text);

  [[nodiscard]] const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  /// Index of the last nonzero entry; -1 for the all-zero sequence.
  [[nodiscard]] int socle_degree() const noexcept { return static_cast<int>(entries_.size()) - 1; }
  /// h_i, with h_i = 0 beyond the socle degree.
  [[nodiscard]] std::int64_t operator[](std::size_t i) const noexcept {
    return i < entries_.size() ? entries_[i] : 0;
  }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// First difference (h_0, h_1 - h_0, ..., h_d - h_{d-1}); entries may be negative.
std::vector<std::int64_t> first_difference(std::span<const std::int64_t> h);

/// Index i+1 of the first entry exceeding its Macaulay bound h_i^<i>, or
/// nullopt if there is none. Index 0 is reported when h_0 != 1 and a
/// negative entry is reported at its own index.
std::optional<std::size_t> first_macaulay_violation(std::span<const std::int64_t> h);

bool is_O_sequence(std::span<const std::int64_t> h);
bool is_differentiable(std::span<const std::int64_t> h);
bool is_unimodal(std::span<const std::int64_t> h);
bool is_symmetric(std::span<const std::int64_t> h);

inline bool is_O_sequence(const HVector& h) { return is_O_sequence(h.entries()); }
inline bool is_differentiable(const HVector& h) { return is_differentiable(h.entries()); }
inline bool is_unimodal(const HVector& h) { return is_unimodal(h.entries()); }
inline bool is_symmetric(const HVector& h) { return is_symmetric(h.entries()); }

/// Symmetric, unimodal, h_0 = 1 and (h_0, ..., h_{floor(d/2)}) differentiable.
bool is_SI(const HVector& h);

/// The stabilized sequence built from an SI-sequence: equal to h up to
/// t = min{i | h_i >= h_{i+1}} and constant s = h_t afterwards.
struct HBar {
  std::vector<std::int64_t> head;  // hbar_0 .. hbar_t
  std::size_t t = 0;
  std::int64_t s = 0;

  [[nodiscard]] std::int64_t at(std::size_t i) const noexcept { return i <= t ? head[i] : s; }
  /// (hbar_0, ..., hbar_{len-1}).
  [[nodiscard]] std::vector<std::int64_t> truncated(std::size_t len) const;
};

/// Throws Error{NotSI} unless is_SI(h).
HBar hbar(const HVector& h);

}  // namespace lefschetz
