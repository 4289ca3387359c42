#include "lefschetz/hvector.hpp"

#include "lefschetz/error.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace lefschetz {

namespace {
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
  return a > kSaturated - b ? kSaturated : a + b;
}
}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step
    r = r * (n - k + i) / i;
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

BinomialExpansion binomial_expand(std::uint64_t h, unsigned i) {
  if (h == 0 || i == 0)
    throw Error(ErrorCode::PreconditionViolated, "binomial expansion needs h >= 1 and i >= 1");
  BinomialExpansion e{h, i, {}};
  std::uint64_t rest = h;
  for (unsigned k = i; k >= 1 && rest > 0; --k) {
    // largest m with C(m, k) <= rest; C(m, k) >= m - k + 1 bounds the search
    std::uint64_t lo = k, hi = rest + k - 1;
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo + 1) / 2;
      if (binomial(mid, k) <= rest)
        lo = mid;
      else
        hi = mid - 1;
    }
    e.parts.emplace_back(lo, k);
    rest -= binomial(lo, k);
  }
  return e;
}

std::uint64_t macaulay_bound(std::uint64_t h, unsigned i) {
  if (h == 0) return 0;
  std::uint64_t total = 0;
  for (const auto& [m, k] : binomial_expand(h, i).parts)
    total = saturating_add(total, binomial(m + 1, k + 1));
  return total;
}

HVector::HVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  for (auto v : entries_)
    if (v < 0) throw Error(ErrorCode::PreconditionViolated, "h-vector entries must be non-negative");
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

HVector HVector::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '[' && c != ']') s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty sequence");
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string_view tok(s.data() + pos, comma - pos);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0)
      throw Error(ErrorCode::ParseError, "bad sequence entry '" + std::string(tok) + "'");
    values.push_back(v);
    pos = comma + 1;
  }
  return HVector(std::move(values));
}

std::string HVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::vector<std::int64_t> first_difference(std::span<const std::int64_t> h) {
  std::vector<std::int64_t> d(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) d[i] = i == 0 ? h[0] : h[i] - h[i - 1];
  return d;
}

std::optional<std::size_t> first_macaulay_violation(std::span<const std::int64_t> h) {
  if (h.empty() || h[0] != 1) return 0;
  for (std::size_t i = 1; i < h.size(); ++i)
    if (h[i] < 0) return i;
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    const auto bound = macaulay_bound(static_cast<std::uint64_t>(h[i]), static_cast<unsigned>(i));
    if (static_cast<std::uint64_t>(h[i + 1]) > bound) return i + 1;
  }
  return std::nullopt;
}

bool is_O_sequence(std::span<const std::int64_t> h) { return !first_macaulay_violation(h); }

bool is_differentiable(std::span<const std::int64_t> h) {
  const auto d = first_difference(h);
  if (std::any_of(d.begin(), d.end(), [](auto v) { return v < 0; })) return false;
  return is_O_sequence(d);
}

bool is_unimodal(std::span<const std::int64_t> h) {
  std::size_t i = 0;
  while (i + 1 < h.size() && h[i] <= h[i + 1]) ++i;
  while (i + 1 < h.size() && h[i] >= h[i + 1]) ++i;
  return i + 1 >= h.size();
}

bool is_symmetric(std::span<const std::int64_t> h) {
  return std::equal(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(h.size() / 2), h.rbegin());
}

bool is_SI(const HVector& h) {
  if (h.empty() || h[0] != 1) return false;
  if (!is_symmetric(h) || !is_unimodal(h)) return false;
  const auto d = static_cast<std::size_t>(h.socle_degree());
  return is_differentiable(std::span(h.entries()).first(d / 2 + 1));
}

std::vector<std::int64_t> HBar::truncated(std::size_t len) const {
  std::vector<std::int64_t> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = at(i);
  return out;
}

HBar hbar(const HVector& h) {
  if (!is_SI(h)) throw Error(ErrorCode::NotSI, "(" + h.to_string() + ") is not an SI-sequence");
  HBar out;
  std::size_t t = 0;
  while (h[t] < h[t + 1]) ++t;
  out.t = t;
  out.s = h[t];
  out.head.assign(h.entries().begin(), h.entries().begin() + static_cast<std::ptrdiff_t>(t + 1));
  return out;
}

}  // namespace lefschetz
