#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqdepth/poset.hpp"

namespace sqdepth {

/// [bottom, top] = { w : bottom | w, w | top }.
struct Interval {
  Monomial bottom;
  Monomial top;

  bool contains(Monomial w) const noexcept { return bottom.divides(w) && w.divides(top); }
  std::size_t span_size() const noexcept {
    return std::size_t{1} << (top.degree() - bottom.degree());
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A disjoint interval cover of P witnessing sdepth >= claimed_sdepth.
struct PartitionCertificate {
  std::vector<Interval> intervals;
  int claimed_sdepth = 0;

  friend bool operator==(const PartitionCertificate&, const PartitionCertificate&) = default;
};

/// Decides sdepth(P) >= k and returns a witness when it holds.
///
/// Every element of degree < k is covered by disjoint intervals whose tops
/// have degree exactly k; the other elements become singletons. The search
/// branches on the first uncovered element in canonical order and tries
/// tops in canonical order, so the certificate is deterministic.
/// Throws std::invalid_argument unless 0 <= k <= n.
std::optional<PartitionCertificate> sdepth_at_least(const Poset& poset, int k);

struct SdepthResult {
  int value = 0;
  PartitionCertificate certificate;
};

/// Exact Stanley depth via binary search over the monotone decision.
SdepthResult sdepth(const Poset& poset);

struct VerifyResult {
  bool ok = false;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks interval well-formedness, disjointness, exact coverage of P and
/// that claimed_sdepth is the minimum top degree.
VerifyResult verify_partition(const Poset& poset, const PartitionCertificate& cert);

inline constexpr std::size_t kNaiveSdepthMaxSize = 14;

/// Brute force over every interval partition of P. Throws PreconditionError
/// when |P| exceeds max_size.
int naive_sdepth(const Poset& poset, std::size_t max_size = kNaiveSdepthMaxSize);

/// Number of interval partitions of P (same enumeration as naive_sdepth).
std::uint64_t count_interval_partitions(const Poset& poset,
                                        std::size_t max_size = kNaiveSdepthMaxSize);

}  // namespace sqdepth
