#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sqdepth {

/// Variable subset; bit (i - 1) is set iff x_i divides the monomial.
using Mask = std::uint32_t;

inline constexpr int kMaxVariables = 24;

constexpr Mask full_mask(int n) noexcept {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// A square-free monomial, identified with its support.
struct Monomial {
  Mask mask = 0;

  static constexpr Monomial unit() noexcept { return {}; }
  /// x_i for 1 <= i <= kMaxVariables.
  static constexpr Monomial variable(int i) noexcept {
    return Monomial{Mask{1} << (i - 1)};
  }

  constexpr int degree() const noexcept { return std::popcount(mask); }
  constexpr bool is_unit() const noexcept { return mask == 0; }
  constexpr bool divides(Monomial other) const noexcept {
    return (mask & ~other.mask) == 0;
  }
  constexpr bool has_variable(int i) const noexcept {
    return (mask >> (i - 1)) & 1U;
  }
  constexpr Monomial times(Monomial other) const noexcept {
    return Monomial{mask | other.mask};
  }
  constexpr Monomial without(Monomial other) const noexcept {
    return Monomial{mask & ~other.mask};
  }

  friend constexpr bool operator==(Monomial, Monomial) = default;

  /// Canonical order: degree first, then mask value.
  friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.mask <=> b.mask;
  }
};

/// Least common multiple of square-free monomials is the union of supports.
constexpr Monomial lcm(Monomial a, Monomial b) noexcept { return a.times(b); }

/// Renders `x1*x3`, or `1` for the unit monomial.
std::string to_string(Monomial m);

/// Variable indices (1-based, ascending) of the support.
std::vector<int> variables_of(Monomial m);

/// All monomials over n variables of the given degree, in canonical order.
std::vector<Monomial> monomials_of_degree(int n, int degree);

/// Applies a relabeling of variables: x_i maps to x_{perm[i-1]} (perm is 1-based values).
Monomial relabel(Monomial m, const std::vector<int>& perm);

}  // namespace sqdepth
