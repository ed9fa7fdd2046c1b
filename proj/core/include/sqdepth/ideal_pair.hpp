#pragma once

#include <span>
#include <vector>

#include "sqdepth/monomial.hpp"

namespace sqdepth {

/// Minimal generators of a square-free monomial ideal: an antichain in canonical order.
using Generators = std::vector<Monomial>;

/// Drops duplicates and non-minimal elements; the result is sorted canonically.
Generators minimalize(std::span<const Monomial> gens);

/// True iff some generator divides m.
bool member(Monomial m, std::span<const Monomial> gens);

/// Minimal generators of the sum of two ideals.
Generators ideal_sum(std::span<const Monomial> a, std::span<const Monomial> b);

/// Minimal generators of the intersection of two square-free ideals.
Generators ideal_intersection(std::span<const Monomial> a, std::span<const Monomial> b);

/// True iff ideal(a) ⊆ ideal(b).
bool ideal_contained(std::span<const Monomial> a, std::span<const Monomial> b);

/// Nested square-free monomial ideals J ⊆ I of S = K[x_1..x_n], describing I/J.
///
/// Generators are minimalized on construction. I = S is represented by the
/// unit generator. Throws InvalidIdealPair when n is out of range, a
/// generator uses a variable beyond n, or J is not contained in I.
class IdealPair {
 public:
  IdealPair(int n, std::span<const Monomial> gens_i, std::span<const Monomial> gens_j);

  int n() const noexcept { return n_; }
  const Generators& gens_i() const noexcept { return gens_i_; }
  const Generators& gens_j() const noexcept { return gens_j_; }

  bool in_i(Monomial m) const { return member(m, gens_i_); }
  bool in_j(Monomial m) const { return member(m, gens_j_); }
  /// m is a basis monomial of I/J.
  bool in_module(Monomial m) const { return in_i(m) && !in_j(m); }

  /// I = J as ideals.
  bool is_zero_module() const;

  /// Smallest degree of a minimal generator of I (the default d); -1 if I = 0.
  int min_degree_i() const;
  /// Smallest degree of a minimal generator of J; -1 if J = 0.
  int min_degree_j() const;

  /// Variables x_i that are themselves minimal generators of I, ascending.
  std::vector<int> variable_generators() const;

  /// Applies x_i -> x_{perm[i-1]} to both generator sets.
  IdealPair relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const IdealPair&, const IdealPair&) = default;

 private:
  int n_;
  Generators gens_i_;
  Generators gens_j_;
};

}  // namespace sqdepth
