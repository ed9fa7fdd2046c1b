#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sqdepth/ideal_pair.hpp"
#include "sqdepth/linalg.hpp"
#include "sqdepth/poset.hpp"

namespace sqdepth {

/// Coefficient field K: the rationals or F_p.
struct FieldSpec {
  enum class Kind { kRationals, kPrime };

  Kind kind = Kind::kRationals;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() noexcept { return {}; }
  /// Throws PreconditionError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  /// Accepts `q` or `fp:<p>`.
  static FieldSpec parse(const std::string& text);

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Column entry of a Koszul boundary matrix.
struct BoundaryEntry {
  std::uint32_t row;
  int sign;
};

/// The multidegree-a strand of the Koszul complex K(x; I/J).
///
/// basis[p] lists the subsets τ ⊆ supp(a) with |τ| = p and x^{a \ τ} ∈ P,
/// ascending by mask. boundary[p][col] is the image of basis[p][col] in
/// terms of basis[p - 1] (boundary[0] is empty).
struct KoszulSlice {
  Monomial multidegree;
  std::vector<std::vector<Mask>> basis;
  std::vector<std::vector<std::vector<BoundaryEntry>>> boundary;

  std::size_t dim(std::size_t p) const { return p < basis.size() ? basis[p].size() : 0; }
  bool empty() const;
};

/// Builds the slice; throws std::logic_error if ∂∘∂ ≠ 0.
KoszulSlice koszul_slice(const Poset& poset, Monomial a);
/// Throws ZeroModuleError for I = J.
KoszulSlice koszul_slice(const IdealPair& ip, Monomial a);

bool boundary_squares_to_zero(const KoszulSlice& slice);

/// Dense matrix of ∂_p : C_p -> C_{p-1}.
IntMatrix boundary_matrix(const KoszulSlice& slice, std::size_t p);

/// rank H_p for p = 0..|a|.
std::vector<std::size_t> homology_ranks(const KoszulSlice& slice, const FieldSpec& field);

/// Σ (-1)^p dim C_p == Σ (-1)^p rank H_p.
bool euler_characteristic_holds(const KoszulSlice& slice, const std::vector<std::size_t>& ranks);

struct SliceHomology {
  Monomial multidegree;
  std::vector<std::size_t> ranks;
};

struct HomologyProfile {
  FieldSpec field;
  std::vector<SliceHomology> slices;  ///< only slices with some nonzero rank, ascending mask
  int max_nonzero = -1;
  int depth = 0;
};

struct DepthResult {
  int value = 0;
  HomologyProfile profile;
};

/// depth I/J = n - max{ i : H_i(x; I/J) ≠ 0 }, scanning all square-free multidegrees.
DepthResult depth(const Poset& poset, const FieldSpec& field = FieldSpec::rationals());
DepthResult depth(const IdealPair& ip, const FieldSpec& field = FieldSpec::rationals());

/// depth I/J <= k, deciding from the slices of degree >= n - k only.
bool depth_at_most(const Poset& poset, int k, const FieldSpec& field = FieldSpec::rationals());

/// depth S/J for a pair with I = S. Throws PreconditionError if I ≠ S,
/// ZeroModuleError if J = S.
int depth_of_quotient_ring(const IdealPair& ip, const FieldSpec& field = FieldSpec::rationals());

}  // namespace sqdepth
