#include "sqdepth/koszul.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "sqdepth/errors.hpp"
#include "sqdepth/linalg.hpp"

namespace sqdepth {

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1U << 31)) {
    throw PreconditionError("field characteristic " + std::to_string(p) +
                            " is not a prime below 2^31");
  }
  return {Kind::kPrime, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    std::uint32_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc{} && ptr == last && first != last) return prime(p);
  }
  throw PreconditionError("unknown field '" + text + "' (expected q or fp:<prime>)");
}

std::string FieldSpec::to_string() const {
  return kind == Kind::kRationals ? "q" : "fp:" + std::to_string(characteristic);
}

bool KoszulSlice::empty() const {
  return std::all_of(basis.begin(), basis.end(), [](const auto& b) { return b.empty(); });
}

KoszulSlice koszul_slice(const Poset& poset, Monomial a) {
  if (poset.size() == 0) throw ZeroModuleError();
  KoszulSlice slice;
  slice.multidegree = a;
  const int top = a.degree();
  slice.basis.resize(top + 1);
  slice.boundary.resize(top + 1);

  // e_τ carries the module monomial x^{a \ τ}.
  Mask tau = a.mask;
  while (true) {
    if (poset.contains(Monomial{a.mask & ~tau})) slice.basis[std::popcount(tau)].push_back(tau);
    if (tau == 0) break;
    tau = (tau - 1) & a.mask;
  }
  for (auto& b : slice.basis) std::sort(b.begin(), b.end());

  for (int p = 1; p <= top; ++p) {
    const auto& rows = slice.basis[p - 1];
    auto& columns = slice.boundary[p];
    columns.resize(slice.basis[p].size());
    for (std::size_t col = 0; col < slice.basis[p].size(); ++col) {
      const Mask t = slice.basis[p][col];
      int position = 0;
      for (Mask rest = t; rest != 0; rest &= rest - 1, ++position) {
        const Mask face = t & ~(rest & (~rest + 1));
        // x_j · x^{a \ τ} vanishes in I/J exactly when the face is not a basis element.
        auto it = std::lower_bound(rows.begin(), rows.end(), face);
        if (it == rows.end() || *it != face) continue;
        columns[col].push_back({static_cast<std::uint32_t>(it - rows.begin()),
                                (position % 2 == 0) ? 1 : -1});
      }
    }
  }
  if (!boundary_squares_to_zero(slice)) {
    throw std::logic_error("Koszul boundary does not square to zero at " + to_string(a));
  }
  return slice;
}

KoszulSlice koszul_slice(const IdealPair& ip, Monomial a) { return koszul_slice(Poset(ip), a); }

bool boundary_squares_to_zero(const KoszulSlice& slice) {
  for (std::size_t p = 2; p < slice.boundary.size(); ++p) {
    for (const auto& column : slice.boundary[p]) {
      std::map<std::uint32_t, int> image;
      for (const BoundaryEntry& e : column) {
        for (const BoundaryEntry& f : slice.boundary[p - 1][e.row]) image[f.row] += e.sign * f.sign;
      }
      for (const auto& [row, coeff] : image) {
        if (coeff != 0) return false;
      }
    }
  }
  return true;
}

IntMatrix boundary_matrix(const KoszulSlice& slice, std::size_t p) {
  if (p == 0 || p >= slice.basis.size()) return IntMatrix(p == 0 ? 0 : slice.dim(p - 1), slice.dim(p));
  IntMatrix m(slice.dim(p - 1), slice.dim(p));
  for (std::size_t col = 0; col < slice.boundary[p].size(); ++col) {
    for (const BoundaryEntry& e : slice.boundary[p][col]) m(e.row, col) = e.sign;
  }
  return m;
}

std::vector<std::size_t> homology_ranks(const KoszulSlice& slice, const FieldSpec& field) {
  const std::size_t len = slice.basis.size();
  std::vector<std::size_t> boundary_rank(len + 1, 0);
  for (std::size_t p = 1; p < len; ++p) {
    if (slice.dim(p) == 0 || slice.dim(p - 1) == 0) continue;
    const IntMatrix m = boundary_matrix(slice, p);
    boundary_rank[p] = field.kind == FieldSpec::Kind::kRationals
                           ? rank_over_rationals(m)
                           : rank_mod_prime(m, field.characteristic);
  }
  std::vector<std::size_t> ranks(len, 0);
  for (std::size_t p = 0; p < len; ++p) {
    ranks[p] = slice.dim(p) - boundary_rank[p] - boundary_rank[p + 1];
  }
  return ranks;
}

bool euler_characteristic_holds(const KoszulSlice& slice, const std::vector<std::size_t>& ranks) {
  long long chain = 0;
  long long homology = 0;
  for (std::size_t p = 0; p < slice.basis.size(); ++p) {
    const long long sign = (p % 2 == 0) ? 1 : -1;
    chain += sign * static_cast<long long>(slice.dim(p));
    homology += sign * static_cast<long long>(p < ranks.size() ? ranks[p] : 0);
  }
  return chain == homology;
}

DepthResult depth(const Poset& poset, const FieldSpec& field) {
  if (poset.size() == 0) throw ZeroModuleError();
  DepthResult result;
  result.profile.field = field;
  const Mask last = full_mask(poset.n());
  for (Mask a = 0;; ++a) {
    const KoszulSlice slice = koszul_slice(poset, Monomial{a});
    if (!slice.empty()) {
      auto ranks = homology_ranks(slice, field);
      int top = -1;
      for (std::size_t p = 0; p < ranks.size(); ++p) {
        if (ranks[p] != 0) top = static_cast<int>(p);
      }
      if (top >= 0) {
        result.profile.max_nonzero = std::max(result.profile.max_nonzero, top);
        result.profile.slices.push_back({Monomial{a}, std::move(ranks)});
      }
    }
    if (a == last) break;
  }
  // H_0 ≠ 0 for a nonzero module, so max_nonzero >= 0 here.
  result.profile.depth = poset.n() - result.profile.max_nonzero;
  result.value = result.profile.depth;
  return result;
}

DepthResult depth(const IdealPair& ip, const FieldSpec& field) { return depth(Poset(ip), field); }

bool depth_at_most(const Poset& poset, int k, const FieldSpec& field) {
  if (poset.size() == 0) throw ZeroModuleError();
  const int n = poset.n();
  if (k >= n) return true;
  const int lowest = n - std::max(k, 0);
  const Mask last = full_mask(n);
  for (Mask a = 0;; ++a) {
    if (std::popcount(a) >= lowest) {
      const KoszulSlice slice = koszul_slice(poset, Monomial{a});
      if (!slice.empty()) {
        const auto ranks = homology_ranks(slice, field);
        for (std::size_t p = lowest; p < ranks.size(); ++p) {
          if (ranks[p] != 0) return true;
        }
      }
    }
    if (a == last) break;
  }
  return false;
}

int depth_of_quotient_ring(const IdealPair& ip, const FieldSpec& field) {
  if (ip.gens_i().size() != 1 || !ip.gens_i().front().is_unit()) {
    throw PreconditionError("depth_of_quotient_ring expects I = S (the unit generator)");
  }
  return depth(ip, field).value;
}

}  // namespace sqdepth
