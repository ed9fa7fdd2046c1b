#include "sqdepth/ideal_pair.hpp"

#include <algorithm>

#include "sqdepth/errors.hpp"

namespace sqdepth {

Generators minimalize(std::span<const Monomial> gens) {
  Generators sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Canonical order puts divisors first, so one forward pass suffices.
  Generators out;
  for (Monomial m : sorted) {
    if (!member(m, out)) out.push_back(m);
  }
  return out;
}

bool member(Monomial m, std::span<const Monomial> gens) {
  return std::any_of(gens.begin(), gens.end(), [m](Monomial g) { return g.divides(m); });
}

Generators ideal_sum(std::span<const Monomial> a, std::span<const Monomial> b) {
  Generators all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return minimalize(all);
}

Generators ideal_intersection(std::span<const Monomial> a, std::span<const Monomial> b) {
  Generators all;
  all.reserve(a.size() * b.size());
  for (Monomial u : a) {
    for (Monomial v : b) all.push_back(lcm(u, v));
  }
  return minimalize(all);
}

bool ideal_contained(std::span<const Monomial> a, std::span<const Monomial> b) {
  return std::all_of(a.begin(), a.end(), [&](Monomial g) { return member(g, b); });
}

IdealPair::IdealPair(int n, std::span<const Monomial> gens_i, std::span<const Monomial> gens_j)
    : n_(n), gens_i_(minimalize(gens_i)), gens_j_(minimalize(gens_j)) {
  if (n < 1 || n > kMaxVariables) {
    throw InvalidIdealPair("variable count must be in [1, " + std::to_string(kMaxVariables) +
                           "], got " + std::to_string(n));
  }
  const Mask outside = ~full_mask(n);
  for (const auto* gens : {&gens_i_, &gens_j_}) {
    for (Monomial g : *gens) {
      if (g.mask & outside) {
        throw InvalidIdealPair("generator " + to_string(g) + " uses a variable beyond x" +
                               std::to_string(n));
      }
    }
  }
  for (Monomial g : gens_j_) {
    if (!in_i(g)) throw InvalidIdealPair("J is not contained in I: " + to_string(g) + " ∉ I");
  }
}

bool IdealPair::is_zero_module() const { return ideal_contained(gens_i_, gens_j_); }

int IdealPair::min_degree_i() const {
  return gens_i_.empty() ? -1 : gens_i_.front().degree();
}

int IdealPair::min_degree_j() const {
  return gens_j_.empty() ? -1 : gens_j_.front().degree();
}

std::vector<int> IdealPair::variable_generators() const {
  std::vector<int> vars;
  for (Monomial g : gens_i_) {
    if (g.degree() == 1) vars.push_back(variables_of(g).front());
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

IdealPair IdealPair::relabeled(const std::vector<int>& perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) {
    throw PreconditionError("relabeling must list exactly n variables");
  }
  std::vector<bool> seen(n_ + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n_ || seen[v]) throw PreconditionError("relabeling is not a permutation");
    seen[v] = true;
  }
  Generators gi, gj;
  for (Monomial g : gens_i_) gi.push_back(relabel(g, perm));
  for (Monomial g : gens_j_) gj.push_back(relabel(g, perm));
  return IdealPair(n_, gi, gj);
}

}  // namespace sqdepth
