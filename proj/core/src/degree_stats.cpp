#include "sqdepth/degree_stats.hpp"

#include <algorithm>

#include "sqdepth/errors.hpp"

namespace sqdepth {

std::optional<int> detect_single_variable_shape(const IdealPair& ip) {
  const auto vars = ip.variable_generators();
  if (vars.size() != 1) return std::nullopt;
  if (ip.gens_i().size() < 2) return std::nullopt;
  for (Monomial g : ip.gens_i()) {
    if (g.degree() != 1 && g.degree() != 2) return std::nullopt;
  }
  return vars.front();
}

DegreeStats degree_stats(const IdealPair& ip, std::optional<int> d) {
  return degree_stats(ip, Poset(ip), d);
}

DegreeStats degree_stats(const IdealPair& ip, const Poset& poset, std::optional<int> d) {
  DegreeStats st;
  st.d = d.value_or(ip.min_degree_i());
  if (st.d < 0 || st.d > ip.n()) {
    throw PreconditionError("degree d = " + std::to_string(st.d) + " is outside [0, n]");
  }
  st.r = poset.of_degree(st.d).size();
  auto b = poset.of_degree(st.d + 1);
  auto c = poset.of_degree(st.d + 2);
  st.b.assign(b.begin(), b.end());
  st.c.assign(c.begin(), c.end());
  st.s = st.b.size();
  st.q = st.c.size();

  if (auto x = detect_single_variable_shape(ip); x && st.d == 1) {
    SingleVariableShape shape;
    shape.distinguished = *x;
    const Monomial xm = Monomial::variable(*x);
    for (Monomial g : ip.gens_i()) {
      if (g == xm) continue;
      shape.e.push_back(g);
      const bool survives = std::binary_search(st.c.begin(), st.c.end(), g.times(xm));
      (survives ? shape.e_prime : shape.e_double_prime).push_back(g);
    }
    st.shape = std::move(shape);
  }
  return st;
}

}  // namespace sqdepth
