#include "sqdepth/instances.hpp"

#include <algorithm>

#include "sqdepth/errors.hpp"

namespace sqdepth {
namespace {

constexpr int kMaxAttempts = 10000;

std::vector<Monomial> monomials_in_window(int n, int lo, int hi) {
  std::vector<Monomial> out;
  for (int deg = std::max(lo, 0); deg <= std::min(hi, n); ++deg) {
    auto layer = monomials_of_degree(n, deg);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

void check_window(int lo, int hi, int n, const char* what) {
  if (lo < 0 || lo > hi || lo > n) {
    throw PreconditionError(std::string("infeasible degree window for ") + what);
  }
}

void antichains_from(const std::vector<Monomial>& allowed, std::size_t start, Generators& chosen,
                     const std::function<void(const Generators&)>& visit) {
  visit(chosen);
  for (std::size_t i = start; i < allowed.size(); ++i) {
    // Canonical order: an earlier element can divide a later one, never the reverse.
    if (member(allowed[i], chosen)) continue;
    chosen.push_back(allowed[i]);
    antichains_from(allowed, i + 1, chosen, visit);
    chosen.pop_back();
  }
}

std::vector<Monomial> all_monomials(int n) { return monomials_in_window(n, 0, n); }

}  // namespace

std::string_view to_string(InstanceShape s) {
  switch (s) {
    case InstanceShape::kGeneral: return "general";
    case InstanceShape::kThm110: return "thm110";
    case InstanceShape::kIdealOnly: return "ideal";
  }
  return "?";
}

std::optional<InstanceShape> parse_instance_shape(std::string_view text) {
  for (auto s : {InstanceShape::kGeneral, InstanceShape::kThm110, InstanceShape::kIdealOnly}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

InstanceGenerator::InstanceGenerator(InstanceGenConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) {
  if (cfg_.n < 1 || cfg_.n > kMaxGeneratedVariables) {
    throw PreconditionError("generator supports 1 <= n <= " +
                            std::to_string(kMaxGeneratedVariables));
  }
  if (cfg_.shape == InstanceShape::kThm110) {
    if (cfg_.n < 3) throw PreconditionError("the thm110 shape needs n >= 3");
  } else {
    check_window(cfg_.i_min_degree, cfg_.i_max_degree, cfg_.n, "I");
  }
  if (cfg_.shape != InstanceShape::kIdealOnly) {
    check_window(cfg_.j_min_degree, cfg_.j_max_degree, cfg_.n, "J");
  }
  for (double p : cfg_.density) {
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("densities must lie in [0, 1]");
  }
}

bool InstanceGenerator::coin(double p) {
  // Top 53 bits as a uniform double; std distributions are not portable.
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
}

double InstanceGenerator::density(int degree) const {
  return degree >= 0 && static_cast<std::size_t>(degree) < cfg_.density.size()
             ? cfg_.density[degree]
             : 0.5;
}

Generators InstanceGenerator::sample(const std::vector<Monomial>& candidates) {
  Generators out;
  for (Monomial m : candidates) {
    if (coin(density(m.degree()))) out.push_back(m);
  }
  return out;
}

IdealPair InstanceGenerator::next() {
  const int n = cfg_.n;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Generators gi;
    if (cfg_.shape == InstanceShape::kThm110) {
      std::vector<Monomial> quadrics;
      for (Monomial m : monomials_of_degree(n, 2)) {
        if (!m.has_variable(1)) quadrics.push_back(m);
      }
      gi = sample(quadrics);
      if (gi.empty()) gi.push_back(quadrics[rng_() % quadrics.size()]);
      gi.push_back(Monomial::variable(1));
    } else {
      const auto candidates = monomials_in_window(n, cfg_.i_min_degree, cfg_.i_max_degree);
      gi = sample(candidates);
      if (gi.empty()) gi.push_back(candidates[rng_() % candidates.size()]);
    }
    gi = minimalize(gi);

    Generators gj;
    if (cfg_.shape != InstanceShape::kIdealOnly) {
      const int lo = cfg_.shape == InstanceShape::kThm110 ? std::max(2, cfg_.j_min_degree)
                                                          : cfg_.j_min_degree;
      std::vector<Monomial> candidates;
      for (Monomial m : monomials_in_window(n, lo, cfg_.j_max_degree)) {
        if (member(m, gi)) candidates.push_back(m);
      }
      gj = sample(candidates);
    }
    IdealPair ip(n, gi, gj);
    if (!ip.is_zero_module()) return ip;
  }
  throw PreconditionError("generator configuration keeps producing zero modules");
}

std::vector<IdealPair> generate_instances(const InstanceGenConfig& cfg, std::size_t count) {
  InstanceGenerator gen(cfg);
  std::vector<IdealPair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
  return out;
}

void for_each_antichain(const std::vector<Monomial>& allowed,
                        const std::function<void(const Generators&)>& visit) {
  std::vector<Monomial> sorted = allowed;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Generators chosen;
  antichains_from(sorted, 0, chosen, visit);
}

void enumerate_all(int n, InstanceShape shape, const std::function<void(const IdealPair&)>& visit) {
  if (n < 1 || n > kMaxEnumeratedVariables) {
    throw PreconditionError("enumeration supports 1 <= n <= " +
                            std::to_string(kMaxEnumeratedVariables));
  }
  switch (shape) {
    case InstanceShape::kGeneral: {
      if (n > 4) throw PreconditionError("unfiltered enumeration supports n <= 4");
      const auto monos = all_monomials(n);
      for_each_antichain(monos, [&](const Generators& gi) {
        std::vector<Monomial> inside;
        for (Monomial m : monos) {
          if (member(m, gi)) inside.push_back(m);
        }
        for_each_antichain(inside, [&](const Generators& gj) {
          if (!ideal_contained(gi, gj)) visit(IdealPair(n, gi, gj));
        });
      });
      break;
    }
    case InstanceShape::kThm110: {
      if (n < 3) throw PreconditionError("the thm110 shape needs n >= 3");
      std::vector<Monomial> quadrics;
      for (Monomial m : monomials_of_degree(n, 2)) {
        if (!m.has_variable(1)) quadrics.push_back(m);
      }
      const auto monos = monomials_in_window(n, 2, n);
      for (std::size_t bits = 1; bits < (std::size_t{1} << quadrics.size()); ++bits) {
        Generators gi{Monomial::variable(1)};
        for (std::size_t k = 0; k < quadrics.size(); ++k) {
          if (bits >> k & 1U) gi.push_back(quadrics[k]);
        }
        gi = minimalize(gi);
        std::vector<Monomial> inside;
        for (Monomial m : monos) {
          if (member(m, gi)) inside.push_back(m);
        }
        for_each_antichain(inside, [&](const Generators& gj) { visit(IdealPair(n, gi, gj)); });
      }
      break;
    }
    case InstanceShape::kIdealOnly: {
      for_each_antichain(all_monomials(n), [&](const Generators& gi) {
        if (!gi.empty()) visit(IdealPair(n, gi, Generators{}));
      });
      break;
    }
  }
}

std::vector<IdealPair> enumerate_all(int n, InstanceShape shape) {
  std::vector<IdealPair> out;
  enumerate_all(n, shape, [&](const IdealPair& ip) { out.push_back(ip); });
  return out;
}

}  // namespace sqdepth
