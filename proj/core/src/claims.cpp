#include "sqdepth/claims.hpp"

#include <algorithm>
#include <array>

#include "sqdepth/errors.hpp"
#include "sqdepth/instance_format.hpp"

namespace sqdepth {
namespace {

struct ClaimName {
  ClaimId id;
  std::string_view name;
};

constexpr std::array kClaimNames{
    ClaimName{ClaimId::kLemma1_1, "L1.1"},        ClaimName{ClaimId::kProp1_3, "P1.3"},
    ClaimName{ClaimId::kLemma1_5, "L1.5"},        ClaimName{ClaimId::kLemma1_6, "L1.6"},
    ClaimName{ClaimId::kLemma1_7, "L1.7"},        ClaimName{ClaimId::kLemma1_8, "L1.8"},
    ClaimName{ClaimId::kProp1_9, "P1.9"},         ClaimName{ClaimId::kThm1_10, "T1.10"},
    ClaimName{ClaimId::kIntroBounds, "INTRO-BOUNDS"},
    ClaimName{ClaimId::kIntroLower, "INTRO-LOWER"},
    ClaimName{ClaimId::kSdepth1Depth1, "SD1-D1"}, ClaimName{ClaimId::kStanleyN5, "STANLEY-N5"},
    ClaimName{ClaimId::kDepthLemma, "DEPTH-LEMMA"},
};

constexpr std::array kAllClaims = [] {
  std::array<ClaimId, kClaimNames.size()> ids{};
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = kClaimNames[i].id;
  return ids;
}();

ImplicationReport make_report(InstanceAnalysis& a, ClaimId id) {
  ImplicationReport r;
  r.claim = id;
  r.instance = a.instance_text();
  return r;
}

void finish(ImplicationReport& r, bool hypothesis, bool conclusion) {
  r.hypothesis_holds = hypothesis;
  r.conclusion_holds = conclusion;
  r.verdict = verdict_for(hypothesis, conclusion);
}

void add(ImplicationReport& r, std::string key, std::int64_t value) {
  r.details.push_back({std::move(key), value});
}

void add(ImplicationReport& r, std::string key, std::string value) {
  r.details.push_back({std::move(key), std::move(value)});
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

// J generated in degree >= bound (J = 0 qualifies).
bool j_degree_at_least(const IdealPair& ip, int bound) {
  return ip.gens_j().empty() || ip.min_degree_j() >= bound;
}

// I is generated by variables only, with at least one variable missing.
bool variables_only_shape(const IdealPair& ip) {
  const auto vars = ip.variable_generators();
  return !vars.empty() && vars.size() == ip.gens_i().size() &&
         static_cast<int>(vars.size()) < ip.n() && j_degree_at_least(ip, 2);
}

bool depth_is_one_after_killing(InstanceAnalysis& a, int j) {
  const IdealPair& ip = a.pair();
  Generators killed = ip.gens_j();
  const Monomial xj = Monomial::variable(j);
  for (Monomial b : a.poset().of_degree(2)) {
    if (xj.divides(b)) killed.push_back(b);
  }
  const auto d = depth_of(IdealPair(ip.n(), ip.gens_i(), killed), a.field());
  return d && *d == 1;
}

bool single_variable_shape(const IdealPair& ip) {
  return detect_single_variable_shape(ip).has_value() && j_degree_at_least(ip, 2);
}

}  // namespace

std::string_view to_string(ClaimId id) {
  for (const auto& c : kClaimNames) {
    if (c.id == id) return c.name;
  }
  return "?";
}

std::optional<ClaimId> parse_claim_id(std::string_view text) {
  for (const auto& c : kClaimNames) {
    if (c.name == text) return c.id;
  }
  return std::nullopt;
}

std::span<const ClaimId> all_claims() { return kAllClaims; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kConfirmed: return "confirmed";
    case Verdict::kVacuous: return "vacuous";
    case Verdict::kViolation: return "VIOLATION";
  }
  return "?";
}

Verdict verdict_for(bool hypothesis, bool conclusion) noexcept {
  if (!hypothesis) return Verdict::kVacuous;
  return conclusion ? Verdict::kConfirmed : Verdict::kViolation;
}

InstanceAnalysis::InstanceAnalysis(IdealPair ip, FieldSpec field)
    : ip_(std::move(ip)), field_(field), poset_(ip_) {}

const DegreeStats& InstanceAnalysis::stats() {
  if (!stats_) stats_ = degree_stats(ip_, poset_);
  return *stats_;
}

const DepthResult& InstanceAnalysis::depth_result() {
  if (!depth_) depth_ = sqdepth::depth(poset_, field_);
  return *depth_;
}

int InstanceAnalysis::depth() { return depth_result().value; }

const SdepthResult& InstanceAnalysis::sdepth_result() {
  if (!sdepth_) sdepth_ = sqdepth::sdepth(poset_);
  return *sdepth_;
}

int InstanceAnalysis::sdepth() { return sdepth_result().value; }

const std::string& InstanceAnalysis::instance_text() {
  if (!text_) text_ = format_ideal_pair(ip_);
  return *text_;
}

std::optional<int> depth_of(const IdealPair& ip, const FieldSpec& field) {
  if (ip.is_zero_module()) return std::nullopt;
  return depth(ip, field).value;
}

std::optional<int> sdepth_of(const IdealPair& ip) {
  if (ip.is_zero_module()) return std::nullopt;
  return sdepth(Poset(ip)).value;
}

ImplicationReport check_intro_bounds(InstanceAnalysis& a) {
  auto r = make_report(a, ClaimId::kIntroBounds);
  const DegreeStats& st = a.stats();
  const bool setting = j_degree_at_least(a.pair(), st.d + 1);
  const bool numeric = st.s > st.r + st.q || st.r > st.q || st.s < 2 * st.r;
  const int sd = a.sdepth();
  add(r, "d", st.d);
  add(r, "r", as_int(st.r));
  add(r, "s", as_int(st.s));
  add(r, "q", as_int(st.q));
  add(r, "sdepth", sd);
  add(r, "setting", setting ? "yes" : "no");
  finish(r, setting && numeric, sd <= st.d + 1);
  return r;
}

ImplicationReport check_intro_lower(InstanceAnalysis& a) {
  auto r = make_report(a, ClaimId::kIntroLower);
  const int d = a.pair().min_degree_i();
  const bool setting = j_degree_at_least(a.pair(), d + 1);
  const int dp = a.depth();
  add(r, "d", d);
  add(r, "depth", dp);
  finish(r, setting, dp >= d);
  return r;
}

ImplicationReport check_lemma_1_1(InstanceAnalysis& a, int j) {
  const IdealPair& ip = a.pair();
  if (j < 1 || j > ip.n()) {
    throw PreconditionError("variable index " + std::to_string(j) + " outside [1, n]");
  }
  auto r = make_report(a, ClaimId::kLemma1_1);
  const auto vars = ip.variable_generators();
  const bool shape = variables_only_shape(ip);
  const bool admissible = shape && !std::binary_search(vars.begin(), vars.end(), j);
  add(r, "j", j);
  add(r, "r", as_int(vars.size()));
  add(r, "shape", shape ? "yes" : "no");
  bool hypothesis = false;
  if (admissible) {
    hypothesis = depth_is_one_after_killing(a, j);
    add(r, "reduced_depth_is_1", hypothesis ? "yes" : "no");
  }
  const int dp = a.depth();
  add(r, "depth", dp);
  finish(r, hypothesis, dp <= 2);
  return r;
}

ImplicationReport check_lemma_1_1(InstanceAnalysis& a) {
  auto r = make_report(a, ClaimId::kLemma1_1);
  const IdealPair& ip = a.pair();
  const bool shape = variables_only_shape(ip);
  add(r, "shape", shape ? "yes" : "no");
  std::string triggering;
  if (shape) {
    const auto vars = ip.variable_generators();
    add(r, "r", as_int(vars.size()));
    for (int j = 1; j <= ip.n(); ++j) {
      if (std::binary_search(vars.begin(), vars.end(), j)) continue;
      if (depth_is_one_after_killing(a, j)) {
        if (!triggering.empty()) triggering += ",";
        triggering += std::to_string(j);
      }
    }
  }
  add(r, "j_with_reduced_depth_1", triggering.empty() ? "none" : triggering);
  const int dp = a.depth();
  add(r, "depth", dp);
  finish(r, !triggering.empty(), dp <= 2);
  return r;
}

ImplicationReport check_prop_1_3(InstanceAnalysis& a) {
  auto r = make_report(a, ClaimId::kProp1_3);
  const IdealPair& ip = a.pair();
  const auto vars = ip.variable_generators();
  const bool shape = !vars.empty() && j_degree_at_least(ip, 2);
  bool hypothesis = shape;
  if (shape) {
    std::vector<int> others;
    for (int t = 1; t <= ip.n(); ++t) {
      if (!std::binary_search(vars.begin(), vars.end(), t)) others.push_back(t);
    }
    for (int i : vars) {
      for (std::size_t x = 0; x < others.size() && hypothesis; ++x) {
        for (std::size_t y = x + 1; y < others.size() && hypothesis; ++y) {
          const Monomial m = Monomial::variable(i)
                                 .times(Monomial::variable(others[x]))
                                 .times(Monomial::variable(others[y]));
          if (!ip.in_j(m)) {
            hypothesis = false;
            add(r, "missing_from_J", to_string(m));
          }
        }
      }
    }
  }
  add(r, "shape", shape ? "yes" : "no");
  add(r, "r", as_int(vars.size()));
  const int dp = a.depth();
  add(r, "depth", dp);
  finish(r, hypothesis, dp <= 2);
  return r;
}

std::vector<IsolatedMonomial> find_isolated_monomials(const Poset& poset) {
  std::vector<IsolatedMonomial> out;
  for (Monomial u : poset.elements()) {
    bool isolated = true;
    for (int i = 1; i <= poset.n() && isolated; ++i) {
      if (!u.has_variable(i) && poset.contains(u.times(Monomial::variable(i)))) isolated = false;
    }
    if (isolated) out.push_back({u, u.degree()});
  }
  return out;
}

ImplicationReport check_lemma_1_5(InstanceAnalysis& a) {
  auto r = make_report(a, ClaimId::kLemma1_5);
  const auto isolated = find_isolated_monomials(a.poset());
  const int dp = a.depth();
  add(r, "isolated", as_int(isolated.size()));
  add(r, "depth", dp);
  if (isolated.empty()) {
    finish(r, false, true);
    return r;
  }
  // Canonical order puts the smallest degree first.
  const IsolatedMonomial& first = isolated.front();
  add(r, "u", to_string(first.u));
  add(r, "k", first.k);
  finish(r, true, dp <= first.k);
  return r;
}

ImplicationReport check_lemma_1_6(InstanceAnalysis& a, std::span<const Monomial> extra) {
  const IdealPair& ip = a.pair();
  const int d = ip.min_degree_i();
  if (!j_degree_at_least(ip, d + 1)) {
    throw PreconditionError("J must be generated in degree >= d + 1");
  }
  for (Monomial v : extra) {
    if (v.degree() < d + 2) {
      throw PreconditionError(to_string(v) + " has degree below d + 2 = " + std::to_string(d + 2));
    }
    if (ip.in_i(v)) throw PreconditionError(to_string(v) + " already lies in I");
    if (v.mask & ~full_mask(ip.n())) throw PreconditionError(to_string(v) + " uses x_i with i > n");
  }
  auto r = make_report(a, ClaimId::kLemma1_6);
  const IdealPair bigger(ip.n(), ideal_sum(ip.gens_i(), extra), ip.gens_j());
  const Poset bigger_poset(bigger);
  const int bound = d + 1;

  // sdepth((I+V)/J) <= d+1 implies sdepth(I/J) <= d+1.
  const bool small_sd = a.sdepth() <= bound;
  const bool big_sd =
      bound + 1 > ip.n() || !sdepth_at_least(bigger_poset, bound + 1).has_value();
  // depth((I+V)/J) <= d+1 iff depth(I/J) <= d+1.
  const bool small_dp = a.depth() <= bound;
  const bool big_dp = depth_at_most(bigger_poset, bound, a.field());

  add(r, "d", d);
  add(r, "V", format_generators(minimalize(extra)));
  add(r, "sdepth_le_d+1", small_sd ? "yes" : "no");
  add(r, "sdepth_with_V_le_d+1", big_sd ? "yes" : "no");
  add(r, "depth_le_d+1", small_dp ? "yes" : "no");
  add(r, "depth_with_V_le_d+1", big_dp ? "yes" : "no");
  const bool sd_ok = !big_sd || small_sd;
  const bool dp_ok = big_dp == small_dp;
  finish(r, true, sd_ok && dp_ok);
  return r;
}

ImplicationReport check_lemma_1_6(InstanceAnalysis& a) {
  const IdealPair& ip = a.pair();
  const int d = ip.min_degree_i();
  std::vector<Monomial> candidates;
  if (j_degree_at_least(ip, d + 1)) {
    for (Mask m = 0; m <= full_mask(ip.n()); ++m) {
      const Monomial v{m};
      if (v.degree() >= d + 2 && !ip.in_i(v)) candidates.push_back(v);
      if (m == full_mask(ip.n())) break;
    }
  }
  if (candidates.empty()) {
    auto r = make_report(a, ClaimId::kLemma1_6);
    add(r, "tested", 0);
    finish(r, false, true);
    return r;
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<std::vector<Monomial>> trials;
  for (Monomial v : candidates) trials.push_back({v});
  if (candidates.size() > 1) trials.push_back(candidates);
  for (const auto& v : trials) {
    auto r = check_lemma_1_6(a, v);
    if (r.verdict == Verdict::kViolation) return r;
  }
  auto r = make_report(a, ClaimId::kLemma1_6);
  add(r, "tested", as_int(trials.size()));
  finish(r, true, true);
  return r;
}

TheoremConditions theorem_conditions(InstanceAnalysis& a) {
  TheoremConditions tc;
  const IdealPair& ip = a.pair();
  if (!single_variable_shape(ip)) return tc;
  const DegreeStats& st = a.stats();
  if (!st.shape) return tc;
  const SingleVariableShape& sh = *st.shape;
  const Monomial x = Monomial::variable(sh.distinguished);

  tc.shape = true;
  tc.distinguished = sh.distinguished;
  tc.e = sh.e.size();
  tc.e_prime = sh.e_prime.size();
  tc.e_double_prime = sh.e_double_prime.size();
  tc.b = st.s;
  tc.c = st.q;
  for (Monomial c : st.c) {
    if (!x.divides(c) && !member(c, sh.e_prime)) ++tc.c_outside;
  }
  tc.condition1 = tc.e_double_prime <= tc.c_outside;
  tc.condition2 = tc.e_double_prime > tc.c_outside && tc.b != tc.c + 1;

  tc.degree2_outside_killed = true;
  for (Monomial u : monomials_of_degree(ip.n(), 2)) {
    if (!ip.in_i(u) && !ip.in_j(x.times(u))) {
      tc.degree2_outside_killed = false;
      break;
    }
  }
  tc.all_e_survive = std::none_of(sh.e.begin(), sh.e.end(),
                                  [&](Monomial e) { return ip.in_j(x.times(e)); });
  return tc;
}

bool is_theorem_boundary_case(InstanceAnalysis& a) {
  const TheoremConditions tc = theorem_conditions(a);
  return tc.shape && a.sdepth() == 2 && !tc.condition1 && !tc.condition2;
}

namespace {

void add_conditions(ImplicationReport& r, const TheoremConditions& tc) {
  add(r, "shape", tc.shape ? "yes" : "no");
  if (!tc.shape) return;
  add(r, "x", tc.distinguished);
  add(r, "|E|", as_int(tc.e));
  add(r, "|E'|", as_int(tc.e_prime));
  add(r, "|E''|", as_int(tc.e_double_prime));
  add(r, "|C\\(x1,E')|", as_int(tc.c_outside));
  add(r, "|B|", as_int(tc.b));
  add(r, "|C|", as_int(tc.c));
  add(r, "condition", tc.condition1 ? "1" : (tc.condition2 ? "2" : "none"));
}

}  // namespace

ImplicationReport check_thm_1_10(InstanceAnalysis& a) {
  auto r = make_report(a, ClaimId::kThm1_10);
  const TheoremConditions tc = theorem_conditions(a);
  add_conditions(r, tc);
  bool hypothesis = false;
  if (tc.shape) {
    const int sd = a.sdepth();
    add(r, "sdepth", sd);
    hypothesis = sd == 2 && (tc.condition1 || tc.condition2);
  }
  const int dp = a.depth();
  add(r, "depth", dp);
  finish(r, hypothesis, dp <= 2);
  return r;
}

ImplicationReport check_prop_1_9(InstanceAnalysis& a) {
  auto r = make_report(a, ClaimId::kProp1_9);
  const TheoremConditions tc = theorem_conditions(a);
  add_conditions(r, tc);
  bool hypothesis = false;
  if (tc.shape) {
    add(r, "x1u_in_J", tc.degree2_outside_killed ? "yes" : "no");
    const int sd = a.sdepth();
    add(r, "sdepth", sd);
    hypothesis = sd == 2 && tc.degree2_outside_killed && (tc.condition1 || tc.condition2);
  }
  const int dp = a.depth();
  add(r, "depth", dp);
  finish(r, hypothesis, dp <= 2);
  return r;
}

ImplicationReport check_lemma_1_8(InstanceAnalysis& a) {
  auto r = make_report(a, ClaimId::kLemma1_8);
  const TheoremConditions tc = theorem_conditions(a);
  add(r, "shape", tc.shape ? "yes" : "no");
  bool hypothesis = false;
  if (tc.shape) {
    add(r, "x1u_in_J", tc.degree2_outside_killed ? "yes" : "no");
    add(r, "x1a_not_in_J", tc.all_e_survive ? "yes" : "no");
    const int sd = a.sdepth();
    add(r, "sdepth", sd);
    hypothesis = sd == 2 && tc.degree2_outside_killed && tc.all_e_survive;
  }
  const int dp = a.depth();
  add(r, "depth", dp);
  finish(r, hypothesis, dp <= 2);
  return r;
}

ImplicationReport check_lemma_1_7(InstanceAnalysis& a) {
  auto r = make_report(a, ClaimId::kLemma1_7);
  const TheoremConditions tc = theorem_conditions(a);
  add(r, "shape", tc.shape ? "yes" : "no");
  if (!tc.shape || !tc.degree2_outside_killed || a.sdepth() != 2) {
    finish(r, false, true);
    return r;
  }
  const IdealPair& ip = a.pair();
  const int n = ip.n();
  const Monomial x1 = Monomial::variable(tc.distinguished);
  const auto& b_set = a.stats().b;
  auto in_b = [&](Monomial m) { return std::binary_search(b_set.begin(), b_set.end(), m); };

  std::string tested;
  std::string failure;
  for (int t = 1; t <= n && failure.empty(); ++t) {
    const Monomial xt = Monomial::variable(t);
    if (t == tc.distinguished || !in_b(x1.times(xt))) continue;

    Generators sub;
    for (Monomial m : b_set) {
      if (m != x1.times(xt)) sub.push_back(m);
    }
    const IdealPair reduced(n, sub, ideal_intersection(sub, ip.gens_j()));
    if (reduced.is_zero_module()) continue;
    const Poset reduced_poset(reduced);
    const auto cert = sdepth_at_least(reduced_poset, 3);
    if (!cert) continue;
    if (!tested.empty()) tested += ",";
    tested += std::to_string(t);

    auto has_interval = [&](Monomial bottom, Monomial top) {
      return std::any_of(cert->intervals.begin(), cert->intervals.end(),
                         [&](const Interval& iv) { return iv.bottom == bottom && iv.top == top; });
    };

    // (1) every a = x_t x_v in B, v ≠ 1, with x_1 a ∉ J sits in [a, x_1 a].
    for (Monomial m : b_set) {
      if (!xt.divides(m) || x1.divides(m)) continue;
      if (ip.in_j(x1.times(m))) continue;
      if (!has_interval(m, x1.times(m))) {
        failure = "t=" + std::to_string(t) + ": [" + to_string(m) + ", " +
                  to_string(x1.times(m)) + "] missing";
        break;
      }
    }
    if (!failure.empty()) break;

    // (2) c = x_t x_i x_j ∉ J with x_1 x_t x_i, x_1 x_t x_j ∉ J.
    for (int i = 1; i <= n && failure.empty(); ++i) {
      for (int j = i + 1; j <= n && failure.empty(); ++j) {
        if (i == t || j == t || i == tc.distinguished || j == tc.distinguished) continue;
        const Monomial xi = Monomial::variable(i);
        const Monomial xj = Monomial::variable(j);
        const Monomial c = xt.times(xi).times(xj);
        if (ip.in_j(c) || ip.in_j(x1.times(xt).times(xi)) || ip.in_j(x1.times(xt).times(xj))) {
          continue;
        }
        const Monomial bm = xi.times(xj);
        if (!in_b(bm)) {
          failure = "t=" + std::to_string(t) + ": " + to_string(bm) + " not in B";
        } else if (!ip.in_j(x1.times(bm))) {
          for (const Interval& iv : cert->intervals) {
            if (iv.top == c && iv.bottom.degree() == 2) {
              failure = "t=" + std::to_string(t) + ": " + to_string(c) + " tops [" +
                        to_string(iv.bottom) + ", " + to_string(c) + "]";
            }
          }
        }
      }
    }
  }
  add(r, "t_tested", tested.empty() ? "none" : tested);
  if (!failure.empty()) add(r, "failure", failure);
  finish(r, !tested.empty(), failure.empty());
  return r;
}

ImplicationReport check_sdepth1_depth1(InstanceAnalysis& a) {
  auto r = make_report(a, ClaimId::kSdepth1Depth1);
  const int sd = a.sdepth();
  const int dp = a.depth();
  add(r, "sdepth", sd);
  add(r, "depth", dp);
  finish(r, sd <= 1, dp <= 1);
  return r;
}

ImplicationReport check_stanley_n5(InstanceAnalysis& a) {
  auto r = make_report(a, ClaimId::kStanleyN5);
  const int sd = a.sdepth();
  const int dp = a.depth();
  add(r, "sdepth", sd);
  add(r, "depth", dp);
  const bool hypothesis = a.pair().gens_j().empty() && a.pair().n() <= 5;
  finish(r, hypothesis, sd >= dp);
  return r;
}

ImplicationReport check_depth_lemma(InstanceAnalysis& a, std::span<const Monomial> sub_ideal) {
  const IdealPair& ip = a.pair();
  if (!ideal_contained(sub_ideal, ip.gens_i())) {
    throw PreconditionError("the sub-ideal is not contained in I");
  }
  const IdealPair left(ip.n(), sub_ideal, ideal_intersection(sub_ideal, ip.gens_j()));
  const IdealPair right(ip.n(), ip.gens_i(), ideal_sum(sub_ideal, ip.gens_j()));
  if (left.is_zero_module() || right.is_zero_module()) throw ZeroModuleError();

  auto r = make_report(a, ClaimId::kDepthLemma);
  const int da = depth(left, a.field()).value;
  const int db = a.depth();
  const int dc = depth(right, a.field()).value;
  add(r, "I'", format_generators(minimalize(sub_ideal)));
  add(r, "depth_sub", da);
  add(r, "depth_mid", db);
  add(r, "depth_quot", dc);
  const bool ok = da >= std::min(db, dc + 1) && db >= std::min(da, dc) &&
                  dc >= std::min(da - 1, db);
  finish(r, true, ok);
  return r;
}

ImplicationReport check_depth_lemma(InstanceAnalysis& a) {
  const IdealPair& ip = a.pair();
  const Generators& gens = ip.gens_i();
  std::vector<Generators> splits;
  const std::size_t g = gens.size();
  if (g >= 2 && g <= 4) {
    for (std::size_t bits = 1; bits + 1 < (std::size_t{1} << g); ++bits) {
      Generators s;
      for (std::size_t i = 0; i < g; ++i) {
        if (bits >> i & 1U) s.push_back(gens[i]);
      }
      splits.push_back(std::move(s));
    }
  } else if (g > 4) {
    for (std::size_t i = 0; i < g; ++i) {
      splits.push_back({gens[i]});
      Generators rest;
      for (std::size_t k = 0; k < g; ++k) {
        if (k != i) rest.push_back(gens[k]);
      }
      splits.push_back(std::move(rest));
    }
  }
  const auto& b = a.stats().b;
  if (!b.empty()) splits.emplace_back(b.begin(), b.end());

  std::size_t tested = 0;
  for (const auto& s : splits) {
    const IdealPair left(ip.n(), s, ideal_intersection(s, ip.gens_j()));
    const IdealPair right(ip.n(), ip.gens_i(), ideal_sum(s, ip.gens_j()));
    if (left.is_zero_module() || right.is_zero_module()) continue;
    ++tested;
    auto r = check_depth_lemma(a, s);
    if (r.verdict == Verdict::kViolation) return r;
  }
  auto r = make_report(a, ClaimId::kDepthLemma);
  add(r, "tested", as_int(tested));
  finish(r, tested > 0, true);
  return r;
}

ImplicationReport check_claim(InstanceAnalysis& a, ClaimId id) {
  switch (id) {
    case ClaimId::kLemma1_1: return check_lemma_1_1(a);
    case ClaimId::kProp1_3: return check_prop_1_3(a);
    case ClaimId::kLemma1_5: return check_lemma_1_5(a);
    case ClaimId::kLemma1_6: return check_lemma_1_6(a);
    case ClaimId::kLemma1_7: return check_lemma_1_7(a);
    case ClaimId::kLemma1_8: return check_lemma_1_8(a);
    case ClaimId::kProp1_9: return check_prop_1_9(a);
    case ClaimId::kThm1_10: return check_thm_1_10(a);
    case ClaimId::kIntroBounds: return check_intro_bounds(a);
    case ClaimId::kIntroLower: return check_intro_lower(a);
    case ClaimId::kSdepth1Depth1: return check_sdepth1_depth1(a);
    case ClaimId::kStanleyN5: return check_stanley_n5(a);
    case ClaimId::kDepthLemma: return check_depth_lemma(a);
  }
  throw PreconditionError("unknown claim");
}

}  // namespace sqdepth
