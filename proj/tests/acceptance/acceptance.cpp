// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sqdepth/claims.hpp"
#include "sqdepth/degree_stats.hpp"
#include "sqdepth/instance_format.hpp"
#include "sqdepth/instances.hpp"
#include "sqdepth/koszul.hpp"
#include "sqdepth/sdepth.hpp"
#include "sqdepth/sweep.hpp"

using namespace sqdepth;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      note << "failed: " << what << "; ";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Monomial mono(const char* text) { return parse_monomial(text, kMaxVariables); }

std::vector<Monomial> monos(std::initializer_list<const char*> texts) {
  std::vector<Monomial> out;
  for (const char* t : texts) out.push_back(mono(t));
  return out;
}

std::vector<IdealPair> all_general_upto(int n_max) {
  std::vector<IdealPair> out;
  for (int n = 1; n <= n_max; ++n) {
    enumerate_all(n, InstanceShape::kGeneral, [&](const IdealPair& ip) { out.push_back(ip); });
  }
  return out;
}

std::vector<IdealPair> seeded(int n, InstanceShape shape, std::uint64_t seed, std::size_t count) {
  InstanceGenConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.shape = shape;
  if (shape == InstanceShape::kIdealOnly) {
    cfg.j_min_degree = cfg.j_max_degree = 0;
    cfg.i_max_degree = 3;
  }
  return generate_instances(cfg, count);
}

std::string detail_str(const ImplicationReport& r, const std::string& key) {
  for (const Detail& d : r.details) {
    if (d.key == key) return std::get<std::string>(d.value);
  }
  return {};
}

void criterion_1(Outcome& o) {
  const auto start = Clock::now();
  const IdealPair ip = parse_ideal_pair("n = 4\nI: x1, x2\nJ: x1*x2\n");
  const IdealPair f = parse_ideal_pair("n = 4\nI: x1, x2\nJ: x1*x2, x1*x3, x1*x4\n");
  const int d_ip = depth(ip).value;
  const Poset pf(f);
  const int sd_f = sdepth(pf).value;
  const int d_f = depth(pf).value;
  const double t = seconds_since(start);
  o.expect(d_ip == 3, "depth I/J = 3");
  o.expect(sd_f == 1, "sdepth F = 1");
  o.expect(d_f == 1, "depth F = 1");
  o.expect(t < 1.0, "under 1 s");
  o.note << "depth(I/J)=" << d_ip << " sdepth(F)=" << sd_f << " depth(F)=" << d_f << " in "
         << t << " s";
}

void criterion_2(Outcome& o) {
  const auto start = Clock::now();
  InstanceAnalysis a(parse_ideal_pair("n = 4\nI: x1, x2, x3\nJ: x1*x3\n"));
  const DegreeStats& st = a.stats();
  o.expect(st.r == 3 && st.s == 5 && st.q == 2, "r, s, q = 3, 5, 2");
  o.expect(st.b == monos({"x1*x2", "x2*x3", "x1*x4", "x2*x4", "x3*x4"}), "B as listed");
  o.expect(st.c == monos({"x1*x2*x4", "x2*x3*x4"}), "C as listed");
  const ImplicationReport p13 = check_prop_1_3(a);
  o.expect(p13.hypothesis_holds && p13.conclusion_holds, "P1.3 hypothesis and conclusion");
  const DepthResult& dr = a.depth_result();
  o.expect(dr.value == 2, "depth = 2");
  bool h2_at_x1x2x3 = false;
  bool high_zero = true;
  for (const SliceHomology& s : dr.profile.slices) {
    for (std::size_t p = 3; p < s.ranks.size(); ++p) high_zero = high_zero && s.ranks[p] == 0;
    if (s.multidegree == mono("x1*x2*x3")) h2_at_x1x2x3 = s.ranks.size() > 2 && s.ranks[2] == 1;
  }
  o.expect(h2_at_x1x2x3, "rank H_2 = 1 at x1x2x3");
  o.expect(high_zero, "no H_p for p >= 3");
  const double t = seconds_since(start);
  o.expect(t < 1.0, "under 1 s");
  o.note << "r=" << st.r << " s=" << st.s << " q=" << st.q << " depth=" << dr.value
         << " P1.3=" << to_string(p13.verdict) << " in " << t << " s";
}

void criterion_3(Outcome& o) {
  const auto start = Clock::now();
  InstanceAnalysis a(parse_ideal_pair("n = 3\nI: x1, x2*x3\nJ: 0\n"));
  const SdepthResult& sr = a.sdepth_result();
  o.expect(sr.value == 2, "sdepth = 2");
  o.expect(verify_partition(a.poset(), sr.certificate).ok, "certificate verifies");
  o.expect(a.depth() == 2, "depth = 2");
  const ImplicationReport r = check_thm_1_10(a);
  o.expect(detail_str(r, "shape") == "yes", "shape detected");
  o.expect(detail_str(r, "condition") == "1", "condition (1)");
  o.expect(r.verdict == Verdict::kConfirmed, "verdict confirmed");
  const double t = seconds_since(start);
  o.expect(t < 1.0, "under 1 s");
  o.note << "sdepth=" << sr.value << " depth=" << a.depth() << " condition="
         << detail_str(r, "condition") << " verdict=" << to_string(r.verdict) << " in " << t
         << " s";
}

void criterion_4(Outcome& o) {
  std::size_t small = 0, all_four = 0, sampled = 0, mismatches = 0;
  auto compare = [&](const IdealPair& ip) {
    const Poset p(ip);
    const SdepthResult res = sdepth(p);
    if (res.value != naive_sdepth(p) || !verify_partition(p, res.certificate)) {
      if (mismatches++ == 0) o.note << "first mismatch:\n" << format_ideal_pair(ip);
    }
  };
  for (const IdealPair& ip : all_general_upto(3)) {
    compare(ip);
    ++small;
  }
  enumerate_all(4, InstanceShape::kGeneral, [&](const IdealPair& ip) {
    if (Poset(ip).size() > 12) return;
    compare(ip);
    ++all_four;
  });
  InstanceGenConfig cfg;
  cfg.n = 4;
  cfg.seed = 4004;
  cfg.i_max_degree = 3;
  cfg.j_max_degree = 4;
  InstanceGenerator gen(cfg);
  while (sampled < 1000) {
    const IdealPair ip = gen.next();
    if (Poset(ip).size() > 12) continue;
    compare(ip);
    ++sampled;
  }
  o.expect(mismatches == 0, "solver equals naive enumeration");
  o.note << small << " pairs n<=3, " << all_four << " pairs n=4 with |P|<=12, " << sampled
         << " seeded n=4 pairs with |P|<=12, " << mismatches << " mismatches";
}

const std::vector<ClaimId> kSweptClaims = {
    ClaimId::kThm1_10,  ClaimId::kProp1_9,     ClaimId::kLemma1_8,
    ClaimId::kProp1_3,  ClaimId::kLemma1_5,    ClaimId::kLemma1_1,
    ClaimId::kLemma1_6, ClaimId::kIntroBounds, ClaimId::kSdepth1Depth1,
    ClaimId::kDepthLemma, ClaimId::kIntroLower, ClaimId::kLemma1_7};

struct SweepTotals {
  std::size_t instances = 0;
  std::vector<ClaimTally> tallies;

  void add(const SweepResult& r) {
    instances += r.instances;
    if (tallies.empty()) {
      tallies = r.tallies;
      return;
    }
    for (std::size_t i = 0; i < tallies.size(); ++i) {
      tallies[i].confirmed += r.tallies[i].confirmed;
      tallies[i].vacuous += r.tallies[i].vacuous;
      tallies[i].violations += r.tallies[i].violations;
      for (auto& w : r.tallies[i].witnesses) {
        if (tallies[i].witnesses.size() < 4) tallies[i].witnesses.push_back(w);
      }
    }
  }

  const ClaimTally& of(ClaimId id) const {
    return *std::find_if(tallies.begin(), tallies.end(),
                         [&](const ClaimTally& t) { return t.claim == id; });
  }
};

// Shared by criteria 5 and 8.
SweepTotals& theorem_sweep() {
  static SweepTotals totals = [] {
    SweepTotals t;
    const std::vector<std::vector<IdealPair>> families = {
        enumerate_all(4, InstanceShape::kThm110),
        all_general_upto(4),
        seeded(5, InstanceShape::kThm110, 5005, 10000),
        seeded(5, InstanceShape::kGeneral, 5006, 10000),
    };
    for (const auto& family : families) t.add(run_sweep(family, kSweptClaims));
    return t;
  }();
  return totals;
}

void criterion_5(Outcome& o) {
  const SweepTotals& t = theorem_sweep();
  std::size_t violations = 0;
  for (const ClaimTally& tally : t.tallies) {
    if (tally.claim == ClaimId::kIntroLower) continue;
    violations += tally.violations;
    if (tally.violations) {
      o.note << to_string(tally.claim) << " violated on\n"
             << tally.witnesses.front().instance << "; ";
    }
    if (tally.claim != ClaimId::kLemma1_7) {
      o.expect(tally.violations == 0, std::string(to_string(tally.claim)) + " has no violations");
    }
  }
  o.note << t.instances << " instances (thm110 n=4 exhaustive, general n<=4 exhaustive, 2x10^4 "
         << "seeded n=5); confirmed:";
  for (const ClaimTally& tally : t.tallies) {
    if (tally.claim == ClaimId::kIntroLower) continue;
    o.note << ' ' << to_string(tally.claim) << '=' << tally.confirmed;
  }
  o.note << "; violations=" << violations;
}

void criterion_6(Outcome& o) {
  std::size_t count = 0, violations = 0;
  auto check = [&](const IdealPair& ip) {
    InstanceAnalysis a(ip);
    const ImplicationReport r = check_stanley_n5(a);
    ++count;
    if (r.verdict == Verdict::kViolation && violations++ == 0) {
      o.note << "violation on\n" << r.instance;
    }
    if (!r.hypothesis_holds) {
      o.expect(false, "J = 0 instance must meet the hypothesis");
    }
  };
  for (int n = 1; n <= 5; ++n) enumerate_all(n, InstanceShape::kIdealOnly, check);
  const std::size_t exhaustive = count;
  for (const IdealPair& ip : seeded(5, InstanceShape::kIdealOnly, 6006, 2000)) check(ip);
  o.expect(violations == 0, "sdepth >= depth");
  o.note << exhaustive << " ideals exhaustive n<=5, " << count - exhaustive
         << " seeded n=5, violations=" << violations;
}

void criterion_7(Outcome& o) {
  std::vector<IdealPair> family = all_general_upto(4);
  const auto extra = seeded(5, InstanceShape::kGeneral, 7007, 2000);
  family.insert(family.end(), extra.begin(), extra.end());

  std::size_t certificates = 0, slices = 0;
  for (const IdealPair& ip : family) {
    const Poset p(ip);
    const Mask full = full_mask(ip.n());
    for (Monomial u : p.elements()) {
      for (Monomial v : p.elements()) {
        if (!u.divides(v)) continue;
        const Mask free = v.mask & ~u.mask;
        for (Mask s = free;; s = (s - 1) & free) {
          if (!p.contains(Monomial{u.mask | s})) {
            o.expect(false, "poset convexity");
          }
          if (s == 0) break;
        }
      }
    }
    const SdepthResult sr = sdepth(p);
    o.expect(verify_partition(p, sr.certificate).ok, "sdepth certificate verifies");
    ++certificates;
    for (int k = p.min_degree(); k < sr.value; ++k) {
      const auto cert = sdepth_at_least(p, k);
      o.expect(cert && verify_partition(p, *cert).ok, "decision certificate verifies");
      ++certificates;
    }
    for (Mask a = 0; a <= full; ++a) {
      const KoszulSlice slice = koszul_slice(p, Monomial{a});
      o.expect(boundary_squares_to_zero(slice), "boundary squares to zero");
      o.expect(euler_characteristic_holds(slice, homology_ranks(slice, FieldSpec::rationals())),
               "Euler characteristic");
      ++slices;
    }
  }

  std::mt19937_64 rng(7777);
  const auto perm_family = seeded(5, InstanceShape::kGeneral, 7008, 200);
  std::size_t perms = 0;
  for (const IdealPair& ip : perm_family) {
    std::vector<int> perm(ip.n());
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const IdealPair moved = ip.relabeled(perm);
    o.expect(depth(ip).value == depth(moved).value, "depth permutation invariance");
    o.expect(sdepth(Poset(ip)).value == sdepth(Poset(moved)).value,
             "sdepth permutation invariance");
    ++perms;
  }

  std::size_t ideals = 0;
  for (int n = 1; n <= 4; ++n) {
    enumerate_all(n, InstanceShape::kIdealOnly, [&](const IdealPair& ip) {
      if (ip.gens_i().front().is_unit()) return;
      const IdealPair quotient(n, std::vector{Monomial::unit()}, ip.gens_i());
      o.expect(depth(ip).value == depth_of_quotient_ring(quotient) + 1, "depth(I) = depth(S/I) + 1");
      ++ideals;
    });
  }
  o.note << family.size() << " instances, " << certificates << " certificates, " << slices
         << " slices, " << perms << " permutations, " << ideals << " proper ideals";
}

void criterion_8(Outcome& o) {
  const SweepTotals& t = theorem_sweep();
  const ClaimTally& lower = t.of(ClaimId::kIntroLower);
  o.expect(lower.violations == 0, "depth >= d");
  o.note << t.instances << " swept instances, " << lower.confirmed
         << " in the setting, violations=" << lower.violations;
  if (lower.violations) o.note << "; witness\n" << lower.witnesses.front().instance;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"1 fixture (x1,x2)/(x1x2) and F: exact depth and sdepth", criterion_1},
      {"2 fixture (x1,x2,x3)/(x1x3): stats, P1.3, homology profile", criterion_2},
      {"3 fixture (x1,x2x3): sdepth certificate, depth, T1.10", criterion_3},
      {"4 exact-cover solver equals naive partition enumeration", criterion_4},
      {"5 claim sweep has zero violations", criterion_5},
      {"6 sdepth >= depth for ideals on n <= 5", criterion_6},
      {"7 structural invariants", criterion_7},
      {"8 depth >= d on swept instances", criterion_8},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << seconds_since(start)
              << " s) :: " << o.note.str() << '\n'
              << std::flush;
    if (!o.pass) ++failed;
  }
  std::cout << (failed ? "ACCEPTANCE FAILED: " : "ACCEPTANCE PASSED: ") << criteria.size() - failed
            << '/' << criteria.size() << " criteria\n";
  return failed ? 1 : 0;
}
