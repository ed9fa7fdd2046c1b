#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sqdepth/degree_stats.hpp"
#include "sqdepth/ideal_pair.hpp"
#include "sqdepth/koszul.hpp"
#include "sqdepth/poset.hpp"
#include "sqdepth/sdepth.hpp"

namespace sqdepth {

enum class ClaimId {
  kLemma1_1,      // L1.1
  kProp1_3,       // P1.3
  kLemma1_5,      // L1.5
  kLemma1_6,      // L1.6
  kLemma1_7,      // L1.7, conclusions (1) and (2) on solver certificates
  kLemma1_8,      // L1.8
  kProp1_9,       // P1.9
  kThm1_10,       // T1.10
  kIntroBounds,   // INTRO-BOUNDS
  kIntroLower,    // INTRO-LOWER, depth >= d
  kSdepth1Depth1, // SD1-D1
  kStanleyN5,     // STANLEY-N5
  kDepthLemma,    // DEPTH-LEMMA
};

std::string_view to_string(ClaimId id);
std::optional<ClaimId> parse_claim_id(std::string_view text);
/// Every claim, in declaration order.
std::span<const ClaimId> all_claims();

enum class Verdict { kConfirmed, kVacuous, kViolation };

std::string_view to_string(Verdict v);

using DetailValue = std::variant<std::int64_t, std::string>;

struct Detail {
  std::string key;
  DetailValue value;
};

/// Outcome of evaluating one implication on one instance.
struct ImplicationReport {
  ClaimId claim{};
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  Verdict verdict = Verdict::kVacuous;
  std::string instance;  ///< instance document of the witness
  std::vector<Detail> details;
};

/// hypothesis ∧ ¬conclusion is a violation, hypothesis alone a confirmation.
Verdict verdict_for(bool hypothesis, bool conclusion) noexcept;

/// Lazily computed invariants of one instance. Not thread-safe; each worker
/// owns its analyses.
class InstanceAnalysis {
 public:
  /// Throws ZeroModuleError for I = J.
  explicit InstanceAnalysis(IdealPair ip, FieldSpec field = FieldSpec::rationals());

  const IdealPair& pair() const noexcept { return ip_; }
  const FieldSpec& field() const noexcept { return field_; }
  const Poset& poset() const noexcept { return poset_; }

  const DegreeStats& stats();
  int depth();
  const DepthResult& depth_result();
  int sdepth();
  const SdepthResult& sdepth_result();
  const std::string& instance_text();

 private:
  IdealPair ip_;
  FieldSpec field_;
  Poset poset_;
  std::optional<DegreeStats> stats_;
  std::optional<DepthResult> depth_;
  std::optional<SdepthResult> sdepth_;
  std::optional<std::string> text_;
};

/// Depth / Stanley depth of another pair over the same field, or nullopt if zero.
std::optional<int> depth_of(const IdealPair& ip, const FieldSpec& field);
std::optional<int> sdepth_of(const IdealPair& ip);

// Degree-statistics bounds: s > r + q, r > q or s < 2r imply sdepth <= d + 1.
ImplicationReport check_intro_bounds(InstanceAnalysis& a);
// gens(I) in degree >= d and gens(J) in degree >= d + 1 imply depth >= d.
ImplicationReport check_intro_lower(InstanceAnalysis& a);

// I = (x_i : i in R), j ∉ R, depth I/(J + (x_j) ∩ B) = 1 implies depth I/J <= 2.
ImplicationReport check_lemma_1_1(InstanceAnalysis& a, int j);
// Same, hypothesis true if it holds for some admissible j.
ImplicationReport check_lemma_1_1(InstanceAnalysis& a);

// x_i x_t x_k ∈ J for every variable generator x_i and non-generator pair t < k
// implies depth <= 2.
ImplicationReport check_prop_1_3(InstanceAnalysis& a);

struct IsolatedMonomial {
  Monomial u;
  int k;
  friend bool operator==(const IsolatedMonomial&, const IsolatedMonomial&) = default;
};

/// Every u ∈ P none of whose degree-(deg u + 1) multiples lies in P.
std::vector<IsolatedMonomial> find_isolated_monomials(const Poset& poset);
// A nonempty list with smallest degree k implies depth <= k.
ImplicationReport check_lemma_1_5(InstanceAnalysis& a);

/// Throws PreconditionError unless every v has degree >= d + 2 and lies outside I,
/// and J is generated in degree >= d + 1.
ImplicationReport check_lemma_1_6(InstanceAnalysis& a, std::span<const Monomial> extra);
// Each single admissible v, then all of them together.
ImplicationReport check_lemma_1_6(InstanceAnalysis& a);

// Interval conclusions of the single-variable lemma on certificates of I'/J'.
ImplicationReport check_lemma_1_7(InstanceAnalysis& a);
ImplicationReport check_lemma_1_8(InstanceAnalysis& a);
ImplicationReport check_prop_1_9(InstanceAnalysis& a);
ImplicationReport check_thm_1_10(InstanceAnalysis& a);

ImplicationReport check_sdepth1_depth1(InstanceAnalysis& a);
// J = 0 and n <= 5 implies sdepth >= depth; other pairs only log both values.
ImplicationReport check_stanley_n5(InstanceAnalysis& a);

/// Depth inequalities on 0 -> I'/(I' ∩ J) -> I/J -> I/(I' + J) -> 0.
/// Throws PreconditionError if I' ⊄ I, ZeroModuleError if a term vanishes.
ImplicationReport check_depth_lemma(InstanceAnalysis& a, std::span<const Monomial> sub_ideal);
// Every split by a nonempty proper subset of gens(I) (up to 6 generators)
// and the split by the degree-(d+1) part B; zero terms are skipped.
ImplicationReport check_depth_lemma(InstanceAnalysis& a);

/// Quantities used by the single-variable family of claims.
struct TheoremConditions {
  bool shape = false;
  int distinguished = 0;
  std::size_t e = 0, e_prime = 0, e_double_prime = 0;
  std::size_t c_outside = 0;  ///< |C \ (x_1, E')|
  std::size_t b = 0, c = 0;
  bool condition1 = false;
  bool condition2 = false;
  bool degree2_outside_killed = false;  ///< every degree-2 u ∉ I has x_1 u ∈ J
  bool all_e_survive = false;           ///< x_1 a ∉ J for all a ∈ E
};

TheoremConditions theorem_conditions(InstanceAnalysis& a);

/// Shape, sdepth 2, and neither numeric condition: the open boundary case.
bool is_theorem_boundary_case(InstanceAnalysis& a);

ImplicationReport check_claim(InstanceAnalysis& a, ClaimId id);

}  // namespace sqdepth
