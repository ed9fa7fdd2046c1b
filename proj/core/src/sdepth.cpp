#include "sqdepth/sdepth.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "sqdepth/errors.hpp"

namespace sqdepth {
namespace {

/// Calls f(w) for every w with bottom | w | top; stops early when f returns false.
template <typename F>
bool for_each_in_span(Monomial bottom, Monomial top, F&& f) {
  const Mask diff = top.mask & ~bottom.mask;
  Mask sub = diff;
  while (true) {
    if (!f(Monomial{bottom.mask | sub})) return false;
    if (sub == 0) return true;
    sub = (sub - 1) & diff;
  }
}

class MaskSet {
 public:
  explicit MaskSet(int n) : words_(((std::size_t{1} << n) + 63) / 64, 0) {}

  bool test(Mask m) const { return (words_[m >> 6] >> (m & 63)) & 1U; }
  void set(Mask m) { words_[m >> 6] |= std::uint64_t{1} << (m & 63); }
  void reset(Mask m) { words_[m >> 6] &= ~(std::uint64_t{1} << (m & 63)); }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& w) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t x : w) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Exact cover of the degree < k part of P by intervals topped at degree k.
class CoverSearch {
 public:
  CoverSearch(const Poset& poset, int k) : used_(poset.n()) {
    for (Monomial u : poset.elements()) {
      if (u.degree() >= k) break;
      low_.push_back(u);
      auto& cands = tops_.emplace_back();
      for (Monomial v : poset.of_degree(k)) {
        if (u.divides(v)) cands.push_back(v);
      }
    }
  }

  bool run() { return solve(0); }

  const std::vector<Interval>& chosen() const { return chosen_; }
  const MaskSet& used() const { return used_; }

 private:
  static constexpr std::size_t kMemoCap = std::size_t{1} << 18;

  bool span_free(Monomial u, Monomial v) const {
    return for_each_in_span(u, v, [&](Monomial w) { return !used_.test(w.mask); });
  }

  void mark(Monomial u, Monomial v, bool on) {
    for_each_in_span(u, v, [&](Monomial w) {
      on ? used_.set(w.mask) : used_.reset(w.mask);
      return true;
    });
  }

  // Every pending low element still has some free interval.
  bool viable(std::size_t from) const {
    for (std::size_t i = from; i < low_.size(); ++i) {
      if (used_.test(low_[i].mask)) continue;
      const bool any = std::any_of(tops_[i].begin(), tops_[i].end(),
                                   [&](Monomial v) { return span_free(low_[i], v); });
      if (!any) return false;
    }
    return true;
  }

  bool solve(std::size_t idx) {
    while (idx < low_.size() && used_.test(low_[idx].mask)) ++idx;
    if (idx == low_.size()) return true;
    if (failed_.count(used_.words())) return false;

    const Monomial u = low_[idx];
    for (Monomial v : tops_[idx]) {
      if (!span_free(u, v)) continue;
      mark(u, v, true);
      chosen_.push_back({u, v});
      if (viable(idx + 1) && solve(idx + 1)) return true;
      chosen_.pop_back();
      mark(u, v, false);
    }
    if (failed_.size() < kMemoCap) failed_.insert(used_.words());
    return false;
  }

  std::vector<Monomial> low_;
  std::vector<std::vector<Monomial>> tops_;
  MaskSet used_;
  std::vector<Interval> chosen_;
  std::unordered_set<std::vector<std::uint64_t>, WordsHash> failed_;
};

void require_nonempty(const Poset& poset) {
  if (poset.size() == 0) throw ZeroModuleError();
}

}  // namespace

std::optional<PartitionCertificate> sdepth_at_least(const Poset& poset, int k) {
  require_nonempty(poset);
  if (k < 0 || k > poset.n()) {
    throw std::invalid_argument("sdepth_at_least: k must lie in [0, n]");
  }
  CoverSearch search(poset, k);
  if (!search.run()) return std::nullopt;

  PartitionCertificate cert;
  cert.intervals = search.chosen();
  for (Monomial w : poset.elements()) {
    if (w.degree() >= k && !search.used().test(w.mask)) cert.intervals.push_back({w, w});
  }
  std::sort(cert.intervals.begin(), cert.intervals.end(),
            [](const Interval& a, const Interval& b) { return a.bottom < b.bottom; });
  cert.claimed_sdepth = std::numeric_limits<int>::max();
  for (const Interval& iv : cert.intervals) {
    cert.claimed_sdepth = std::min(cert.claimed_sdepth, iv.top.degree());
  }
  return cert;
}

SdepthResult sdepth(const Poset& poset) {
  require_nonempty(poset);
  // sdepth >= min degree always holds (all singletons).
  int lo = poset.min_degree();
  int hi = poset.max_degree();
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (sdepth_at_least(poset, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  auto cert = sdepth_at_least(poset, lo);
  return {lo, std::move(*cert)};
}

VerifyResult verify_partition(const Poset& poset, const PartitionCertificate& cert) {
  if (cert.intervals.empty()) return {false, "certificate has no intervals"};
  const Mask universe = full_mask(poset.n());
  std::vector<unsigned char> covered(std::size_t{1} << poset.n(), 0);
  std::size_t count = 0;
  int min_top = std::numeric_limits<int>::max();

  for (const Interval& iv : cert.intervals) {
    const std::string name = "[" + to_string(iv.bottom) + ", " + to_string(iv.top) + "]";
    if ((iv.top.mask & ~universe) != 0) return {false, name + " uses a variable beyond n"};
    if (!iv.bottom.divides(iv.top)) return {false, name + ": bottom does not divide top"};
    if (!poset.contains(iv.bottom)) return {false, name + ": bottom not in P"};
    if (!poset.contains(iv.top)) return {false, name + ": top not in P"};
    std::string problem;
    for_each_in_span(iv.bottom, iv.top, [&](Monomial w) {
      if (!poset.contains(w)) {
        problem = name + " contains " + to_string(w) + " outside P";
        return false;
      }
      if (covered[w.mask]) {
        problem = to_string(w) + " is covered twice (again by " + name + ")";
        return false;
      }
      covered[w.mask] = 1;
      ++count;
      return true;
    });
    if (!problem.empty()) return {false, problem};
    min_top = std::min(min_top, iv.top.degree());
  }
  if (count != poset.size()) {
    for (Monomial w : poset.elements()) {
      if (!covered[w.mask]) return {false, to_string(w) + " is not covered"};
    }
  }
  if (min_top != cert.claimed_sdepth) {
    return {false, "claimed sdepth " + std::to_string(cert.claimed_sdepth) +
                       " but minimum top degree is " + std::to_string(min_top)};
  }
  return {true, {}};
}

namespace {

// Plain enumeration of all interval partitions. The first uncovered element
// in canonical order must be the bottom of its interval, since all of its
// proper divisors in P come earlier and are already covered.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(const Poset& poset)
      : poset_(poset), covered_(std::size_t{1} << poset.n(), 0) {}

  template <typename F>
  void run(F&& on_partition) { recurse(0, std::numeric_limits<int>::max(), on_partition); }

 private:
  template <typename F>
  void recurse(std::size_t idx, int min_top, F& on_partition) {
    const auto elems = poset_.elements();
    while (idx < elems.size() && covered_[elems[idx].mask]) ++idx;
    if (idx == elems.size()) {
      on_partition(min_top);
      return;
    }
    const Monomial u = elems[idx];
    for (Monomial v : elems.subspan(idx)) {
      if (!u.divides(v)) continue;
      bool free = true;
      for_each_in_span(u, v, [&](Monomial w) {
        free = !covered_[w.mask];
        return free;
      });
      if (!free) continue;
      for_each_in_span(u, v, [&](Monomial w) { covered_[w.mask] = 1; return true; });
      recurse(idx + 1, std::min(min_top, v.degree()), on_partition);
      for_each_in_span(u, v, [&](Monomial w) { covered_[w.mask] = 0; return true; });
    }
  }

  const Poset& poset_;
  std::vector<unsigned char> covered_;
};

void require_small(const Poset& poset, std::size_t max_size) {
  require_nonempty(poset);
  if (poset.size() > max_size) {
    throw PreconditionError("poset has " + std::to_string(poset.size()) +
                            " elements; brute force is limited to " + std::to_string(max_size));
  }
}

}  // namespace

int naive_sdepth(const Poset& poset, std::size_t max_size) {
  require_small(poset, max_size);
  int best = -1;
  PartitionEnumerator(poset).run([&](int min_top) { best = std::max(best, min_top); });
  return best;
}

std::uint64_t count_interval_partitions(const Poset& poset, std::size_t max_size) {
  require_small(poset, max_size);
  std::uint64_t count = 0;
  PartitionEnumerator(poset).run([&](int) { ++count; });
  return count;
}

}  // namespace sqdepth
