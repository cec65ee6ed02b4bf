#include "topocut/necklace.hpp"

#include <algorithm>

#include "topocut/detail/combinatorics.hpp"
#include "topocut/error.hpp"
#include "topocut/ham_sandwich.hpp"
#include "topocut/predicates.hpp"

namespace topocut {

void Necklace::validate() const {
  if (d < 1) fail(Errc::ParameterRange, "necklace needs d >= 1 stone types");
  std::vector<bool> seen(static_cast<size_t>(d), false);
  for (int s : stones) {
    if (s < 1 || s > d) fail(Errc::ParameterRange, "stone type out of range 1..d");
    seen[static_cast<size_t>(s - 1)] = true;
  }
  for (bool b : seen)
    if (!b) fail(Errc::ParameterRange, "every type 1..d must occur at least once");
}

std::vector<int64_t> Necklace::type_counts() const {
  std::vector<int64_t> counts(static_cast<size_t>(d), 0);
  for (int s : stones) ++counts[static_cast<size_t>(s - 1)];
  return counts;
}

namespace {

// Per-thief type tallies for a candidate split; nullopt when malformed.
bool fair_under(const Necklace& nk, const std::vector<int>& cuts, int first_thief) {
  const auto totals = nk.type_counts();
  std::vector<int64_t> thief1(static_cast<size_t>(nk.d), 0);
  int thief = first_thief;
  size_t next_cut = 0;
  for (size_t k = 0; k < nk.stones.size(); ++k) {
    if (next_cut < cuts.size() && static_cast<size_t>(cuts[next_cut]) == k) {
      thief = 3 - thief;
      ++next_cut;
    }
    if (thief == 1) ++thief1[static_cast<size_t>(nk.stones[k] - 1)];
  }
  for (size_t t = 0; t < thief1.size(); ++t)
    if (2 * thief1[t] != totals[t]) return false;
  return true;
}

std::vector<int> alternating_assignment(size_t intervals, int first_thief) {
  std::vector<int> a(intervals);
  for (size_t i = 0; i < intervals; ++i)
    a[i] = (i % 2 == 0) ? first_thief : 3 - first_thief;
  return a;
}

void check_even_counts(const Necklace& nk) {
  for (int64_t c : nk.type_counts())
    if (c % 2 != 0)
      fail(Errc::OddTypeCount, "every type count must be even for an exact halving");
}

}  // namespace

bool verify_split(const Necklace& nk, const NecklaceSplit& sp) {
  nk.validate();
  const int n = static_cast<int>(nk.stones.size());
  for (size_t i = 0; i < sp.cuts.size(); ++i) {
    if (sp.cuts[i] < 1 || sp.cuts[i] > n - 1)
      fail(Errc::MalformedSplit, "cut position out of range");
    if (i > 0 && sp.cuts[i] <= sp.cuts[i - 1])
      fail(Errc::MalformedSplit, "cut positions must be strictly increasing");
  }
  if (static_cast<int>(sp.cuts.size()) > nk.d) return false;
  if (sp.assignment.size() != sp.cuts.size() + 1) return false;
  if (sp.assignment[0] != 1 && sp.assignment[0] != 2) return false;
  for (size_t i = 1; i < sp.assignment.size(); ++i)
    if (sp.assignment[i] != 3 - sp.assignment[i - 1]) return false;
  return fair_under(nk, sp.cuts, sp.assignment[0]);
}

NecklaceSplit split_via_moment_curve(const Necklace& nk) {
  nk.validate();
  check_even_counts(nk);
  if (nk.d > 4) fail(Errc::ParameterRange, "moment-curve solver supports d <= 4");
  if (nk.stones.size() > 40) fail(Errc::ParameterRange, "moment-curve solver supports n <= 40");

  // Stone k sits at gamma(k) in R^d; the type classes are the color
  // classes. Distinct moment-curve points are always in general position
  // (Vandermonde), so the solver's re-check is skipped.
  const int n = static_cast<int>(nk.stones.size());
  ColoredPointSet ps(nk.d, {});
  ps.classes.resize(static_cast<size_t>(nk.d));
  for (int k = 1; k <= n; ++k)
    ps.classes[static_cast<size_t>(nk.stones[static_cast<size_t>(k - 1)] - 1)].push_back(
        moment_curve_point(Rational(k), nk.d));

  FindCutOptions opts;
  opts.assume_general_position = true;
  const BisectionCertificate cert = find_cut(ps, opts);

  // All counts are even, so no stone lies on the cut; the sign pattern of
  // the cut polynomial along the curve changes at most d times, and each
  // change becomes a necklace cut at the enclosing gap.
  NecklaceSplit split;
  std::vector<int> side(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const int s = sign_of(cert.cut.evaluate(moment_curve_point(Rational(k), nk.d)));
    if (s == 0)
      fail(Errc::SearchExhausted, "stone on the cut despite even type counts");
    side[static_cast<size_t>(k - 1)] = s;
  }
  for (int k = 1; k < n; ++k)
    if (side[static_cast<size_t>(k - 1)] != side[static_cast<size_t>(k)])
      split.cuts.push_back(k);
  if (static_cast<int>(split.cuts.size()) > nk.d)
    fail(Errc::SearchExhausted, "cut polynomial changed sign more than d times");
  // Thief 1 takes the positive-open intervals.
  split.assignment = alternating_assignment(split.cuts.size() + 1, side[0] < 0 ? 1 : 2);
  return split;
}

std::optional<NecklaceSplit> split_brute_force(const Necklace& nk, int max_cuts) {
  nk.validate();
  if (nk.stones.size() > 30) fail(Errc::ParameterRange, "oracle supports n <= 30");
  if (max_cuts > nk.d) fail(Errc::ParameterRange, "max_cuts must be at most d");
  const size_t n = nk.stones.size();
  for (int c = 0; c <= max_cuts; ++c) {
    std::optional<NecklaceSplit> found;
    detail::for_each_subset(n - 1, static_cast<size_t>(c), [&](const std::vector<size_t>& idx) {
      std::vector<int> cuts;
      cuts.reserve(idx.size());
      for (size_t g : idx) cuts.push_back(static_cast<int>(g) + 1);
      for (int first : {1, 2}) {
        if (fair_under(nk, cuts, first)) {
          found = NecklaceSplit{cuts, alternating_assignment(cuts.size() + 1, first)};
          return false;  // lexicographically first cut set, thief 1 preferred
        }
      }
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

int min_cuts(const Necklace& nk) {
  nk.validate();
  check_even_counts(nk);  // with an odd count no cut number is ever fair
  for (int c = 0; c <= nk.d; ++c)
    if (split_brute_force(nk, c)) return c;
  fail(Errc::SearchExhausted,
       "no fair split within d cuts; this contradicts the theorem for even counts");
}

}  // namespace topocut
