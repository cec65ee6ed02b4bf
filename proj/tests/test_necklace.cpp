#include <doctest.h>

#include "topocut/error.hpp"
#include "topocut/generators.hpp"
#include "topocut/necklace.hpp"
#include "topocut/rng.hpp"

using namespace topocut;

namespace {

Necklace nk(int d, std::vector<int> stones) {
  Necklace n;
  n.d = d;
  n.stones = std::move(stones);
  n.validate();
  return n;
}

}  // namespace

TEST_CASE("moment-curve split: one type") {
  const auto necklace = nk(1, {1, 1, 1, 1});
  const auto split = split_via_moment_curve(necklace);
  CHECK(split.cuts == std::vector<int>{2});
  CHECK(verify_split(necklace, split));
}

TEST_CASE("moment-curve split: blocks need two cuts") {
  const auto necklace = nk(2, {1, 1, 2, 2});
  const auto split = split_via_moment_curve(necklace);
  CHECK(verify_split(necklace, split));
  CHECK(split.cuts.size() <= 2);
  // Brute force says no single cut is fair.
  CHECK_FALSE(split_brute_force(necklace, 1).has_value());
  CHECK(split.cuts.size() == 2);
}

TEST_CASE("moment-curve split: alternating necklace") {
  const auto necklace = nk(2, {1, 2, 1, 2});
  const auto split = split_via_moment_curve(necklace);
  CHECK(verify_split(necklace, split));
  CHECK(min_cuts(necklace) == 1);
}

TEST_CASE("brute force oracle on reference cases") {
  const auto blocks = nk(2, {1, 1, 2, 2});
  CHECK_FALSE(split_brute_force(blocks, 1).has_value());
  const auto split = split_brute_force(blocks, 2);
  REQUIRE(split.has_value());
  CHECK(split->cuts == std::vector<int>{1, 3});
  CHECK(verify_split(blocks, *split));
}

TEST_CASE("verify_split rejects unfair and malformed splits") {
  const auto blocks = nk(2, {1, 1, 2, 2});
  NecklaceSplit bad;
  bad.cuts = {2};
  bad.assignment = {1, 2};
  CHECK_FALSE(verify_split(blocks, bad));

  const auto alt = nk(2, {1, 2, 1, 2});
  NecklaceSplit none;
  none.assignment = {1};
  CHECK_FALSE(verify_split(alt, none));

  NecklaceSplit unsorted;
  unsorted.cuts = {3, 1};
  unsorted.assignment = {1, 2, 1};
  CHECK_THROWS_WITH_AS(verify_split(blocks, unsorted), doctest::Contains("MALFORMED_SPLIT"),
                       Error);

  NecklaceSplit out_of_range;
  out_of_range.cuts = {4};
  out_of_range.assignment = {1, 2};
  CHECK_THROWS_WITH_AS(verify_split(blocks, out_of_range),
                       doctest::Contains("MALFORMED_SPLIT"), Error);

  NecklaceSplit not_alternating;
  not_alternating.cuts = {1, 3};
  not_alternating.assignment = {1, 1, 2};
  CHECK_FALSE(verify_split(blocks, not_alternating));
}

TEST_CASE("min_cuts on reference necklaces") {
  CHECK(min_cuts(nk(2, {1, 2, 1, 2})) == 1);
  CHECK(min_cuts(nk(2, {1, 1, 2, 2})) == 2);
  CHECK(min_cuts(nk(3, {1, 1, 2, 2, 3, 3})) == 3);
}

TEST_CASE("odd type counts are rejected by the solvers") {
  const auto odd = nk(2, {1, 2, 2});
  CHECK_THROWS_WITH_AS(split_via_moment_curve(odd), doctest::Contains("ODD_TYPE_COUNT"), Error);
  CHECK_THROWS_WITH_AS(min_cuts(odd), doctest::Contains("ODD_TYPE_COUNT"), Error);
  // The oracle stays total: it simply finds nothing.
  CHECK_FALSE(split_brute_force(odd, 2).has_value());
}

TEST_CASE("necklace validation") {
  Necklace missing;
  missing.d = 3;
  missing.stones = {1, 1, 2, 2};
  CHECK_THROWS_WITH_AS(missing.validate(), doctest::Contains("PARAMETER_RANGE"), Error);
}

TEST_CASE("exhaustive d=2: theorem bound and solver agreement for n <= 8") {
  // All type sequences over {1,2} with both types present and even counts.
  for (int n = 2; n <= 8; n += 2) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> stones;
      int ones = 0;
      for (int i = 0; i < n; ++i) {
        const int type = (mask >> i) & 1 ? 2 : 1;
        if (type == 1) ++ones;
        stones.push_back(type);
      }
      if (ones == 0 || ones == n || ones % 2 != 0) continue;
      const auto necklace = nk(2, stones);
      const int cuts_needed = min_cuts(necklace);
      CHECK(cuts_needed <= 2);
      const auto split = split_via_moment_curve(necklace);
      CHECK(verify_split(necklace, split));
      CHECK(static_cast<int>(split.cuts.size()) >= cuts_needed);
      CHECK(static_cast<int>(split.cuts.size()) <= 2);
    }
  }
}

TEST_CASE("random d=3 instances agree with the oracle") {
  SplitMix64 rng(999);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> counts;
    for (int t = 0; t < 3; ++t)
      counts.push_back(2 + 2 * static_cast<int>(rng.next_below(3)));  // even, 2..6
    const auto necklace = gen_necklace(counts, 7000 + static_cast<uint64_t>(trial));
    const auto split = split_via_moment_curve(necklace);
    CHECK(verify_split(necklace, split));
    CHECK(static_cast<int>(split.cuts.size()) <= 3);
    CHECK(min_cuts(necklace) <= static_cast<int>(split.cuts.size()));
  }
}

TEST_CASE("four stone types split within four cuts") {
  const auto necklace = nk(4, {1, 2, 3, 4, 1, 2, 3, 4});
  const auto split = split_via_moment_curve(necklace);
  CHECK(verify_split(necklace, split));
  CHECK(split.cuts.size() <= 4);

  const auto sorted = nk(4, {1, 1, 2, 2, 3, 3, 4, 4});
  const auto sorted_split = split_via_moment_curve(sorted);
  CHECK(verify_split(sorted, sorted_split));
  CHECK(sorted_split.cuts.size() == 4);  // the tight family needs all d cuts
}

TEST_CASE("generated necklaces are deterministic with matching counts") {
  const auto a = gen_necklace({4, 4}, 1);
  const auto b = gen_necklace({4, 4}, 1);
  CHECK(a.stones == b.stones);
  CHECK(a.stones.size() == 8);
  const auto counts = a.type_counts();
  CHECK(counts == std::vector<int64_t>{4, 4});
}
