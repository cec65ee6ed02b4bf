#include "topocut/generators.hpp"

#include "topocut/error.hpp"
#include "topocut/predicates.hpp"
#include "topocut/rng.hpp"

namespace topocut {

ColoredPointSet gen_points(int dimension, const std::vector<int>& class_sizes, uint64_t seed,
                           int64_t range) {
  if (dimension < 1) fail(Errc::ParameterRange, "dimension must be positive");
  if (range < 1) fail(Errc::ParameterRange, "coordinate range must be positive");
  for (int n : class_sizes)
    if (n < 0) fail(Errc::ParameterRange, "negative class size");

  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    ColoredPointSet ps(dimension, {});
    ps.classes.resize(class_sizes.size());
    for (size_t c = 0; c < class_sizes.size(); ++c) {
      for (int i = 0; i < class_sizes[c]; ++i) {
        Point p;
        p.coords.reserve(static_cast<size_t>(dimension));
        for (int k = 0; k < dimension; ++k)
          p.coords.emplace_back(Integer(rng.next_in_range(-range, range)));
        ps.classes[c].push_back(std::move(p));
      }
    }
    if (is_general_position(ps)) return ps;
  }
  fail(Errc::GenerationFailed, "no general-position sample within the retry budget");
}

Necklace gen_necklace(const std::vector<int>& type_counts, uint64_t seed) {
  Necklace nk;
  nk.d = static_cast<int>(type_counts.size());
  for (size_t t = 0; t < type_counts.size(); ++t) {
    if (type_counts[t] < 1)
      fail(Errc::ParameterRange, "every type needs at least one stone");
    for (int i = 0; i < type_counts[t]; ++i) nk.stones.push_back(static_cast<int>(t) + 1);
  }
  // Fisher-Yates with the seeded stream.
  SplitMix64 rng(seed);
  for (size_t i = nk.stones.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng.next_below(i));
    std::swap(nk.stones[i - 1], nk.stones[j]);
  }
  nk.validate();
  return nk;
}

Hypergraph gen_hypergraph(int ground_size, int edge_count, uint64_t seed) {
  if (ground_size < 1 || ground_size > 20)
    fail(Errc::ParameterRange, "ground size must be in 1..20");
  if (edge_count < 0) fail(Errc::ParameterRange, "negative edge count");
  SplitMix64 rng(seed);
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < edge_count; ++i) {
    const uint64_t mask =
        1 + rng.next_below((uint64_t{1} << ground_size) - 1);  // nonzero subset
    std::vector<int> edge;
    for (int x = 0; x < ground_size; ++x)
      if (mask & (uint64_t{1} << x)) edge.push_back(x + 1);
    edges.push_back(std::move(edge));
  }
  return Hypergraph(ground_size, std::move(edges));
}

}  // namespace topocut
