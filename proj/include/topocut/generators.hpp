#pragma once

#include <cstdint>
#include <vector>

#include "topocut/colored_point_set.hpp"
#include "topocut/dolnikov.hpp"
#include "topocut/necklace.hpp"

namespace topocut {

// Seeded instance generators. All randomness flows from splitmix64, so the
// same seed always yields byte-identical instances.

// Integer-coordinate classes in [-range, range]^d, re-rolled (up to 64
// times) until the set is in general position. Throws
// Error(GenerationFailed) when the budget runs out.
ColoredPointSet gen_points(int dimension, const std::vector<int>& class_sizes, uint64_t seed,
                           int64_t range = 32767);

// Random arrangement of the requested per-type stone counts.
Necklace gen_necklace(const std::vector<int>& type_counts, uint64_t seed);

// Random hypergraph: edge_count draws of nonempty subsets of the ground
// set (duplicates collapse canonically).
Hypergraph gen_hypergraph(int ground_size, int edge_count, uint64_t seed);

}  // namespace topocut
