#pragma once

#include <cstdint>

#include "topocut/colored_point_set.hpp"
#include "topocut/rational.hpp"

namespace topocut {

struct PerturbResult {
  ColoredPointSet points;
  // Max-norm bound actually used for the accepted displacement round; zero
  // when the input was already in general position.
  Rational eta;
  int attempts = 0;
};

// Moves every point by a deterministic pseudo-random rational displacement
// of max-norm at most eta until the set is in general position. eta starts
// at 1/1024 of the minimum pairwise max-norm distance and halves on each
// retry; displacements have power-of-two denominators. The input is
// returned unchanged when already in general position. Throws
// Error(PerturbationFailed) after 64 attempts.
PerturbResult perturb(const ColoredPointSet& ps, uint64_t seed);

}  // namespace topocut
