#include "topocut/perturb.hpp"

#include <algorithm>

#include "topocut/error.hpp"
#include "topocut/predicates.hpp"
#include "topocut/rng.hpp"

namespace topocut {

namespace {

Rational max_norm_distance(const Point& a, const Point& b) {
  Rational best = 0;
  for (int i = 0; i < a.dim(); ++i) {
    Rational diff = a[i] - b[i];
    if (diff < 0) diff = -diff;
    if (diff > best) best = diff;
  }
  return best;
}

// Smallest positive pairwise max-norm distance; 1 when no two distinct
// points exist (coincident points contribute nothing, the retry loop still
// separates them).
Rational min_pairwise_distance(const std::vector<Point>& points) {
  Rational best = 0;
  bool found = false;
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) {
      const Rational d = max_norm_distance(points[i], points[j]);
      if (d == 0) continue;
      if (!found || d < best) {
        best = d;
        found = true;
      }
    }
  return found ? best : Rational(1);
}

// Largest power of two that is <= x, for x > 0. Keeps every displacement a
// dyadic rational regardless of the input's denominators.
Rational floor_power_of_two(const Rational& x) {
  Rational value(1);
  if (x >= 1) {
    while (value * 2 <= x) value *= 2;
  } else {
    while (value > x) value /= 2;
  }
  return value;
}

}  // namespace

PerturbResult perturb(const ColoredPointSet& ps, uint64_t seed) {
  ps.validate();
  if (is_general_position(ps)) return PerturbResult{ps, Rational(0), 0};

  const std::vector<Point> flat = ps.all_points();
  Rational eta = floor_power_of_two(min_pairwise_distance(flat) / 1024);
  SplitMix64 rng(seed);
  constexpr int kMaxAttempts = 64;
  constexpr int64_t kGrid = 1 << 10;

  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    ColoredPointSet moved = ps;
    for (auto& cls : moved.classes) {
      for (auto& p : cls) {
        for (auto& coord : p.coords) {
          // Displacement eta * k / 2^10 with k in [-2^10, 2^10]: max-norm
          // <= eta and a power-of-two denominator.
          const int64_t k = rng.next_in_range(-kGrid, kGrid);
          coord += eta * Rational(Integer(k), Integer(kGrid));
        }
      }
    }
    if (is_general_position(moved)) return PerturbResult{std::move(moved), eta, attempt};
    eta /= 2;
  }
  fail(Errc::PerturbationFailed, "no general-position perturbation found within retry budget");
}

}  // namespace topocut
