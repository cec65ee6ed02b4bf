#include "topocut/ham_sandwich.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "topocut/detail/combinatorics.hpp"
#include "topocut/error.hpp"
#include "topocut/predicates.hpp"

namespace topocut {

namespace {

struct FlatPoint {
  Point point;
  int cls;
};

std::vector<FlatPoint> flatten(const ColoredPointSet& ps) {
  std::vector<FlatPoint> flat;
  flat.reserve(ps.total_points());
  for (int c = 0; c < ps.num_classes(); ++c)
    for (const auto& p : ps.classes[static_cast<size_t>(c)]) flat.push_back({p, c});
  return flat;
}

std::vector<int64_t> class_sizes(const ColoredPointSet& ps) {
  std::vector<int64_t> sizes;
  sizes.reserve(ps.classes.size());
  for (const auto& cls : ps.classes) sizes.push_back(static_cast<int64_t>(cls.size()));
  return sizes;
}

std::vector<SideCounts> classify(const ColoredPointSet& ps, const Hyperplane& h) {
  std::vector<SideCounts> counts(ps.classes.size(), SideCounts{0, 0, 0});
  for (int c = 0; c < ps.num_classes(); ++c) {
    for (const auto& p : ps.classes[static_cast<size_t>(c)]) {
      switch (h.side_of(p)) {
        case Side::PositiveOpen: ++counts[static_cast<size_t>(c)][0]; break;
        case Side::On: ++counts[static_cast<size_t>(c)][1]; break;
        case Side::NegativeOpen: ++counts[static_cast<size_t>(c)][2]; break;
      }
    }
  }
  return counts;
}

bool contract_ok(const std::vector<SideCounts>& counts, const std::vector<int64_t>& sizes) {
  for (size_t i = 0; i < sizes.size(); ++i) {
    const int64_t half = sizes[i] / 2;
    if (counts[i][0] != half || counts[i][2] != half) return false;
    if (counts[i][1] != sizes[i] - 2 * half) return false;
  }
  return true;
}

// Candidate cut anchored on d points: ON anchors lie on the final cut,
// released anchors get pushed off to a required open side by a small tilt.
struct Candidate {
  Hyperplane base;                      // hyperplane through all anchors
  std::vector<Point> anchors;           // size d
  std::vector<char> released;           // same size
  std::vector<Side> required_side;      // per anchor; meaningful when released
  std::vector<int> side_key;            // deterministic tiebreak after base

  bool operator<(const Candidate& o) const {
    if (!(base == o.base)) return base < o.base;
    return side_key < o.side_key;
  }
};

// Classifies all points that are not anchors of the candidate, aborting as
// soon as some class exceeds its floor target on either open side; any
// non-anchor point exactly on the base hyperplane also kills the candidate.
// On success fills per-class fixed counts.
bool fixed_counts_ok(const std::vector<FlatPoint>& flat, const std::vector<char>& is_anchor,
                     const Hyperplane& base, const std::vector<int64_t>& halves,
                     std::vector<int64_t>& pos, std::vector<int64_t>& neg) {
  std::fill(pos.begin(), pos.end(), 0);
  std::fill(neg.begin(), neg.end(), 0);
  for (size_t i = 0; i < flat.size(); ++i) {
    if (is_anchor[i]) continue;
    const size_t c = static_cast<size_t>(flat[i].cls);
    switch (base.side_of(flat[i].point)) {
      case Side::PositiveOpen:
        if (++pos[c] > halves[c]) return false;
        break;
      case Side::NegativeOpen:
        if (++neg[c] > halves[c]) return false;
        break;
      case Side::On:
        return false;
    }
  }
  return true;
}

// Moves each released anchor off the base hyperplane along the base normal
// by a dyadic epsilon and rebuilds the hyperplane through the moved points.
// Sides of non-anchor points are stable for small epsilon, and a released
// anchor's side depends on its displacement sign through one global factor,
// so trying both orientations with shrinking epsilon must terminate.
std::optional<BisectionCertificate> concretize(const ColoredPointSet& ps,
                                               const std::vector<int64_t>& sizes,
                                               const Candidate& cand) {
  const size_t d = cand.anchors.size();
  Rational eps(1, 2);
  for (int iter = 0; iter < 512; ++iter, eps /= 2) {
    for (int tau : {1, -1}) {
      std::vector<Point> moved = cand.anchors;
      for (size_t j = 0; j < d; ++j) {
        if (!cand.released[j]) continue;
        const int dir = (cand.required_side[j] == Side::PositiveOpen) ? tau : -tau;
        for (size_t k = 0; k < moved[j].coords.size(); ++k)
          moved[j].coords[k] += Rational(dir) * eps * cand.base.normal[k];
      }
      if (!is_affinely_independent(moved)) continue;
      Hyperplane h;
      try {
        h = hyperplane_through(moved);
      } catch (const Error&) {
        continue;
      }
      auto counts = classify(ps, h);
      if (contract_ok(counts, sizes))
        return BisectionCertificate{std::move(h), std::move(counts)};
    }
  }
  return std::nullopt;
}

// Builds the candidate for a given anchor assignment, or nullopt when the
// anchor set cannot yield a valid cut. `anchor_idx` indexes into flat.
std::optional<Candidate> make_candidate(const std::vector<FlatPoint>& flat,
                                        const std::vector<int64_t>& sizes,
                                        const std::vector<int64_t>& halves,
                                        const std::vector<size_t>& anchor_idx,
                                        const std::vector<char>& anchor_on) {
  const size_t n_real = anchor_idx.size();
  const size_t n_classes = sizes.size();

  // The on-cut census must come out to exactly one point for an odd class
  // and none for an even class.
  std::vector<int64_t> on_count(n_classes, 0);
  for (size_t j = 0; j < n_real; ++j)
    if (anchor_on[j]) ++on_count[static_cast<size_t>(flat[anchor_idx[j]].cls)];
  for (size_t c = 0; c < n_classes; ++c)
    if (on_count[c] != sizes[c] % 2) return std::nullopt;

  std::vector<Point> anchors;
  anchors.reserve(n_real);
  for (size_t idx : anchor_idx) anchors.push_back(flat[idx].point);
  if (!is_affinely_independent(anchors)) return std::nullopt;

  Hyperplane base;
  try {
    base = hyperplane_through(anchors);
  } catch (const Error&) {
    return std::nullopt;
  }

  std::vector<char> is_anchor(flat.size(), 0);
  for (size_t idx : anchor_idx) is_anchor[idx] = 1;
  std::vector<int64_t> pos(n_classes, 0), neg(n_classes, 0);
  if (!fixed_counts_ok(flat, is_anchor, base, halves, pos, neg)) return std::nullopt;

  // Each class must be completable to (half, half) by sending some of its
  // released anchors to the positive side and the rest to the negative one.
  std::vector<int64_t> released_per_class(n_classes, 0);
  for (size_t j = 0; j < n_real; ++j)
    if (!anchor_on[j]) ++released_per_class[static_cast<size_t>(flat[anchor_idx[j]].cls)];
  std::vector<int64_t> to_positive(n_classes);
  for (size_t c = 0; c < n_classes; ++c) {
    const int64_t need = halves[c] - pos[c];
    if (need < 0 || need > released_per_class[c]) return std::nullopt;
    if (halves[c] - neg[c] != released_per_class[c] - need) return std::nullopt;
    to_positive[c] = need;
  }

  Candidate cand;
  cand.base = base;
  cand.anchors = std::move(anchors);
  cand.released.assign(cand.anchors.size(), 0);
  cand.required_side.assign(cand.anchors.size(), Side::On);
  std::vector<int64_t> assigned(n_classes, 0);
  for (size_t j = 0; j < n_real; ++j) {
    if (anchor_on[j]) continue;
    cand.released[j] = 1;
    const size_t c = static_cast<size_t>(flat[anchor_idx[j]].cls);
    cand.required_side[j] =
        (assigned[c]++ < to_positive[c]) ? Side::PositiveOpen : Side::NegativeOpen;
  }
  cand.side_key.reserve(cand.anchors.size());
  for (size_t j = 0; j < cand.anchors.size(); ++j)
    cand.side_key.push_back(!cand.released[j] ? 0
                            : (cand.required_side[j] == Side::PositiveOpen ? 1 : 2));
  return cand;
}

void check_preconditions(const ColoredPointSet& ps, const FindCutOptions& opts) {
  ps.validate();
  if (ps.num_classes() != ps.dimension)
    fail(Errc::ClassCountMismatch, "number of classes must equal the dimension");
  if (ps.dimension < 1 || ps.dimension > 4)
    fail(Errc::ParameterRange, "solver supports d in {1,2,3,4}");
  if (!opts.assume_general_position && !is_general_position(ps))
    fail(Errc::NotGeneralPosition, "input is not in general position; perturb first");
}

// ---- tiny instances (at most d points) -------------------------------------
//
// With so few points the general-position test is vacuous and affinely
// dependent alignments are possible, so the anchored search above does not
// apply. The candidate space is enumerated directly instead: choose which
// points lie on the cut and the open side of every other point, then decide
// feasibility of the resulting strict linear system in the hyperplane
// coefficients (u, b) exactly, by Fourier-Motzkin elimination with one
// coordinate of u pinned to +-1.

// A row is sum(coeff * var) + constant REL 0, REL in {== , <}. All
// inequalities here are strict.
struct LinRow {
  std::vector<Rational> coeff;
  Rational constant;
};

// Eliminates variables from strict rows by Fourier-Motzkin; returns a
// witness assignment or nullopt. All rows are interpreted as < 0.
std::optional<std::vector<Rational>> fm_strict_feasible(std::vector<LinRow> rows, size_t vars) {
  std::vector<std::vector<LinRow>> stages;  // rows alive before eliminating var v
  for (size_t v = vars; v-- > 0;) {
    stages.push_back(rows);
    std::vector<LinRow> lower, upper, rest;
    for (const auto& row : rows) {
      const int s = sign_of(row.coeff[v]);
      if (s > 0) upper.push_back(row);        // bounds var from above
      else if (s < 0) lower.push_back(row);   // bounds var from below
      else rest.push_back(row);
    }
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        // Combine: up says var < B, lo says var > A; A < B must hold.
        LinRow combined;
        combined.coeff.assign(vars, Rational(0));
        const Rational a = -lo.coeff[v];
        const Rational b = up.coeff[v];
        for (size_t j = 0; j < vars; ++j)
          combined.coeff[j] = lo.coeff[j] * b + up.coeff[j] * a;
        combined.constant = lo.constant * b + up.constant * a;
        rest.push_back(std::move(combined));
      }
    rows = std::move(rest);
  }
  for (const auto& row : rows)
    if (!(row.constant < 0)) return std::nullopt;  // 0 < 0 style contradiction

  // Back-substitute, innermost variable first.
  std::vector<Rational> witness(vars, Rational(0));
  for (size_t v = 0; v < vars; ++v) {
    const auto& alive = stages[vars - 1 - v];
    bool has_lo = false, has_up = false;
    Rational lo, up;
    for (const auto& row : alive) {
      Rational value = row.constant;
      for (size_t j = 0; j < vars; ++j)
        if (j != v) value += row.coeff[j] * witness[j];
      const int s = sign_of(row.coeff[v]);
      if (s == 0) continue;
      const Rational bound = -value / row.coeff[v];
      if (s > 0) {  // var < bound
        if (!has_up || bound < up) up = bound;
        has_up = true;
      } else {  // var > bound
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      }
    }
    if (has_lo && has_up) witness[v] = (lo + up) / 2;
    else if (has_lo) witness[v] = lo + 1;
    else if (has_up) witness[v] = up - 1;
  }
  return witness;
}

// Hyperplane with the given on/strict-side classification, or nullopt.
std::optional<Hyperplane> hyperplane_with_sides(const std::vector<Point>& on,
                                                const std::vector<Point>& positive,
                                                const std::vector<Point>& negative, int d) {
  // Pin u_pin = sign, solve for the remaining coefficients (u_rest, b).
  for (int pin = 0; pin < d; ++pin) {
    for (int sign : {1, -1}) {
      // Variables: u_j for j != pin, then b. Equalities <u,t> - b = 0 are
      // folded in by expressing them as two strict-free... they are handled
      // by substitution: eliminate them with Gaussian steps first.
      const size_t vars = static_cast<size_t>(d);  // d-1 normals + offset
      std::vector<LinRow> equalities, stricts;
      const auto make_row = [&](const Point& p) {
        LinRow row;
        row.coeff.assign(vars, Rational(0));
        size_t out = 0;
        for (int j = 0; j < d; ++j) {
          if (j == pin) continue;
          row.coeff[out++] = p[j];
        }
        row.coeff[vars - 1] = Rational(-1);  // -b
        row.constant = Rational(sign) * p[pin];
        return row;
      };
      for (const auto& p : on) equalities.push_back(make_row(p));
      for (const auto& p : positive) stricts.push_back(make_row(p));  // < 0
      for (const auto& p : negative) {
        LinRow row = make_row(p);
        for (auto& c : row.coeff) c = -c;
        row.constant = -row.constant;
        stricts.push_back(std::move(row));  // > 0 becomes < 0
      }

      // Gaussian elimination on the equalities, substituting into the rest.
      std::vector<std::pair<size_t, LinRow>> pivots;
      bool inconsistent = false;
      for (auto& eq : equalities) {
        for (const auto& [pv, prow] : pivots) {
          if (eq.coeff[pv] == 0) continue;
          const Rational f = eq.coeff[pv];
          for (size_t j = 0; j < vars; ++j) eq.coeff[j] -= f * prow.coeff[j];
          eq.constant -= f * prow.constant;
        }
        size_t pv = vars;
        for (size_t j = 0; j < vars; ++j)
          if (eq.coeff[j] != 0) {
            pv = j;
            break;
          }
        if (pv == vars) {
          if (eq.constant != 0) inconsistent = true;
          continue;
        }
        const Rational inv = Rational(1) / eq.coeff[pv];
        for (size_t j = 0; j < vars; ++j) eq.coeff[j] *= inv;
        eq.constant *= inv;
        pivots.emplace_back(pv, eq);
      }
      if (inconsistent) continue;

      std::vector<char> is_free(vars, 1);
      for (const auto& [pv, prow] : pivots) is_free[pv] = 0;
      std::vector<size_t> free_vars;
      for (size_t j = 0; j < vars; ++j)
        if (is_free[j]) free_vars.push_back(j);

      // Substitute pivot variables out of the strict rows.
      std::vector<LinRow> reduced;
      for (const auto& row : stricts) {
        LinRow r = row;
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
          const auto& [pv, prow] = *it;
          if (r.coeff[pv] == 0) continue;
          const Rational f = r.coeff[pv];
          r.coeff[pv] = 0;
          for (size_t j = 0; j < vars; ++j)
            if (j != pv) r.coeff[j] -= f * prow.coeff[j];
          r.constant -= f * prow.constant;
        }
        LinRow compact;
        compact.coeff.reserve(free_vars.size());
        for (size_t j : free_vars) compact.coeff.push_back(r.coeff[j]);
        compact.constant = r.constant;
        reduced.push_back(std::move(compact));
      }

      const auto solution = fm_strict_feasible(std::move(reduced), free_vars.size());
      if (!solution) continue;

      // Reassemble (u, b) from the pinned coordinate, free variables, and
      // pivot back-substitution.
      std::vector<Rational> full(vars, Rational(0));
      for (size_t i = 0; i < free_vars.size(); ++i) full[free_vars[i]] = (*solution)[i];
      for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        // Rows read coeff.x + constant = 0 with the pivot normalized to 1.
        const auto& [pv, prow] = *it;
        Rational value = -prow.constant;
        for (size_t j = 0; j < vars; ++j)
          if (j != pv) value -= prow.coeff[j] * full[j];
        full[pv] = value;
      }
      Hyperplane h;
      h.normal.assign(static_cast<size_t>(d), Rational(0));
      h.normal[static_cast<size_t>(pin)] = Rational(sign);
      size_t out = 0;
      for (int j = 0; j < d; ++j) {
        if (j == pin) continue;
        h.normal[static_cast<size_t>(j)] = full[out++];
      }
      h.offset = full[vars - 1];
      h.canonicalize();
      return h;
    }
  }
  return std::nullopt;
}

// Complete solver for instances with at most d points: enumerate the
// on-cut subset and the open side of every remaining point, then test
// exact feasibility. No general-position assumption is needed.
std::optional<BisectionCertificate> find_cut_tiny(const ColoredPointSet& ps,
                                                  const std::vector<FlatPoint>& flat,
                                                  const std::vector<int64_t>& sizes,
                                                  const std::vector<int64_t>& halves) {
  const int d = ps.dimension;
  const size_t n = flat.size();
  for (uint32_t on_mask = 0; on_mask < (uint32_t{1} << n); ++on_mask) {
    std::vector<int64_t> on_count(sizes.size(), 0);
    for (size_t i = 0; i < n; ++i)
      if (on_mask & (uint32_t{1} << i)) ++on_count[static_cast<size_t>(flat[i].cls)];
    bool ok = true;
    for (size_t c = 0; c < sizes.size(); ++c)
      if (on_count[c] != sizes[c] % 2) ok = false;
    if (!ok) continue;

    std::vector<size_t> off;
    for (size_t i = 0; i < n; ++i)
      if (!(on_mask & (uint32_t{1} << i))) off.push_back(i);

    // Assign sides to the off-cut points: exactly halves[c] of each class
    // on each open side.
    for (uint32_t side_mask = 0; side_mask < (uint32_t{1} << off.size()); ++side_mask) {
      std::vector<int64_t> pos_count(sizes.size(), 0);
      for (size_t i = 0; i < off.size(); ++i)
        if (side_mask & (uint32_t{1} << i)) ++pos_count[static_cast<size_t>(flat[off[i]].cls)];
      bool feasible = true;
      for (size_t c = 0; c < sizes.size(); ++c)
        if (pos_count[c] != halves[c]) feasible = false;
      if (!feasible) continue;

      std::vector<Point> on, positive, negative;
      for (size_t i = 0; i < n; ++i)
        if (on_mask & (uint32_t{1} << i)) on.push_back(flat[i].point);
      for (size_t i = 0; i < off.size(); ++i) {
        if (side_mask & (uint32_t{1} << i)) positive.push_back(flat[off[i]].point);
        else negative.push_back(flat[off[i]].point);
      }
      const auto h = hyperplane_with_sides(on, positive, negative, d);
      if (!h) continue;
      auto counts = classify(ps, *h);
      if (contract_ok(counts, sizes))
        return BisectionCertificate{*h, std::move(counts)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::optional<Point>> contact_points(const ColoredPointSet& ps,
                                                 const Hyperplane& cut) {
  std::vector<std::optional<Point>> contacts(ps.classes.size());
  for (size_t c = 0; c < ps.classes.size(); ++c)
    for (const auto& p : ps.classes[c])
      if (cut.side_of(p) == Side::On) {
        contacts[c] = p;
        break;
      }
  return contacts;
}

bool verify_cut(const ColoredPointSet& ps, const BisectionCertificate& cert) {
  ps.validate();
  if (cert.cut.dim() != ps.dimension)
    fail(Errc::DimensionMismatch, "certificate dimension differs from instance");
  if (cert.per_class_counts.size() != ps.classes.size()) return false;
  const auto counts = classify(ps, cert.cut);
  if (counts != cert.per_class_counts) return false;
  return contract_ok(counts, class_sizes(ps));
}

BisectionCertificate find_cut(const ColoredPointSet& ps, const FindCutOptions& opts) {
  check_preconditions(ps, opts);
  const size_t d = static_cast<size_t>(ps.dimension);
  const std::vector<FlatPoint> flat = flatten(ps);
  const std::vector<int64_t> sizes = class_sizes(ps);
  std::vector<int64_t> halves(sizes.size());
  for (size_t c = 0; c < sizes.size(); ++c) halves[c] = sizes[c] / 2;
  const bool all_odd = std::all_of(sizes.begin(), sizes.end(),
                                   [](int64_t s) { return s % 2 == 1; });

  // Flat index ranges per class, for the one-point-per-class enumerations.
  std::vector<size_t> class_start(sizes.size() + 1, 0);
  for (size_t c = 0; c < sizes.size(); ++c)
    class_start[c + 1] = class_start[c] + static_cast<size_t>(sizes[c]);

  // With at most d points the general-position test is vacuous, so the
  // anchored search below cannot rely on affine independence; the direct
  // side-assignment solver is complete there regardless of degeneracies.
  if (flat.size() <= d) {
    auto cert = find_cut_tiny(ps, flat, sizes, halves);
    if (cert) return std::move(*cert);
    fail(Errc::SearchExhausted,
         "no cut on a tiny instance; this contradicts the theorem");
  }

  if (all_odd) {
    // A valid cut must contain exactly one point of each class, so it is
    // spanned by a one-per-class tuple; enumerate them all and keep the
    // lexicographically smallest canonical hyperplane that verifies.
    std::optional<BisectionCertificate> best;
    std::vector<size_t> radixes(d);
    for (size_t c = 0; c < d; ++c) radixes[c] = static_cast<size_t>(sizes[c]);
    detail::for_each_tuple(radixes, [&](const std::vector<size_t>& digits) {
      std::vector<size_t> anchor_idx(d);
      for (size_t c = 0; c < d; ++c) anchor_idx[c] = class_start[c] + digits[c];
      const auto cand = make_candidate(flat, sizes, halves, anchor_idx,
                                       std::vector<char>(d, 1));
      if (cand && (!best || cand->base < best->cut)) {
        auto counts = classify(ps, cand->base);
        if (contract_ok(counts, sizes))
          best = BisectionCertificate{cand->base, std::move(counts)};
      }
      return true;
    });
    if (best) return std::move(*best);
    fail(Errc::SearchExhausted,
         "no spanned cut on an all-odd instance; this contradicts the theorem");
  }

  std::optional<Candidate> best;
  const auto offer = [&](const std::optional<Candidate>& cand) {
    if (cand && (!best || *cand < *best)) best = *cand;
  };

  // One anchor per class: odd-class anchors stay on the cut, even-class
  // anchors are released. Mirrors the odd-ification step (deleting a point
  // of each even class) without materializing the deletions.
  if (!opts.skip_per_class_phase &&
      std::all_of(sizes.begin(), sizes.end(), [](int64_t s) { return s > 0; })) {
    std::vector<size_t> radixes(d);
    for (size_t c = 0; c < d; ++c) radixes[c] = static_cast<size_t>(sizes[c]);
    std::vector<char> on(d);
    for (size_t c = 0; c < d; ++c) on[c] = (sizes[c] % 2 == 1);
    detail::for_each_tuple(radixes, [&](const std::vector<size_t>& digits) {
      std::vector<size_t> anchor_idx(d);
      for (size_t c = 0; c < d; ++c) anchor_idx[c] = class_start[c] + digits[c];
      offer(make_candidate(flat, sizes, halves, anchor_idx, on));
      return true;
    });
  }

  // General anchored search: any d input points, any admissible on/release
  // assignment. Complete whenever the union has at least d points.
  if (!best && flat.size() >= d) {
    detail::for_each_subset(flat.size(), d, [&](const std::vector<size_t>& subset) {
      // Choose, per odd class, which subset member (if any) stays on the
      // cut. Members of even classes are always released.
      std::vector<std::vector<size_t>> odd_members(sizes.size());
      for (size_t j = 0; j < d; ++j) {
        const size_t c = static_cast<size_t>(flat[subset[j]].cls);
        if (sizes[c] % 2 == 1) odd_members[c].push_back(j);
      }
      std::vector<size_t> odd_classes;
      for (size_t c = 0; c < sizes.size(); ++c)
        if (sizes[c] % 2 == 1) {
          if (odd_members[c].empty()) return true;  // no on-point possible
          odd_classes.push_back(c);
        }
      std::vector<size_t> radixes;
      radixes.reserve(odd_classes.size());
      for (size_t c : odd_classes) radixes.push_back(odd_members[c].size());
      detail::for_each_tuple(radixes, [&](const std::vector<size_t>& pick) {
        std::vector<char> on(d, 0);
        for (size_t t = 0; t < odd_classes.size(); ++t)
          on[odd_members[odd_classes[t]][pick[t]]] = 1;
        offer(make_candidate(flat, sizes, halves, subset, on));
        return true;
      });
      return true;
    });
  }

  if (best) {
    auto cert = concretize(ps, sizes, *best);
    if (cert) return std::move(*cert);
  }
  fail(Errc::SearchExhausted,
       "anchored search found no valid cut; this contradicts the theorem");
}

std::vector<BisectionCertificate> enumerate_all_cuts(const ColoredPointSet& ps) {
  check_preconditions(ps, {});
  if (ps.total_points() > 40)
    fail(Errc::ParameterRange, "oracle enumeration is limited to 40 points");
  const size_t d = static_cast<size_t>(ps.dimension);
  const std::vector<FlatPoint> flat = flatten(ps);
  const std::vector<int64_t> sizes = class_sizes(ps);

  std::set<Hyperplane> seen;
  std::vector<BisectionCertificate> cuts;
  detail::for_each_subset(flat.size(), d, [&](const std::vector<size_t>& subset) {
    std::vector<Point> span;
    span.reserve(d);
    for (size_t idx : subset) span.push_back(flat[idx].point);
    if (!is_affinely_independent(span)) return true;
    Hyperplane h = hyperplane_through(span);
    if (!seen.insert(h).second) return true;
    auto counts = classify(ps, h);
    if (contract_ok(counts, sizes))
      cuts.push_back(BisectionCertificate{std::move(h), std::move(counts)});
    return true;
  });
  std::sort(cuts.begin(), cuts.end(),
            [](const BisectionCertificate& a, const BisectionCertificate& b) {
              return a.cut < b.cut;
            });
  return cuts;
}

}  // namespace topocut
