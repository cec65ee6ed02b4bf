// Exhaustive desk-scale verification of the chi(KG(F)) >= cd_2(F)
// inequality over every hypergraph on a ground set of size <= 5, one
// representative per isomorphism class.
//
// A hyperedge over ground [g] is a nonzero g-bit subset; a hypergraph is a
// set of hyperedges, i.e. a (2^g - 1)-bit mask with bit (s-1) standing for
// subset s. Ground permutations act on these masks; the canonical
// representative of an orbit is its minimal mask. The Burnside count of
// orbits cross-checks the enumeration.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "topocut/dolnikov.hpp"
#include "topocut/error.hpp"

namespace topocut {

namespace {

struct GroundContext {
  int g = 0;
  int slots = 0;             // 2^g - 1
  uint32_t full_mask = 0;    // all slots
  // contained_in[T] = slots s with s subset of T, for T over ground bits.
  std::array<uint32_t, 32> contained_in{};
  // disjoint_from[s-1] = slots disjoint from subset s.
  std::array<uint32_t, 32> disjoint_from{};
  // Per non-identity permutation, byte tables for fast mask images.
  std::vector<std::array<std::array<uint32_t, 256>, 4>> perm_tables;
  // Cycle count of each slot permutation (identity included): a mask is
  // fixed by a permutation iff it is a union of slot cycles, so the
  // Burnside count needs 2^cycles.
  std::vector<int> slot_cycles;

  explicit GroundContext(int ground) : g(ground) {
    slots = (1 << g) - 1;
    full_mask = slots >= 32 ? 0xffffffffu : ((uint32_t{1} << slots) - 1);

    for (int t = 0; t < (1 << g); ++t) {
      uint32_t acc = 0;
      for (int s = 1; s <= slots; ++s)
        if ((s & ~t) == 0) acc |= uint32_t{1} << (s - 1);
      contained_in[static_cast<size_t>(t)] = acc;
    }
    for (int s = 1; s <= slots; ++s)
      disjoint_from[static_cast<size_t>(s - 1)] =
          contained_in[static_cast<size_t>(((1 << g) - 1) & ~s)];

    std::array<int, 5> perm{};
    for (int i = 0; i < g; ++i) perm[static_cast<size_t>(i)] = i;
    do {
      std::array<int, 32> slot_image{};
      for (int s = 1; s <= slots; ++s) {
        int image = 0;
        for (int i = 0; i < g; ++i)
          if (s & (1 << i)) image |= 1 << perm[static_cast<size_t>(i)];
        slot_image[static_cast<size_t>(s - 1)] = image - 1;
      }
      int cycles = 0;
      std::array<bool, 32> seen{};
      for (int s = 0; s < slots; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        ++cycles;
        for (int v = s; !seen[static_cast<size_t>(v)]; v = slot_image[static_cast<size_t>(v)])
          seen[static_cast<size_t>(v)] = true;
      }
      slot_cycles.push_back(cycles);

      bool identity = true;
      for (int i = 0; i < g; ++i)
        if (perm[static_cast<size_t>(i)] != i) identity = false;
      if (!identity) {
        perm_tables.emplace_back();
        auto& tables = perm_tables.back();
        for (int byte = 0; byte < 4; ++byte) {
          for (int value = 0; value < 256; ++value) {
            uint32_t image = 0;
            for (int bit = 0; bit < 8; ++bit) {
              if (!(value & (1 << bit))) continue;
              const int slot = byte * 8 + bit;
              if (slot < slots) image |= uint32_t{1} << slot_image[static_cast<size_t>(slot)];
            }
            tables[static_cast<size_t>(byte)][static_cast<size_t>(value)] = image;
          }
        }
      }
    } while (std::next_permutation(perm.begin(), perm.begin() + g));
  }

  uint32_t apply(const std::array<std::array<uint32_t, 256>, 4>& t, uint32_t m) const {
    return t[0][m & 0xff] | t[1][(m >> 8) & 0xff] | t[2][(m >> 16) & 0xff] |
           t[3][(m >> 24) & 0xff];
  }

  bool is_canonical(uint32_t m) const {
    for (const auto& t : perm_tables)
      if (apply(t, m) < m) return false;
    return true;
  }
};

// Two-colorability of the surviving hypergraph on ground subset T.
bool two_colorable(const GroundContext& ctx, uint32_t edges, int t_mask) {
  if (edges == 0) return true;
  // Color class C (subset of T) and its complement must both avoid
  // containing a surviving hyperedge.
  for (int c = t_mask;; c = (c - 1) & t_mask) {
    if ((edges & ctx.contained_in[static_cast<size_t>(c)]) == 0 &&
        (edges & ctx.contained_in[static_cast<size_t>(t_mask & ~c)]) == 0)
      return true;
    if (c == 0) break;
  }
  return false;
}

int cd2_of(const GroundContext& ctx, uint32_t mask) {
  const int full = (1 << ctx.g) - 1;
  for (int ysize = 0; ysize <= ctx.g; ++ysize) {
    for (int y = 0; y <= full; ++y) {
      if (__builtin_popcount(static_cast<unsigned>(y)) != ysize) continue;
      const int t = full & ~y;
      const uint32_t surviving = mask & ctx.contained_in[static_cast<size_t>(t)];
      if (two_colorable(ctx, surviving, t)) return ysize;
    }
  }
  return ctx.g;  // unreachable: removing everything always succeeds
}

// Bipartiteness of the disjointness graph restricted to the edge mask.
bool kneser_bipartite(const GroundContext& ctx, uint32_t mask) {
  uint32_t unvisited = mask;
  uint32_t side_a = 0, side_b = 0;
  while (unvisited) {
    const int start = __builtin_ctz(unvisited);
    uint32_t frontier = uint32_t{1} << start;
    side_a |= frontier;
    unvisited &= ~frontier;
    bool on_a = true;
    while (frontier) {
      uint32_t next = 0;
      uint32_t f = frontier;
      while (f) {
        const int v = __builtin_ctz(f);
        f &= f - 1;
        next |= ctx.disjoint_from[static_cast<size_t>(v)] & mask;
      }
      // Conflict: a neighbor already placed on the same side.
      if (next & (on_a ? side_a : side_b)) return false;
      next &= unvisited;
      if (on_a) side_b |= next;
      else side_a |= next;
      unvisited &= ~next;
      frontier = next;
      on_a = !on_a;
    }
  }
  return true;
}

// Exact m-colorability of the disjointness graph on the mask's slots, by
// backtracking over color classes with first-empty-class symmetry breaking.
bool kneser_colorable(const GroundContext& ctx, uint32_t mask, int m,
                      std::vector<uint32_t>& classes, uint32_t remaining) {
  if (remaining == 0) return true;
  const int v = __builtin_ctz(remaining);
  const uint32_t bit = uint32_t{1} << v;
  const uint32_t adj = ctx.disjoint_from[static_cast<size_t>(v)] & mask;
  bool opened_empty = false;
  for (int c = 0; c < m; ++c) {
    if (classes[static_cast<size_t>(c)] == 0) {
      if (opened_empty) break;
      opened_empty = true;
    } else if (classes[static_cast<size_t>(c)] & adj) {
      continue;
    }
    classes[static_cast<size_t>(c)] |= bit;
    if (kneser_colorable(ctx, mask, m, classes, remaining & ~bit)) return true;
    classes[static_cast<size_t>(c)] &= ~bit;
  }
  return false;
}

// chi(KG(F)) >= c, decided with cheap certificates first.
bool chi_at_least(const GroundContext& ctx, uint32_t mask, int c) {
  if (c <= 0) return true;
  if (c == 1) return mask != 0;
  if (c == 2) {
    uint32_t m = mask;
    while (m) {
      const int v = __builtin_ctz(m);
      m &= m - 1;
      if (ctx.disjoint_from[static_cast<size_t>(v)] & mask) return true;
    }
    return false;
  }
  // Singletons are pairwise disjoint, so they form a clique.
  int singleton_clique = 0;
  for (int i = 0; i < ctx.g; ++i)
    if (mask & (uint32_t{1} << ((1 << i) - 1))) ++singleton_clique;
  if (singleton_clique >= c) return true;
  if (c == 3) return !kneser_bipartite(ctx, mask);
  std::vector<uint32_t> classes(static_cast<size_t>(c - 1), 0);
  return !kneser_colorable(ctx, mask, c - 1, classes, mask);
}

}  // namespace

int64_t count_hypergraph_classes(int ground_size) {
  require(ground_size >= 1 && ground_size <= 5, Errc::ParameterRange,
          "ground size must be in 1..5");
  const GroundContext ctx(ground_size);
  int64_t total = 0;
  int64_t order = 1;
  for (int i = 2; i <= ground_size; ++i) order *= i;
  for (int cycles : ctx.slot_cycles) total += int64_t{1} << cycles;
  return total / order;
}

int64_t verify_dolnikov_exhaustive(int ground_size) {
  require(ground_size >= 1 && ground_size <= 5, Errc::ParameterRange,
          "ground size must be in 1..5");
  const GroundContext ctx(ground_size);
  const uint64_t mask_count = uint64_t{1} << ctx.slots;
  int64_t classes_checked = 0;
  for (uint64_t m = 0; m < mask_count; ++m) {
    const uint32_t mask = static_cast<uint32_t>(m);
    if (!ctx.is_canonical(mask)) continue;
    ++classes_checked;
    const int cd2 = cd2_of(ctx, mask);
    if (!chi_at_least(ctx, mask, cd2))
      fail(Errc::SearchExhausted,
           "chi(KG(F)) < cd_2(F) for edge mask " + std::to_string(mask) +
               " on ground size " + std::to_string(ground_size));
  }
  if (classes_checked != count_hypergraph_classes(ground_size))
    fail(Errc::SearchExhausted, "canonical enumeration disagrees with the Burnside count");
  return classes_checked;
}

}  // namespace topocut
