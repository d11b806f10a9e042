#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mutarc {

// Combinatorial 4-valent plane map. Every crossing owns four darts
// 4*x + s, s = 0..3 counterclockwise; slots 0 and 2 carry the under-strand.
// mate[] pairs the two ends of each edge.
struct PlanarMap {
  std::vector<int> mate;
  int free_loops = 0;

  int crossings() const { return static_cast<int>(mate.size() / 4); }
  bool operator==(const PlanarMap&) const = default;
};

constexpr int crossing_of(int dart) { return dart >> 2; }
constexpr int slot_of(int dart) { return dart & 3; }
constexpr int dart_of(int crossing, int slot) { return (crossing << 2) | (slot & 3); }
constexpr int through(int dart) { return dart ^ 2; }
constexpr int next_slot(int dart) { return (dart & ~3) | ((dart + 1) & 3); }
constexpr int prev_slot(int dart) { return (dart & ~3) | ((dart + 3) & 3); }

namespace pmap {

// Removes every crossing x whose darts have internal[4x+s] >= 0; internal
// pairs darts of the removed crossings (a smoothing or the through-strands).
// Arcs are re-joined through the removed crossings, closed arcs become free
// loops. old_to_new (optional) receives the new index of each kept dart.
PlanarMap reduce(const PlanarMap& m, const std::vector<int>& internal, std::vector<int>* old_to_new = nullptr);

// Crossing switch: the over- and under-strands exchange roles.
PlanarMap switched(const PlanarMap& m, int crossing);

// Crossing sets of the connected pieces (free loops excluded).
std::vector<std::vector<int>> connected_parts(const PlanarMap& m);

// The piece spanned by the given crossings (which must be closed under
// adjacency), renumbered in the given order, no free loops.
PlanarMap extract(const PlanarMap& m, const std::vector<int>& crossings);

int face_count(const PlanarMap& m);

// Minimal rooted code of a connected map with at least one crossing.
std::vector<std::uint16_t> connected_code(const PlanarMap& m);

// Canonical code of an arbitrary map: sorted piece codes plus free loops.
std::string canonical_code(const PlanarMap& m);

}  // namespace pmap
}  // namespace mutarc
