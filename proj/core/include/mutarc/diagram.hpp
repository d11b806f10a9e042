#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mutarc/laurent.hpp"
#include "mutarc/planar_map.hpp"

namespace mutarc {

// A link diagram in PD form. X(a,b,c,d) lists edge labels counterclockwise
// from the incoming under-strand. Labels of every stored diagram run
// consecutively along each component, so an orientation is always
// available; oriented() tells whether it is meaningful or arbitrary.
class Diagram {
 public:
  using Crossing = std::array<int, 4>;

  Diagram();  // the crossingless unknot

  // Validates labels and planarity. Components whose labels are not
  // consecutive make the whole diagram unoriented (it is relabelled).
  // A component that is never under-crossed and has two edges reads the
  // same both ways; hint (indexed like direction()) settles it, otherwise
  // the first dart of the component is taken as incoming.
  static Diagram from_pd(const std::vector<Crossing>& crossings, int free_loops = 0, const std::vector<int>& hint = {});

  // direction[d] = +1 if the strand enters its crossing at dart d, -1 if it
  // leaves there, 0 if unknown. The first dart of each component (in index
  // order) with a known direction fixes that component's orientation.
  static Diagram from_map(const PlanarMap& map, const std::vector<int>& direction, bool oriented);

  const std::vector<Crossing>& crossings() const { return pd_; }
  int crossing_count() const { return static_cast<int>(pd_.size()); }
  int free_loops() const { return map_.free_loops; }
  bool oriented() const { return oriented_; }
  int components() const { return components_; }
  const PlanarMap& map() const { return map_; }

  // +1 if the (stored) orientation enters the crossing at this dart.
  int direction(int dart) const;
  std::vector<int> directions() const;
  // Sign of a crossing under the stored orientation (requires oriented()).
  int sign(int crossing) const;
  // Component index of every dart; free loops are not listed.
  std::vector<int> dart_components() const;

  Diagram with_orientation_flag(bool oriented) const;

  bool operator==(const Diagram& o) const { return pd_ == o.pd_ && map_ == o.map_ && oriented_ == o.oriented_; }

 private:
  static Diagram build(std::vector<Crossing> pd, int free_loops, bool oriented, const std::vector<int>& hint = {});

  std::vector<Crossing> pd_;
  PlanarMap map_;
  std::vector<int> dir_;
  std::vector<int> comp_;
  int components_ = 1;
  bool oriented_ = true;
};

enum class Smoothing {
  Horizontal,  // joins slots 0-1 and 2-3
  Vertical,    // joins slots 0-3 and 1-2
};

struct Resolution {
  Diagram switched;
  Diagram horiz;
  Diagram vert;
};

struct Curl {
  int crossing;
  int sign;
};

Diagram parse_pd(std::string_view text);
std::string to_string(const Diagram& d);
nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

int writhe(const Diagram& d);
Diagram mirror(const Diagram& d);
Diagram switch_crossing(const Diagram& d, int crossing);
Diagram smooth(const Diagram& d, int crossing, Smoothing kind);
// Which smoothing of this crossing respects the stored orientation.
Smoothing oriented_smoothing(const Diagram& d, int crossing);
Resolution resolve(const Diagram& d, int crossing);

std::optional<Curl> detect_curl(const Diagram& d);
Diagram remove_curl(const Diagram& d, int crossing);
// Inserts a kink of the given sign on the edge leaving the given dart.
Diagram add_curl(const Diagram& d, int dart, int sign);
// Pushes a finger of the edge at dart e1 across the edge at dart e2. Both
// darts must lie on one face, read with the face on the left. The new pair
// of crossings has the finger on top when finger_over is set.
Diagram add_r2(const Diagram& d, int e1, int e2, bool finger_over);

// Faces as dart cycles (each dart traversed with its face on the left).
std::vector<std::vector<int>> faces(const Diagram& d);

std::string canonical_code(const Diagram& d);

}  // namespace mutarc
