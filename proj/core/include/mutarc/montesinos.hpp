#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mutarc/diagram.hpp"

namespace mutarc {

struct Fraction {
  long long beta = 0;
  long long alpha = 1;

  // Reduces to lowest terms with alpha > 0; throws on alpha == 0.
  static Fraction make(long long beta, long long alpha);
  bool operator==(const Fraction&) const = default;
};

struct MontesinosSpec {
  long long e = 0;
  std::vector<Fraction> tangles;
  bool operator==(const MontesinosSpec&) const = default;
};

class NotClassifiable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A run of twists built as one block. Crossings are listed in the order they
// were added: top to bottom for vertical blocks, left to right otherwise.
struct TwistRegion {
  std::vector<int> crossings;
  int handedness = 1;  // +1 for twists of a positive fraction
  bool vertical = true;
  int tangle = -1;  // index into spec.tangles, or -1 for the e twists
};

struct MontesinosDiagram {
  Diagram diagram;
  std::vector<TwistRegion> twists;
};

// [a1, ..., ak] with beta/alpha = 1/(ak + 1/(a(k-1) + ... + 1/a1)). The last
// block is vertical, blocks alternate going inwards. Entries carry the sign
// of the fraction; a trailing 0 marks |beta/alpha| >= 1.
std::vector<long long> continued_fraction(const Fraction& f);

MontesinosDiagram build_montesinos(const MontesinosSpec& spec);
Diagram build_diagram(const MontesinosSpec& spec);

// The smoothing of a twist-region crossing that keeps the twist going
// (leaving one crossing fewer) and the one that cuts it into curls.
Smoothing along_smoothing(const TwistRegion& region);
Smoothing across_smoothing(const TwistRegion& region);

// The seven twist families, numbered 1..7. The last tangle is 1/(2n + offset).
int family_size(int theorem);
int family_twist_offset(int theorem);
int family_crossings(int theorem, int n);
MontesinosSpec family(int theorem, int variant, int n);
// Knot table names of the n = 0 members, e.g. "11n71*".
std::string family_name(int theorem, int variant);

MontesinosSpec mutate_spec(const MontesinosSpec& spec, int i, int j);

enum class MutationAxis { EastWest, NorthSouth, Vertical };
MutationAxis parse_axis(std::string_view name);

// Boundary points of a 2-string tangle region, as the inside darts of the
// four edges leaving it, in cyclic order starting from the smallest.
std::vector<int> tangle_boundary(const Diagram& d, const std::vector<int>& disk);
Diagram mutate_diagram(const Diagram& d, const std::vector<int>& disk, MutationAxis axis);

// Equality as unoriented knots, by the classification of Montesinos links
// with r >= 3 and sum 1/alpha_i <= r - 2 (up to dihedral symmetry of the
// tangle sequence and moving integers into e). Throws NotClassifiable
// outside that range.
bool classify_equal(const MontesinosSpec& s1, const MontesinosSpec& s2);

MontesinosSpec parse_montesinos(std::string_view text);
std::string to_string(const MontesinosSpec& spec);
nlohmann::json to_json(const MontesinosSpec& spec);
MontesinosSpec montesinos_from_json(const nlohmann::json& j);

}  // namespace mutarc
