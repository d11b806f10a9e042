#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mutarc/diagram.hpp"
#include "mutarc/kauffman.hpp"
#include "mutarc/montesinos.hpp"

namespace mutarc {

// n x n grid; row r holds an X in column xs[r] and an O in column os[r]
// (0-based). Row 0 is the bottom row, column 0 the leftmost column.
struct GridDiagram {
  int size = 0;
  std::vector<int> xs;
  std::vector<int> os;

  // Throws std::invalid_argument unless xs and os are permutations with
  // xs[r] != os[r] for every row.
  static GridDiagram make(std::vector<int> xs, std::vector<int> os);
  bool operator==(const GridDiagram&) const = default;
};

int arc_count(const GridDiagram& g);

// Vertical segments cross over horizontal ones. Horizontal segments run
// from O to X, vertical ones from X to O.
Diagram grid_to_diagram(const GridDiagram& g);

// Reflection in the anti-diagonal: rows become columns.
GridDiagram transpose(const GridDiagram& g);

// A grid presenting build_diagram(spec), drawn crossing by crossing.
GridDiagram montesinos_grid(const MontesinosSpec& spec);

// ---- grid moves (each preserves the link type)
GridDiagram shift_rows(const GridDiagram& g, int k);
GridDiagram shift_columns(const GridDiagram& g, int k);
// Rows r and r+1 (cyclically) may be exchanged when their segments do not interleave.
bool rows_commute(const GridDiagram& g, int r);
GridDiagram commute_rows(const GridDiagram& g, int r);
bool columns_commute(const GridDiagram& g, int c);
GridDiagram commute_columns(const GridDiagram& g, int c);

struct Destabilization {
  int row;     // the row removed
  int column;  // the column removed
};
std::vector<Destabilization> destabilizations(const GridDiagram& g);
GridDiagram destabilize(const GridDiagram& g, const Destabilization& d);

// A twist band at (row, col): row `row` spans columns col..col+2, the row
// above spans col+1..col+3, and the two middle columns run down past the
// band and up past it respectively. Such a band carries two crossings of a
// twist region; add_full_twist inserts one more period of it (two rows, two
// columns, two crossings) and remove_full_twist undoes that.
bool band_at(const GridDiagram& g, int row, int col);
GridDiagram add_full_twist(const GridDiagram& g, int row, int col);
GridDiagram remove_full_twist(const GridDiagram& g, int row, int col);

// Reflection in a vertical line; presents the mirror image.
GridDiagram reflect(const GridDiagram& g);

// Arc presentations of the theorem families: a stored n = 0 grid for each
// mutant, widened by one full twist per step of n.
GridDiagram family_template(int theorem, int variant, int n);
GridDiagram family_template(int theorem, int n);

struct ArcIndexBounds {
  int lower = 0;  // breadth_a(F) + 2
  int upper = 0;  // arcs of the template
  MontesinosSpec knot;
  bool certified() const { return lower == upper; }
};

ArcIndexBounds arc_index_bounds(int theorem, int variant, int n, const SkeinConfig& cfg = {});

GridDiagram parse_grid(std::string_view text);
std::string to_string(const GridDiagram& g);
nlohmann::json to_json(const GridDiagram& g);
GridDiagram grid_from_json(const nlohmann::json& j);

}  // namespace mutarc
