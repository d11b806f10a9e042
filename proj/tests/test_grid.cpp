#include <random>

#include <gtest/gtest.h>

#include "mutarc/grid.hpp"
#include "mutarc/jones.hpp"
#include "mutarc/kauffman.hpp"
#include "support.hpp"

using namespace mutarc;

namespace {

SkeinConfig big() {
  SkeinConfig c;
  c.max_crossings = 4000;
  return c;
}

GridDiagram random_grid(std::mt19937& rng, int n) {
  for (;;) {
    std::vector<int> xs(n), os(n);
    std::iota(xs.begin(), xs.end(), 0);
    std::iota(os.begin(), os.end(), 0);
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(os.begin(), os.end(), rng);
    bool ok = true;
    for (int r = 0; r < n; ++r) ok = ok && xs[r] != os[r];
    if (ok) return GridDiagram::make(xs, os);
  }
}

// |det| of the n x n matrix (-1)^{winding number at the lattice points},
// divided by 2^{n-1}: the knot determinant, computed without a diagram.
Integer grid_determinant(const GridDiagram& g) {
  const int n = g.size;
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int w = 0;
      for (int c = i; c < n; ++c) {
        int rx = 0, ro = 0;
        for (int r = 0; r < n; ++r) {
          if (g.xs[r] == c) rx = r;
          if (g.os[r] == c) ro = r;
        }
        if (std::min(rx, ro) < j && j <= std::max(rx, ro)) ++w;
      }
      m[i][j] = w % 2 ? -1 : 1;
    }
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return abs(m[n - 1][n - 1]) >> (n - 1);
}

Integer determinant(const LaurentPoly& v) {
  Integer d = 0;
  for (const auto& t : v.terms()) d += (t.twice_exp / 2) % 2 ? -t.coeff : t.coeff;
  return abs(d);
}

}  // namespace

TEST(Grid, TextAndJson) {
  const GridDiagram g = parse_grid("grid 5\nX: 2,3,4,5,1\nO: 4,5,1,2,3\n");
  EXPECT_EQ(g.size, 5);
  EXPECT_EQ(g.xs, (std::vector<int>{1, 2, 3, 4, 0}));
  EXPECT_EQ(to_string(g), "grid 5\nX: 2,3,4,5,1\nO: 4,5,1,2,3\n");
  EXPECT_EQ(grid_from_json(to_json(g)), g);
  EXPECT_EQ(to_json(g)["X"], nlohmann::json({2, 3, 4, 5, 1}));
  EXPECT_THROW(parse_grid("grid 3\nX: 1,2,3\nO: 1,3,2\n"), ParseError);  // X and O share a square
  EXPECT_THROW(parse_grid("grid 3\nX: 1,1,3\nO: 2,3,1\n"), ParseError);
  EXPECT_THROW(GridDiagram::make({0, 1}, {1}), std::invalid_argument);
}

TEST(Grid, Trefoil) {
  const GridDiagram g = parse_grid("grid 5\nX: 2,3,4,5,1\nO: 4,5,1,2,3\n");
  EXPECT_EQ(arc_count(g), 5);
  const Diagram d = grid_to_diagram(g);
  EXPECT_EQ(d.components(), 1);
  EXPECT_EQ(jones(d), parse_laurent("t + t^3 - t^4"));
}

TEST(Grid, DeterminantAgreesWithTheDiagram) {
  std::mt19937 rng(2);
  int knots = 0;
  while (knots < 80) {
    const GridDiagram g = random_grid(rng, 4 + static_cast<int>(rng() % 5));
    const Diagram d = grid_to_diagram(g);
    if (d.components() != 1 || d.crossing_count() > 14) continue;
    ++knots;
    EXPECT_EQ(grid_determinant(g), determinant(jones(d))) << to_string(g);
  }
}

TEST(Grid, MovesPreserveTheKnot) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    GridDiagram g = random_grid(rng, 5 + static_cast<int>(rng() % 3));
    const BiLaurent f = kauffman_f(grid_to_diagram(g), big());
    for (int step = 0; step < 6; ++step) {
      const int i = static_cast<int>(rng() % g.size);
      switch (rng() % 4) {
        case 0: g = shift_rows(g, 1 + static_cast<int>(rng() % 3)); break;
        case 1: g = shift_columns(g, -1); break;
        case 2:
          if (rows_commute(g, i)) g = commute_rows(g, i);
          break;
        default:
          if (columns_commute(g, i)) g = commute_columns(g, i);
          break;
      }
      ASSERT_EQ(kauffman_f(grid_to_diagram(g), big()), f);
    }
    for (const Destabilization& d : destabilizations(g)) {
      const GridDiagram h = destabilize(g, d);
      EXPECT_EQ(h.size, g.size - 1);
      EXPECT_EQ(kauffman_f(grid_to_diagram(h), big()), f);
    }
  }
}

TEST(Grid, TransposeAndReflect) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const GridDiagram g = random_grid(rng, 4 + static_cast<int>(rng() % 4));
    const BiLaurent f = kauffman_f(grid_to_diagram(g), big());
    EXPECT_EQ(transpose(transpose(g)), g);
    EXPECT_EQ(kauffman_f(grid_to_diagram(transpose(g)), big()), f);
    EXPECT_EQ(reflect(reflect(g)), g);
    EXPECT_EQ(kauffman_f(grid_to_diagram(reflect(g)), big()), f.a_inverted());
  }
}

TEST(Grid, MontesinosDrawingIsTheSameDiagram) {
  for (int k = 1; k <= 7; ++k)
    for (int v = 0; v < family_size(k); ++v)
      for (int n = 0; n <= 2; ++n) {
        const MontesinosSpec s = family(k, v, n);
        EXPECT_EQ(canonical_code(grid_to_diagram(montesinos_grid(s))), canonical_code(build_diagram(s))) << to_string(s);
      }
  for (const char* s : {"M(1/2)", "M(2/3)", "M(1;1/2,1/3)", "M(-3/7,2/5,1/3)"}) {
    const MontesinosSpec spec = parse_montesinos(s);
    EXPECT_EQ(canonical_code(grid_to_diagram(montesinos_grid(spec))), canonical_code(build_diagram(spec))) << s;
  }
}

TEST(Grid, FullTwistRoundTrip) {
  // templates are stored mirrored; the twist band lives on the reflection
  const GridDiagram g = reflect(family_template(1, 0, 2));
  bool found = false;
  for (int r = 0; r < g.size; ++r)
    for (int c = 0; c < g.size; ++c) {
      if (!band_at(g, r, c)) continue;
      found = true;
      const GridDiagram h = add_full_twist(g, r, c);
      EXPECT_EQ(h.size, g.size + 2);
      EXPECT_EQ(remove_full_twist(h, r, c), g);
    }
  EXPECT_TRUE(found);
  EXPECT_THROW(add_full_twist(parse_grid("grid 5\nX: 2,3,4,5,1\nO: 4,5,1,2,3\n"), 0, 0), std::invalid_argument);
}

TEST(Grid, TemplatesPresentTheFamilies) {
  for (int k = 1; k <= 7; ++k)
    for (int v = 0; v < family_size(k); ++v)
      for (int n = 0; n <= 2; ++n) {
        const GridDiagram g = family_template(k, v, n);
        EXPECT_EQ(arc_count(g), family_crossings(k, n));
        EXPECT_EQ(kauffman_f(grid_to_diagram(g), big()), kauffman_f(build_diagram(family(k, v, n)))) << k << " " << v << " " << n;
      }
  EXPECT_EQ(family_template(1, 3).size, 17);
  EXPECT_EQ(family_template(1, 0, 3), family_template(1, 3));
  EXPECT_THROW(family_template(8, 0), std::out_of_range);
  EXPECT_THROW(family_template(1, 0, -1), DomainError);
}

TEST(Grid, ArcIndexBounds) {
  const ArcIndexBounds b = arc_index_bounds(1, 0, 0);
  EXPECT_EQ(b.lower, 11);
  EXPECT_EQ(b.upper, 11);
  EXPECT_TRUE(b.certified());
  const ArcIndexBounds b5 = arc_index_bounds(5, 0, 0);
  EXPECT_EQ(b5.lower, 12);
  EXPECT_EQ(b5.upper, 12);
  // Lower bounds never exceed the crossing number.
  for (int k = 1; k <= 7; ++k)
    for (int n = 0; n <= 2; ++n) EXPECT_LE(arc_index_bounds(k, 0, n).lower, family_crossings(k, n));
}
