#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "mutarc/jones.hpp"
#include "mutarc/kauffman.hpp"
#include "mutarc/montesinos.hpp"
#include "support.hpp"

using namespace mutarc;

namespace {

// |V(-1)| for a knot (integer exponents only).
Integer determinant(const LaurentPoly& v) {
  Integer d = 0;
  for (const auto& t : v.terms()) d += (t.twice_exp / 2) % 2 ? -t.coeff : t.coeff;
  return abs(d);
}

long long crossings_of(const Fraction& f) {
  long long c = 0;
  for (long long x : continued_fraction(f)) c += std::llabs(x);
  return c;
}

}  // namespace

TEST(Montesinos, ContinuedFractions) {
  EXPECT_EQ(continued_fraction(Fraction::make(1, 2)), (std::vector<long long>{2}));
  EXPECT_EQ(continued_fraction(Fraction::make(1, 4)), (std::vector<long long>{4}));
  EXPECT_EQ(continued_fraction(Fraction::make(2, 3)), (std::vector<long long>{2, 1}));
  EXPECT_EQ(continued_fraction(Fraction::make(3, 5)), (std::vector<long long>{2, 1, 1}));
  // Evaluating the expansion gives the fraction back.
  for (long long a = 1; a <= 13; ++a)
    for (long long b = -a + 1; b < a; ++b) {
      if (b == 0 || std::gcd(a, std::llabs(b)) != 1) continue;
      const auto cf = continued_fraction(Fraction::make(b, a));
      long long num = 0, den = 1;  // value of the tail, as num/den
      for (std::size_t i = 0; i < cf.size(); ++i) {
        // x -> 1 / (a_i + x)
        const long long n2 = den, d2 = cf[i] * den + num;
        num = n2;
        den = d2;
      }
      if (den < 0) num = -num, den = -den;
      const long long g = std::gcd(std::llabs(num), den);
      EXPECT_EQ(num / g, b) << b << "/" << a;
      EXPECT_EQ(den / g, a) << b << "/" << a;
    }
}

TEST(Montesinos, FractionValidation) {
  EXPECT_THROW(Fraction::make(1, 0), std::invalid_argument);
  EXPECT_EQ(Fraction::make(2, -4), Fraction::make(-1, 2));
}

TEST(Montesinos, ParseAndRender) {
  const MontesinosSpec s = parse_montesinos("M(2/3,-2/3,2/3,1/2)");
  EXPECT_EQ(s.tangles.size(), 4u);
  EXPECT_EQ(s.e, 0);
  EXPECT_EQ(to_string(s), "M(2/3,-2/3,2/3,1/2)");
  EXPECT_EQ(montesinos_from_json(to_json(s)), s);
  EXPECT_EQ(parse_montesinos("M(-1;1/3,1/3,1/3)").e, -1);
  EXPECT_THROW(parse_montesinos("M()"), ParseError);
  EXPECT_THROW(parse_montesinos("M(1/0)"), ParseError);
}

TEST(Montesinos, FamilyDiagrams) {
  for (int k = 1; k <= 7; ++k)
    for (int v = 0; v < family_size(k); ++v)
      for (int n = 0; n <= 3; ++n) {
        const MontesinosSpec s = family(k, v, n);
        const Diagram d = build_diagram(s);
        long long c = std::llabs(s.e);
        for (const auto& f : s.tangles) c += crossings_of(f);
        EXPECT_EQ(d.crossing_count(), c);
        EXPECT_EQ(d.crossing_count(), family_crossings(k, n));
        EXPECT_EQ(d.components(), 1);
        EXPECT_TRUE(d.oriented());
      }
  EXPECT_EQ(family(1, 0, 0), parse_montesinos("M(2/3,-2/3,2/3,1/2)"));
  EXPECT_EQ(family(7, 2, 0), parse_montesinos("M(2/3,3/5,-2/3,1/2)"));
  EXPECT_EQ(family_name(7, 2), "12n219");
  EXPECT_EQ(family(1, 0, 1), parse_montesinos("M(2/3,-2/3,2/3,1/4)"));
}

TEST(Montesinos, OneTangleClosures) {
  EXPECT_EQ(jones(build_diagram(parse_montesinos("M(1/2)"))), LaurentPoly::constant(1));
  EXPECT_EQ(kauffman_f(build_diagram(parse_montesinos("M(1/2)"))), BiLaurent::constant(1));
  EXPECT_EQ(build_diagram(parse_montesinos("M(2/3)")).components(), 2);
  // M(1;1/2) and M(2;1/2): trefoil and figure-eight.
  EXPECT_EQ(determinant(jones(build_diagram(parse_montesinos("M(1;1/2)")))), 3);
  EXPECT_EQ(jones(build_diagram(parse_montesinos("M(2;1/2)"))), parse_laurent("t^-2 - t^-1 + 1 - t + t^2"));
}

// det M(e; b1/a1, ..., br/ar) = |a1...ar (e + sum bi/ai)| on random knots.
TEST(Montesinos, DeterminantFormula) {
  std::mt19937 rng(4);
  int knots = 0;
  while (knots < 60) {
    MontesinosSpec s;
    s.e = static_cast<int>(rng() % 3) - 1;
    const int r = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < r; ++i) {
      long long a = 2 + rng() % 4, b = 1 + rng() % (a - 1);
      if (std::gcd(a, b) != 1) b = 1;
      if (rng() % 2) b = -b;
      s.tangles.push_back(Fraction::make(b, a));
    }
    const Diagram d = build_diagram(s);
    if (d.components() != 1 || d.crossing_count() > 12) continue;
    ++knots;
    boost::multiprecision::cpp_rational sum = s.e;
    Integer prod = 1;
    for (const auto& f : s.tangles) {
      sum += boost::multiprecision::cpp_rational(f.beta, f.alpha);
      prod *= f.alpha;
    }
    const boost::multiprecision::cpp_rational expected = abs(sum * prod);
    EXPECT_EQ(Integer(numerator(expected)), determinant(jones(d))) << to_string(s);
  }
}

TEST(Montesinos, SpecMutation) {
  const MontesinosSpec s = family(1, 0, 0);
  EXPECT_EQ(mutate_spec(s, 0, 1), family(1, 1, 0));
  EXPECT_EQ(mutate_spec(mutate_spec(s, 1, 2), 1, 2), s);
  EXPECT_THROW(mutate_spec(s, 0, 2), std::invalid_argument);
  EXPECT_THROW(mutate_spec(s, 0, 9), std::out_of_range);
}

TEST(Montesinos, DiagramMutationKeepsInvariants) {
  for (int k : {1, 4, 7}) {
    const MontesinosDiagram md = build_montesinos(family(k, 0, 0));
    std::vector<int> disk;
    for (const auto& region : md.twists)
      if (region.tangle == 1) disk.insert(disk.end(), region.crossings.begin(), region.crossings.end());
    ASSERT_FALSE(disk.empty());
    EXPECT_EQ(tangle_boundary(md.diagram, disk).size(), 4u);
    const BiLaurent f = kauffman_f(md.diagram);
    const LaurentPoly v = jones(md.diagram);
    for (const char* axis : {"ew", "ns", "vertical"}) {
      const Diagram m = mutate_diagram(md.diagram, disk, parse_axis(axis));
      EXPECT_EQ(m.crossing_count(), md.diagram.crossing_count());
      EXPECT_EQ(kauffman_f(m), f) << axis;
      EXPECT_EQ(jones(m), v) << axis;
    }
  }
  EXPECT_THROW(parse_axis("diagonal"), std::invalid_argument);
}

TEST(Montesinos, Classification) {
  const MontesinosSpec a = parse_montesinos("M(2/3,-2/3,2/3,1/2)");
  const MontesinosSpec b = parse_montesinos("M(-2/3,2/3,2/3,1/2)");
  EXPECT_FALSE(classify_equal(a, b));
  EXPECT_TRUE(classify_equal(a, a));
  // Cyclic rotation and reversal give the same knot.
  EXPECT_TRUE(classify_equal(a, parse_montesinos("M(-2/3,2/3,1/2,2/3)")));
  EXPECT_TRUE(classify_equal(b, parse_montesinos("M(1/2,2/3,2/3,-2/3)")));
  EXPECT_TRUE(classify_equal(a, parse_montesinos("M(2/3,-2/3,2/3,1/2)")));
  EXPECT_TRUE(classify_equal(parse_montesinos("M(2/3,1/3,1/2,1/3)"), parse_montesinos("M(1/3,1/2,1/3,2/3)")));
  // Shifting an integer between e and a tangle changes nothing.
  EXPECT_TRUE(classify_equal(parse_montesinos("M(2/3,1/3,1/2,1/3)"), parse_montesinos("M(1;-1/3,1/3,1/2,1/3)")));
  EXPECT_FALSE(classify_equal(parse_montesinos("M(2/3,1/3,1/2,1/3)"), parse_montesinos("M(1;2/3,1/3,1/2,1/3)")));
  // Small Seifert fibred: outside the classification.
  EXPECT_THROW(classify_equal(parse_montesinos("M(2/3,1/3,1/2)"), parse_montesinos("M(1/2,1/3,2/3)")), NotClassifiable);
  EXPECT_THROW(classify_equal(parse_montesinos("M(1/2,1/3)"), parse_montesinos("M(1/3,1/2)")), NotClassifiable);

  for (int k = 1; k <= 7; ++k)
    for (int n = 0; n <= 2; ++n)
      for (int i = 0; i < family_size(k); ++i)
        for (int j = i + 1; j < family_size(k); ++j) EXPECT_FALSE(classify_equal(family(k, i, n), family(k, j, n)));
}
