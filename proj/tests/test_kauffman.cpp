#include <random>

#include <gtest/gtest.h>

#include "mutarc/jones.hpp"
#include "mutarc/kauffman.hpp"
#include "mutarc/montesinos.hpp"
#include "support.hpp"

using namespace mutarc;

namespace {

const BiLaurent kZ = BiLaurent::monomial(1, 1, 0);
const BiLaurent kA = BiLaurent::monomial(1, 0, 1);

SkeinConfig naive() {
  SkeinConfig c;
  c.memo_enabled = false;
  c.bigon_moves = false;
  c.strategy = SkeinStrategy::FirstBad;
  return c;
}

}  // namespace

TEST(Kauffman, Unknots) {
  EXPECT_EQ(lambda(Diagram()), BiLaurent::constant(1));
  EXPECT_EQ(lambda(parse_pd("U(1)")), BiLaurent::constant(1));
  EXPECT_EQ(kauffman_f(parse_pd("X(1,2,2,1)")), BiLaurent::constant(1));
  EXPECT_EQ(lambda_bracket(Diagram()), (BracketForm{{1, 0, 0}, {1, 0, 0}}));
}

// Skein at the single crossing of a kink: the two kinks are a and a^-1 by
// the curl rule, the smoothings are one circle and two circles. Solving
// a + a^-1 = z (1 + delta) gives delta.
TEST(Kauffman, CircleFactorFromTheSkeinRelation) {
  const Diagram kink = parse_pd("X(1,2,2,1)");
  const Resolution r = resolve(kink, 0);
  const int sign = detect_curl(kink)->sign;
  const BiLaurent lhs = (sign > 0 ? kA : kA.a_inverted()) + (sign > 0 ? kA.a_inverted() : kA);
  EXPECT_EQ(lambda(kink), sign > 0 ? kA : kA.a_inverted());
  EXPECT_EQ(lambda(r.switched), sign > 0 ? kA.a_inverted() : kA);
  ASSERT_EQ(r.horiz.components() + r.vert.components(), 3);
  // lhs = z (1 + delta)  =>  delta = lhs z^-1 - 1
  const BiLaurent delta = lhs.shifted(-1, 0) - BiLaurent::constant(1);
  EXPECT_EQ(delta, loop_value());
  EXPECT_EQ(delta, parse_bilaurent("z^-1*a^-1 - 1 + z^-1*a"));
  EXPECT_EQ(lambda(parse_pd("U(2)")), delta);
  EXPECT_EQ(lambda(parse_pd("U(3)")), delta * delta);
}

TEST(Kauffman, SkeinIdentityOnRandomCorpus) {
  const auto corpus = support::random_corpus(200, 1, 8, 1);
  for (const Diagram& d : corpus)
    for (int c = 0; c < d.crossing_count(); ++c) {
      const Resolution r = resolve(d, c);
      ASSERT_EQ(lambda(d) + lambda(r.switched), kZ * (lambda(r.horiz) + lambda(r.vert))) << to_string(d) << " at " << c;
    }
}

TEST(Kauffman, CurlRule) {
  std::mt19937 rng(8);
  for (const Diagram& d : support::random_corpus(40, 1, 7, 2)) {
    const BiLaurent l = lambda(d);
    const BiLaurent f = kauffman_f(d);
    const int dart = static_cast<int>(rng() % (4 * d.crossing_count()));
    for (int sign : {1, -1}) {
      const Diagram k = add_curl(d, dart, sign);
      EXPECT_EQ(lambda(k), l.shifted(0, sign));
      EXPECT_EQ(kauffman_f(k), f);
    }
  }
}

TEST(Kauffman, InvariantUnderRelabellingAndR2) {
  std::mt19937 rng(12);
  for (const Diagram& d : support::random_corpus(40, 1, 6, 3)) {
    const BiLaurent f = kauffman_f(d);
    const BiLaurent l = lambda(d);
    EXPECT_EQ(kauffman_f(support::relabel(d, rng)), f);
    for (const auto& face : faces(d)) {
      if (face.size() < 2) continue;
      for (bool over : {true, false}) {
        const Diagram r2 = add_r2(d, face[0], face[1], over);
        ASSERT_EQ(r2.crossing_count(), d.crossing_count() + 2);
        EXPECT_EQ(lambda(r2), l);
        EXPECT_EQ(kauffman_f(r2), f);
      }
    }
  }
}

TEST(Kauffman, MirrorInvertsA) {
  const Diagram t = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)");
  EXPECT_EQ(kauffman_f(mirror(t)), kauffman_f(t).a_inverted());
  EXPECT_NE(kauffman_f(t), kauffman_f(t).a_inverted());
  for (const Diagram& d : support::random_corpus(30, 1, 8, 4)) EXPECT_EQ(kauffman_f(mirror(d)), kauffman_f(d).a_inverted());
}

// F(-t^{3/4}, t^{1/4} + t^{-1/4}) = V(t), with V from an independent state sum.
TEST(Kauffman, SpecialisesToTheJonesPolynomial) {
  for (const Diagram& d : support::random_corpus(100, 1, 8, 5)) {
    const int m = d.components();
    EXPECT_EQ(support::specialise_f(kauffman_f(d), m), support::times_z_power(support::bracket_jones(d), m)) << to_string(d);
  }
}

TEST(Kauffman, NaiveAndMemoisedAgree) {
  auto shared = std::make_shared<SkeinCache>();
  SkeinConfig cached;
  cached.cache = shared;
  for (const Diagram& d : support::random_corpus(120, 1, 10, 6)) {
    const BiLaurent expected = lambda(d, naive());
    EXPECT_EQ(lambda(d), expected);
    EXPECT_EQ(lambda(d, cached), expected);
    SkeinConfig first = SkeinConfig{};
    first.strategy = SkeinStrategy::FirstBad;
    EXPECT_EQ(lambda(d, first), expected);
  }
  EXPECT_GT(shared->size(), 0u);
}

TEST(Kauffman, ThreadCountDoesNotMatter) {
  SkeinConfig four;
  four.threads = 4;
  for (int k : {1, 5}) {
    const Diagram d = build_diagram(family(k, 0, 2));
    EXPECT_EQ(lambda(d, four), lambda(d));
  }
}

TEST(Kauffman, BudgetIsEnforced) {
  SkeinConfig small;
  small.max_crossings = 5;
  EXPECT_THROW(lambda(build_diagram(family(1, 0, 0)), small), BudgetError);
}

TEST(Kauffman, MutantsShareF) {
  for (int k = 1; k <= 7; ++k)
    for (int n = 0; n <= 2; ++n) {
      const BiLaurent f = kauffman_f(build_diagram(family(k, 0, n)));
      for (int v = 1; v < family_size(k); ++v) EXPECT_EQ(kauffman_f(build_diagram(family(k, v, n))), f) << k << " " << v << " " << n;
    }
}

TEST(Kauffman, TwistFamilyBrackets) {
  EXPECT_EQ(to_string(lambda_bracket(build_diagram(family(1, 0, 1)))), "[z^3*a^-6, -2*z^2*a^5]");
  EXPECT_EQ(to_string(lambda_bracket(build_diagram(family(7, 0, 1)))), "[z^3*a^-7, 2*z*a^5]");
}
