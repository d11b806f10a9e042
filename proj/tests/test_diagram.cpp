#include <random>
#include <set>

#include <gtest/gtest.h>

#include "mutarc/diagram.hpp"
#include "support.hpp"

using namespace mutarc;

namespace {

const char* kTrefoil = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";

}  // namespace

TEST(Diagram, ParseAndRender) {
  const Diagram t = parse_pd(kTrefoil);
  EXPECT_EQ(t.crossing_count(), 3);
  EXPECT_EQ(t.components(), 1);
  EXPECT_TRUE(t.oriented());
  EXPECT_EQ(to_string(t), kTrefoil);
  EXPECT_EQ(parse_pd(to_string(t)), t);
  EXPECT_EQ(diagram_from_json(to_json(t)), t);

  const Diagram u = parse_pd("U(2)");
  EXPECT_EQ(u.crossing_count(), 0);
  EXPECT_EQ(u.free_loops(), 2);
}

TEST(Diagram, RejectsMalformedCodes) {
  EXPECT_THROW(parse_pd("X(1,2,3)"), ParseError);
  EXPECT_THROW(parse_pd("X(1,2,3,4)"), ParseError);  // labels used once
  EXPECT_THROW(parse_pd("Y(1,1,2,2)"), ParseError);
}

TEST(Diagram, WritheAndMirror) {
  const Diagram t = parse_pd(kTrefoil);
  EXPECT_EQ(writhe(t), 3);
  EXPECT_EQ(writhe(mirror(t)), -3);
  EXPECT_EQ(mirror(mirror(t)), t);
  for (const Diagram& d : support::random_corpus(50, 1, 8, 17)) {
    EXPECT_EQ(mirror(mirror(d)), d);
    EXPECT_EQ(writhe(mirror(d)), -writhe(d));
  }
}

TEST(Diagram, ResolvingACurl) {
  const Diagram kink = parse_pd("X(1,2,2,1)");
  const Resolution r = resolve(kink, 0);
  std::multiset<int> circles{r.horiz.components(), r.vert.components()};
  EXPECT_EQ(circles, (std::multiset<int>{1, 2}));
  EXPECT_EQ(r.horiz.crossing_count(), 0);
  EXPECT_EQ(r.vert.crossing_count(), 0);
}

TEST(Diagram, SmoothingChangesComponentsByOne) {
  for (const Diagram& d : support::random_corpus(60, 1, 8, 23))
    for (int c = 0; c < d.crossing_count(); ++c) {
      const Resolution r = resolve(d, c);
      EXPECT_EQ(r.switched.crossing_count(), d.crossing_count());
      EXPECT_EQ(r.horiz.crossing_count(), d.crossing_count() - 1);
      // The oriented smoothing splits a self-crossing and merges two
      // components; the other one keeps a self-crossing's component count.
      const Smoothing o = oriented_smoothing(d, c);
      const Diagram& along = o == Smoothing::Horizontal ? r.horiz : r.vert;
      const Diagram& across = o == Smoothing::Horizontal ? r.vert : r.horiz;
      const auto comp = d.dart_components();
      const bool self = comp[4 * c] == comp[4 * c + 1];
      EXPECT_EQ(along.components() - d.components(), self ? 1 : -1);
      EXPECT_EQ(across.components() - d.components(), self ? 0 : -1);
      EXPECT_TRUE(along.oriented());
      EXPECT_FALSE(across.oriented());
    }
}

TEST(Diagram, CurlDetection) {
  auto kink = detect_curl(parse_pd("X(1,2,2,1)"));
  ASSERT_TRUE(kink.has_value());
  EXPECT_EQ(kink->crossing, 0);
  EXPECT_FALSE(detect_curl(parse_pd(kTrefoil)).has_value());

  const Diagram t = parse_pd(kTrefoil);
  for (int dart = 0; dart < 12; ++dart)
    for (int sign : {1, -1}) {
      const Diagram k = add_curl(t, dart, sign);
      auto c = detect_curl(k);
      ASSERT_TRUE(c.has_value());
      EXPECT_EQ(c->sign, sign);
      EXPECT_EQ(canonical_code(remove_curl(k, c->crossing)), canonical_code(t));
    }
}

TEST(Diagram, CanonicalCodeIgnoresLabels) {
  std::mt19937 rng(99);
  const auto corpus = support::random_corpus(10, 3, 8, 31);
  for (const Diagram& d : corpus) {
    const std::string code = canonical_code(d);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(canonical_code(support::scramble(d, rng)), code);
  }
}

TEST(Diagram, CanonicalCodeSeparates) {
  const Diagram t = parse_pd(kTrefoil);
  EXPECT_NE(canonical_code(t), canonical_code(mirror(t)));
  EXPECT_NE(canonical_code(parse_pd("U(1)")), canonical_code(parse_pd("U(2)")));
}

TEST(Diagram, FacesCoverEveryDartOnce) {
  for (const Diagram& d : support::random_corpus(40, 1, 8, 41)) {
    std::vector<int> seen(4 * d.crossing_count(), 0);
    int count = 0;
    for (const auto& f : faces(d))
      for (int x : f) ++seen[x], ++count;
    EXPECT_EQ(count, 4 * d.crossing_count());
    for (int s : seen) EXPECT_EQ(s, 1);
    // Euler: V - E + F = 2 for a connected diagram.
    if (d.components() == 1 && d.free_loops() == 0) EXPECT_EQ(static_cast<int>(faces(d).size()), d.crossing_count() + 2);
  }
}
