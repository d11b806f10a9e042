#include <random>

#include <gtest/gtest.h>

#include "mutarc/laurent.hpp"
#include "support.hpp"

using namespace mutarc;

namespace {

BiLaurent random_bilaurent(std::mt19937& rng) {
  std::vector<BiLaurent::Term> terms;
  const int k = static_cast<int>(rng() % 6);
  for (int i = 0; i < k; ++i)
    terms.push_back({static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 7) - 1, Integer(static_cast<int>(rng() % 11) - 5)});
  return BiLaurent::from_terms(terms);
}

LaurentPoly random_laurent(std::mt19937& rng) {
  std::vector<LaurentPoly::Term> terms;
  const int k = static_cast<int>(rng() % 6);
  for (int i = 0; i < k; ++i) terms.push_back({static_cast<int>(rng() % 13) - 6, Integer(static_cast<int>(rng() % 9) - 4)});
  return LaurentPoly::from_terms(terms);
}

}  // namespace

TEST(Laurent, ParsesHandWrittenForms) {
  const BiLaurent p = parse_bilaurent("(z^5 - 3z^3 + z)a^{4} + z^2a^{-3}");
  EXPECT_EQ(p.coeff(4, 5), 1);
  EXPECT_EQ(p.coeff(4, 3), -3);
  EXPECT_EQ(p.coeff(4, 1), 1);
  EXPECT_EQ(p.coeff(-3, 2), 1);
  EXPECT_EQ(p.size(), 4u);

  const LaurentPoly v = parse_laurent("t^{-1/2} - 3t^{1/2}");
  EXPECT_EQ(v.coeff(-1), 1);
  EXPECT_EQ(v.coeff(1), -3);
}

TEST(Laurent, CanonicalRenderingRoundTrips) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const BiLaurent p = random_bilaurent(rng);
    EXPECT_EQ(parse_bilaurent(to_string(p)), p) << to_string(p);
    EXPECT_EQ(bilaurent_from_json(to_json(p)), p);
    const LaurentPoly q = random_laurent(rng);
    EXPECT_EQ(parse_laurent(to_string(q)), q) << to_string(q);
    EXPECT_EQ(laurent_from_json(to_json(q)), q);
  }
  EXPECT_EQ(to_string(parse_laurent("t^(-1/2) - 3*t^(1/2)")), "t^(-1/2) - 3*t^(1/2)");
  EXPECT_EQ(to_string(BiLaurent()), "0");
}

TEST(Laurent, RingAxioms) {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const BiLaurent p = random_bilaurent(rng), q = random_bilaurent(rng), r = random_bilaurent(rng);
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p.a_inverted().a_inverted(), p);
    EXPECT_EQ((p * q).a_inverted(), p.a_inverted() * q.a_inverted());

    const LaurentPoly u = random_laurent(rng), v = random_laurent(rng), w = random_laurent(rng);
    EXPECT_EQ(u * (v + w), u * v + u * w);
    EXPECT_EQ(u.inverted().inverted(), u);
  }
}

TEST(Laurent, ZeroCoefficientsAreDropped) {
  const BiLaurent p = BiLaurent::from_terms({{1, 2, Integer(3)}, {1, 2, Integer(-3)}, {0, 0, Integer(0)}});
  EXPECT_TRUE(p.is_zero());
  const LaurentPoly q = LaurentPoly::from_terms({{2, Integer(1)}, {2, Integer(-1)}});
  EXPECT_TRUE(q.is_zero());
}

TEST(Laurent, CoefficientsAreExactBeyondMachineWords) {
  const BiLaurent p = BiLaurent::monomial(1, 1, 0) + BiLaurent::monomial(1, 0, 1);  // z + a
  const BiLaurent big = pow(p, 80);
  // The middle binomial coefficient C(80, 40) does not fit in 64 bits.
  EXPECT_EQ(big.coeff(40, 40), Integer("107507208733336176461620"));
}

TEST(Laurent, BracketFormPicksTheExtremeTerms) {
  // Lowest a-degree: smallest z there. Highest a-degree: lowest z there.
  const BiLaurent p = parse_bilaurent("z^3*a^-6 + z^5*a^-6 - 2*z^2*a^5 + z^4*a^5 + 7*z");
  const BracketForm b = bracket_form(p);
  EXPECT_EQ(b.low, (BracketTerm{1, 3, -6}));
  EXPECT_EQ(b.high, (BracketTerm{-2, 2, 5}));
  EXPECT_EQ(breadth_a(p), 11);
  EXPECT_EQ(to_string(b), "[z^3*a^-6, -2*z^2*a^5]");

  const BracketForm one = bracket_form(BiLaurent::constant(1));
  EXPECT_EQ(one.low, (BracketTerm{1, 0, 0}));
  EXPECT_EQ(one.high, (BracketTerm{1, 0, 0}));
}

TEST(Laurent, TBracketAndBreadth) {
  const LaurentPoly v = parse_laurent("-2 + 5*t - 7*t^2 + 11*t^3 - 10*t^4 + 10*t^5 - 9*t^6 + 5*t^7 - 3*t^8 + t^9");
  const TBracket b = t_bracket(v);
  EXPECT_EQ(b.low_coeff, -2);
  EXPECT_EQ(b.low_exp, HalfInteger(0));
  EXPECT_EQ(b.high_coeff, 1);
  EXPECT_EQ(b.high_exp, HalfInteger(9));
  EXPECT_EQ(breadth_t(v), HalfInteger(9));
  EXPECT_TRUE(is_alternating_poly(v));
  EXPECT_FALSE(is_alternating_poly(parse_laurent("1 + t")));
  EXPECT_EQ(breadth_t(parse_laurent("t^(-1/2) - t^(5/2)")), HalfInteger(3));
}

TEST(Laurent, ParseErrorsCarryAnOffset) {
  try {
    parse_bilaurent("z^2*a^-3 + + z");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
  }
  EXPECT_THROW(parse_laurent("t^(1/3)"), ParseError);
  EXPECT_THROW(parse_laurent("x^2"), ParseError);
}
