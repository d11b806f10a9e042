#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace mutarc {

using Integer = boost::multiprecision::cpp_int;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A number that is a multiple of 1/2, stored doubled.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr explicit HalfInteger(int whole) : twice_(2 * whole) {}
  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  std::string str() const;

  constexpr auto operator<=>(const HalfInteger&) const = default;
  friend constexpr HalfInteger operator+(HalfInteger x, HalfInteger y) { return from_twice(x.twice_ + y.twice_); }
  friend constexpr HalfInteger operator-(HalfInteger x, HalfInteger y) { return from_twice(x.twice_ - y.twice_); }

 private:
  int twice_ = 0;
};

// Laurent polynomial in t; exponents are half-integers kept doubled.
class LaurentPoly {
 public:
  struct Term {
    int twice_exp;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, int twice_exp);
  // Terms need not be sorted or merged; zero coefficients are dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int twice_exp) const;
  int min_twice_exp() const;
  int max_twice_exp() const;

  LaurentPoly shifted(int twice_exp) const;
  LaurentPoly scaled(const Integer& c) const;
  // t -> t^{-1}
  LaurentPoly inverted() const;

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator-(const LaurentPoly& p) { return p.scaled(-1); }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  bool operator==(const LaurentPoly&) const = default;

 private:
  std::vector<Term> terms_;
};

// Laurent polynomial in a and z, terms ordered by (a, z).
class BiLaurent {
 public:
  struct Term {
    int a;
    int z;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  BiLaurent() = default;
  static BiLaurent constant(const Integer& c);
  static BiLaurent monomial(const Integer& c, int z_exp, int a_exp);
  static BiLaurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coeff(int a_exp, int z_exp) const;
  int min_a() const;
  int max_a() const;

  // p * c z^j a^i
  BiLaurent scaled(const Integer& c, int z_exp, int a_exp) const;
  BiLaurent shifted(int z_exp, int a_exp) const;
  // a -> a^{-1}
  BiLaurent a_inverted() const;

  BiLaurent& operator+=(const BiLaurent& q);
  BiLaurent& operator-=(const BiLaurent& q);
  friend BiLaurent operator+(BiLaurent p, const BiLaurent& q) { return p += q; }
  friend BiLaurent operator-(BiLaurent p, const BiLaurent& q) { return p -= q; }
  friend BiLaurent operator-(const BiLaurent& p) { return p.scaled(-1, 0, 0); }
  friend BiLaurent operator*(const BiLaurent& p, const BiLaurent& q);
  bool operator==(const BiLaurent&) const = default;

 private:
  std::vector<Term> terms_;
};

BiLaurent pow(const BiLaurent& p, unsigned k);
LaurentPoly pow(const LaurentPoly& p, unsigned k);

struct BracketTerm {
  Integer coeff;
  int z;
  int a;
  bool operator==(const BracketTerm&) const = default;
};

struct BracketForm {
  BracketTerm low;
  BracketTerm high;
  bool operator==(const BracketForm&) const = default;
};

// [c_m t^m, c_n t^n] for a single-variable polynomial.
struct TBracket {
  Integer low_coeff;
  HalfInteger low_exp;
  Integer high_coeff;
  HalfInteger high_exp;
  bool operator==(const TBracket&) const = default;
};

int breadth_a(const BiLaurent& p);
BracketForm bracket_form(const BiLaurent& p);
HalfInteger breadth_t(const LaurentPoly& p);
std::pair<Integer, Integer> extreme_coefficients(const LaurentPoly& p);
TBracket t_bracket(const LaurentPoly& p);
bool is_alternating_poly(const LaurentPoly& p);

std::string to_string(const BiLaurent& p);
std::string to_string(const LaurentPoly& p);
std::string to_string(const BracketForm& b);
std::string to_string(const TBracket& b);

// Accepts the canonical rendering and ordinary hand-written forms such as
// "(z^5 - 3z^3 + z)a^{4} + z^2a^{-3}" or "t^{-1/2} - 3t^{1/2}".
BiLaurent parse_bilaurent(std::string_view text);
LaurentPoly parse_laurent(std::string_view text);

nlohmann::json to_json(const BiLaurent& p);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const BracketForm& b);
nlohmann::json to_json(const TBracket& b);
BiLaurent bilaurent_from_json(const nlohmann::json& j);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace mutarc
