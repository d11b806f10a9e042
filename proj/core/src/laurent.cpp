#include "mutarc/laurent.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

namespace mutarc {

std::string HalfInteger::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

namespace {

template <class TermT, class Less, class Same>
std::vector<TermT> normalize(std::vector<TermT> v, Less less, Same same) {
  std::sort(v.begin(), v.end(), less);
  std::vector<TermT> out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && same(out.back(), t)) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

template <class TermT, class Cmp>
std::vector<TermT> merge(const std::vector<TermT>& p, const std::vector<TermT>& q, int sign, Cmp cmp) {
  std::vector<TermT> out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    int c = i == p.size() ? 1 : j == q.size() ? -1 : cmp(p[i], q[j]);
    if (c < 0) {
      out.push_back(p[i++]);
    } else if (c > 0) {
      out.push_back(q[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      TermT t = p[i++];
      if (sign < 0)
        t.coeff -= q[j++].coeff;
      else
        t.coeff += q[j++].coeff;
      if (t.coeff != 0) out.push_back(std::move(t));
    }
  }
  return out;
}

int cmp_t(const LaurentPoly::Term& x, const LaurentPoly::Term& y) {
  return x.twice_exp < y.twice_exp ? -1 : x.twice_exp > y.twice_exp ? 1 : 0;
}

int cmp_az(const BiLaurent::Term& x, const BiLaurent::Term& y) {
  if (x.a != y.a) return x.a < y.a ? -1 : 1;
  if (x.z != y.z) return x.z < y.z ? -1 : 1;
  return 0;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(const Integer& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, int twice_exp) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({twice_exp, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = normalize(
      std::move(terms), [](const Term& x, const Term& y) { return x.twice_exp < y.twice_exp; },
      [](const Term& x, const Term& y) { return x.twice_exp == y.twice_exp; });
  return p;
}

Integer LaurentPoly::coeff(int twice_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), twice_exp,
                             [](const Term& t, int e) { return t.twice_exp < e; });
  if (it != terms_.end() && it->twice_exp == twice_exp) return it->coeff;
  return 0;
}

int LaurentPoly::min_twice_exp() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no degree");
  return terms_.front().twice_exp;
}

int LaurentPoly::max_twice_exp() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no degree");
  return terms_.back().twice_exp;
}

LaurentPoly LaurentPoly::shifted(int twice_exp) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.twice_exp += twice_exp;
  return p;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly p;
  p.terms_.assign(terms_.rbegin(), terms_.rend());
  for (auto& t : p.terms_) t.twice_exp = -t.twice_exp;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  terms_ = merge(terms_, q.terms_, 1, cmp_t);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  terms_ = merge(terms_, q.terms_, -1, cmp_t);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  std::vector<LaurentPoly::Term> v;
  v.reserve(p.terms().size() * q.terms().size());
  for (const auto& x : p.terms())
    for (const auto& y : q.terms()) v.push_back({x.twice_exp + y.twice_exp, x.coeff * y.coeff});
  return LaurentPoly::from_terms(std::move(v));
}

// ------------------------------------------------------------------ BiLaurent

BiLaurent BiLaurent::constant(const Integer& c) { return monomial(c, 0, 0); }

BiLaurent BiLaurent::monomial(const Integer& c, int z_exp, int a_exp) {
  BiLaurent p;
  if (c != 0) p.terms_.push_back({a_exp, z_exp, c});
  return p;
}

BiLaurent BiLaurent::from_terms(std::vector<Term> terms) {
  BiLaurent p;
  p.terms_ = normalize(
      std::move(terms), [](const Term& x, const Term& y) { return cmp_az(x, y) < 0; },
      [](const Term& x, const Term& y) { return x.a == y.a && x.z == y.z; });
  return p;
}

Integer BiLaurent::coeff(int a_exp, int z_exp) const {
  Term key{a_exp, z_exp, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& x, const Term& y) { return cmp_az(x, y) < 0; });
  if (it != terms_.end() && it->a == a_exp && it->z == z_exp) return it->coeff;
  return 0;
}

int BiLaurent::min_a() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no degree");
  return terms_.front().a;
}

int BiLaurent::max_a() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no degree");
  return terms_.back().a;
}

BiLaurent BiLaurent::scaled(const Integer& c, int z_exp, int a_exp) const {
  if (c == 0) return {};
  BiLaurent p = *this;
  for (auto& t : p.terms_) {
    t.coeff *= c;
    t.z += z_exp;
    t.a += a_exp;
  }
  return p;
}

BiLaurent BiLaurent::shifted(int z_exp, int a_exp) const {
  BiLaurent p = *this;
  for (auto& t : p.terms_) {
    t.z += z_exp;
    t.a += a_exp;
  }
  return p;
}

BiLaurent BiLaurent::a_inverted() const {
  std::vector<Term> v = terms_;
  for (auto& t : v) t.a = -t.a;
  return from_terms(std::move(v));
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& q) {
  terms_ = merge(terms_, q.terms_, 1, cmp_az);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& q) {
  terms_ = merge(terms_, q.terms_, -1, cmp_az);
  return *this;
}

BiLaurent operator*(const BiLaurent& p, const BiLaurent& q) {
  std::vector<BiLaurent::Term> v;
  v.reserve(p.terms().size() * q.terms().size());
  for (const auto& x : p.terms())
    for (const auto& y : q.terms()) v.push_back({x.a + y.a, x.z + y.z, x.coeff * y.coeff});
  return BiLaurent::from_terms(std::move(v));
}

BiLaurent pow(const BiLaurent& p, unsigned k) {
  BiLaurent r = BiLaurent::constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly r = LaurentPoly::constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

// ------------------------------------------------------------------- queries

int breadth_a(const BiLaurent& p) { return p.max_a() - p.min_a(); }

BracketForm bracket_form(const BiLaurent& p) {
  if (p.is_zero()) throw DomainError("bracket form of the zero polynomial");
  const auto& t = p.terms();
  // Terms are sorted by (a, z): the first term has the lowest z in f_m.
  const auto& lo = t.front();
  auto hi = std::lower_bound(t.begin(), t.end(), t.back().a,
                             [](const BiLaurent::Term& x, int a) { return x.a < a; });
  return {{lo.coeff, lo.z, lo.a}, {hi->coeff, hi->z, hi->a}};
}

HalfInteger breadth_t(const LaurentPoly& p) {
  return HalfInteger::from_twice(p.max_twice_exp() - p.min_twice_exp());
}

std::pair<Integer, Integer> extreme_coefficients(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("extreme coefficients of the zero polynomial");
  return {p.terms().front().coeff, p.terms().back().coeff};
}

TBracket t_bracket(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("bracket form of the zero polynomial");
  const auto& lo = p.terms().front();
  const auto& hi = p.terms().back();
  return {lo.coeff, HalfInteger::from_twice(lo.twice_exp), hi.coeff, HalfInteger::from_twice(hi.twice_exp)};
}

bool is_alternating_poly(const LaurentPoly& p) {
  const auto& t = p.terms();
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i].twice_exp != t[i - 1].twice_exp + 2) return false;
    if ((t[i].coeff > 0) == (t[i - 1].coeff > 0)) return false;
  }
  return !t.empty();
}

// ------------------------------------------------------------------ rendering

namespace {

std::string power(const char* var, int e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

std::string join_monomial(const Integer& c, const std::string& mono) {
  if (mono.empty()) return c.str();
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return c.str() + "*" + mono;
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i][0] == '-')
      out += " - " + parts[i].substr(1);
    else
      out += " + " + parts[i];
  }
  return out;
}

std::string za_monomial(int z, int a) {
  std::string zs = power("z", z), as = power("a", a);
  if (zs.empty()) return as;
  if (as.empty()) return zs;
  return zs + "*" + as;
}

std::string t_monomial(int twice) {
  if (twice % 2 == 0) return power("t", twice / 2);
  return "t^(" + std::to_string(twice) + "/2)";
}

}  // namespace

std::string to_string(const BiLaurent& p) {
  std::vector<std::string> parts;
  for (const auto& t : p.terms()) parts.push_back(join_monomial(t.coeff, za_monomial(t.z, t.a)));
  return join_terms(parts);
}

std::string to_string(const LaurentPoly& p) {
  std::vector<std::string> parts;
  for (const auto& t : p.terms()) parts.push_back(join_monomial(t.coeff, t_monomial(t.twice_exp)));
  return join_terms(parts);
}

std::string to_string(const BracketForm& b) {
  auto term = [](const BracketTerm& t) { return join_monomial(t.coeff, za_monomial(t.z, t.a)); };
  return "[" + term(b.low) + ", " + term(b.high) + "]";
}

std::string to_string(const TBracket& b) {
  return "[" + join_monomial(b.low_coeff, t_monomial(b.low_exp.twice())) + ", " +
         join_monomial(b.high_coeff, t_monomial(b.high_exp.twice())) + "]";
}

// -------------------------------------------------------------------- parsing

namespace {

// Polynomial in a, z and t (t exponent doubled) used only while parsing.
using Key = std::array<int, 3>;
using Poly3 = std::map<Key, Integer>;

Poly3 add3(Poly3 p, const Poly3& q, int sign) {
  for (const auto& [k, c] : q) {
    auto& slot = p[k];
    slot += sign > 0 ? c : Integer(-c);
    if (slot == 0) p.erase(k);
  }
  return p;
}

Poly3 mul3(const Poly3& p, const Poly3& q) {
  Poly3 r;
  for (const auto& [k1, c1] : p)
    for (const auto& [k2, c2] : q) {
      Key k{k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2]};
      auto& slot = r[k];
      slot += c1 * c2;
      if (slot == 0) r.erase(k);
    }
  return r;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  Poly3 parse() {
    Poly3 p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '\\'))
      ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly3 expr() {
    Poly3 acc;
    bool first = true;
    while (true) {
      int sign = 1;
      if (eat('-'))
        sign = -1;
      else if (!eat('+') && !first)
        break;
      acc = add3(std::move(acc), term(), sign);
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'a' || c == 'z' || c == 't' || c == '(';
  }

  Poly3 term() {
    Poly3 acc = factor();
    while (true) {
      if (eat('*')) {
        acc = mul3(acc, factor());
      } else if (eat('/')) {
        std::size_t at = pos_;
        Poly3 d = factor();
        if (d.size() != 1 || (d.begin()->second != 1 && d.begin()->second != -1)) {
          pos_ = at;
          fail("division only by a unit monomial");
        }
        Key k = d.begin()->first;
        Poly3 inv{{Key{-k[0], -k[1], -k[2]}, d.begin()->second}};
        acc = mul3(acc, inv);
      } else if (starts_factor()) {
        acc = mul3(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  long long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("exponent too large");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  // Returns the exponent doubled.
  int exponent(bool allow_half) {
    char close = 0;
    if (eat('('))
      close = ')';
    else if (eat('{'))
      close = '}';
    int sign = 1;
    if (eat('-'))
      sign = -1;
    else
      eat('+');
    long long num = integer();
    long long den = 1;
    if (close && eat('/')) den = integer();
    if (close && !eat(close)) fail("unbalanced exponent");
    if (den == 1) return static_cast<int>(sign * 2 * num);
    if (den == 2 && allow_half) return static_cast<int>(sign * num);
    fail("unsupported fractional exponent");
  }

  Poly3 factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    Poly3 base;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      base[Key{0, 0, 0}] = Integer(std::string(s_.substr(start, pos_ - start)));
      if (base.begin()->second == 0) base.clear();
      return base;
    }
    if (c == '(' || c == '{') {
      ++pos_;
      base = expr();
      if (!eat(c == '(' ? ')' : '}')) fail("unbalanced parenthesis");
      if (eat('^')) {
        int e = exponent(false);
        if (e < 0) fail("negative power of a sum");
        Poly3 r{{Key{0, 0, 0}, 1}};
        for (int i = 0; i < e / 2; ++i) r = mul3(r, base);
        return r;
      }
      return base;
    }
    if (c == 'a' || c == 'z' || c == 't') {
      ++pos_;
      int e = 2;
      if (eat('^')) e = exponent(c == 't');
      Key k{0, 0, 0};
      if (c == 'a') k[0] = e / 2;
      if (c == 'z') k[1] = e / 2;
      if (c == 't') k[2] = e;
      return Poly3{{k, 1}};
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiLaurent parse_bilaurent(std::string_view text) {
  Poly3 p = ExprParser(text).parse();
  std::vector<BiLaurent::Term> v;
  for (const auto& [k, c] : p) {
    if (k[2] != 0) throw ParseError("variable t in a polynomial over a and z", 0);
    v.push_back({k[0], k[1], c});
  }
  return BiLaurent::from_terms(std::move(v));
}

LaurentPoly parse_laurent(std::string_view text) {
  Poly3 p = ExprParser(text).parse();
  std::vector<LaurentPoly::Term> v;
  for (const auto& [k, c] : p) {
    if (k[0] != 0 || k[1] != 0) throw ParseError("variables a or z in a polynomial over t", 0);
    v.push_back({k[2], c});
  }
  return LaurentPoly::from_terms(std::move(v));
}

// ----------------------------------------------------------------------- json

nlohmann::json to_json(const BiLaurent& p) {
  auto j = nlohmann::json::array();
  for (const auto& t : p.terms()) j.push_back({{"a", t.a}, {"z", t.z}, {"c", t.coeff.str()}});
  return j;
}

nlohmann::json to_json(const LaurentPoly& p) {
  auto j = nlohmann::json::array();
  for (const auto& t : p.terms()) j.push_back({{"t2", t.twice_exp}, {"c", t.coeff.str()}});
  return j;
}

nlohmann::json to_json(const BracketForm& b) {
  auto term = [](const BracketTerm& t) { return nlohmann::json{{"c", t.coeff.str()}, {"z", t.z}, {"a", t.a}}; };
  return {{"low", term(b.low)}, {"high", term(b.high)}};
}

nlohmann::json to_json(const TBracket& b) {
  return {{"low", {{"c", b.low_coeff.str()}, {"t2", b.low_exp.twice()}}},
          {"high", {{"c", b.high_coeff.str()}, {"t2", b.high_exp.twice()}}}};
}

BiLaurent bilaurent_from_json(const nlohmann::json& j) {
  std::vector<BiLaurent::Term> v;
  for (const auto& t : j) v.push_back({t.at("a").get<int>(), t.at("z").get<int>(), Integer(t.at("c").get<std::string>())});
  return BiLaurent::from_terms(std::move(v));
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  std::vector<LaurentPoly::Term> v;
  for (const auto& t : j) v.push_back({t.at("t2").get<int>(), Integer(t.at("c").get<std::string>())});
  return LaurentPoly::from_terms(std::move(v));
}

}  // namespace mutarc
