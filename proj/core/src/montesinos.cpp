#include "mutarc/montesinos.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace mutarc {

using Rational = boost::multiprecision::cpp_rational;

Fraction Fraction::make(long long beta, long long alpha) {
  if (alpha == 0) throw std::invalid_argument("fraction with zero denominator");
  if (alpha < 0) beta = -beta, alpha = -alpha;
  long long g = std::gcd(beta < 0 ? -beta : beta, alpha);
  if (g > 1) beta /= g, alpha /= g;
  return {beta, alpha};
}

std::vector<long long> continued_fraction(const Fraction& f) {
  // 1/(p/q) = a + r with |r| < 1; the expansion of r sits inside a.
  std::vector<long long> outer;
  long long p = f.beta, q = f.alpha;
  while (p != 0) {
    long long a = q / p;
    outer.push_back(a);
    long long rp = q - a * p;
    q = p, p = rp;
    if (q < 0) p = -p, q = -q;
  }
  std::reverse(outer.begin(), outer.end());
  return outer;
}

namespace {

enum Arm { NW, NE, SE, SW };

class Builder {
 public:
  struct Tangle {
    std::array<int, 4> port;  // edge ids at NW, NE, SE, SW
  };

  Tangle zero() {
    int a = edge(), b = edge();
    return {{a, a, b, b}};
  }
  Tangle infinity() {
    int a = edge(), b = edge();
    return {{a, b, b, a}};
  }

  // Twists the east ends (horizontal) or the south ends (vertical) n times.
  void twist(Tangle& t, long long n, bool vertical, TwistRegion& region) {
    int look = n > 0 ? 1 : -1;
    for (long long i = 0; i < (n > 0 ? n : -n); ++i) {
      auto arms = crossing(look);
      region.crossings.push_back(static_cast<int>(slots_.size()) - 1);
      if (vertical) {
        join(t.port[SW], arms[NW]);
        join(t.port[SE], arms[NE]);
        t.port[SW] = arms[SW];
        t.port[SE] = arms[SE];
      } else {
        join(t.port[NE], arms[NW]);
        join(t.port[SE], arms[SW]);
        t.port[NE] = arms[NE];
        t.port[SE] = arms[SE];
      }
    }
  }

  Tangle sum(const Tangle& a, const Tangle& b) {
    join(a.port[NE], b.port[NW]);
    join(a.port[SE], b.port[SW]);
    return {{a.port[NW], b.port[NE], b.port[SE], a.port[SW]}};
  }

  void numerator(const Tangle& t) {
    join(t.port[NW], t.port[NE]);
    join(t.port[SW], t.port[SE]);
  }

  PlanarMap finish() {
    const int c = static_cast<int>(slots_.size());
    PlanarMap m;
    m.mate.assign(4 * c, -1);
    std::vector<int> first(parent_.size(), -1);
    std::vector<char> used(parent_.size(), 0);
    for (int x = 0; x < c; ++x)
      for (int s = 0; s < 4; ++s) {
        int r = find(slots_[x][s]);
        used[r] = 1;
        int d = dart_of(x, s);
        if (first[r] < 0) {
          first[r] = d;
        } else {
          m.mate[d] = first[r];
          m.mate[first[r]] = d;
        }
      }
    for (std::size_t e = 0; e < parent_.size(); ++e)
      if (find(static_cast<int>(e)) == static_cast<int>(e) && !used[e]) ++m.free_loops;
    return m;
  }

 private:
  int edge() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent_[a] = b;
  }
  // A crossing of the given look: +1 has the over-strand on the SW-NE
  // diagonal. Slots run counterclockwise from an under arm.
  std::array<int, 4> crossing(int look) {
    std::array<int, 4> arms{edge(), edge(), edge(), edge()};
    if (look > 0)
      slots_.push_back({arms[NW], arms[SW], arms[SE], arms[NE]});
    else
      slots_.push_back({arms[SW], arms[SE], arms[NE], arms[NW]});
    return arms;
  }

  std::vector<int> parent_;
  std::vector<std::array<int, 4>> slots_;
};

Builder::Tangle rational(Builder& b, const Fraction& f, int index, std::vector<TwistRegion>& regions) {
  std::vector<long long> cf = continued_fraction(f);
  const int k = static_cast<int>(cf.size());
  // Block i (0-based from the inside) is vertical iff k-1-i is even.
  bool first_vertical = (k - 1) % 2 == 0;
  Builder::Tangle t = first_vertical ? b.infinity() : b.zero();
  for (int i = 0; i < k; ++i) {
    if (cf[i] == 0) continue;
    TwistRegion region;
    region.vertical = (k - 1 - i) % 2 == 0;
    region.handedness = cf[i] > 0 ? 1 : -1;
    region.tangle = index;
    b.twist(t, cf[i], region.vertical, region);
    regions.push_back(std::move(region));
  }
  return t;
}

}  // namespace

MontesinosDiagram build_montesinos(const MontesinosSpec& spec) {
  if (spec.tangles.empty()) throw std::invalid_argument("Montesinos spec needs at least one tangle");
  Builder b;
  MontesinosDiagram out;
  Builder::Tangle total = rational(b, spec.tangles[0], 0, out.twists);
  for (std::size_t i = 1; i < spec.tangles.size(); ++i)
    total = b.sum(total, rational(b, spec.tangles[i], static_cast<int>(i), out.twists));
  if (spec.e != 0) {
    TwistRegion region;
    region.vertical = false;
    region.handedness = spec.e > 0 ? 1 : -1;
    b.twist(total, spec.e, false, region);
    out.twists.push_back(std::move(region));
  }
  b.numerator(total);
  out.diagram = Diagram::from_map(b.finish(), {}, true);
  return out;
}

Diagram build_diagram(const MontesinosSpec& spec) { return build_montesinos(spec).diagram; }

Smoothing along_smoothing(const TwistRegion& region) {
  // Look +1 slots are NW,SW,SE,NE: Horizontal pairs NW-SW and SE-NE.
  // Look -1 slots are SW,SE,NE,NW: Horizontal pairs SW-SE and NE-NW.
  bool horizontal_is_vertical_pair = region.handedness > 0;
  bool keep_vertical = region.vertical;
  return horizontal_is_vertical_pair == keep_vertical ? Smoothing::Horizontal : Smoothing::Vertical;
}

Smoothing across_smoothing(const TwistRegion& region) {
  return along_smoothing(region) == Smoothing::Horizontal ? Smoothing::Vertical : Smoothing::Horizontal;
}

// ------------------------------------------------------------------ families

namespace {

struct FamilyRow {
  std::vector<std::vector<std::pair<long long, long long>>> variants;
  std::vector<std::string> names;
  int offset;
  int base_crossings;
};

const std::vector<FamilyRow>& families() {
  static const std::vector<FamilyRow> rows = {
      {{{{2, 3}, {-2, 3}, {2, 3}}, {{-2, 3}, {2, 3}, {2, 3}}}, {"11n71*", "11n75"}, 2, 11},
      {{{{1, 2}, {2, 3}, {-2, 3}}, {{1, 2}, {-2, 3}, {2, 3}}}, {"11n76*", "11n78"}, 3, 11},
      {{{{-2, 3}, {2, 3}, {2, 3}}, {{2, 3}, {-2, 3}, {2, 3}}}, {"12n553", "12n556*"}, 3, 12},
      {{{{-3, 5}, {2, 3}, {2, 3}}, {{2, 3}, {-3, 5}, {2, 3}}}, {"12n55*", "12n223*"}, 2, 12},
      {{{{-3, 5}, {-2, 3}, {-2, 3}}, {{-2, 3}, {-3, 5}, {-2, 3}}}, {"12n58*", "12n222"}, 2, 12},
      {{{{1, 2}, {3, 5}, {-2, 3}}, {{1, 2}, {-2, 3}, {3, 5}}}, {"12n64", "12n261"}, 3, 12},
      {{{{3, 5}, {-2, 3}, {2, 3}}, {{3, 5}, {2, 3}, {-2, 3}}, {{2, 3}, {3, 5}, {-2, 3}}},
       {"12n60", "12n61", "12n219"},
       2,
       12},
  };
  return rows;
}

const FamilyRow& row(int theorem) {
  if (theorem < 1 || theorem > 7) throw std::out_of_range("theorem must be 1..7");
  return families()[theorem - 1];
}

}  // namespace

int family_size(int theorem) { return static_cast<int>(row(theorem).variants.size()); }
int family_twist_offset(int theorem) { return row(theorem).offset; }
int family_crossings(int theorem, int n) { return 2 * n + row(theorem).base_crossings; }

MontesinosSpec family(int theorem, int variant, int n) {
  const FamilyRow& r = row(theorem);
  if (variant < 0 || variant >= static_cast<int>(r.variants.size())) throw std::out_of_range("family variant out of range");
  if (n < 0) throw std::out_of_range("n must be non-negative");
  MontesinosSpec spec;
  for (auto [b, a] : r.variants[variant]) spec.tangles.push_back(Fraction::make(b, a));
  spec.tangles.push_back(Fraction::make(1, 2 * n + r.offset));
  return spec;
}

std::string family_name(int theorem, int variant) {
  const FamilyRow& r = row(theorem);
  if (variant < 0 || variant >= static_cast<int>(r.names.size())) throw std::out_of_range("family variant out of range");
  return r.names[variant];
}

MontesinosSpec mutate_spec(const MontesinosSpec& spec, int i, int j) {
  const int r = static_cast<int>(spec.tangles.size());
  if (i < 0 || j < 0 || i >= r || j >= r) throw std::out_of_range("tangle index out of range");
  if (i > j) std::swap(i, j);
  if (j != i + 1) throw std::invalid_argument("only adjacent tangles can be exchanged");
  MontesinosSpec out = spec;
  std::swap(out.tangles[i], out.tangles[j]);
  return out;
}

// ------------------------------------------------------------------ mutation

MutationAxis parse_axis(std::string_view name) {
  if (name == "ew") return MutationAxis::EastWest;
  if (name == "ns") return MutationAxis::NorthSouth;
  if (name == "vertical") return MutationAxis::Vertical;
  throw std::invalid_argument("unknown mutation axis: " + std::string(name));
}

std::vector<int> tangle_boundary(const Diagram& d, const std::vector<int>& disk) {
  const auto& mate = d.map().mate;
  std::vector<char> inside(d.crossing_count(), 0);
  for (int x : disk) {
    if (x < 0 || x >= d.crossing_count()) throw std::invalid_argument("invalid crossing id in region");
    inside[x] = 1;
  }
  auto in = [&](int dart) { return inside[crossing_of(dart)] != 0; };
  std::vector<int> bound;
  for (int x : disk)
    for (int s = 0; s < 4; ++s)
      if (!in(mate[dart_of(x, s)])) bound.push_back(dart_of(x, s));
  std::sort(bound.begin(), bound.end());
  bound.erase(std::unique(bound.begin(), bound.end()), bound.end());
  if (bound.size() != 4) throw std::invalid_argument("region is not a 2-string tangle: it has " + std::to_string(bound.size()) + " boundary edges");
  std::vector<int> order{bound[0]};
  int cur = bound[0];
  for (int k = 1; k < 4; ++k) {
    // Walk the face on the left of the outgoing edge until it re-enters.
    int e = cur;
    for (std::size_t guard = 0;; ++guard) {
      if (guard > mate.size()) throw std::invalid_argument("region is not a 2-string tangle");
      int m = mate[e];
      if (!in(e) && in(m)) {
        cur = m;
        break;
      }
      e = prev_slot(m);
    }
    if (std::find(order.begin(), order.end(), cur) != order.end())
      throw std::invalid_argument("region is not a 2-string tangle: boundary is not a single circle");
    order.push_back(cur);
  }
  return order;
}

Diagram mutate_diagram(const Diagram& d, const std::vector<int>& disk, MutationAxis axis) {
  std::vector<int> b = tangle_boundary(d, disk);
  const PlanarMap& m = d.map();
  std::vector<char> inside(d.crossing_count(), 0);
  for (int x : disk) inside[x] = 1;
  auto in = [&](int dart) { return inside[crossing_of(dart)] != 0; };
  bool flip = axis != MutationAxis::Vertical;
  auto moved = [&](int dart) {
    if (!in(dart) || !flip) return dart;
    // Turning the tangle over reverses the cyclic order and the strand heights.
    return dart_of(crossing_of(dart), (1 - slot_of(dart)) & 3);
  };
  std::array<int, 4> target{};
  for (int k = 0; k < 4; ++k) {
    switch (axis) {
      case MutationAxis::Vertical: target[k] = (k + 2) & 3; break;
      case MutationAxis::EastWest: target[k] = 3 - k; break;
      case MutationAxis::NorthSouth: target[k] = (5 - k) & 3; break;
    }
  }
  PlanarMap out = m;
  for (int dart = 0; dart < static_cast<int>(m.mate.size()); ++dart)
    if (in(dart) && in(m.mate[dart])) out.mate[moved(dart)] = moved(m.mate[dart]);
  for (int k = 0; k < 4; ++k) {
    int i = moved(b[k]);
    int o = m.mate[b[target[k]]];
    out.mate[i] = o;
    out.mate[o] = i;
  }
  int parts = static_cast<int>(pmap::connected_parts(out).size());
  if (pmap::face_count(out) != out.crossings() + 2 * parts)
    throw std::invalid_argument("region is not a 2-string tangle: mutation is not planar");
  std::vector<int> dir(out.mate.size(), 0);
  for (int dart = 0; dart < static_cast<int>(dir.size()); ++dart)
    if (!in(dart)) dir[dart] = d.direction(dart);
  return Diagram::from_map(out, dir, d.oriented());
}

// ------------------------------------------------------------ classification

namespace {

Rational value(const Fraction& f) { return Rational(f.beta) / f.alpha; }

Rational frac_part(const Rational& q) {
  using boost::multiprecision::cpp_int;
  cpp_int n = numerator(q), d = denominator(q);
  cpp_int r = n % d;
  if (r < 0) r += d;
  return Rational(r, d);
}

void check_classifiable(const MontesinosSpec& s) {
  const int r = static_cast<int>(s.tangles.size());
  Rational inv = 0;
  for (const auto& f : s.tangles) inv += Rational(1, f.alpha);
  if (r < 3 || inv > r - 2)
    throw NotClassifiable("Montesinos classification needs r >= 3 and sum 1/alpha <= r - 2 (" + to_string(s) + ")");
}

}  // namespace

bool classify_equal(const MontesinosSpec& s1, const MontesinosSpec& s2) {
  check_classifiable(s1);
  check_classifiable(s2);
  if (s1.tangles.size() != s2.tangles.size()) return false;
  Rational e1 = s1.e, e2 = s2.e;
  std::vector<Rational> q1, q2;
  for (const auto& f : s1.tangles) e1 += value(f), q1.push_back(frac_part(value(f)));
  for (const auto& f : s2.tangles) e2 += value(f), q2.push_back(frac_part(value(f)));
  if (e1 != e2) return false;
  const std::size_t r = q1.size();
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t shift = 0; shift < r; ++shift) {
      bool same = true;
      for (std::size_t i = 0; i < r && same; ++i) same = q1[i] == q2[(i + shift) % r];
      if (same) return true;
    }
    std::reverse(q2.begin(), q2.end());
  }
  return false;
}

// ------------------------------------------------------------------ text/json

MontesinosSpec parse_montesinos(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto integer = [&]() -> long long {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos || pos - digits > 15) throw ParseError("expected an integer", start);
    return std::stoll(std::string(text.substr(start, pos - start)));
  };
  expect('M');
  expect('(');
  MontesinosSpec spec;
  // Optional "e;" prefix: an integer followed by ';'.
  std::size_t save = pos;
  try {
    long long e = integer();
    skip();
    if (pos < text.size() && text[pos] == ';') {
      ++pos;
      spec.e = e;
    } else {
      pos = save;
    }
  } catch (const ParseError&) {
    pos = save;
  }
  while (true) {
    std::size_t at = pos;
    long long b = integer();
    skip();
    long long a = 1;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      a = integer();
    }
    if (a <= 0) throw ParseError("denominator must be positive", at);
    spec.tangles.push_back(Fraction::make(b, a));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(')');
  skip();
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return spec;
}

std::string to_string(const MontesinosSpec& spec) {
  std::string out = "M(";
  if (spec.e != 0) out += std::to_string(spec.e) + "; ";
  for (std::size_t i = 0; i < spec.tangles.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(spec.tangles[i].beta) + "/" + std::to_string(spec.tangles[i].alpha);
  }
  return out + ")";
}

nlohmann::json to_json(const MontesinosSpec& spec) {
  auto t = nlohmann::json::array();
  for (const auto& f : spec.tangles) t.push_back({{"beta", f.beta}, {"alpha", f.alpha}});
  return {{"e", spec.e}, {"tangles", t}};
}

MontesinosSpec montesinos_from_json(const nlohmann::json& j) {
  MontesinosSpec spec;
  spec.e = j.value("e", 0LL);
  for (const auto& f : j.at("tangles")) spec.tangles.push_back(Fraction::make(f.at("beta"), f.at("alpha")));
  if (spec.tangles.empty()) throw std::invalid_argument("Montesinos spec needs at least one tangle");
  return spec;
}

}  // namespace mutarc
