#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <vector>

#include "mutarc/diagram.hpp"
#include "mutarc/grid.hpp"
#include "mutarc/laurent.hpp"
#include "mutarc/montesinos.hpp"

namespace mutarc {

// gtest finds these by ADL when printing failed comparisons.
inline std::ostream& operator<<(std::ostream& os, const Diagram& d) { return os << to_string(d); }
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const BiLaurent& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const BracketForm& b) { return os << to_string(b); }
inline std::ostream& operator<<(std::ostream& os, const GridDiagram& g) { return os << to_string(g); }
inline std::ostream& operator<<(std::ostream& os, const MontesinosSpec& s) { return os << to_string(s); }

}  // namespace mutarc

namespace mutarc::support {

// Random oriented diagrams: random grids, then random crossing switches.
// Crossing counts lie in [min_crossings, max_crossings] and are spread
// evenly over that range (diagram i gets min + i mod width crossings).
inline std::vector<Diagram> random_corpus(int count, int min_crossings, int max_crossings, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Diagram> out;
  const int width = max_crossings - min_crossings + 1;
  while (static_cast<int>(out.size()) < count) {
    const int want = min_crossings + static_cast<int>(out.size()) % width;
    // grids of size n rarely give more than (n - 2)^2 / 2 crossings
    int n = 3;
    while ((n - 2) * (n - 2) < 2 * want) ++n;
    n += static_cast<int>(rng() % 3);
    std::vector<int> xs(n), os(n);
    std::iota(xs.begin(), xs.end(), 0);
    std::iota(os.begin(), os.end(), 0);
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(os.begin(), os.end(), rng);
    bool ok = true;
    for (int r = 0; r < n; ++r) ok = ok && xs[r] != os[r];
    if (!ok) continue;
    Diagram d = grid_to_diagram(GridDiagram::make(xs, os));
    if (d.crossing_count() != want) continue;
    for (int c = 0; c < d.crossing_count(); ++c)
      if (rng() % 2) d = switch_crossing(d, c);
    out.push_back(d);
  }
  return out;
}

// Shuffles the crossing list, renumbers the components in a random order
// and rotates the labels along each component; orientation survives.
inline Diagram relabel(const Diagram& d, std::mt19937& rng) {
  const auto& pd = d.crossings();
  std::vector<int> labels;
  for (const auto& x : pd) labels.insert(labels.end(), x.begin(), x.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const std::vector<int> comp = d.dart_components();
  std::map<int, int> label_comp;
  for (std::size_t x = 0; x < pd.size(); ++x)
    for (int s = 0; s < 4; ++s) label_comp[pd[x][s]] = comp[4 * x + s];
  std::map<int, std::vector<int>> by_comp;
  for (int l : labels) by_comp[label_comp[l]].push_back(l);
  std::vector<std::vector<int>> ranges;
  for (auto& [c, ls] : by_comp) ranges.push_back(ls);
  std::shuffle(ranges.begin(), ranges.end(), rng);
  std::map<int, int> to;
  int next = 1;
  for (const auto& r : ranges) {
    const int k = static_cast<int>(r.size());
    const int shift = static_cast<int>(rng() % k);
    for (int i = 0; i < k; ++i) to[r[i]] = next + (i + shift) % k;
    next += k;
  }
  std::vector<Diagram::Crossing> out;
  for (const auto& x : pd) out.push_back({to[x[0]], to[x[1]], to[x[2]], to[x[3]]});
  std::shuffle(out.begin(), out.end(), rng);
  return Diagram::from_pd(out, d.free_loops());
}

// Arbitrary relabelling of the edges (orientation may be lost).
inline Diagram scramble(const Diagram& d, std::mt19937& rng) {
  int hi = 0;
  for (const auto& x : d.crossings()) hi = std::max({hi, x[0], x[1], x[2], x[3]});
  std::vector<int> perm(hi + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<Diagram::Crossing> out;
  for (const auto& x : d.crossings()) out.push_back({perm[x[0]], perm[x[1]], perm[x[2]], perm[x[3]]});
  std::shuffle(out.begin(), out.end(), rng);
  try {
    return Diagram::from_pd(out, d.free_loops());
  } catch (const std::invalid_argument&) {
    // the permutation made a component read consecutively against its
    // under-strands, which is not a valid code; try another one
    return scramble(d, rng);
  }
}

// Jones polynomial by the bracket state sum, written from scratch: for
// X(i,j,k,l) the A-smoothing joins i-j and k-l, the B-smoothing i-l and j-k.
// V = (-A^3)^{-w} <D> at A = t^{1/4}. With these choices the positive
// trefoil gets -t^-4 + t^-3 + t^-1, as the skein relation
// t V(L+) - t^-1 V(L-) = (t^-1/2 - t^1/2) V(L0) demands.
inline LaurentPoly bracket_jones(const Diagram& d) {
  const auto& pd = d.crossings();
  const int c = static_cast<int>(pd.size());
  std::map<int, Integer> poly;  // exponent of A -> coefficient
  for (unsigned long s = 0; s < (1ul << c); ++s) {
    std::map<int, int> parent;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& x : pd)
      for (int l : x) parent.emplace(l, l);
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    int a_count = 0;
    for (int i = 0; i < c; ++i) {
      const auto& x = pd[i];
      if (s >> i & 1) {
        join(x[0], x[1]);
        join(x[2], x[3]);
        ++a_count;
      } else {
        join(x[0], x[3]);
        join(x[1], x[2]);
      }
    }
    int loops = d.free_loops();
    for (auto& [l, p] : parent)
      if (find(l) == l) ++loops;
    // A^{a - b} (-A^2 - A^-2)^{loops - 1}
    std::map<int, Integer> term{{a_count - (c - a_count), Integer(1)}};
    for (int k = 1; k < loops; ++k) {
      std::map<int, Integer> next;
      for (auto& [e, v] : term) {
        next[e + 2] -= v;
        next[e - 2] -= v;
      }
      term = next;
    }
    for (auto& [e, v] : term) poly[e] += v;
  }
  const int w = writhe(d);
  std::vector<LaurentPoly::Term> terms;
  for (auto& [e, v] : poly) {
    if (v == 0) continue;
    const int ea = e - 3 * w;  // A exponent after (-A^3)^{-w}
    if (ea % 2) throw std::logic_error("odd bracket exponent");
    terms.push_back({ea / 2, (w % 2 ? -v : v)});
  }
  return LaurentPoly::from_terms(terms);
}

// F(a, z) at a = -t^{3/4}, z = t^{1/4} + t^{-1/4}, times (z)^m, as a
// polynomial in s = t^{1/4}.
inline std::map<int, Integer> specialise_f(const BiLaurent& f, int m) {
  std::map<int, Integer> out;
  for (const auto& term : f.terms()) {
    // (s + s^-1)^{z + m}
    const int k = term.z + m;
    if (k < 0) throw std::logic_error("specialise_f: multiplier too small");
    std::map<int, Integer> p{{0, Integer(1)}};
    for (int i = 0; i < k; ++i) {
      std::map<int, Integer> q;
      for (auto& [e, v] : p) {
        q[e + 1] += v;
        q[e - 1] += v;
      }
      p = q;
    }
    const Integer sign = term.a % 2 ? -1 : 1;
    for (auto& [e, v] : p) out[e + 3 * term.a] += sign * term.coeff * v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::map<int, Integer> times_z_power(const LaurentPoly& v, int m) {
  std::map<int, Integer> p;
  for (const auto& t : v.terms()) p[2 * t.twice_exp] += t.coeff;  // t^{e/2} = s^{2e}
  for (int i = 0; i < m; ++i) {
    std::map<int, Integer> q;
    for (auto& [e, c] : p) {
      q[e + 1] += c;
      q[e - 1] += c;
    }
    p = q;
  }
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  return p;
}

}  // namespace mutarc::support
