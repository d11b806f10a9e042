#include "mutarc/jones.hpp"

#include <future>
#include <map>
#include <numeric>

namespace mutarc {

namespace {

// counts[a][loops]: number of states with `a` A-smoothings and that many loops.
using StateCounts = std::vector<std::vector<std::uint64_t>>;

StateCounts count_states(const PlanarMap& m, std::uint64_t first, std::uint64_t last) {
  const int c = m.crossings();
  const int n = 4 * c;
  // Edge id of each dart; a state glues edges at every crossing.
  std::vector<int> edge(n, -1);
  int edges = 0;
  for (int d = 0; d < n; ++d)
    if (edge[d] < 0) edge[d] = edge[m.mate[d]] = edges++;
  StateCounts counts(c + 1, std::vector<std::uint64_t>(edges + 1, 0));
  std::vector<int> parent(edges);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t state = first; state < last; ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int loops = edges;
    int a_count = 0;
    for (int x = 0; x < c; ++x) {
      const int* e = &edge[4 * x];
      int p, q, r, s;
      if ((state >> x) & 1) {
        ++a_count;
        p = e[0], q = e[1], r = e[2], s = e[3];
      } else {
        p = e[0], q = e[3], r = e[1], s = e[2];
      }
      int u = find(p), v = find(q);
      if (u != v) parent[u] = v, --loops;
      u = find(r), v = find(s);
      if (u != v) parent[u] = v, --loops;
    }
    ++counts[a_count][loops];
  }
  return counts;
}

// <D> as a map from A-exponent to coefficient.
std::map<int, Integer> bracket(const Diagram& d, int threads) {
  const PlanarMap& m = d.map();
  const int c = m.crossings();
  std::map<int, Integer> out;
  if (c == 0) {
    // (-A^2 - A^-2)^(k-1)
    out[0] = 1;
    for (int i = 1; i < d.free_loops(); ++i) {
      std::map<int, Integer> next;
      for (const auto& [e, v] : out) {
        next[e + 2] -= v;
        next[e - 2] -= v;
      }
      out = std::move(next);
    }
    return out;
  }
  const std::uint64_t total = std::uint64_t{1} << c;
  StateCounts counts;
  if (threads <= 1 || c < 12) {
    counts = count_states(m, 0, total);
  } else {
    std::vector<std::future<StateCounts>> parts;
    for (int t = 0; t < threads; ++t) {
      std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
      parts.push_back(std::async(std::launch::async, count_states, std::cref(m), lo, hi));
    }
    counts.assign(c + 1, std::vector<std::uint64_t>(2 * c + 1, 0));
    for (auto& f : parts) {
      StateCounts part = f.get();
      for (int a = 0; a <= c; ++a)
        for (int l = 0; l <= 2 * c; ++l) counts[a][l] += part[a][l];
    }
  }
  // Powers of d = -A^2 - A^-2, as maps. A state has at most one loop per
  // edge, and there are 2c edges.
  const int max_loops = 2 * c + d.free_loops();
  std::vector<std::map<int, Integer>> dpow(max_loops + 1);
  dpow[0][0] = 1;
  for (int k = 1; k <= max_loops; ++k)
    for (const auto& [e, v] : dpow[k - 1]) {
      dpow[k][e + 2] -= v;
      dpow[k][e - 2] -= v;
    }
  for (int a = 0; a <= c; ++a)
    for (int l = 1; l <= 2 * c; ++l) {
      if (counts[a][l] == 0) continue;
      const int shift = a - (c - a);
      for (const auto& [e, v] : dpow[l - 1 + d.free_loops()]) out[e + shift] += v * counts[a][l];
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

LaurentPoly jones(const Diagram& d, int threads) {
  if (!d.oriented()) throw std::invalid_argument("Jones polynomial needs an oriented diagram");
  int w = d.crossing_count() == 0 ? 0 : writhe(d);
  // V(t) = (-A^3)^{-w} <D> at A = t^{1/4}; A^k becomes t^{k/4}.
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [e, v] : bracket(d, threads)) {
    int k = e - 3 * w;
    if (k % 2 != 0) throw std::logic_error("odd A-exponent in normalised bracket");
    terms.push_back({k / 2, (w % 2 == 0) ? Integer(v) : Integer(-v)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

SkeinTriple skein_triple(const Diagram& d, int crossing) {
  if (!d.oriented()) throw std::invalid_argument("skein triple needs an oriented diagram");
  int s = d.sign(crossing);
  Diagram other = switch_crossing(d, crossing);
  Diagram zero = smooth(d, crossing, oriented_smoothing(d, crossing));
  if (s > 0) return {d, other, zero, s};
  return {other, d, zero, s};
}

ObstructionReport semi_alternating_obstruction(const LaurentPoly& v, int crossing_number) {
  if (v.is_zero()) throw DomainError("obstruction of the zero polynomial");
  ObstructionReport r;
  r.breadth = breadth_t(v);
  std::tie(r.low_coeff, r.high_coeff) = extreme_coefficients(v);
  r.crossing_number = crossing_number;
  if (r.breadth < HalfInteger(crossing_number - 1))
    r.reasons.push_back("breadth " + r.breadth.str() + " is below c - 1 = " + std::to_string(crossing_number - 1));
  auto unit = [](const Integer& x) { return x == 1 || x == -1; };
  if (!unit(r.low_coeff))
    r.reasons.push_back("lowest coefficient " + r.low_coeff.str() + " is not +-1");
  if (!unit(r.high_coeff))
    r.reasons.push_back("highest coefficient " + r.high_coeff.str() + " is not +-1");
  r.verdict = r.reasons.empty() ? Verdict::Inconclusive : Verdict::NotSemiAlternating;
  return r;
}

std::string to_string(Verdict v) {
  return v == Verdict::NotSemiAlternating ? "not_semi_alternating" : "inconclusive";
}

nlohmann::json to_json(const ObstructionReport& r) {
  return {{"breadth", r.breadth.str()},
          {"extreme_coeffs", {r.low_coeff.str(), r.high_coeff.str()}},
          {"crossing_number", r.crossing_number},
          {"verdict", to_string(r.verdict)},
          {"reasons", r.reasons}};
}

}  // namespace mutarc
