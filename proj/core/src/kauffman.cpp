#include "mutarc/kauffman.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <mutex>

namespace mutarc {

bool SkeinCache::find(const std::string& key, BiLaurent& out) const {
  std::shared_lock lock(mu_);
  auto it = table_.find(key);
  if (it == table_.end()) return false;
  out = it->second;
  return true;
}

void SkeinCache::insert(const std::string& key, const BiLaurent& value) {
  std::unique_lock lock(mu_);
  table_.emplace(key, value);
}

std::size_t SkeinCache::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

void SkeinCache::clear() {
  std::unique_lock lock(mu_);
  table_.clear();
}

BiLaurent loop_value() {
  return BiLaurent::from_terms({{1, -1, 1}, {-1, -1, 1}, {0, 0, -1}});
}

namespace {

struct Counters {
  std::atomic<std::uint64_t> steps{0}, leaves{0}, hits{0};
};

// Sign of a crossing given the slots where its two strands arrive.
int crossing_sign(int under_in, int over_in) { return ((under_in + 3) & 3) == over_in ? 1 : -1; }

std::vector<int> through_pairing(std::vector<int> internal, int x) {
  for (int s = 0; s < 4; ++s) internal[dart_of(x, s)] = through(dart_of(x, s));
  return internal;
}

// One curl or one non-alternating bigon removed per call; the a-exponent
// picked up by a curl is added to a_exp.
bool simplify_once(PlanarMap& m, int& a_exp, bool bigons) {
  const int c = m.crossings();
  for (int x = 0; x < c; ++x)
    for (int s = 0; s < 4; ++s)
      if (m.mate[dart_of(x, s)] == dart_of(x, s + 1)) {
        a_exp += (s % 2 == 0) ? 1 : -1;
        m = pmap::reduce(m, through_pairing(std::vector<int>(m.mate.size(), -1), x));
        return true;
      }
  if (!bigons) return false;
  for (int d = 0; d < 4 * c; ++d) {
    int md = m.mate[d];
    int e = prev_slot(md);
    if (crossing_of(e) == crossing_of(d) || prev_slot(m.mate[e]) != d) continue;
    if ((slot_of(d) & 1) != (slot_of(md) & 1)) continue;
    std::vector<int> internal(m.mate.size(), -1);
    internal = through_pairing(std::move(internal), crossing_of(d));
    internal = through_pairing(std::move(internal), crossing_of(md));
    m = pmap::reduce(m, internal);
    return true;
  }
  return false;
}

int simplify(PlanarMap& m, bool bigons) {
  int a_exp = 0;
  while (simplify_once(m, a_exp, bigons)) {
  }
  return a_exp;
}

std::string code_key(const std::vector<std::uint16_t>& code) {
  std::string key;
  key.reserve(2 * code.size());
  for (auto v : code) {
    key.push_back(static_cast<char>(v >> 8));
    key.push_back(static_cast<char>(v & 0xff));
  }
  return key;
}

class Engine {
 public:
  Engine(const SkeinConfig& cfg, SkeinCache* cache, Counters& counters, int parallel_depth)
      : cfg_(cfg), cache_(cache), counters_(counters), parallel_depth_(parallel_depth), delta_(loop_value()) {}

  BiLaurent eval(PlanarMap m, int depth) {
    int a_exp = simplify(m, cfg_.bigon_moves);
    BiLaurent value = BiLaurent::constant(1);
    auto parts = pmap::connected_parts(m);
    int pieces = static_cast<int>(parts.size()) + m.free_loops;
    if (parts.size() == 1) {
      m.free_loops = 0;
      value = eval_connected(std::move(m), depth);
    } else {
      for (const auto& part : parts) value = value * eval_connected(pmap::extract(m, part), depth);
    }
    for (int i = 1; i < pieces; ++i) value = value * delta_;
    return a_exp == 0 ? value : value.shifted(0, a_exp);
  }

 private:
  // m is connected, reduced and free of loops.
  BiLaurent eval_connected(PlanarMap m, int depth) {
    std::string key;
    if (cfg_.memo_enabled) {
      key = code_key(pmap::connected_code(m));
      BiLaurent hit;
      if (cache_->find(key, hit)) {
        ++counters_.hits;
        return hit;
      }
    }
    std::vector<int> base = choose_basepoints(m);
    BiLaurent value = skein(m, base, depth);
    if (cfg_.memo_enabled) cache_->insert(key, value);
    return value;
  }

  // Arrival darts of the strands, in traversal order, starting at the
  // basepoint of each component in turn.
  struct Walk {
    std::vector<int> bad;  // crossings first met from below, in order met
    int writhe = 0;
    int components = 0;
  };

  Walk traverse(const PlanarMap& m, const std::vector<int>& base) const {
    const int c = m.crossings();
    Walk w;
    std::vector<int> first(c, -1);
    for (int b : base) {
      ++w.components;
      int a = b;
      do {
        int x = crossing_of(a);
        if (first[x] < 0) {
          first[x] = slot_of(a);
          if ((slot_of(a) & 1) == 0) w.bad.push_back(x);
        } else {
          int u = (slot_of(a) & 1) == 0 ? slot_of(a) : first[x];
          int o = (slot_of(a) & 1) == 0 ? first[x] : slot_of(a);
          w.writhe += crossing_sign(u, o);
        }
        a = m.mate[through(a)];
      } while (a != b);
    }
    return w;
  }

  std::vector<int> choose_basepoints(const PlanarMap& m) const {
    const int n = static_cast<int>(m.mate.size());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> arrivals;
      int a = s;
      do {
        arrivals.push_back(a);
        comp[a] = comp[through(a)] = static_cast<int>(comps.size());
        a = m.mate[through(a)];
      } while (a != s);
      comps.push_back(std::move(arrivals));
    }
    // Greedy: each component takes the start (and direction) that leaves the
    // fewest crossings first met from below, given the components before it.
    std::vector<char> seen(m.crossings(), 0);
    std::vector<int> base;
    for (const auto& arrivals : comps) {
      int best = -1, best_bad = 1 << 30;
      for (int dir = 0; dir < 2; ++dir)
        for (int start : arrivals) {
          int b = dir == 0 ? start : m.mate[start];
          std::vector<char> local = seen;
          int bad = 0;
          int a = b;
          do {
            int x = crossing_of(a);
            if (!local[x]) {
              local[x] = 1;
              if ((slot_of(a) & 1) == 0) ++bad;
            }
            a = m.mate[through(a)];
          } while (a != b);
          if (bad < best_bad) best_bad = bad, best = b;
        }
      base.push_back(best);
      int a = best;
      do {
        seen[crossing_of(a)] = 1;
        a = m.mate[through(a)];
      } while (a != best);
    }
    return base;
  }

  bool on_bigon(const PlanarMap& m, int x) const {
    for (int s = 0; s < 4; ++s) {
      int d = dart_of(x, s);
      int e = prev_slot(m.mate[d]);
      if (crossing_of(e) != x && prev_slot(m.mate[e]) == d) return true;
    }
    return false;
  }

  int pick(const PlanarMap& m, const Walk& w) const {
    if (cfg_.strategy == SkeinStrategy::Reducible)
      for (int x : w.bad)
        if (on_bigon(m, x)) return x;
    return w.bad.front();
  }

  BiLaurent skein(const PlanarMap& m, const std::vector<int>& base, int depth) {
    Walk w = traverse(m, base);
    if (w.bad.empty()) {
      ++counters_.leaves;
      BiLaurent value = BiLaurent::monomial(1, 0, w.writhe);
      for (int i = 1; i < w.components; ++i) value = value * delta_;
      return value;
    }
    ++counters_.steps;
    const int x = pick(m, w);
    const int b = dart_of(x, 0);
    std::vector<int> horiz(m.mate.size(), -1), vert(m.mate.size(), -1);
    horiz[b] = b + 1, horiz[b + 1] = b, horiz[b + 2] = b + 3, horiz[b + 3] = b + 2;
    vert[b] = b + 3, vert[b + 3] = b, vert[b + 1] = b + 2, vert[b + 2] = b + 1;
    PlanarMap mh = pmap::reduce(m, horiz);
    PlanarMap mv = pmap::reduce(m, vert);

    BiLaurent sum;
    if (depth < parallel_depth_) {
      auto fh = std::async(std::launch::async, [&] { return Engine(*this).eval(mh, depth + 1); });
      BiLaurent v = eval(mv, depth + 1);
      BiLaurent s = switched_value(m, base, x, depth);
      sum = (fh.get() + v).shifted(1, 0) - s;
    } else {
      BiLaurent h = eval(mh, depth + 1);
      BiLaurent v = eval(mv, depth + 1);
      sum = (h + v).shifted(1, 0) - switched_value(m, base, x, depth);
    }
    return sum;
  }

  BiLaurent switched_value(const PlanarMap& m, const std::vector<int>& base, int x, int depth) {
    PlanarMap ms = pmap::switched(m, x);
    PlanarMap reduced = ms;
    int a_exp = simplify(reduced, cfg_.bigon_moves);
    if (reduced.crossings() != ms.crossings()) {
      BiLaurent v = eval(std::move(reduced), depth + 1);
      return a_exp == 0 ? v : v.shifted(0, a_exp);
    }
    std::string key;
    if (cfg_.memo_enabled) {
      key = code_key(pmap::connected_code(ms));
      BiLaurent hit;
      if (cache_->find(key, hit)) {
        ++counters_.hits;
        return hit;
      }
    }
    std::vector<int> moved = base;
    for (int& d : moved)
      if (crossing_of(d) == x) d = dart_of(x, slot_of(d) + 3);
    BiLaurent v = skein(ms, moved, depth);
    if (cfg_.memo_enabled) cache_->insert(key, v);
    return v;
  }

  const SkeinConfig& cfg_;
  SkeinCache* cache_;
  Counters& counters_;
  int parallel_depth_;
  BiLaurent delta_;
};

int parallel_depth_for(int threads) {
  int depth = 0;
  for (int t = 1; t < threads; t *= 2) ++depth;
  return depth;
}

}  // namespace

BiLaurent lambda(const Diagram& d, const SkeinConfig& cfg, SkeinStats* stats) {
  if (d.crossing_count() > cfg.max_crossings)
    throw BudgetError("diagram has " + std::to_string(d.crossing_count()) + " crossings, budget is " +
                      std::to_string(cfg.max_crossings));
  std::shared_ptr<SkeinCache> cache = cfg.cache ? cfg.cache : std::make_shared<SkeinCache>();
  Counters counters;
  Engine engine(cfg, cache.get(), counters, parallel_depth_for(cfg.threads));
  BiLaurent value = engine.eval(d.map(), 0);
  if (stats) {
    stats->skein_steps = counters.steps;
    stats->descending_leaves = counters.leaves;
    stats->memo_hits = counters.hits;
  }
  return value;
}

BiLaurent kauffman_f(const Diagram& d, const SkeinConfig& cfg, SkeinStats* stats) {
  int w = writhe(d);
  return lambda(d, cfg, stats).shifted(0, -w);
}

BracketForm lambda_bracket(const Diagram& d, const SkeinConfig& cfg) { return bracket_form(lambda(d, cfg)); }

SkeinStrategy parse_strategy(const std::string& name) {
  if (name == "first-bad") return SkeinStrategy::FirstBad;
  if (name == "reducible") return SkeinStrategy::Reducible;
  throw std::invalid_argument("unknown skein strategy: " + name);
}

std::string to_string(SkeinStrategy s) { return s == SkeinStrategy::FirstBad ? "first-bad" : "reducible"; }

}  // namespace mutarc
