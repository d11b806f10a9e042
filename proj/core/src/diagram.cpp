#include "mutarc/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace mutarc {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

PlanarMap map_from_labels(const std::vector<Diagram::Crossing>& pd, int free_loops) {
  std::map<int, std::vector<int>> where;
  for (std::size_t x = 0; x < pd.size(); ++x)
    for (int s = 0; s < 4; ++s) {
      if (pd[x][s] <= 0) invalid("edge labels must be positive");
      where[pd[x][s]].push_back(dart_of(static_cast<int>(x), s));
    }
  PlanarMap m;
  m.free_loops = free_loops;
  m.mate.assign(4 * pd.size(), -1);
  for (const auto& [label, darts] : where) {
    if (darts.size() != 2) invalid("edge label " + std::to_string(label) + " appears " + std::to_string(darts.size()) + " times");
    m.mate[darts[0]] = darts[1];
    m.mate[darts[1]] = darts[0];
  }
  return m;
}

// Arrival darts of the component through `start`, read as an arrival.
std::vector<int> walk(const PlanarMap& m, int start) {
  std::vector<int> seq;
  int a = start;
  do {
    seq.push_back(a);
    a = m.mate[through(a)];
  } while (a != start);
  return seq;
}

void check_planar(const PlanarMap& m) {
  int parts = static_cast<int>(pmap::connected_parts(m).size());
  if (pmap::face_count(m) != m.crossings() + 2 * parts) invalid("PD code is not planar");
}

}  // namespace

Diagram::Diagram() {
  map_.free_loops = 1;
  components_ = 1;
}

Diagram Diagram::build(std::vector<Crossing> pd, int free_loops, bool oriented, const std::vector<int>& hint) {
  Diagram d;
  d.map_ = map_from_labels(pd, free_loops);
  d.pd_ = std::move(pd);
  d.oriented_ = oriented;
  const int n = static_cast<int>(d.map_.mate.size());
  d.dir_.assign(n, 0);
  d.comp_.assign(n, -1);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (d.comp_[s] >= 0) continue;
    // Find the arrival orientation of this component: an incoming under
    // slot if there is one, otherwise by label succession.
    std::vector<int> seq = walk(d.map_, s);
    int lo = d.pd_[crossing_of(seq[0])][slot_of(seq[0])], hi = lo;
    for (int a : seq) {
      int l = d.pd_[crossing_of(a)][slot_of(a)];
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
    auto label = [&](int dart) { return d.pd_[crossing_of(dart)][slot_of(dart)]; };
    auto succ = [&](int l) { return l == hi ? lo : l + 1; };
    int start = -1;
    for (int a : seq) {
      if (slot_of(a) == 0) {
        start = a;
        break;
      }
      if (slot_of(a) == 2) {
        start = through(a);
        break;
      }
    }
    if (start < 0 && hint.size() == static_cast<std::size_t>(n) && hint[s] != 0) start = hint[s] > 0 ? s : through(s);
    if (start < 0) start = label(through(s)) == succ(label(s)) ? s : through(s);
    for (int a : walk(d.map_, start)) {
      d.dir_[a] = 1;
      d.dir_[through(a)] = -1;
      d.comp_[a] = d.comp_[through(a)] = comps;
    }
    ++comps;
  }
  d.components_ = comps + free_loops;
  return d;
}

Diagram Diagram::from_pd(const std::vector<Crossing>& crossings, int free_loops, const std::vector<int>& hint) {
  if (free_loops < 0) invalid("negative circle count");
  if (crossings.empty() && free_loops == 0) invalid("empty diagram");
  PlanarMap m = map_from_labels(crossings, free_loops);
  check_planar(m);
  auto label = [&](int dart) { return crossings[crossing_of(dart)][slot_of(dart)]; };

  const int n = static_cast<int>(m.mate.size());
  std::vector<char> seen(n, 0);
  bool all_oriented = true;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> seq = walk(m, s);
    for (int a : seq) seen[a] = seen[through(a)] = 1;
    std::vector<int> labels;
    for (int a : seq) labels.push_back(label(a));
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    bool contiguous = true;
    for (std::size_t i = 1; i < sorted.size(); ++i) contiguous = contiguous && sorted[i] == sorted[i - 1] + 1;
    int lo = sorted.front(), hi = sorted.back();
    auto succ = [&](int l) { return l == hi ? lo : l + 1; };
    bool fwd = contiguous, rev = contiguous;
    const std::size_t k = seq.size();
    for (std::size_t i = 0; i < k; ++i) {
      int cur = labels[i], nxt = labels[(i + 1) % k];
      if (nxt != succ(cur)) fwd = false;
      if (cur != succ(nxt)) rev = false;
    }
    bool fwd_under = true, rev_under = true;
    for (int a : seq) {
      if (slot_of(a) == 2) fwd_under = false;
      if (slot_of(a) == 0) rev_under = false;
    }
    if ((fwd && fwd_under) || (rev && rev_under)) continue;
    if (fwd || rev) invalid("inconsistent orientation: an under-strand does not enter at the first slot");
    all_oriented = false;
  }
  if (all_oriented) return build(crossings, free_loops, true, hint);
  return from_map(m, {}, false);
}

Diagram Diagram::from_map(const PlanarMap& map, const std::vector<int>& direction, bool oriented) {
  const int n = static_cast<int>(map.mate.size());
  if (n == 0) {
    if (map.free_loops == 0) invalid("empty diagram");
    Diagram d;
    d.map_.free_loops = map.free_loops;
    d.components_ = map.free_loops;
    d.oriented_ = oriented;
    return d;
  }
  std::vector<int> label(n, 0);
  std::vector<char> arrival(n, 0), seen(n, 0);
  int base = 1;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> seq = walk(map, s);
    std::vector<int> darts;
    for (int a : seq) {
      darts.push_back(a);
      darts.push_back(through(a));
    }
    std::sort(darts.begin(), darts.end());
    int start = s;
    if (!direction.empty())
      for (int d : darts)
        if (direction[d] != 0) {
          start = direction[d] > 0 ? d : map.mate[d];
          break;
        }
    seq = walk(map, start);
    const int k = static_cast<int>(seq.size());
    for (int i = 0; i < k; ++i) {
      int a = seq[i];
      seen[a] = seen[through(a)] = 1;
      arrival[a] = 1;
      label[a] = base + i;
      label[through(a)] = base + (i + 1) % k;
    }
    base += k;
  }
  std::vector<Crossing> pd(map.crossings());
  for (int x = 0; x < map.crossings(); ++x) {
    int rot = arrival[dart_of(x, 0)] ? 0 : 2;
    for (int s = 0; s < 4; ++s) pd[x][s] = label[dart_of(x, s + rot)];
  }
  return build(std::move(pd), map.free_loops, oriented);
}

int Diagram::direction(int dart) const { return dir_.at(dart); }

std::vector<int> Diagram::directions() const { return dir_; }

int Diagram::sign(int crossing) const {
  if (crossing < 0 || crossing >= crossing_count()) invalid("invalid crossing id");
  return dir_[dart_of(crossing, 3)] > 0 ? 1 : -1;
}

std::vector<int> Diagram::dart_components() const { return comp_; }

Diagram Diagram::with_orientation_flag(bool oriented) const {
  Diagram d = *this;
  d.oriented_ = oriented;
  return d;
}

// ------------------------------------------------------------- text and json

Diagram parse_pd(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
  };
  auto fail = [&](const std::string& what) -> void { throw ParseError(what, pos); };
  auto number = [&]() -> long long {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 9) fail("expected a label");
    return std::stoll(std::string(text.substr(start, pos - start)));
  };
  skip();
  bool wrapped = false;
  if (text.substr(pos, 3) == "PD[" || text.substr(pos, 3) == "PD(") {
    wrapped = true;
    pos += 3;
  }
  std::vector<Diagram::Crossing> crossings;
  std::vector<std::size_t> token_pos;
  int circles = 0;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    if (wrapped && (text[pos] == ']' || text[pos] == ')')) {
      ++pos;
      skip();
      if (pos != text.size()) fail("trailing input");
      wrapped = false;
      break;
    }
    char kind = text[pos];
    if (kind != 'X' && kind != 'U') fail("expected X(...) or U(...)");
    std::size_t at = pos;
    ++pos;
    if (pos >= text.size() || (text[pos] != '(' && text[pos] != '[')) fail("expected '('");
    char close = text[pos] == '(' ? ')' : ']';
    ++pos;
    if (kind == 'X') {
      Diagram::Crossing c{};
      for (int s = 0; s < 4; ++s) {
        long long v = number();
        if (v <= 0) fail("labels must be positive");
        c[s] = static_cast<int>(v);
      }
      crossings.push_back(c);
      token_pos.push_back(at);
    } else {
      circles += static_cast<int>(number());
    }
    skip();
    if (pos >= text.size() || text[pos] != close) fail("expected closing bracket");
    ++pos;
  }
  if (wrapped) fail("unterminated PD[");
  std::map<int, int> count;
  std::map<int, std::size_t> first;
  for (std::size_t x = 0; x < crossings.size(); ++x)
    for (int l : crossings[x]) {
      if (!first.count(l)) first[l] = token_pos[x];
      ++count[l];
    }
  for (const auto& [l, k] : count)
    if (k != 2) throw ParseError("edge label " + std::to_string(l) + " appears " + std::to_string(k) + " times", first[l]);
  if (crossings.empty() && circles == 0) throw ParseError("empty diagram", 0);
  try {
    return Diagram::from_pd(crossings, circles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string to_string(const Diagram& d) {
  std::string out;
  for (const auto& c : d.crossings()) {
    if (!out.empty()) out += ' ';
    out += "X(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + "," +
           std::to_string(c[3]) + ")";
  }
  if (d.free_loops() > 0) {
    if (!out.empty()) out += ' ';
    out += "U(" + std::to_string(d.free_loops()) + ")";
  }
  return out;
}

nlohmann::json to_json(const Diagram& d) {
  auto pd = nlohmann::json::array();
  for (const auto& c : d.crossings()) pd.push_back(c);
  return {{"pd", pd}, {"free_loops", d.free_loops()}, {"oriented", d.oriented()}, {"components", d.components()}};
}

Diagram diagram_from_json(const nlohmann::json& j) {
  std::vector<Diagram::Crossing> pd;
  for (const auto& c : j.at("pd")) pd.push_back(c.get<Diagram::Crossing>());
  Diagram d = Diagram::from_pd(pd, j.value("free_loops", 0));
  if (j.contains("oriented") && !j.at("oriented").get<bool>()) d = d.with_orientation_flag(false);
  return d;
}

// ---------------------------------------------------------------- operations

int writhe(const Diagram& d) {
  if (!d.oriented()) invalid("writhe of an unoriented diagram");
  int w = 0;
  for (int x = 0; x < d.crossing_count(); ++x) w += d.sign(x);
  return w;
}

Diagram switch_crossing(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count()) invalid("invalid crossing id");
  std::vector<Diagram::Crossing> pd = d.crossings();
  const auto old = pd[crossing];
  // The over-strand becomes the under-strand; its incoming end moves to slot 0.
  int in_over = d.direction(dart_of(crossing, 3)) > 0 ? 3 : 1;
  std::vector<int> dir = d.directions();
  for (int s = 0; s < 4; ++s) {
    pd[crossing][s] = old[(s + in_over) & 3];
    dir[dart_of(crossing, s)] = d.direction(dart_of(crossing, (s + in_over) & 3));
  }
  return Diagram::from_pd(pd, d.free_loops(), dir).with_orientation_flag(d.oriented());
}

Diagram mirror(const Diagram& d) {
  std::vector<Diagram::Crossing> pd = d.crossings();
  std::vector<int> dir = d.directions();
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto old = pd[x];
    int in_over = d.direction(dart_of(x, 3)) > 0 ? 3 : 1;
    for (int s = 0; s < 4; ++s) {
      pd[x][s] = old[(s + in_over) & 3];
      dir[dart_of(x, s)] = d.direction(dart_of(x, (s + in_over) & 3));
    }
  }
  if (pd.empty()) return d;
  return Diagram::from_pd(pd, d.free_loops(), dir).with_orientation_flag(d.oriented());
}

Smoothing oriented_smoothing(const Diagram& d, int crossing) {
  return d.sign(crossing) > 0 ? Smoothing::Horizontal : Smoothing::Vertical;
}

Diagram smooth(const Diagram& d, int crossing, Smoothing kind) {
  if (crossing < 0 || crossing >= d.crossing_count()) invalid("invalid crossing id");
  const PlanarMap& m = d.map();
  std::vector<int> internal(m.mate.size(), -1);
  int b = dart_of(crossing, 0);
  if (kind == Smoothing::Horizontal) {
    internal[b] = b + 1, internal[b + 1] = b;
    internal[b + 2] = b + 3, internal[b + 3] = b + 2;
  } else {
    internal[b] = b + 3, internal[b + 3] = b;
    internal[b + 1] = b + 2, internal[b + 2] = b + 1;
  }
  std::vector<int> old_to_new;
  PlanarMap r = pmap::reduce(m, internal, &old_to_new);
  std::vector<int> dir(r.mate.size(), 0);
  for (std::size_t i = 0; i < old_to_new.size(); ++i)
    if (old_to_new[i] >= 0) dir[old_to_new[i]] = d.direction(static_cast<int>(i));
  bool keeps = d.oriented() && kind == oriented_smoothing(d, crossing);
  return Diagram::from_map(r, dir, keeps);
}

Resolution resolve(const Diagram& d, int crossing) {
  return {switch_crossing(d, crossing), smooth(d, crossing, Smoothing::Horizontal),
          smooth(d, crossing, Smoothing::Vertical)};
}

std::optional<Curl> detect_curl(const Diagram& d) {
  const auto& mate = d.map().mate;
  for (int x = 0; x < d.crossing_count(); ++x)
    for (int s = 0; s < 4; ++s)
      if (mate[dart_of(x, s)] == dart_of(x, s + 1)) return Curl{x, (s % 2 == 0) ? 1 : -1};
  return std::nullopt;
}

Diagram remove_curl(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count()) invalid("invalid crossing id");
  const auto& mate = d.map().mate;
  bool kink = false;
  for (int s = 0; s < 4; ++s) kink = kink || mate[dart_of(crossing, s)] == dart_of(crossing, s + 1);
  if (!kink) invalid("crossing is not a curl");
  std::vector<int> internal(mate.size(), -1);
  for (int s = 0; s < 4; ++s) internal[dart_of(crossing, s)] = through(dart_of(crossing, s));
  std::vector<int> old_to_new;
  PlanarMap r = pmap::reduce(d.map(), internal, &old_to_new);
  std::vector<int> dir(r.mate.size(), 0);
  for (std::size_t i = 0; i < old_to_new.size(); ++i)
    if (old_to_new[i] >= 0) dir[old_to_new[i]] = d.direction(static_cast<int>(i));
  return Diagram::from_map(r, dir, d.oriented());
}

Diagram add_curl(const Diagram& d, int dart, int sign) {
  PlanarMap m = d.map();
  const int n = static_cast<int>(m.mate.size());
  if (dart < 0 || dart >= n) invalid("invalid dart");
  const int k = m.crossings();
  int p = dart, q = m.mate[dart];
  m.mate.resize(n + 4);
  auto link = [&m](int u, int v) { m.mate[u] = v, m.mate[v] = u; };
  link(p, dart_of(k, 0));
  if (sign > 0) {
    link(dart_of(k, 2), dart_of(k, 3));
    link(dart_of(k, 1), q);
  } else {
    link(dart_of(k, 2), dart_of(k, 1));
    link(dart_of(k, 3), q);
  }
  std::vector<int> dir = d.directions();
  dir.resize(n + 4, 0);
  return Diagram::from_map(m, dir, d.oriented());
}

std::vector<std::vector<int>> faces(const Diagram& d) {
  const auto& mate = d.map().mate;
  std::vector<char> seen(mate.size(), 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < static_cast<int>(mate.size()); ++s) {
    if (seen[s]) continue;
    std::vector<int> face;
    int e = s;
    do {
      seen[e] = 1;
      face.push_back(e);
      e = prev_slot(mate[e]);
    } while (e != s);
    out.push_back(std::move(face));
  }
  return out;
}

Diagram add_r2(const Diagram& d, int x1, int x2, bool finger_over) {
  PlanarMap m = d.map();
  const int n = static_cast<int>(m.mate.size());
  if (x1 < 0 || x2 < 0 || x1 >= n || x2 >= n) invalid("invalid dart");
  const int y1 = m.mate[x1], y2 = m.mate[x2];
  if (x1 == x2 || x2 == y1) invalid("R2 needs two distinct edges");
  bool same_face = false;
  for (int e = prev_slot(m.mate[x1]);; e = prev_slot(m.mate[e])) {
    if (e == x2) same_face = true;
    if (e == x1 || same_face) break;
  }
  if (!same_face) invalid("edges do not share a face");

  enum Arm { W, S, E, N };
  // Slot of each arm for the right (first) and left (second) new crossing.
  std::array<int, 4> right{}, left{};
  if (finger_over) {
    right = {0, 1, 2, 3};
    left = {0, 1, 2, 3};
  } else {
    right = {1, 2, 3, 0};  // N0 W1 S2 E3
    left = {3, 0, 1, 2};   // S0 E1 N2 W3
  }
  const int R = m.crossings(), L = R + 1;
  m.mate.resize(n + 8);
  auto link = [&m](int u, int v) { m.mate[u] = v, m.mate[v] = u; };
  link(x1, dart_of(R, right[N]));
  link(dart_of(R, right[S]), dart_of(L, left[S]));
  link(dart_of(L, left[N]), y1);
  link(x2, dart_of(L, left[W]));
  link(dart_of(L, left[E]), dart_of(R, right[W]));
  link(dart_of(R, right[E]), y2);
  std::vector<int> dir = d.directions();
  dir.resize(n + 8, 0);
  return Diagram::from_map(m, dir, d.oriented());
}

std::string canonical_code(const Diagram& d) { return pmap::canonical_code(d.map()); }

}  // namespace mutarc
