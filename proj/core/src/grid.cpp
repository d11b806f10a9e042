#include "mutarc/grid.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mutarc {

GridDiagram GridDiagram::make(std::vector<int> xs, std::vector<int> os) {
  if (xs.size() != os.size()) throw std::invalid_argument("grid: X and O rows differ in length");
  const int n = static_cast<int>(xs.size());
  if (n < 2) throw std::invalid_argument("grid: size must be at least 2");
  std::vector<char> seen_x(n, 0), seen_o(n, 0);
  for (int r = 0; r < n; ++r) {
    if (xs[r] < 0 || xs[r] >= n || os[r] < 0 || os[r] >= n) throw std::invalid_argument("grid: column out of range");
    if (seen_x[xs[r]]++ || seen_o[os[r]]++) throw std::invalid_argument("grid: X or O column repeated");
    if (xs[r] == os[r]) throw std::invalid_argument("grid: X and O share a square in row " + std::to_string(r + 1));
  }
  return {n, std::move(xs), std::move(os)};
}

int arc_count(const GridDiagram& g) { return g.size; }

namespace {

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

bool strictly_between(int v, int a, int b) { return std::min(a, b) < v && v < std::max(a, b); }

}  // namespace

Diagram grid_to_diagram(const GridDiagram& g) {
  const int n = g.size;
  const std::vector<int> x_row = inverse(g.xs), o_row = inverse(g.os);

  struct Visit {
    int crossing;
    bool over;
  };
  // Crossings keyed by (row, column) of the horizontal/vertical pair.
  std::map<std::pair<int, int>, int> ids;
  auto crossing_id = [&](int row, int col) {
    auto [it, fresh] = ids.try_emplace({row, col}, static_cast<int>(ids.size()));
    return it->second;
  };

  struct Slots {
    std::array<int, 4> label{-1, -1, -1, -1};
  };
  std::vector<Slots> pd;
  std::vector<char> row_done(n, 0);
  int next_label = 1, free_loops = 0;

  for (int start = 0; start < n; ++start) {
    if (row_done[start]) continue;
    std::vector<Visit> visits;
    // Per visit: the arm slots the strand enters and leaves by.
    std::vector<std::pair<int, int>> arms;
    int r = start;
    do {
      row_done[r] = 1;
      // Horizontal: row r from its O to its X.
      const int a = g.os[r], b = g.xs[r];
      const int step = b > a ? 1 : -1;
      for (int c = a + step; c != b; c += step) {
        if (!strictly_between(r, x_row[c], o_row[c])) continue;
        visits.push_back({crossing_id(r, c), false});
        // Slots counterclockwise from the incoming under arm: 0 in, 2 out.
        arms.emplace_back(0, 2);
      }
      // Vertical: column b from its X (row r) to its O.
      const int r2 = o_row[b];
      const int vstep = r2 > r ? 1 : -1;
      for (int q = r + vstep; q != r2; q += vstep) {
        if (!strictly_between(b, g.os[q], g.xs[q])) continue;
        // Under strand of row q runs rightwards iff its X is to the right.
        const bool rightwards = g.xs[q] > g.os[q];
        // Rightwards under: slots W,S,E,N; leftwards: E,N,W,S.
        const bool upwards = vstep > 0;
        int in_slot, out_slot;
        if (rightwards == upwards) in_slot = 1, out_slot = 3;
        else in_slot = 3, out_slot = 1;
        visits.push_back({crossing_id(q, b), true});
        arms.emplace_back(in_slot, out_slot);
      }
      r = r2;
    } while (r != start);

    if (visits.empty()) {
      ++free_loops;
      continue;
    }
    if (static_cast<int>(pd.size()) < static_cast<int>(ids.size())) pd.resize(ids.size());
    const int k = static_cast<int>(visits.size());
    const int base = next_label;
    for (int i = 0; i < k; ++i) {
      const int in_label = base + i;
      const int out_label = base + (i + 1) % k;
      auto& s = pd[visits[i].crossing].label;
      s[arms[i].first] = in_label;
      s[arms[i].second] = out_label;
    }
    next_label += k;
  }

  std::vector<Diagram::Crossing> crossings;
  for (const auto& s : pd) crossings.push_back(s.label);
  Diagram d = Diagram::from_pd(crossings, free_loops);
  return d;
}

GridDiagram transpose(const GridDiagram& g) {
  // Reflecting in the anti-diagonal keeps vertical-over-horizontal and the
  // link type: row r <-> column n-1-r.
  const int n = g.size;
  std::vector<int> xs(n), os(n);
  for (int r = 0; r < n; ++r) {
    xs[n - 1 - g.xs[r]] = n - 1 - r;
    os[n - 1 - g.os[r]] = n - 1 - r;
  }
  // Orientation is reversed by the swap of roles; exchange X and O to keep it.
  return GridDiagram::make(std::move(os), std::move(xs));
}

// ------------------------------------------------------------------ moves

GridDiagram shift_rows(const GridDiagram& g, int k) {
  const int n = g.size;
  k = ((k % n) + n) % n;
  std::vector<int> xs(n), os(n);
  for (int r = 0; r < n; ++r) {
    xs[(r + k) % n] = g.xs[r];
    os[(r + k) % n] = g.os[r];
  }
  return {n, std::move(xs), std::move(os)};
}

GridDiagram shift_columns(const GridDiagram& g, int k) {
  const int n = g.size;
  k = ((k % n) + n) % n;
  GridDiagram out = g;
  for (int r = 0; r < n; ++r) {
    out.xs[r] = (g.xs[r] + k) % n;
    out.os[r] = (g.os[r] + k) % n;
  }
  return out;
}

namespace {

bool interleaved(int a1, int b1, int a2, int b2) {
  return strictly_between(a2, a1, b1) != strictly_between(b2, a1, b1);
}

}  // namespace

bool rows_commute(const GridDiagram& g, int r) {
  const int s = (r + 1) % g.size;
  return !interleaved(g.xs[r], g.os[r], g.xs[s], g.os[s]);
}

GridDiagram commute_rows(const GridDiagram& g, int r) {
  if (!rows_commute(g, r)) throw std::invalid_argument("rows do not commute");
  GridDiagram out = g;
  const int s = (r + 1) % g.size;
  std::swap(out.xs[r], out.xs[s]);
  std::swap(out.os[r], out.os[s]);
  return out;
}

bool columns_commute(const GridDiagram& g, int c) {
  const int d = (c + 1) % g.size;
  const std::vector<int> x_row = inverse(g.xs), o_row = inverse(g.os);
  return !interleaved(x_row[c], o_row[c], x_row[d], o_row[d]);
}

GridDiagram commute_columns(const GridDiagram& g, int c) {
  if (!columns_commute(g, c)) throw std::invalid_argument("columns do not commute");
  GridDiagram out = g;
  const int d = (c + 1) % g.size;
  for (int r = 0; r < g.size; ++r) {
    if (out.xs[r] == c) out.xs[r] = d;
    else if (out.xs[r] == d) out.xs[r] = c;
    if (out.os[r] == c) out.os[r] = d;
    else if (out.os[r] == d) out.os[r] = c;
  }
  return out;
}

std::vector<Destabilization> destabilizations(const GridDiagram& g) {
  std::vector<Destabilization> out;
  if (g.size <= 2) return out;
  const std::vector<int> x_row = inverse(g.xs), o_row = inverse(g.os);
  for (int c = 0; c < g.size; ++c) {
    const int r1 = x_row[c], r2 = o_row[c];
    if (std::abs(r1 - r2) != 1) continue;
    for (int r : {r1, r2}) {
      const int other_row = r == r1 ? r2 : r1;
      const int c2 = g.xs[r] == c ? g.os[r] : g.xs[r];
      if (std::abs(c2 - c) != 1) continue;
      // A 2x2 block holding four markings is a split unknot; leave it.
      if (g.xs[other_row] == c2 || g.os[other_row] == c2) continue;
      out.push_back({r, c});
    }
  }
  return out;
}

GridDiagram destabilize(const GridDiagram& g, const Destabilization& d) {
  const std::vector<int> x_row = inverse(g.xs), o_row = inverse(g.os);
  const int r = d.row, c = d.column;
  const int other_row = x_row[c] == r ? o_row[c] : x_row[c];
  const int c2 = g.xs[r] == c ? g.os[r] : g.xs[r];
  if (std::abs(other_row - r) != 1 || std::abs(c2 - c) != 1) throw std::invalid_argument("not a destabilization");
  GridDiagram t = g;
  if (t.xs[other_row] == c) t.xs[other_row] = c2;
  else t.os[other_row] = c2;
  std::vector<int> xs, os;
  for (int q = 0; q < g.size; ++q) {
    if (q == r) continue;
    auto squeeze = [c](int col) { return col > c ? col - 1 : col; };
    xs.push_back(squeeze(t.xs[q]));
    os.push_back(squeeze(t.os[q]));
  }
  return GridDiagram::make(std::move(xs), std::move(os));
}

namespace {

bool spans(const GridDiagram& g, int row, int a, int b) {
  return (g.xs[row] == a && g.os[row] == b) || (g.xs[row] == b && g.os[row] == a);
}

}  // namespace

bool band_at(const GridDiagram& g, int row, int col) {
  const int n = g.size;
  if (row < 1 || row + 1 >= n || col < 0 || col + 3 >= n) return false;
  if (!spans(g, row, col, col + 2) || !spans(g, row + 1, col + 1, col + 3)) return false;
  const std::vector<int> x_row = inverse(g.xs), o_row = inverse(g.os);
  const int below = x_row[col + 1] == row + 1 ? o_row[col + 1] : x_row[col + 1];
  const int above = x_row[col + 2] == row ? o_row[col + 2] : x_row[col + 2];
  return below < row && above > row + 1;
}

GridDiagram add_full_twist(const GridDiagram& g, int row, int col) {
  if (!band_at(g, row, col)) throw std::invalid_argument("no twist band at the given square");
  // Columns col+1 and col+2 are cut: their lower ends stay, their upper
  // ends move two places right with everything beyond the band.
  auto lower = [col](int c) { return c > col + 2 ? c + 2 : c; };
  auto upper = [col](int c) { return c > col ? c + 2 : c; };
  std::vector<int> xs, os;
  for (int r = 0; r < g.size; ++r) {
    const bool low = r <= row;
    xs.push_back(low ? lower(g.xs[r]) : upper(g.xs[r]));
    os.push_back(low ? lower(g.os[r]) : upper(g.os[r]));
    if (r != row) continue;
    // Copies of the two band rows, in order.
    const bool x_left_above = g.xs[row + 1] == col + 1;
    xs.push_back(x_left_above ? col + 1 : col + 3);
    os.push_back(x_left_above ? col + 3 : col + 1);
    const bool x_left = g.xs[row] == col;
    xs.push_back(x_left ? col + 2 : col + 4);
    os.push_back(x_left ? col + 4 : col + 2);
  }
  return GridDiagram::make(std::move(xs), std::move(os));
}

GridDiagram remove_full_twist(const GridDiagram& g, int row, int col) {
  if (g.size < 6 || !band_at(g, row, col) || !band_at(g, row + 1, col + 1) || !band_at(g, row + 2, col + 2))
    throw std::invalid_argument("no full twist to remove at the given square");
  std::vector<int> xs, os;
  for (int r = 0; r < g.size; ++r) {
    if (r == row + 1 || r == row + 2) continue;
    auto back = [&](int c) {
      if (r <= row) {
        if (c == col + 3 || c == col + 4) throw std::invalid_argument("no full twist to remove at the given square");
        return c > col + 4 ? c - 2 : c;
      }
      if (c == col + 1 || c == col + 2) throw std::invalid_argument("no full twist to remove at the given square");
      return c > col ? c - 2 : c;
    };
    xs.push_back(back(g.xs[r]));
    os.push_back(back(g.os[r]));
  }
  GridDiagram out = GridDiagram::make(std::move(xs), std::move(os));
  if (!(add_full_twist(out, row, col) == g)) throw std::invalid_argument("no full twist to remove at the given square");
  return out;
}

GridDiagram reflect(const GridDiagram& g) {
  GridDiagram out = g;
  for (int r = 0; r < g.size; ++r) {
    out.xs[r] = g.size - 1 - g.xs[r];
    out.os[r] = g.size - 1 - g.os[r];
  }
  return out;
}

// ------------------------------------------------------------------ drawing

namespace {

// Rectilinear drawing of a Montesinos diagram. Every crossing is drawn
// with its over-strand vertical, so the finished picture, once rows and
// columns are ranked, is a grid diagram. Open strands end in vertical
// stubs: the two north ends point up, the two south ends point down, and
// the ray beyond each stub tip is free of other segments.
class Canvas {
 public:
  struct Point {
    double x, y;
    bool operator==(const Point&) const = default;
  };
  struct Tangle {
    Point nw, ne, se, sw;
  };

  Tangle zero() {
    const double a = fresh_right(), c = fresh_right(), d = fresh_right(), b = fresh_right();
    const double low = fresh_top(), high = fresh_top(), top = fresh_top(), bottom = fresh_bottom();
    add({{a, top}, {a, high}, {b, high}, {b, top}});
    add({{c, bottom}, {c, low}, {d, low}, {d, bottom}});
    return {{a, top}, {b, top}, {d, bottom}, {c, bottom}};
  }

  Tangle infinity() {
    const double a = fresh_right(), b = fresh_right();
    const double top = fresh_top(), bottom = fresh_bottom();
    add({{a, bottom}, {a, top}});
    add({{b, bottom}, {b, top}});
    return {{a, top}, {b, top}, {b, bottom}, {a, bottom}};
  }

  void twist(Tangle& t, long long n, bool vertical) {
    const int look = n > 0 ? 1 : -1;
    for (long long i = 0; i < (n > 0 ? n : -n); ++i) vertical ? below(t, look) : beside(t, look);
  }

  Tangle sum(const Tangle& a, const Tangle& b) {
    join_over(a.ne, b.nw);
    join_under(a.se, b.sw);
    return {a.nw, b.ne, b.se, a.sw};
  }

  void numerator(const Tangle& t) {
    join_over(t.nw, t.ne);
    join_under(t.sw, t.se);
  }

  GridDiagram finish() const;

 private:
  // A crossing hung below the south ends.
  void below(Tangle& t, int look) {
    const double s = t.sw.x, u = t.se.x;
    const double mid = fresh_bottom(), low = fresh_bottom(), tip = fresh_bottom();
    const double left = left_of(s), right = right_of(u);
    if (look > 0) {
      // Over-strand SW-NE crosses at column u.
      add({t.sw, {s, mid}, {right, mid}, {right, tip}});
      add({t.se, {u, low}, {left, low}, {left, tip}});
    } else {
      add({t.sw, {s, low}, {right, low}, {right, tip}});
      add({t.se, {u, mid}, {left, mid}, {left, tip}});
    }
    t.sw = {left, tip};
    t.se = {right, tip};
  }

  // A crossing to the east of the east ends.
  void beside(Tangle& t, int look) {
    const double p = t.ne.x, q = t.se.x;
    const double cap = fresh_top(), cup = fresh_bottom(), top = fresh_top(), bottom = fresh_bottom();
    const double over = fresh_right(), under = fresh_right();
    if (look > 0) {
      add({t.ne, {p, cap}, {under, cap}, {under, bottom}});
      add({t.se, {q, cup}, {over, cup}, {over, top}});
      t.ne = {over, top};
      t.se = {under, bottom};
    } else {
      add({t.ne, {p, cap}, {over, cap}, {over, bottom}});
      add({t.se, {q, cup}, {under, cup}, {under, top}});
      t.ne = {under, top};
      t.se = {over, bottom};
    }
  }

  void join_over(Point a, Point b) {
    const double y = fresh_top();
    add({a, {a.x, y}, {b.x, y}, b});
  }
  void join_under(Point a, Point b) {
    const double y = fresh_bottom();
    add({a, {a.x, y}, {b.x, y}, b});
  }

  double fresh_top() { return ++max_y_; }
  double fresh_bottom() { return --min_y_; }
  double fresh_right() { return max_x_ += 1; }
  double left_of(double x) const {
    double best = x - 1;
    for (double c : columns_) if (c < x && c > best) best = c;
    return (best + x) / 2;
  }
  double right_of(double x) const {
    double best = x + 1;
    for (double c : columns_) if (c > x && c < best) best = c;
    return (best + x) / 2;
  }

  void add(std::vector<Point> path) {
    for (const auto& p : path) columns_.push_back(p.x), max_x_ = std::max(max_x_, p.x);
    paths_.push_back(std::move(path));
  }

  std::vector<std::vector<Point>> paths_;
  std::vector<double> columns_;
  double max_x_ = 0, max_y_ = 0, min_y_ = 0;
};

GridDiagram Canvas::finish() const {
  // Chain the open paths into closed loops through shared end points.
  const int m = static_cast<int>(paths_.size());
  std::vector<char> used(m, 0);
  struct Corner {
    double x, y;
  };
  std::vector<std::vector<Corner>> loops;
  for (int s = 0; s < m; ++s) {
    if (used[s]) continue;
    std::vector<Point> loop = paths_[s];
    used[s] = 1;
    while (!(loop.back() == loop.front())) {
      bool found = false;
      for (int j = 0; j < m && !found; ++j) {
        if (used[j]) continue;
        const auto& p = paths_[j];
        if (p.front() == loop.back()) {
          loop.insert(loop.end(), p.begin() + 1, p.end());
        } else if (p.back() == loop.back()) {
          loop.insert(loop.end(), p.rbegin() + 1, p.rend());
        } else {
          continue;
        }
        used[j] = 1;
        found = true;
      }
      if (!found) throw std::logic_error("grid drawing: open strand");
    }
    loop.pop_back();
    // Keep only the turning points.
    std::vector<Corner> corners;
    const int k = static_cast<int>(loop.size());
    for (int i = 0; i < k; ++i) {
      const Point& a = loop[(i + k - 1) % k];
      const Point& b = loop[i];
      const Point& c = loop[(i + 1) % k];
      const bool straight = (a.x == b.x && b.x == c.x) || (a.y == b.y && b.y == c.y);
      if (!straight) corners.push_back({b.x, b.y});
    }
    loops.push_back(std::move(corners));
  }
  // Rank columns and rows.
  std::vector<double> xs, ys;
  for (const auto& l : loops)
    for (const auto& c : l) xs.push_back(c.x), ys.push_back(c.y);
  auto uniq = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(xs), uniq(ys);
  const int n = static_cast<int>(xs.size());
  if (static_cast<int>(ys.size()) != n) throw std::logic_error("grid drawing: rows and columns differ");
  auto rank = [](const std::vector<double>& v, double x) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  std::vector<int> gx(n, -1), go(n, -1);
  for (const auto& l : loops) {
    // Corners alternate X, O; start on a corner that begins a horizontal run.
    const int k = static_cast<int>(l.size());
    int start = l[0].y == l[1].y ? 0 : 1;
    for (int i = 0; i < k; ++i) {
      const auto& c = l[(start + i) % k];
      const int row = rank(ys, c.y), col = rank(xs, c.x);
      // Horizontal segments run O -> X.
      auto& slot = i % 2 == 0 ? go[row] : gx[row];
      if (slot >= 0) throw std::logic_error("grid drawing: two segments share a row");
      slot = col;
    }
  }
  return GridDiagram::make(std::move(gx), std::move(go));
}

}  // namespace

GridDiagram montesinos_grid(const MontesinosSpec& spec) {
  if (spec.tangles.empty()) throw std::invalid_argument("Montesinos spec needs at least one tangle");
  Canvas canvas;
  auto rational = [&canvas](const Fraction& f) {
    std::vector<long long> cf = continued_fraction(f);
    const int k = static_cast<int>(cf.size());
    Canvas::Tangle t = (k - 1) % 2 == 0 ? canvas.infinity() : canvas.zero();
    for (int i = 0; i < k; ++i)
      if (cf[i] != 0) canvas.twist(t, cf[i], (k - 1 - i) % 2 == 0);
    return t;
  };
  Canvas::Tangle total = rational(spec.tangles[0]);
  for (std::size_t i = 1; i < spec.tangles.size(); ++i) total = canvas.sum(total, rational(spec.tangles[i]));
  if (spec.e != 0) canvas.twist(total, spec.e, false);
  canvas.numerator(total);
  return canvas.finish();
}

// ------------------------------------------------------------------ text

GridDiagram parse_grid(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto word = [&](std::string_view w) {
    skip();
    if (text.substr(pos, w.size()) != w) throw ParseError("expected '" + std::string(w) + "'", pos);
    pos += w.size();
  };
  auto number = [&]() -> int {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 6) throw ParseError("expected a positive integer", start);
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  auto row = [&](int n) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i) {
      if (i) {
        skip();
        if (pos < text.size() && text[pos] == ',') ++pos;
      }
      std::size_t at = pos;
      int c = number();
      if (c < 1 || c > n) throw ParseError("column out of range", at);
      v.push_back(c - 1);
    }
    return v;
  };
  word("grid");
  const int n = number();
  if (n < 2) throw ParseError("grid size must be at least 2", pos);
  word("X:");
  std::vector<int> xs = row(n);
  word("O:");
  std::vector<int> os = row(n);
  skip();
  if (pos != text.size()) throw ParseError("trailing input", pos);
  try {
    return GridDiagram::make(std::move(xs), std::move(os));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), pos);
  }
}

std::string to_string(const GridDiagram& g) {
  std::string out = "grid " + std::to_string(g.size) + "\nX:";
  for (int r = 0; r < g.size; ++r) out += (r ? "," : " ") + std::to_string(g.xs[r] + 1);
  out += "\nO:";
  for (int r = 0; r < g.size; ++r) out += (r ? "," : " ") + std::to_string(g.os[r] + 1);
  return out + "\n";
}

nlohmann::json to_json(const GridDiagram& g) {
  std::vector<int> xs(g.xs), os(g.os);
  for (int& v : xs) ++v;
  for (int& v : os) ++v;
  return {{"size", g.size}, {"X", xs}, {"O", os}};
}

GridDiagram grid_from_json(const nlohmann::json& j) {
  std::vector<int> xs = j.at("X").get<std::vector<int>>(), os = j.at("O").get<std::vector<int>>();
  for (int& v : xs) --v;
  for (int& v : os) --v;
  if (j.contains("size") && j.at("size").get<int>() != static_cast<int>(xs.size()))
    throw std::invalid_argument("grid: size does not match rows");
  return GridDiagram::make(std::move(xs), std::move(os));
}

// ------------------------------------------------------------ templates

namespace {

// Minimal grids found by search (tools/gridsearch.cpp): the n = 0 grid, and
// an n = 1 grid whose twist band at (row, col) is repeated for larger n. A
// mirrored entry carries its band on the reflected grid.
struct TemplateEntry {
  int theorem;
  int variant;
  std::vector<int> xs0, os0;
  std::vector<int> xs1, os1;
  bool mirrored;
  int row, col;
};

const std::vector<TemplateEntry>& template_table() {
  static const std::vector<TemplateEntry> table = {
    {1, 0, {1, 2, 6, 3, 7, 4, 5, 9, 0, 10, 8}, {7, 0, 1, 9, 2, 10, 3, 4, 8, 6, 5},
     {8, 11, 2, 12, 9, 10, 4, 0, 1, 5, 7, 6, 3}, {4, 7, 8, 10, 11, 5, 9, 6, 12, 0, 3, 2, 1}, true, 3, 0},
    {1, 1, {1, 0, 3, 6, 9, 4, 5, 2, 7, 8, 10}, {9, 5, 8, 10, 2, 1, 3, 0, 4, 6, 7},
     {8, 9, 1, 12, 2, 10, 11, 6, 4, 3, 5, 7, 0}, {2, 7, 8, 3, 11, 12, 9, 0, 10, 6, 1, 4, 5}, true, 5, 0},
    {2, 0, {8, 4, 3, 0, 10, 1, 2, 5, 9, 7, 6}, {10, 9, 8, 5, 4, 7, 0, 1, 6, 3, 2},
     {9, 6, 5, 12, 11, 1, 0, 3, 4, 7, 2, 10, 8}, {0, 12, 11, 10, 9, 7, 6, 8, 1, 3, 5, 4, 2}, true, 3, 0},
    {2, 1, {5, 4, 2, 1, 0, 8, 9, 7, 6, 10, 3}, {2, 0, 9, 7, 5, 10, 6, 3, 1, 4, 8},
     {11, 2, 1, 10, 9, 6, 4, 3, 0, 12, 7, 5, 8}, {7, 0, 8, 12, 11, 10, 9, 6, 5, 4, 2, 1, 3}, true, 3, 0},
    {3, 0, {0, 11, 1, 9, 5, 7, 6, 10, 2, 4, 3, 8}, {2, 6, 10, 11, 0, 3, 8, 7, 9, 1, 5, 4},
     {0, 1, 5, 9, 8, 12, 2, 13, 10, 4, 3, 7, 6, 11}, {2, 10, 0, 13, 3, 6, 9, 11, 12, 1, 5, 4, 8, 7}, true, 7, 0},
    {3, 1, {0, 6, 4, 7, 1, 5, 2, 9, 8, 3, 10, 11}, {4, 3, 10, 5, 6, 0, 8, 7, 1, 11, 2, 9},
     {10, 7, 8, 0, 5, 4, 6, 13, 12, 1, 3, 2, 9, 11}, {8, 9, 6, 4, 3, 7, 12, 11, 2, 5, 10, 0, 13, 1}, true, 1, 4},
    {4, 0, {8, 9, 11, 10, 0, 4, 7, 3, 5, 2, 1, 6}, {5, 7, 8, 2, 6, 9, 11, 10, 1, 0, 3, 4},
     {3, 5, 2, 6, 1, 8, 13, 12, 9, 11, 10, 0, 4, 7}, {12, 1, 0, 4, 3, 5, 11, 10, 7, 8, 2, 6, 9, 13}, true, 6, 0},
    {4, 1, {4, 9, 10, 0, 11, 1, 2, 6, 5, 3, 8, 7}, {10, 11, 3, 5, 4, 8, 0, 9, 1, 7, 6, 2},
     {1, 2, 3, 6, 5, 9, 13, 12, 11, 10, 0, 4, 7, 8}, {12, 0, 5, 4, 1, 3, 11, 10, 7, 2, 6, 8, 9, 13}, true, 6, 0},
    {5, 0, {3, 11, 1, 10, 9, 0, 8, 5, 7, 4, 2, 6}, {10, 4, 9, 7, 3, 6, 1, 11, 2, 0, 5, 8},
     {3, 13, 12, 11, 5, 2, 10, 8, 0, 9, 6, 7, 4, 1}, {12, 11, 10, 4, 9, 8, 7, 3, 5, 2, 13, 1, 0, 6}, true, 1, 0},
    {5, 1, {8, 3, 2, 7, 1, 6, 5, 11, 9, 0, 10, 4}, {2, 1, 9, 11, 8, 10, 7, 6, 4, 5, 3, 0},
     {2, 1, 0, 7, 13, 12, 6, 4, 9, 5, 11, 3, 10, 8}, {6, 3, 2, 1, 5, 0, 13, 11, 12, 10, 9, 8, 7, 4}, true, 1, 10},
    {6, 0, {9, 5, 4, 6, 11, 2, 3, 0, 1, 10, 8, 7}, {11, 10, 9, 0, 5, 8, 1, 2, 6, 7, 4, 3},
     {13, 12, 9, 11, 10, 7, 6, 4, 1, 0, 2, 5, 3, 8}, {9, 6, 5, 13, 12, 4, 0, 11, 8, 3, 7, 10, 1, 2}, true, 3, 0},
    {6, 1, {1, 0, 9, 6, 2, 5, 7, 3, 4, 11, 10, 8}, {5, 3, 1, 11, 10, 0, 4, 6, 9, 8, 7, 2},
     {9, 2, 0, 8, 6, 1, 4, 13, 12, 11, 7, 3, 5, 10}, {1, 4, 3, 2, 13, 12, 0, 11, 10, 9, 5, 6, 8, 7}, true, 7, 0},
    {7, 0, {10, 11, 4, 7, 5, 2, 3, 0, 1, 9, 8, 6}, {5, 9, 10, 0, 11, 8, 1, 2, 7, 6, 4, 3},
     {9, 10, 3, 6, 5, 13, 12, 1, 2, 11, 0, 8, 7, 4}, {5, 8, 9, 13, 12, 11, 10, 7, 0, 1, 6, 4, 3, 2}, true, 5, 0},
    {7, 1, {2, 3, 0, 1, 4, 7, 8, 11, 10, 6, 9, 5}, {7, 1, 2, 6, 8, 9, 3, 5, 4, 0, 11, 10},
     {12, 0, 5, 6, 8, 11, 10, 7, 3, 1, 4, 13, 9, 2}, {1, 3, 2, 4, 5, 13, 12, 11, 10, 6, 9, 8, 7, 0}, true, 5, 0},
    {7, 2, {7, 9, 6, 5, 10, 11, 0, 1, 4, 3, 2, 8}, {11, 3, 1, 8, 7, 9, 2, 10, 6, 0, 5, 4},
     {13, 12, 0, 11, 10, 9, 8, 1, 3, 7, 2, 4, 6, 5}, {7, 3, 6, 13, 12, 4, 11, 10, 0, 9, 5, 1, 2, 8}, true, 3, 0},
  };
  return table;
}

}  // namespace

GridDiagram family_template(int theorem, int variant, int n) {
  if (n < 0) throw DomainError("n must be nonnegative");
  family(theorem, variant, 0);  // validates the indices
  for (const TemplateEntry& e : template_table()) {
    if (e.theorem != theorem || e.variant != variant) continue;
    if (n == 0) return GridDiagram::make(e.xs0, e.os0);
    GridDiagram g = GridDiagram::make(e.xs1, e.os1);
    if (e.mirrored) g = reflect(g);
    for (int i = 1; i < n; ++i) g = add_full_twist(g, e.row, e.col);
    return e.mirrored ? reflect(g) : g;
  }
  throw DomainError("no grid template for theorem " + std::to_string(theorem) + " variant " + std::to_string(variant));
}

GridDiagram family_template(int theorem, int n) { return family_template(theorem, 0, n); }

ArcIndexBounds arc_index_bounds(int theorem, int variant, int n, const SkeinConfig& cfg) {
  ArcIndexBounds b;
  b.knot = family(theorem, variant, n);
  b.lower = breadth_a(kauffman_f(build_diagram(b.knot), cfg)) + 2;
  b.upper = arc_count(family_template(theorem, variant, n));
  return b;
}

}  // namespace mutarc
