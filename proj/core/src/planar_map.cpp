#include "mutarc/planar_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace mutarc::pmap {

PlanarMap reduce(const PlanarMap& m, const std::vector<int>& internal, std::vector<int>* old_to_new) {
  const int n = static_cast<int>(m.mate.size());
  const int c = m.crossings();
  std::vector<int> new_crossing(c, -1);
  int kept = 0;
  for (int x = 0; x < c; ++x)
    if (internal[dart_of(x, 0)] < 0) new_crossing[x] = kept++;

  auto removed = [&](int d) { return internal[d] >= 0; };
  auto renum = [&](int d) { return dart_of(new_crossing[crossing_of(d)], slot_of(d)); };

  PlanarMap out;
  out.mate.assign(4 * kept, -1);
  out.free_loops = m.free_loops;
  std::vector<char> seen(n, 0);
  for (int u = 0; u < n; ++u) {
    if (removed(u)) continue;
    int d = m.mate[u];
    while (removed(d)) {
      seen[d] = 1;
      int e = internal[d];
      seen[e] = 1;
      d = m.mate[e];
    }
    out.mate[renum(u)] = renum(d);
  }
  for (int r = 0; r < n; ++r) {
    if (!removed(r) || seen[r]) continue;
    ++out.free_loops;
    int d = r;
    do {
      seen[d] = 1;
      int e = internal[d];
      seen[e] = 1;
      d = m.mate[e];
    } while (d != r);
  }
  if (old_to_new) {
    old_to_new->assign(n, -1);
    for (int d = 0; d < n; ++d)
      if (!removed(d)) (*old_to_new)[d] = renum(d);
  }
  return out;
}

PlanarMap switched(const PlanarMap& m, int crossing) {
  // New slot s is old slot s+1; relabel every dart reference accordingly.
  auto fix = [crossing](int d) { return crossing_of(d) == crossing ? dart_of(crossing, slot_of(d) + 3) : d; };
  PlanarMap out;
  out.free_loops = m.free_loops;
  out.mate.resize(m.mate.size());
  for (int d = 0; d < static_cast<int>(m.mate.size()); ++d) out.mate[fix(d)] = fix(m.mate[d]);
  return out;
}

std::vector<std::vector<int>> connected_parts(const PlanarMap& m) {
  const int c = m.crossings();
  std::vector<int> part(c, -1);
  std::vector<std::vector<int>> parts;
  for (int s = 0; s < c; ++s) {
    if (part[s] >= 0) continue;
    std::vector<int> members{s};
    part[s] = static_cast<int>(parts.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      int x = members[i];
      for (int k = 0; k < 4; ++k) {
        int y = crossing_of(m.mate[dart_of(x, k)]);
        if (part[y] < 0) {
          part[y] = part[s];
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    parts.push_back(std::move(members));
  }
  return parts;
}

PlanarMap extract(const PlanarMap& m, const std::vector<int>& crossings) {
  std::vector<int> idx(m.crossings(), -1);
  for (std::size_t i = 0; i < crossings.size(); ++i) idx[crossings[i]] = static_cast<int>(i);
  PlanarMap out;
  out.mate.resize(4 * crossings.size());
  for (std::size_t i = 0; i < crossings.size(); ++i)
    for (int k = 0; k < 4; ++k) {
      int d = m.mate[dart_of(crossings[i], k)];
      if (idx[crossing_of(d)] < 0) throw std::logic_error("extract: crossing set not closed");
      out.mate[dart_of(static_cast<int>(i), k)] = dart_of(idx[crossing_of(d)], slot_of(d));
    }
  return out;
}

int face_count(const PlanarMap& m) {
  const int n = static_cast<int>(m.mate.size());
  std::vector<char> seen(n, 0);
  int faces = 0;
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    ++faces;
    int e = d;
    do {
      seen[e] = 1;
      e = prev_slot(m.mate[e]);
    } while (e != d);
  }
  return faces;
}

std::vector<std::uint16_t> connected_code(const PlanarMap& m) {
  const int c = m.crossings();
  std::vector<std::uint16_t> best, cur;
  best.reserve(5 * c);
  cur.reserve(5 * c);
  std::vector<int> id(c), entry(c), order(c);
  for (int d0 = 0; d0 < 4 * c; ++d0) {
    std::fill(id.begin(), id.end(), -1);
    cur.clear();
    bool better = best.empty();
    bool worse = false;
    auto emit = [&](std::uint16_t v) {
      if (!better) {
        std::uint16_t b = best[cur.size()];
        if (v < b)
          better = true;
        else if (v > b)
          worse = true;
      }
      cur.push_back(v);
    };
    int head = 0, tail = 0;
    id[crossing_of(d0)] = tail;
    entry[crossing_of(d0)] = slot_of(d0);
    order[tail++] = crossing_of(d0);
    while (head < tail && !worse) {
      int x = order[head++];
      emit(static_cast<std::uint16_t>(entry[x] & 1));
      for (int k = 0; k < 4 && !worse; ++k) {
        int md = m.mate[dart_of(x, entry[x] + k)];
        int y = crossing_of(md);
        if (id[y] < 0) {
          id[y] = tail;
          entry[y] = slot_of(md);
          order[tail++] = y;
        }
        emit(static_cast<std::uint16_t>(id[y] * 4 + ((slot_of(md) - entry[y]) & 3)));
      }
    }
    if (!worse && better) best = cur;
  }
  return best;
}

std::string canonical_code(const PlanarMap& m) {
  std::vector<std::vector<std::uint16_t>> codes;
  for (const auto& part : connected_parts(m)) codes.push_back(connected_code(extract(m, part)));
  std::sort(codes.begin(), codes.end());
  std::string out;
  auto put = [&out](unsigned v) {
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>(v & 0xff));
  };
  put(static_cast<unsigned>(codes.size()));
  for (const auto& code : codes) {
    put(static_cast<unsigned>(code.size()));
    for (auto v : code) put(v);
  }
  put(static_cast<unsigned>(m.free_loops));
  return out;
}

}  // namespace mutarc::pmap
