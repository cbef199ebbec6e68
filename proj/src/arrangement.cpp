#include "svc/arrangement.hpp"
#include "svc/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace svc {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 gcd64(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

struct Dir {
  i64 x;
  i64 y;
};

i128 cross(Dir a, Dir b) { return i128(a.x) * b.y - i128(a.y) * b.x; }

bool upper_half(Dir a) { return a.y > 0 || (a.y == 0 && a.x > 0); }

/// Counterclockwise order of directions starting at angle 0.
bool angle_less(Dir a, Dir b) {
  bool ua = upper_half(a), ub = upper_half(b);
  if (ua != ub)
    return ua;
  return cross(a, b) > 0;
}

struct Segment {
  Dir a;    ///< start, integer point
  Dir b;    ///< end
  Dir dir;  ///< primitive direction from a to b
};

struct OnSegment {
  i64 num;  ///< parameter num / den along the segment
  i64 den;
  Point2 p;
};

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t(0));
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool Point2::operator<(const Point2 &o) const {
  i128 l = i128(x) * o.d, r = i128(o.x) * d;
  if (l != r)
    return l < r;
  return i128(y) * o.d < i128(o.y) * d;
}

Point2 make_point(i64 x, i64 y, i64 d) {
  if (d == 0)
    throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (d < 0) {
    x = -x;
    y = -y;
    d = -d;
  }
  i64 g = gcd64(gcd64(x, y), d);
  return Point2{x / g, y / g, d / g};
}

SegmentArrangement
segment_arrangement(const std::vector<std::pair<i64, i64>> &input) {
  std::vector<std::pair<i64, i64>> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (const auto &[x, y] : pts)
    if (x > kMaxArrangementCoord || -x > kMaxArrangementCoord ||
        y > kMaxArrangementCoord || -y > kMaxArrangementCoord)
      throw Error(ErrorKind::Overflow, "arrangement coordinate out of range");

  // maximal segment per supporting line
  std::map<std::tuple<i64, i64, i64>, std::pair<std::size_t, std::size_t>> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      i64 dx = pts[j].first - pts[i].first, dy = pts[j].second - pts[i].second;
      i64 g = gcd64(dx, dy);
      dx /= g;
      dy /= g;  // pts sorted, so (dx, dy) is lexicographically positive
      i64 c = dy * pts[i].first - dx * pts[i].second;
      auto key = std::make_tuple(dx, dy, c);
      auto it = lines.find(key);
      if (it == lines.end()) {
        lines.emplace(key, std::make_pair(i, j));
      } else {
        it->second.first = std::min(it->second.first, i);
        it->second.second = std::max(it->second.second, j);
      }
    }
  std::vector<Segment> segs;
  for (const auto &[key, ends] : lines) {
    const auto &[dx, dy, c] = key;
    segs.push_back(Segment{{pts[ends.first].first, pts[ends.first].second},
                           {pts[ends.second].first, pts[ends.second].second},
                           {dx, dy}});
  }

  std::vector<std::vector<OnSegment>> on(segs.size());
  for (std::size_t s = 0; s < segs.size(); ++s) {
    on[s].push_back({0, 1, make_point(segs[s].a.x, segs[s].a.y)});
    on[s].push_back({1, 1, make_point(segs[s].b.x, segs[s].b.y)});
  }
  for (std::size_t s = 0; s < segs.size(); ++s) {
    const Segment &u = segs[s];
    Dir r{u.b.x - u.a.x, u.b.y - u.a.y};
    for (std::size_t t = s + 1; t < segs.size(); ++t) {
      const Segment &v = segs[t];
      Dir q{v.b.x - v.a.x, v.b.y - v.a.y};
      i64 den = static_cast<i64>(cross(r, q));
      if (den == 0)
        continue;
      Dir ca{v.a.x - u.a.x, v.a.y - u.a.y};
      i64 tn = static_cast<i64>(cross(ca, q));
      i64 un = static_cast<i64>(cross(ca, r));
      if (den < 0) {
        den = -den;
        tn = -tn;
        un = -un;
      }
      if (tn < 0 || tn > den || un < 0 || un > den)
        continue;
      Point2 p = make_point(u.a.x * den + tn * r.x, u.a.y * den + tn * r.y, den);
      on[s].push_back({tn, den, p});
      on[t].push_back({un, den, p});
    }
  }

  SegmentArrangement arr;
  arr.segmentCount = segs.size();
  for (const auto &list : on)
    for (const OnSegment &o : list)
      arr.vertices.push_back(o.p);
  for (const auto &[x, y] : pts)
    arr.vertices.push_back(make_point(x, y));
  std::sort(arr.vertices.begin(), arr.vertices.end());
  arr.vertices.erase(std::unique(arr.vertices.begin(), arr.vertices.end()),
                     arr.vertices.end());
  auto index_of = [&](const Point2 &p) {
    return static_cast<std::size_t>(
        std::lower_bound(arr.vertices.begin(), arr.vertices.end(), p) -
        arr.vertices.begin());
  };

  // half-edges 2e: first -> second, 2e + 1: second -> first
  std::vector<Dir> heDir;
  for (std::size_t s = 0; s < segs.size(); ++s) {
    auto &list = on[s];
    std::sort(list.begin(), list.end(), [](const OnSegment &a, const OnSegment &b) {
      return i128(a.num) * b.den < i128(b.num) * a.den;
    });
    for (std::size_t k = 0; k + 1 < list.size(); ++k) {
      if (list[k].p == list[k + 1].p)
        continue;
      arr.edges.emplace_back(index_of(list[k].p), index_of(list[k + 1].p));
      heDir.push_back(segs[s].dir);
      heDir.push_back(Dir{-segs[s].dir.x, -segs[s].dir.y});
    }
  }
  const std::size_t nv = arr.vertices.size(), ne = arr.edges.size();
  auto origin = [&](std::size_t h) {
    return h % 2 == 0 ? arr.edges[h / 2].first : arr.edges[h / 2].second;
  };
  std::vector<std::vector<std::size_t>> around(nv);
  for (std::size_t h = 0; h < 2 * ne; ++h)
    around[origin(h)].push_back(h);
  std::vector<std::size_t> posAround(2 * ne);
  for (auto &list : around) {
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      return angle_less(heDir[a], heDir[b]);
    });
    for (std::size_t k = 0; k < list.size(); ++k)
      posAround[list[k]] = k;
  }
  auto next = [&](std::size_t h) {
    std::size_t twin = h ^ 1;
    const auto &list = around[origin(twin)];
    return list[(posAround[twin] + list.size() - 1) % list.size()];
  };

  std::vector<bool> seen(2 * ne, false);
  for (std::size_t h0 = 0; h0 < 2 * ne; ++h0) {
    if (seen[h0])
      continue;
    std::vector<std::size_t> cycle;
    for (std::size_t h = h0; !seen[h]; h = next(h)) {
      seen[h] = true;
      cycle.push_back(h);
    }
    Rat area2 = 0;
    for (std::size_t h : cycle) {
      const Point2 &p = arr.vertices[origin(h)];
      const Point2 &q = arr.vertices[origin(h ^ 1)];
      area2 += Rat(Int(static_cast<long>(p.x)), Int(static_cast<long>(p.d))) *
                   Rat(Int(static_cast<long>(q.y)), Int(static_cast<long>(q.d))) -
               Rat(Int(static_cast<long>(p.y)), Int(static_cast<long>(p.d))) *
                   Rat(Int(static_cast<long>(q.x)), Int(static_cast<long>(q.d)));
    }
    if (area2 <= 0)
      continue;  // outer boundary of a component
    ArrangementFace face;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::size_t in = cycle[(k + cycle.size() - 1) % cycle.size()];
      std::size_t out = cycle[k];
      face.boundary.push_back(origin(out));
      i128 turn = cross(heDir[in], heDir[out]);
      if (turn != 0)
        ++face.sides;
      if (turn < 0)
        arr.convexFaces = false;
    }
    std::rotate(face.boundary.begin(),
                std::min_element(face.boundary.begin(), face.boundary.end()),
                face.boundary.end());
    arr.faces.push_back(std::move(face));
  }
  std::sort(arr.faces.begin(), arr.faces.end(),
            [](const ArrangementFace &a, const ArrangementFace &b) {
              return a.boundary < b.boundary;
            });

  UnionFind uf(nv);
  for (const auto &[a, b] : arr.edges)
    uf.unite(a, b);
  std::size_t components = 0;
  for (std::size_t v = 0; v < nv; ++v)
    if (uf.find(v) == v)
      ++components;
  arr.eulerHolds = static_cast<long>(nv) - static_cast<long>(ne) +
                       static_cast<long>(arr.faces.size()) ==
                   static_cast<long>(components);
  return arr;
}

}  // namespace svc
