#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

namespace {

Int dotp(const IntVec &a, const IntVec &b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

void subsets_of_size(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t> &)> &fn) {
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (idx.size() == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

/// Nonnegative solution of sum l_i v_i = x for independent v_i, by
/// elimination on the augmented system.
bool nonneg_combination(const std::vector<IntVec> &vs, const IntVec &x) {
  const std::size_t k = vs.size(), m = x.size();
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(k + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < k; ++c)
      a[r][c] = vs[c][r];
    a[r][k] = x[r];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivotCol;
  for (std::size_t c = 0; c < k && row < m; ++c) {
    std::size_t p = row;
    while (p < m && a[p][c] == 0)
      ++p;
    if (p == m)
      return false;  // dependent
    std::swap(a[p], a[row]);
    for (std::size_t r = 0; r < m; ++r)
      if (r != row && a[r][c] != 0) {
        Rat f = a[r][c] / a[row][c];
        for (std::size_t cc = c; cc <= k; ++cc)
          a[r][cc] -= f * a[row][cc];
      }
    pivotCol.push_back(c);
    ++row;
  }
  if (pivotCol.size() != k)
    return false;
  for (std::size_t r = row; r < m; ++r)
    if (a[r][k] != 0)
      return false;
  for (std::size_t r = 0; r < k; ++r)
    if (a[r][k] / a[r][r] < 0)
      return false;
  return true;
}

bool independent(const std::vector<IntVec> &vs, std::size_t dim) {
  return vs.size() <= dim && minor_gcd(vs, dim) != 0;
}

/// Caratheodory: some independent subset has a nonnegative combination.
bool in_cone_generic(const std::vector<IntVec> &vs, const IntVec &x) {
  const std::size_t n = vs.size(), m = x.size();
  if (std::all_of(x.begin(), x.end(), [](const Int &v) { return v == 0; }))
    return true;
  for (std::size_t k = 1; k <= std::min(n, m); ++k) {
    bool found = false;
    subsets_of_size(n, k, [&](const std::vector<std::size_t> &idx) {
      if (found)
        return;
      std::vector<IntVec> sub;
      for (std::size_t i : idx)
        sub.push_back(vs[i]);
      if (independent(sub, m) && nonneg_combination(sub, x))
        found = true;
    });
    if (found)
      return true;
  }
  return false;
}

void box_points(const std::vector<Int> &lo, const std::vector<Int> &hi,
                const std::function<void(const IntVec &)> &fn) {
  IntVec x = lo;
  while (true) {
    fn(x);
    std::size_t k = x.size();
    while (k > 0 && x[k - 1] == hi[k - 1]) {
      x[k - 1] = lo[k - 1];
      --k;
    }
    if (k == 0)
      return;
    x[k - 1] += 1;
  }
}

}  // namespace

Int det(const std::vector<IntVec> &rows) {
  const std::size_t n = rows.size();
  if (n == 0)
    return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j])
          ++inversions;
    Int term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i)
      term *= rows[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Int minor_gcd(const std::vector<IntVec> &vectors, std::size_t dim) {
  const std::size_t k = vectors.size();
  Int g = 0;
  subsets_of_size(dim, k, [&](const std::vector<std::size_t> &cols) {
    std::vector<IntVec> sq;
    for (const IntVec &v : vectors) {
      IntVec r;
      for (std::size_t c : cols)
        r.push_back(v[c]);
      sq.push_back(r);
    }
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Int(det(sq)).get_mpz_t());
  });
  return g;
}

std::vector<IntVec> facets(const std::vector<IntVec> &vectors, std::size_t dim) {
  std::set<IntVec> out;
  auto consider = [&](IntVec h) {
    Int g = 0;
    for (const Int &x : h)
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0)
      return;
    for (Int &x : h)
      x /= g;
    bool pos = true, neg = true;
    for (const IntVec &v : vectors) {
      Int d = dotp(h, v);
      if (d < 0)
        pos = false;
      if (d > 0)
        neg = false;
    }
    if (pos)
      out.insert(h);
    if (neg) {
      for (Int &x : h)
        x = -x;
      out.insert(h);
    }
  };
  if (dim == 1) {
    consider({1});
    return {out.begin(), out.end()};
  }
  subsets_of_size(vectors.size(), dim - 1, [&](const std::vector<std::size_t> &idx) {
    IntVec h(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      std::vector<IntVec> minor;
      for (std::size_t i : idx) {
        IntVec r;
        for (std::size_t c = 0; c < dim; ++c)
          if (c != k)
            r.push_back(vectors[i][c]);
        minor.push_back(r);
      }
      h[k] = (k % 2 ? -1 : 1) * det(minor);
    }
    consider(h);
  });
  return {out.begin(), out.end()};
}

bool in_cone(const std::vector<IntVec> &facetNormals, const IntVec &p) {
  for (const IntVec &h : facetNormals)
    if (dotp(h, p) < 0)
      return false;
  return true;
}

IntVec positive_functional(const std::vector<IntVec> &vectors, std::size_t dim) {
  std::vector<Int> lo(dim, -4), hi(dim, 4);
  IntVec found;
  box_points(lo, hi, [&](const IntVec &h) {
    if (!found.empty())
      return;
    for (const IntVec &v : vectors)
      if (dotp(h, v) <= 0)
        return;
    found = h;
  });
  if (found.empty())
    throw std::runtime_error("oracle: no positive functional in the search box");
  return found;
}

std::vector<IntVec> cone_points(const std::vector<IntVec> &vectors, std::size_t dim,
                                const IntVec &h, const Int &bound) {
  Int minH = dotp(h, vectors.front()), maxAbs = 0;
  for (const IntVec &v : vectors) {
    minH = std::min(minH, dotp(h, v));
    for (const Int &x : v)
      maxAbs = std::max(maxAbs, Int(abs(x)));
  }
  Int r = (bound / minH + 1) * maxAbs;
  std::vector<Int> lo(dim, -r), hi(dim, r);
  std::vector<IntVec> out;
  box_points(lo, hi, [&](const IntVec &x) {
    Int hx = dotp(h, x);
    if (hx > 0 && hx <= bound && in_cone_generic(vectors, x))
      out.push_back(x);
  });
  return out;
}

std::vector<IntVec> hilbert_basis(const std::vector<IntVec> &vectors,
                                  std::size_t dim) {
  IntVec h = positive_functional(vectors, dim);
  Int bound = 0;
  for (const IntVec &v : vectors)
    bound += dotp(h, v);
  std::vector<IntVec> pts = cone_points(vectors, dim, h, bound);
  std::set<IntVec> all(pts.begin(), pts.end());
  std::vector<IntVec> out;
  for (const IntVec &x : pts) {
    bool reducible = false;
    for (const IntVec &y : pts) {
      if (dotp(h, y) >= dotp(h, x))
        continue;
      IntVec z(dim);
      for (std::size_t k = 0; k < dim; ++k)
        z[k] = x[k] - y[k];
      if (all.count(z)) {
        reducible = true;
        break;
      }
    }
    if (!reducible)
      out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool monoid_member(const IntVec &p, const std::vector<IntVec> &generators) {
  const std::size_t dim = p.size();
  if (std::all_of(p.begin(), p.end(), [](const Int &x) { return x == 0; }))
    return true;
  if (generators.empty())
    return false;
  IntVec h = positive_functional(generators, dim);
  Int target = dotp(h, p);
  std::set<IntVec> seen;
  std::deque<IntVec> queue{IntVec(dim, 0)};
  while (!queue.empty()) {
    IntVec x = queue.front();
    queue.pop_front();
    if (x == p)
      return true;
    for (const IntVec &g : generators) {
      IntVec y(dim);
      for (std::size_t k = 0; k < dim; ++k)
        y[k] = x[k] + g[k];
      if (dotp(h, y) <= target && seen.insert(y).second)
        queue.push_back(y);
    }
  }
  return false;
}

bool supernormal(const std::vector<IntVec> &b, std::size_t dim) {
  const std::size_t n = b.size();
  IntVec h = positive_functional(b, dim);
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    std::vector<IntVec> sub;
    Int bound = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        sub.push_back(b[i]);
        bound += dotp(h, b[i]);
      }
    std::vector<IntVec> gens;
    for (const IntVec &v : b)
      if (in_cone_generic(sub, v))
        gens.push_back(v);
    for (const IntVec &x : cone_points(sub, dim, h, bound))
      if (!monoid_member(x, gens))
        return false;
  }
  return true;
}

namespace {

struct QPoint {
  Rat x, y;
  bool operator<(const QPoint &o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
  bool operator==(const QPoint &o) const { return x == o.x && y == o.y; }
};

Rat cross(const QPoint &o, const QPoint &a, const QPoint &b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Upper half (angle in [0, pi)) first, then by cross product.
bool angle_less(const QPoint &d1, const QPoint &d2) {
  auto upper = [](const QPoint &d) { return d.y > 0 || (d.y == 0 && d.x > 0); };
  bool u1 = upper(d1), u2 = upper(d2);
  if (u1 != u2)
    return u1;
  return d1.x * d2.y - d1.y * d2.x > 0;
}

}  // namespace

PlanarCensus planar_census(const std::vector<std::pair<long, long>> &points) {
  using P = std::pair<long, long>;
  auto cross2 = [](const P &o, const P &a, const P &b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<P, P>> segs;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      segs.emplace_back(points[i], points[j]);

  // points on each segment, keyed by the parameter along it
  std::vector<std::vector<std::pair<Rat, QPoint>>> on(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto &[p, q] = segs[i];
    long len = q.first != p.first ? std::abs(q.first - p.first) : std::abs(q.second - p.second);
    for (const P &v : points) {
      if (cross2(p, q, v) != 0)
        continue;
      long t = q.first != p.first ? (v.first - p.first) * (q.first > p.first ? 1 : -1)
                                  : (v.second - p.second) * (q.second > p.second ? 1 : -1);
      if (t >= 0 && t <= len)
        on[i].emplace_back(Rat(t, len), QPoint{Rat(v.first), Rat(v.second)});
    }
  }
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto &[p, q] = segs[i];
      const auto &[r, t] = segs[j];
      long dx1 = q.first - p.first, dy1 = q.second - p.second;
      long dx2 = t.first - r.first, dy2 = t.second - r.second;
      long den = dx1 * dy2 - dy1 * dx2;
      if (den == 0)
        continue;
      long ex = r.first - p.first, ey = r.second - p.second;
      long tn = ex * dy2 - ey * dx2, un = ex * dy1 - ey * dx1;
      if (den < 0) {
        den = -den;
        tn = -tn;
        un = -un;
      }
      if (tn <= 0 || tn >= den || un <= 0 || un >= den)
        continue; // crossings at endpoints are lattice points, already listed
      Rat a(tn, den), b(un, den);
      a.canonicalize();
      b.canonicalize();
      QPoint x{Rat(p.first) + a * dx1, Rat(p.second) + a * dy1};
      on[i].emplace_back(a, x);
      on[j].emplace_back(b, x);
    }

  std::set<QPoint> vertices;
  std::set<std::pair<QPoint, QPoint>> edges;
  for (auto &list : on) {
    std::sort(list.begin(), list.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    for (std::size_t k = 0; k < list.size(); ++k) {
      vertices.insert(list[k].second);
      if (k + 1 == list.size() || list[k].second == list[k + 1].second)
        continue;
      QPoint a = list[k].second, b = list[k + 1].second;
      if (b < a)
        std::swap(a, b);
      edges.insert({a, b});
    }
  }

  std::vector<QPoint> vs(vertices.begin(), vertices.end());
  auto id = [&](const QPoint &v) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<std::vector<std::size_t>> around(vs.size());
  for (const auto &[a, b] : edges) {
    std::size_t ia = id(a), ib = id(b);
    around[ia].push_back(ib);
    around[ib].push_back(ia);
  }
  for (std::size_t v = 0; v < vs.size(); ++v)
    std::sort(around[v].begin(), around[v].end(), [&](std::size_t a, std::size_t b) {
      return angle_less({vs[a].x - vs[v].x, vs[a].y - vs[v].y},
                        {vs[b].x - vs[v].x, vs[b].y - vs[v].y});
    });

  PlanarCensus census;
  census.vertices = vs.size();
  census.edges = edges.size();
  // half-edge (v, k): from v to its k-th neighbour
  std::vector<std::vector<bool>> used(vs.size());
  for (std::size_t v = 0; v < vs.size(); ++v)
    used[v].assign(around[v].size(), false);
  for (std::size_t v0 = 0; v0 < vs.size(); ++v0)
    for (std::size_t k0 = 0; k0 < around[v0].size(); ++k0) {
      if (used[v0][k0])
        continue;
      std::vector<std::size_t> cycle;
      std::size_t v = v0, k = k0;
      while (!used[v][k]) {
        used[v][k] = true;
        cycle.push_back(v);
        std::size_t w = around[v][k];
        const auto &nbrs = around[w];
        std::size_t back = std::find(nbrs.begin(), nbrs.end(), v) - nbrs.begin();
        // the neighbour just clockwise of the way back keeps the face on the left
        k = (back + nbrs.size() - 1) % nbrs.size();
        v = w;
      }
      Rat area = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const QPoint &p = vs[cycle[i]], &q = vs[cycle[(i + 1) % cycle.size()]];
        area += p.x * q.y - p.y * q.x;
      }
      if (area <= 0)
        continue;
      std::size_t sides = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const QPoint &p = vs[cycle[(i + cycle.size() - 1) % cycle.size()]];
        if (cross(p, vs[cycle[i]], vs[cycle[(i + 1) % cycle.size()]]) != 0)
          ++sides;
      }
      ++census.facesBySides[sides];
      census.mu = std::max(census.mu, sides);
    }
  return census;
}

}  // namespace oracle
