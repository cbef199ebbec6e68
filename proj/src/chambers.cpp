#include "svc/chambers.hpp"
#include "svc/cone.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <tuple>

namespace svc {

namespace {

using i64 = std::int64_t;

i64 cross(const IntPoint2 &o, const IntPoint2 &a, const IntPoint2 &b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const Cell &)> &fn) {
  Cell idx;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (idx.size() == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i + (k - idx.size()) <= n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

Rat to_rat(i64 num, i64 den) {
  return Rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

LatticePolygon::LatticePolygon(std::vector<IntPoint2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty())
    throw Error(ErrorKind::InvalidArgument, "polygon needs at least one point");
  if (points.size() < 3) {
    vertices_ = points;
    return;
  }
  // monotone chain, collinear points dropped
  std::vector<IntPoint2> hull(2 * points.size());
  std::size_t k = 0;
  for (const IntPoint2 &p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0)
      --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], points[i]) <= 0)
      --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  vertices_ = hull;
}

bool LatticePolygon::contains(const IntPoint2 &p) const {
  const std::size_t n = vertices_.size();
  if (n == 1)
    return p == vertices_[0];
  if (n == 2) {
    const IntPoint2 &a = vertices_[0], &b = vertices_[1];
    return cross(a, b, p) == 0 && std::min(a, b) <= p && p <= std::max(a, b);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (cross(vertices_[i], vertices_[(i + 1) % n], p) < 0)
      return false;
  return true;
}

std::vector<IntPoint2> LatticePolygon::lattice_points() const {
  i64 x0 = vertices_[0].first, x1 = x0, y0 = vertices_[0].second, y1 = y0;
  for (const IntPoint2 &v : vertices_) {
    x0 = std::min(x0, v.first);
    x1 = std::max(x1, v.first);
    y0 = std::min(y0, v.second);
    y1 = std::max(y1, v.second);
  }
  std::vector<IntPoint2> out;
  for (i64 x = x0; x <= x1; ++x)
    for (i64 y = y0; y <= y1; ++y)
      if (contains({x, y}))
        out.emplace_back(x, y);
  return out;
}

PlanarChamberComplex polygon_chamber_complex(const LatticePolygon &p,
                                             bool unsafeLarge) {
  PlanarChamberComplex pcc;
  pcc.latticePoints = p.lattice_points();
  if (!unsafeLarge && pcc.latticePoints.size() > kMaxPolygonPoints)
    throw Error(ErrorKind::TooManyPoints,
                "polygon has " + std::to_string(pcc.latticePoints.size()) +
                    " lattice points (limit " +
                    std::to_string(kMaxPolygonPoints) + ")");
  pcc.arrangement = segment_arrangement(pcc.latticePoints);
  for (const ArrangementFace &f : pcc.arrangement.faces) {
    ++pcc.facesByEdges[f.sides];
    pcc.mu = std::max(pcc.mu, f.sides);
  }
  return pcc;
}

std::size_t mu(const LatticePolygon &p, bool unsafeLarge) {
  return polygon_chamber_complex(p, unsafeLarge).mu;
}

Configuration cone_over_polygon(const LatticePolygon &p) {
  std::vector<IntPoint2> pts = p.lattice_points();
  std::sort(pts.begin(), pts.end(), [](const IntPoint2 &a, const IntPoint2 &b) {
    return std::tie(a.second, a.first) < std::tie(b.second, b.first);
  });
  std::vector<IntVec> vecs;
  for (const IntPoint2 &q : pts)
    vecs.push_back(IntVec{Int(1), Int(static_cast<long>(q.first)),
                          Int(static_cast<long>(q.second))});
  return Configuration(3, std::move(vecs));
}

std::vector<Cell> containing_cells(const Configuration &b, const RatVec &x) {
  const std::size_t m = b.dim();
  std::vector<Cell> out;
  for_each_subset(b.size(), m, [&](const Cell &cell) {
    auto lambda = solve_square(IntMatrix::from_columns(b.subset(cell), m), x);
    if (!lambda)
      return;
    for (const Rat &l : *lambda)
      if (l <= 0)
        return;
    out.push_back(cell);
  });
  return out;
}

ChamberComplex chamber_complex(const Configuration &b) {
  const std::size_t m = b.dim();
  if (m > 3)
    throw Error(ErrorKind::DimensionTooLarge,
                "chamber complexes are computed for m <= 3");
  if (rank(b.vectors()) != m)
    throw Error(ErrorKind::RankDeficient, "configuration does not span R^m");
  ChamberComplex cc;
  cc.config = b;
  if (m == 1) {
    bool pos = false, neg = false;
    for (const IntVec &v : b.vectors())
      (v[0] > 0 ? pos : neg) = true;
    if (neg)
      cc.chambers.push_back({{}, RatVec{Rat(-1)}, 1});
    if (pos)
      cc.chambers.push_back({{}, RatVec{Rat(1)}, 1});
  } else if (m == 2) {
    std::vector<IntVec> dirs;
    for (const IntVec &v : b.vectors()) {
      IntVec p = primitive(v);
      if (std::find(dirs.begin(), dirs.end(), p) == dirs.end())
        dirs.push_back(p);
    }
    auto half = [](const IntVec &v) { return v[1] < 0 || (v[1] == 0 && v[0] < 0); };
    std::sort(dirs.begin(), dirs.end(), [&](const IntVec &a, const IntVec &c) {
      if (half(a) != half(c))
        return !half(a);
      return a[0] * c[1] - a[1] * c[0] > 0;
    });
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const IntVec &a = dirs[i], &c = dirs[(i + 1) % dirs.size()];
      if (a[0] * c[1] - a[1] * c[0] <= 0)
        continue;
      cc.chambers.push_back({{}, RatVec{Rat(a[0] + c[0]), Rat(a[1] + c[1])}, 2});
    }
  } else {
    auto h = positive_functional(b.vectors(), m);
    if (!h)
      throw Error(ErrorKind::NotPointed,
                  "three-dimensional chamber complexes need a pointed cone");
    std::size_t j = 0;
    while ((*h)[j] == 0)
      ++j;
    const std::size_t k = j == 0 ? 1 : 0, l = j == 2 ? 1 : 2;
    Int scale = 1;
    for (const IntVec &v : b.vectors())
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), dot(*h, v).get_mpz_t());
    std::vector<IntPoint2> pts;
    for (const IntVec &v : b.vectors()) {
      Int f = scale / dot(*h, v);
      Int x = v[k] * f, y = v[l] * f;
      if (!x.fits_slong_p() || !y.fits_slong_p())
        throw Error(ErrorKind::Overflow, "projected coordinates too large");
      pts.emplace_back(x.get_si(), y.get_si());
    }
    SegmentArrangement arr = segment_arrangement(pts);
    for (const ArrangementFace &f : arr.faces) {
      Rat cx = 0, cy = 0;
      for (std::size_t v : f.boundary) {
        cx += to_rat(arr.vertices[v].x, arr.vertices[v].d);
        cy += to_rat(arr.vertices[v].y, arr.vertices[v].d);
      }
      cx /= Rat(static_cast<long>(f.boundary.size())) * Rat(scale);
      cy /= Rat(static_cast<long>(f.boundary.size())) * Rat(scale);
      RatVec x(3);
      x[k] = cx;
      x[l] = cy;
      x[j] = (Rat(1) - Rat((*h)[k]) * cx - Rat((*h)[l]) * cy) / Rat((*h)[j]);
      cc.chambers.push_back({{}, x, f.sides});
    }
  }
  for (Chamber &ch : cc.chambers) {
    ch.containingCells = containing_cells(b, ch.interiorPoint);
    ++cc.facetsCensus[ch.facets];
  }
  std::sort(cc.chambers.begin(), cc.chambers.end(),
            [](const Chamber &a, const Chamber &c) {
              return a.interiorPoint < c.interiorPoint;
            });
  return cc;
}

std::string emit_svg(const PlanarChamberComplex &pcc, const SvgOptions &opts) {
  const auto &pts = pcc.latticePoints;
  const auto &arr = pcc.arrangement;
  i64 x0 = pts.front().first, x1 = x0, y0 = pts.front().second, y1 = y0;
  for (const IntPoint2 &p : pts) {
    x0 = std::min(x0, p.first);
    x1 = std::max(x1, p.first);
    y0 = std::min(y0, p.second);
    y1 = std::max(y1, p.second);
  }
  const double s = opts.scale, pad = 20.0;
  auto px = [&](double x) { return fmt(pad + (x - double(x0)) * s); };
  auto py = [&](double y) { return fmt(pad + (double(y1) - y) * s); };
  auto vx = [&](const Point2 &p) { return px(double(p.x) / double(p.d)); };
  auto vy = [&](const Point2 &p) { return py(double(p.y) / double(p.d)); };
  const char *palette[] = {"#deebf7", "#9ecae1", "#4292c6", "#2171b5", "#08519c"};

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         fmt(2 * pad + double(x1 - x0) * s) + "\" height=\"" +
         fmt(2 * pad + double(y1 - y0) * s) + "\">\n";
  for (const ArrangementFace &f : arr.faces) {
    std::string fill = "none";
    if (opts.shadeByEdges)
      fill = palette[std::min<std::size_t>(f.sides < 3 ? 0 : f.sides - 3, 4)];
    bool hi = opts.highlightMax && f.sides == pcc.mu;
    out += "  <polygon points=\"";
    for (std::size_t k = 0; k < f.boundary.size(); ++k) {
      const Point2 &p = arr.vertices[f.boundary[k]];
      out += (k ? " " : "") + vx(p) + "," + vy(p);
    }
    out += "\" fill=\"" + fill + "\" stroke=\"" + (hi ? "#d62728" : "none") +
           "\" stroke-width=\"" + (hi ? "3" : "0") + "\" data-sides=\"" +
           std::to_string(f.sides) + "\"/>\n";
  }
  for (const auto &[a, b] : arr.edges) {
    const Point2 &p = arr.vertices[a], &q = arr.vertices[b];
    out += "  <line x1=\"" + vx(p) + "\" y1=\"" + vy(p) + "\" x2=\"" + vx(q) +
           "\" y2=\"" + vy(q) + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  for (const IntPoint2 &p : pts)
    out += "  <circle cx=\"" + px(double(p.first)) + "\" cy=\"" +
           py(double(p.second)) + "\" r=\"3\" fill=\"#000000\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace svc
