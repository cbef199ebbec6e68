#include "svc/polyhedra.hpp"
#include "svc/lp.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace svc {

namespace {

Int floor_of(const Rat &q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil_of(const Rat &q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool satisfies(const PolyhedronPc &p, const IntVec &z) {
  for (std::size_t i = 0; i < p.config.size(); ++i)
    if (dot(p.config[i], z) > p.c[i])
      return false;
  return true;
}

}  // namespace

Cell PolyhedronPc::active_set(const RatVec &x) const {
  Cell out;
  for (std::size_t i = 0; i < config.size(); ++i)
    if (dot(config[i], x) == c[i])
      out.push_back(i);
  return out;
}

PolyhedronPc make_polyhedron(const Configuration &b, const IntVec &c) {
  const std::size_t m = b.dim(), n = b.size();
  if (c.size() != n)
    throw Error(ErrorKind::InvalidArgument, "right-hand side has length " +
                                                std::to_string(c.size()) +
                                                ", expected " + std::to_string(n));
  if (rank(b.vectors()) != m)
    throw Error(ErrorKind::RankDeficient, "configuration does not span R^m");
  PolyhedronPc p;
  p.config = b;
  p.c = c;

  Cone cb = cone_from(b.vectors(), m, std::max(m, kMaxConeDim));
  std::vector<IntVec> recGens;
  for (const IntVec &h : cb.facets)
    recGens.push_back(negated(h));
  p.recessionCone = cone_from(recGens, m, std::max(m, kMaxConeDim));

  std::set<RatVec> verts;
  std::vector<std::size_t> idx(m);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                           std::size_t depth) {
    if (depth == m) {
      std::vector<IntVec> rows;
      RatVec rhs;
      for (std::size_t i : idx) {
        rows.push_back(b[i]);
        rhs.emplace_back(c[i]);
      }
      auto x = solve_square(IntMatrix::from_rows(rows, m), rhs);
      if (!x)
        return;
      for (std::size_t i = 0; i < n; ++i)
        if (dot(b[i], *x) > c[i])
          return;
      verts.insert(*x);
      return;
    }
    for (std::size_t i = start; i + (m - depth) <= n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  p.vertices.assign(verts.begin(), verts.end());
  return p;
}

IntBox vertex_box(const PolyhedronPc &p) {
  if (p.empty())
    throw Error(ErrorKind::EmptyPolyhedron, "P_c is empty");
  const std::size_t m = p.config.dim();
  IntBox box{IntVec(m), IntVec(m)};
  for (std::size_t k = 0; k < m; ++k) {
    box.lo[k] = floor_of(p.vertices[0][k]);
    box.hi[k] = ceil_of(p.vertices[0][k]);
    for (const RatVec &v : p.vertices) {
      box.lo[k] = std::min(box.lo[k], floor_of(v[k]));
      box.hi[k] = std::max(box.hi[k], ceil_of(v[k]));
    }
  }
  return box;
}

IntBox reduced_box(const PolyhedronPc &p) {
  IntBox box = vertex_box(p);
  for (const IntVec &r : p.recessionCone.extremeRays)
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] < 0)
        box.lo[k] += r[k];
      else
        box.hi[k] += r[k];
    }
  return box;
}

std::vector<IntVec> lattice_points(const PolyhedronPc &p, const IntBox &box) {
  std::vector<IntVec> out;
  if (p.empty())
    return out;
  const std::size_t m = p.config.dim();
  Int total = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (box.hi[k] < box.lo[k])
      return out;
    total *= box.hi[k] - box.lo[k] + 1;
  }
  if (total > Int(static_cast<unsigned long>(kMaxBoxPoints)))
    throw Error(ErrorKind::TooManyPoints,
                "box holds " + total.get_str() + " lattice points");
  IntVec z = box.lo;
  while (true) {
    if (satisfies(p, z))
      out.push_back(z);
    std::size_t k = m;
    while (k > 0) {
      --k;
      if (z[k] < box.hi[k]) {
        ++z[k];
        for (std::size_t j = k + 1; j < m; ++j)
          z[j] = box.lo[j];
        break;
      }
      if (k == 0)
        return out;
    }
    if (m == 0)
      return out;
  }
}

std::vector<IntVec> lattice_points(const PolyhedronPc &p) {
  if (p.empty())
    return {};
  if (!p.bounded())
    throw Error(ErrorKind::Unbounded, "P_c is unbounded; supply a box");
  return lattice_points(p, vertex_box(p));
}

std::vector<IntVec> representative_points(const PolyhedronPc &p) {
  if (p.empty())
    return {};
  return lattice_points(p, reduced_box(p));
}

IntegerHullQc integer_hull(const PolyhedronPc &p) {
  IntegerHullQc q;
  std::vector<IntVec> pts = representative_points(p);
  const std::size_t m = p.config.dim();
  const auto &rays = p.recessionCone.extremeRays;
  for (std::size_t t = 0; t < pts.size(); ++t) {
    // z in conv(other points) + cone(rays)?
    const std::size_t others = pts.size() - 1;
    const std::size_t vars = others + rays.size();
    std::vector<LinearConstraint> cons;
    for (std::size_t k = 0; k < m; ++k) {
      LinearConstraint lc;
      lc.rel = Relation::Equal;
      lc.rhs = pts[t][k];
      for (std::size_t s = 0; s < pts.size(); ++s)
        if (s != t)
          lc.coeffs.emplace_back(pts[s][k]);
      for (const IntVec &r : rays)
        lc.coeffs.emplace_back(r[k]);
      cons.push_back(std::move(lc));
    }
    LinearConstraint sum;
    sum.rel = Relation::Equal;
    sum.rhs = 1;
    sum.coeffs.assign(vars, 0);
    for (std::size_t s = 0; s < others; ++s)
      sum.coeffs[s] = 1;
    cons.push_back(std::move(sum));
    for (std::size_t v = 0; v < vars; ++v) {
      LinearConstraint nn;
      nn.rel = Relation::GreaterEq;
      nn.rhs = 0;
      nn.coeffs.assign(vars, 0);
      nn.coeffs[v] = 1;
      cons.push_back(std::move(nn));
    }
    if (others == 0 || !find_feasible_point(vars, cons))
      q.hullVertices.push_back(pts[t]);
  }
  return q;
}

Subdivision normal_fan(const PolyhedronPc &p) {
  if (p.empty())
    throw Error(ErrorKind::EmptyPolyhedron, "P_c is empty");
  std::vector<Cell> cells;
  for (const RatVec &v : p.vertices)
    cells.push_back(p.active_set(v));
  return canonical(std::move(cells));
}

}  // namespace svc
