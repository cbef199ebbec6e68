#include "svc/supernormal.hpp"
#include "svc/polyhedra.hpp"
#include "svc/triangulations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <tuple>

namespace svc {

namespace {

/// Guard on the configuration size for the subset sweep.
constexpr std::size_t kMaxSubsetSweepSize = 40;

/// Smallest nonzero lattice point (by total then lex) of the fundamental
/// parallelepiped of the linearly independent `cellVectors` that is outside
/// the monoid of `generators`. Together with the cell vectors these points
/// generate every lattice point of the simplicial cone.
std::optional<IntVec> first_ungenerated(const std::vector<IntVec> &cellVectors,
                                        const std::vector<IntVec> &generators,
                                        std::size_t dim) {
  std::vector<IntVec> pts = fundamental_parallelepiped(cellVectors, dim);
  std::sort(pts.begin(), pts.end(), [](const IntVec &a, const IntVec &b) {
    Int sa = 0, sb = 0;
    for (const Int &x : a)
      sa += x;
    for (const Int &x : b)
      sb += x;
    return sa != sb ? sa < sb : a < b;
  });
  for (const IntVec &p : pts) {
    if (is_zero(p) ||
        std::find(generators.begin(), generators.end(), p) != generators.end())
      continue;
    if (!monoid_membership(p, generators).member)
      return p;
  }
  return std::nullopt;
}

void for_each_independent_subset(
    const Configuration &b,
    const std::function<void(const Cell &, const std::vector<IntVec> &)> &fn) {
  const std::size_t n = b.size(), m = b.dim();
  Cell idx;
  std::vector<IntVec> vecs;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                           std::size_t size) {
    if (idx.size() == size) {
      fn(idx, vecs);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      vecs.push_back(b[i]);
      if (rank(vecs) == vecs.size()) {
        idx.push_back(i);
        rec(i + 1, size);
        idx.pop_back();
      }
      vecs.pop_back();
    }
  };
  for (std::size_t size = 1; size <= m; ++size)
    rec(0, size);
}

SupernormalityReport supernormal_by_subsets(const Configuration &b) {
  if (b.size() > kMaxSubsetSweepSize)
    throw Error(ErrorKind::TooLarge,
                "subset sweep limited to " +
                    std::to_string(kMaxSubsetSweepSize) + " vectors");
  const std::size_t m = b.dim();
  if (m > kMaxConeDim)
    throw Error(ErrorKind::DimensionTooLarge, "dimension exceeds guard");
  SupernormalityReport report;
  report.method = SupernormalMethod::DefinitionSubsets;

  // Each subset B' is covered by simplicial subcones spanned by linearly
  // independent subsets, so those suffice. Among violations the subset of
  // smallest index in its span lattice is reported, then the smaller, then
  // the lexicographically first.
  std::map<Cell, std::optional<IntVec>> bySupport;
  std::optional<std::tuple<Int, std::size_t, Cell, IntVec>> best;
  for_each_independent_subset(b, [&](const Cell &tau,
                                     const std::vector<IntVec> &vecs) {
    const Int index = span_index(vecs, m);
    if (index == 1)
      return;  // unimodular: tau alone generates the lattice points
    Cone c = cone_from(vecs, m, std::max(m, kMaxConeDim));
    Cell support;
    std::vector<IntVec> generators;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (cone_contains(c, b[j])) {
        support.push_back(j);
        generators.push_back(b[j]);
      }
    auto it = bySupport.find(support);
    if (it == bySupport.end())
      it = bySupport.emplace(support, first_ungenerated(vecs, generators, m))
               .first;
    if (!it->second)
      return;
    auto key = std::make_tuple(index, tau.size(), tau, *it->second);
    if (!best || key < *best)
      best = key;
  });
  report.verdict = !best.has_value();
  if (best)
    report.witness = SupernormalWitness{std::get<2>(*best), std::get<3>(*best)};
  return report;
}

// Supernormality only sees the shortest vector on each ray, so the
// criterion runs on those.
std::vector<std::size_t> shortest_per_ray(const Configuration &b) {
  std::map<IntVec, std::size_t> best;
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto [it, fresh] = best.emplace(primitive(b[i]), i);
    if (!fresh && dot(b[i], b[i]) < dot(b[it->second], b[it->second]))
      it->second = i;
  }
  std::vector<std::size_t> out;
  for (const auto &[dir, i] : best)
    out.push_back(i);
  std::sort(out.begin(), out.end());
  return out;
}

SupernormalityReport supernormal_by_triangulations(const Configuration &b) {
  SupernormalityReport report;
  report.method = SupernormalMethod::TriangulationCriterion;
  report.verdict = true;
  const std::size_t m = b.dim();
  const std::vector<std::size_t> keep = shortest_per_ray(b);
  Configuration reduced = Configuration::unchecked(m, b.subset(keep));
  for (const Subdivision &t : all_triangulations(reduced, true)) {
    for (const Cell &small : t.cells) {
      Cell cell;
      for (std::size_t i : small)
        cell.push_back(keep[i]);
      std::vector<IntVec> vecs = b.subset(cell);
      if (span_index(vecs, m) == 1)
        continue;
      report.verdict = false;
      auto v = first_ungenerated(vecs, vecs, m);
      if (v && (!report.witness || std::tie(cell, *v) < std::tie(
                                                           report.witness->subset,
                                                           report.witness->point)))
        report.witness = SupernormalWitness{cell, *v};
    }
  }
  return report;
}

}  // namespace

bool is_normal(const std::vector<IntVec> &vectors, std::size_t dim,
               std::size_t maxDim) {
  if (vectors.empty())
    return true;
  Cone c = cone_from(vectors, dim, maxDim);
  if (c.pointed()) {
    for (const IntVec &h : hilbert_basis(c).elements)
      if (!monoid_membership(h, vectors).member)
        return false;
    return true;
  }
  // Lineality split: the vectors inside the lineality space must generate
  // its lattice, and the image in the quotient lattice must be normal.
  std::vector<IntVec> inner, outer;
  for (const IntVec &v : vectors) {
    bool inLineality = true;
    for (const IntVec &h : c.facets)
      if (dot(h, v) != 0)
        inLineality = false;
    (inLineality ? inner : outer).push_back(v);
  }
  for (const IntVec &e : c.linealityBasis)
    if (!lattice_solve(inner, e))
      return false;
  if (outer.empty())
    return true;
  IntMatrix quotient =
      integer_kernel(IntMatrix::from_rows(c.linealityBasis, dim));
  std::vector<IntVec> projected;
  for (const IntVec &v : outer)
    projected.push_back(quotient * v);
  return is_normal(projected, quotient.rows(), maxDim);
}

bool is_normal(const Configuration &b, std::size_t maxDim) {
  return is_normal(b.vectors(), b.dim(), maxDim);
}

const char *to_string(SupernormalMethod method) {
  switch (method) {
  case SupernormalMethod::DefinitionSubsets:
    return "definition-subsets";
  case SupernormalMethod::TriangulationCriterion:
    return "triangulation-criterion";
  }
  return "unknown";
}

SupernormalityReport is_supernormal(const Configuration &b,
                                    SupernormalMethod method) {
  if (method == SupernormalMethod::TriangulationCriterion)
    return supernormal_by_triangulations(b);
  return supernormal_by_subsets(b);
}

bool check_dim2_criterion(const Configuration &b) {
  if (b.dim() != 2)
    throw Error(ErrorKind::InvalidArgument, "planar criterion needs m = 2");
  std::vector<IntVec> dirs;
  for (const IntVec &v : b.vectors()) {
    IntVec p = primitive(v);
    if (std::find(dirs.begin(), dirs.end(), p) == dirs.end())
      dirs.push_back(p);
  }
  for (const IntVec &d : dirs)
    if (std::find(b.vectors().begin(), b.vectors().end(), d) ==
        b.vectors().end())
      return false;
  // counterclockwise by angle in [0, 2 pi)
  auto half = [](const IntVec &v) { return v[1] < 0 || (v[1] == 0 && v[0] < 0); };
  std::sort(dirs.begin(), dirs.end(), [&](const IntVec &a, const IntVec &c) {
    if (half(a) != half(c))
      return !half(a);
    return a[0] * c[1] - a[1] * c[0] > 0;
  });
  const std::size_t k = dirs.size();
  if (k < 2)
    return true;
  for (std::size_t i = 0; i < k; ++i) {
    const IntVec &a = dirs[i];
    const IntVec &c = dirs[(i + 1) % k];
    Int det = a[0] * c[1] - a[1] * c[0];
    if (det > 0 && det != 1)
      return false;
    // det == 0 (opposite) or det < 0 (more than a half turn): no condition
  }
  return true;
}

TightnessReport is_tight(const Configuration &b, const IntVec &c) {
  TightnessReport rep;
  rep.c = c;
  PolyhedronPc p = make_polyhedron(b, c);
  std::vector<IntVec> pts = representative_points(p);
  for (std::size_t i = 0; i < b.size(); ++i) {
    bool hit = false;
    for (const IntVec &z : pts)
      if (dot(b[i], z) == c[i]) {
        hit = true;
        break;
      }
    if (!hit)
      rep.slackIndices.push_back(i);
  }
  rep.tight = rep.slackIndices.empty();
  if (!pts.empty())
    rep.tightenedC = tighten(b, c);
  return rep;
}

IntVec tighten(const Configuration &b, const IntVec &c) {
  PolyhedronPc p = make_polyhedron(b, c);
  std::vector<IntVec> pts = representative_points(p);
  if (pts.empty())
    throw Error(ErrorKind::NoLatticePoint, "P_c has no lattice point");
  IntVec out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    Int best = dot(b[i], pts[0]);
    for (const IntVec &z : pts)
      best = std::max(best, dot(b[i], z));
    out[i] = best;
  }
  return out;
}

bool is_TDI(const Configuration &b, const IntVec &c) {
  PolyhedronPc p = make_polyhedron(b, c);
  if (p.empty())
    throw Error(ErrorKind::EmptyPolyhedron, "P_c is empty");
  for (const Cell &cell : normal_fan(p).cells)
    if (!is_normal(b.subset(cell), b.dim(), std::max(b.dim(), kMaxConeDim)))
      return false;
  return true;
}

Theorem38Report property_test_theorem_3_8(const Configuration &b,
                                          const std::vector<IntVec> &samples) {
  Theorem38Report rep;
  rep.supernormal = is_supernormal(b).verdict;
  std::map<Cell, bool> normalCache;
  for (const IntVec &c : samples) {
    ++rep.sampled;
    PolyhedronPc p = make_polyhedron(b, c);
    if (p.empty() || !is_tight(b, c).tight)
      continue;
    ++rep.tightCount;
    bool tdi = true;
    for (const Cell &cell : normal_fan(p).cells) {
      auto it = normalCache.find(cell);
      if (it == normalCache.end())
        it = normalCache
                 .emplace(cell, is_normal(b.subset(cell), b.dim(),
                                          std::max(b.dim(), kMaxConeDim)))
                 .first;
      if (!it->second) {
        tdi = false;
        break;
      }
    }
    if (!tdi)
      rep.violations.push_back(c);
  }
  return rep;
}

std::vector<IntVec> box_samples(std::size_t n, long lo, long hi) {
  std::vector<IntVec> out;
  IntVec c(n, lo);
  while (true) {
    out.push_back(c);
    std::size_t k = n;
    while (k > 0 && c[k - 1] == hi)
      c[--k] = lo;
    if (k == 0)
      return out;
    ++c[k - 1];
  }
}

std::vector<IntVec> random_samples(std::size_t n, std::size_t count, long lo,
                                   long hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<IntVec> out(count, IntVec(n));
  for (IntVec &c : out)
    for (Int &x : c)
      x = dist(rng);
  return out;
}

}  // namespace svc
