#include "svc/triangulations.hpp"
#include "svc/cone.hpp"
#include "svc/lp.hpp"
#include "svc/polyhedra.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace svc {

namespace {

using Mask = std::uint64_t;

Mask mask_of(const Cell &cell) {
  Mask m = 0;
  for (std::size_t i : cell)
    m |= Mask(1) << i;
  return m;
}

Cell cell_of(Mask m) {
  Cell out;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1)
      out.push_back(i);
  return out;
}

/// The configuration in coordinates of the saturated lattice of its span.
std::vector<IntVec> span_coordinates(const Configuration &b) {
  LatticeFrame frame(b.vectors(), b.dim());
  std::vector<IntVec> out;
  for (const IntVec &v : b.vectors())
    out.push_back(*frame.coordinates(v));
  return out;
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

std::vector<IntVec> pick(const std::vector<IntVec> &vecs, const Cell &cell) {
  std::vector<IntVec> out;
  for (std::size_t i : cell)
    out.push_back(vecs[i]);
  return out;
}

/// Normal of the hyperplane spanned by `facet` (r - 1 independent vectors in
/// Z^r), oriented positively on `apex`.
IntVec facet_normal(const std::vector<IntVec> &facet, const IntVec &apex,
                    std::size_t r) {
  IntVec nrm;
  if (facet.empty()) {
    nrm = IntVec(r, 0);
    nrm[0] = 1;  // r == 1
  } else {
    nrm = *kernel_line(IntMatrix::from_rows(facet, r));
  }
  if (dot(nrm, apex) < 0)
    nrm = negated(nrm);
  return nrm;
}

struct CircuitMasks {
  Mask pos;
  Mask neg;
};

std::vector<CircuitMasks> circuit_masks(const Configuration &b) {
  std::vector<CircuitMasks> out;
  for (const Circuit &z : circuits(b))
    out.push_back({mask_of(z.pos), mask_of(z.neg)});
  return out;
}

bool compatible(Mask s, Mask t, const std::vector<CircuitMasks> &circ) {
  for (const CircuitMasks &z : circ) {
    if ((z.pos & ~s) == 0 && (z.neg & ~t) == 0)
      return false;
    if ((z.neg & ~s) == 0 && (z.pos & ~t) == 0)
      return false;
  }
  return true;
}

struct FacetInfo {
  Mask facet;
  IntVec normal;  ///< positive on the cell
  bool boundary;
};

std::vector<FacetInfo> facets_of(Mask cell, const std::vector<IntVec> &vecs,
                                 std::size_t r) {
  std::vector<FacetInfo> out;
  Cell idx = cell_of(cell);
  for (std::size_t k : idx) {
    Mask f = cell & ~(Mask(1) << k);
    IntVec nrm = facet_normal(pick(vecs, cell_of(f)), vecs[k], r);
    bool boundary = true;
    for (const IntVec &v : vecs)
      if (dot(nrm, v) < 0)
        boundary = false;
    out.push_back({f, std::move(nrm), boundary});
  }
  return out;
}

bool strictly_inside_simplicial(const std::vector<IntVec> &cellVecs,
                                const IntVec &p, std::size_t r) {
  RatVec rhs(p.begin(), p.end());
  auto lambda = solve_square(IntMatrix::from_columns(cellVecs, r), rhs);
  if (!lambda)
    return false;
  for (const Rat &x : *lambda)
    if (x <= 0)
      return false;
  return true;
}

}  // namespace

std::vector<Circuit> circuits(const Configuration &b) {
  const std::size_t n = b.size();
  const std::size_t r = rank(b.vectors());
  std::vector<Circuit> out;
  for (std::size_t k = 1; k <= std::min(n, r + 1); ++k)
    for_each_subset(n, k, [&](const Cell &z) {
      std::vector<IntVec> vecs = b.subset(z);
      if (rank(vecs) != k - 1)
        return;
      IntMatrix ker = integer_kernel(IntMatrix::from_columns(vecs, b.dim()));
      if (ker.rows() != 1)
        return;
      IntVec l = ker.row(0);
      for (const Int &x : l)
        if (x == 0)
          return;
      if (l[0] < 0)
        l = negated(l);
      Circuit c;
      for (std::size_t j = 0; j < k; ++j)
        (l[j] > 0 ? c.pos : c.neg).push_back(z[j]);
      out.push_back(std::move(c));
    });
  return out;
}

Subdivision regular_subdivision(const Configuration &b, const IntVec &c) {
  return normal_fan(make_polyhedron(b, c));
}

namespace {

// Every direction spanned by a vector of a coarse cell spans a ray of t.
bool uses_rays_of(const Configuration &b, const Subdivision &t, const Subdivision &coarse) {
  std::set<IntVec> have, need;
  for (const Cell &cell : t.cells)
    for (std::size_t i : cell)
      have.insert(primitive(b[i]));
  for (const Cell &cell : coarse.cells)
    for (std::size_t i : cell)
      need.insert(primitive(b[i]));
  return std::includes(have.begin(), have.end(), need.begin(), need.end());
}

}  // namespace

LiftedTriangulation refine_to_triangulation(const Configuration &b,
                                            const IntVec &c) {
  const std::size_t n = b.size();
  Subdivision coarse = regular_subdivision(b, c);
  auto h = positive_functional(b.vectors(), b.dim());
  // Strictly convex heights |b_i|^2 / (h.b_i) on the slice h.x = 1 make
  // every vector a vertex of the lower hull.
  Int denom = 1;
  if (h)
    for (const IntVec &v : b.vectors())
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), dot(*h, v).get_mpz_t());
  IntVec convex(n);
  Int maxConvex = 1;
  for (std::size_t i = 0; i < n; ++i) {
    convex[i] = dot(b[i], b[i]) * denom;
    if (h)
      convex[i] /= dot(*h, b[i]);
    maxConvex = std::max(maxConvex, convex[i]);
  }
  std::mt19937_64 rng(0x5eed);
  Int scale = 1 << 10;
  for (int attempt = 0; attempt < 64; ++attempt) {
    IntVec lifting(n);
    Int outer = scale * (maxConvex + 1) * scale;
    for (std::size_t i = 0; i < n; ++i)
      lifting[i] = outer * c[i] + scale * convex[i] +
                   Int(static_cast<unsigned long>(rng() % 1000));
    Subdivision t = regular_subdivision(b, lifting);
    bool ok = is_triangulation(b, t) && (!h || uses_rays_of(b, t, coarse));
    for (const Cell &cell : t.cells) {
      bool inside = false;
      for (const Cell &big : coarse.cells)
        if (std::includes(big.begin(), big.end(), cell.begin(), cell.end()))
          inside = true;
      ok = ok && inside;
    }
    if (ok)
      return LiftedTriangulation{t, lifting};
    scale *= 16;
  }
  throw Error(ErrorKind::NonTerminating, "no generic refinement found");
}

bool is_triangulation(const Configuration &b, const Subdivision &s) {
  if (s.cells.empty() || b.size() > 64)
    return false;
  const std::vector<IntVec> vecs = span_coordinates(b);
  const std::size_t r = vecs.front().size();
  std::vector<Mask> masks;
  for (const Cell &cell : s.cells) {
    if (cell.size() != r || rank(pick(vecs, cell)) != r)
      return false;
    masks.push_back(mask_of(cell));
  }
  auto circ = circuit_masks(b);
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (masks[i] == masks[j] || !compatible(masks[i], masks[j], circ))
        return false;
  for (Mask cell : masks)
    for (const FacetInfo &f : facets_of(cell, vecs, r)) {
      if (f.boundary)
        continue;
      std::size_t across = 0;
      for (Mask other : masks)
        if (other != cell && (other & f.facet) == f.facet) {
          std::size_t k = cell_of(other & ~f.facet).front();
          if (dot(f.normal, vecs[k]) < 0)
            ++across;
        }
      if (across != 1)
        return false;
    }
  return true;
}

bool uses_all_vectors(const Configuration &b, const Subdivision &s) {
  for (std::size_t j = 0; j < b.size(); ++j) {
    IntVec dir = primitive(b[j]);
    bool used = false;
    for (const Cell &cell : s.cells)
      for (std::size_t i : cell)
        if (primitive(b[i]) == dir)
          used = true;
    if (!used)
      return false;
  }
  return true;
}

bool is_unimodular(const Configuration &b, const Subdivision &s) {
  for (const Cell &cell : s.cells)
    if (span_index(b.subset(cell), b.dim()) != 1)
      return false;
  return true;
}

RegularityResult is_regular(const Configuration &b, const Subdivision &s) {
  RegularityResult res;
  const std::size_t n = b.size();
  const std::vector<IntVec> vecs = span_coordinates(b);
  const std::size_t r = vecs.front().size();
  std::vector<LinearConstraint> cons;
  for (const Cell &cell : s.cells) {
    // a basis inside the cell
    Cell basis;
    std::vector<IntVec> bv;
    for (std::size_t i : cell) {
      bv.push_back(vecs[i]);
      if (rank(bv) == bv.size())
        basis.push_back(i);
      else
        bv.pop_back();
    }
    if (basis.size() != r)
      return res;
    IntMatrix cols = IntMatrix::from_columns(bv, r);
    for (std::size_t j = 0; j < n; ++j) {
      if (std::find(basis.begin(), basis.end(), j) != basis.end())
        continue;
      RatVec rhs(vecs[j].begin(), vecs[j].end());
      RatVec lambda = *solve_square(cols, rhs);
      LinearConstraint lc;
      lc.coeffs.assign(n, 0);
      lc.coeffs[j] = 1;
      for (std::size_t k = 0; k < r; ++k)
        lc.coeffs[basis[k]] -= lambda[k];
      bool inCell = std::binary_search(cell.begin(), cell.end(), j);
      lc.rel = inCell ? Relation::Equal : Relation::GreaterEq;
      lc.rhs = inCell ? 0 : 1;
      cons.push_back(std::move(lc));
    }
  }
  auto sol = find_feasible_point(n, cons);
  if (!sol)
    return res;
  Int den = 1;
  for (const Rat &x : *sol)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntVec c;
  for (const Rat &x : *sol)
    c.push_back(Rat(x * den).get_num());
  res.regular = true;
  res.lifting = c;
  return res;
}

std::vector<Subdivision> all_triangulations(const Configuration &b,
                                            bool usesAllVectors,
                                            std::size_t maxSize) {
  const std::size_t n = b.size();
  if (n > maxSize || n > 64)
    throw Error(ErrorKind::TooLarge, "triangulation enumeration limited to " +
                                         std::to_string(maxSize) + " vectors");
  const std::vector<IntVec> vecs = span_coordinates(b);
  const std::size_t r = vecs.front().size();
  auto circ = circuit_masks(b);

  std::vector<Mask> candidates;
  std::map<Mask, std::vector<FacetInfo>> facetTable;
  for_each_subset(n, r, [&](const Cell &cell) {
    std::vector<IntVec> cv = pick(vecs, cell);
    if (rank(cv) != r)
      return;
    if (usesAllVectors) {
      Cone cone = cone_from(cv, r, std::max(r, kMaxConeDim));
      for (std::size_t j = 0; j < n; ++j) {
        if (std::binary_search(cell.begin(), cell.end(), j) ||
            !cone_contains(cone, vecs[j]))
          continue;
        bool parallel = false;
        for (std::size_t i : cell)
          if (primitive(vecs[i]) == primitive(vecs[j]))
            parallel = true;
        if (!parallel)
          return;
      }
    }
    Mask m = mask_of(cell);
    candidates.push_back(m);
    facetTable[m] = facets_of(m, vecs, r);
  });

  // A generic point in the interior of the support.
  IntVec p0;
  {
    std::mt19937_64 rng(12345);
    for (int attempt = 0;; ++attempt) {
      p0.assign(r, 0);
      for (const IntVec &v : vecs) {
        Int w = Int(static_cast<unsigned long>(1 + rng() % 1000003));
        for (std::size_t k = 0; k < r; ++k)
          p0[k] += w * v[k];
      }
      bool generic = true;
      for (Mask m : candidates)
        for (const FacetInfo &f : facetTable[m])
          if (dot(f.normal, p0) == 0)
            generic = false;
      if (generic)
        break;
      if (attempt > 1000)
        throw Error(ErrorKind::NonTerminating, "no generic point found");
    }
  }

  std::set<Subdivision> found;
  std::vector<Mask> chosen;
  std::function<void()> extend = [&]() {
    for (Mask cell : chosen)
      for (const FacetInfo &f : facetTable[cell]) {
        if (f.boundary)
          continue;
        bool matched = false;
        for (Mask other : chosen)
          if (other != cell && (other & f.facet) == f.facet)
            matched = true;
        if (matched)
          continue;
        for (Mask cand : candidates) {
          if ((cand & f.facet) != f.facet || cand == cell)
            continue;
          std::size_t k = cell_of(cand & ~f.facet).front();
          if (dot(f.normal, vecs[k]) >= 0)
            continue;
          bool ok = true;
          for (Mask other : chosen)
            if (!compatible(cand, other, circ)) {
              ok = false;
              break;
            }
          if (!ok)
            continue;
          chosen.push_back(cand);
          extend();
          chosen.pop_back();
        }
        return;
      }
    std::vector<Cell> cells;
    for (Mask m : chosen)
      cells.push_back(cell_of(m));
    found.insert(canonical(std::move(cells)));
  };
  for (Mask cand : candidates)
    if (strictly_inside_simplicial(pick(vecs, cell_of(cand)), p0, r)) {
      chosen.push_back(cand);
      extend();
      chosen.pop_back();
    }
  return std::vector<Subdivision>(found.begin(), found.end());
}

}  // namespace svc
