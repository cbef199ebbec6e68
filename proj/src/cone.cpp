#include "svc/cone.hpp"
#include "svc/lp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace svc {

namespace {

// Subsets of {0..n-1} of size k, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t> &)> &fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  if (k > n)
    return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

bool graded_lex_less(const IntVec &a, const IntVec &b) {
  Int sa = 0, sb = 0;
  for (const Int &x : a)
    sa += x;
  for (const Int &x : b)
    sb += x;
  if (sa != sb)
    return sa < sb;
  return a < b;
}

}  // namespace

Cone cone_from(const std::vector<IntVec> &vectors, std::size_t dim,
               std::size_t maxDim) {
  if (dim > maxDim)
    throw Error(ErrorKind::DimensionTooLarge,
                "cone dimension " + std::to_string(dim) + " exceeds guard " +
                    std::to_string(maxDim));
  Cone c;
  c.dim = dim;
  c.generators = vectors;

  std::vector<IntVec> dirs;
  {
    std::set<IntVec> seen;
    for (const IntVec &v : vectors) {
      if (v.size() != dim)
        throw Error(ErrorKind::InvalidArgument, "vector dimension mismatch");
      if (is_zero(v))
        continue;
      IntVec p = primitive(v);
      if (seen.insert(p).second)
        dirs.push_back(p);
    }
  }
  if (dirs.empty()) {
    c.equations = IntMatrix::identity(dim).row_list();
    return c;
  }
  c.equations = integer_kernel(IntMatrix::from_rows(dirs)).row_list();
  const std::size_t r = dim - c.equations.size();

  std::set<IntVec> facetSet;
  for_each_subset(dirs.size(), r - 1, [&](const std::vector<std::size_t> &sub) {
    std::vector<IntVec> rows = c.equations;
    for (std::size_t i : sub)
      rows.push_back(dirs[i]);
    if (rows.empty())
      return;
    auto h = kernel_line(IntMatrix::from_rows(rows));
    if (!h)
      return;
    bool pos = false, neg = false;
    for (const IntVec &d : dirs) {
      Int s = dot(*h, d);
      if (s > 0)
        pos = true;
      else if (s < 0)
        neg = true;
    }
    if (pos && neg)
      return;
    IntVec normal = neg ? negated(*h) : *h;
    facetSet.insert(primitive(normal));
  });
  // r == 1 and dim == 1: no equations and no chosen vectors
  if (r == 1 && c.equations.empty()) {
    bool pos = false, neg = false;
    for (const IntVec &d : dirs)
      (d[0] > 0 ? pos : neg) = true;
    if (!(pos && neg))
      facetSet.insert(IntVec{Int(pos ? 1 : -1)});
  }
  c.facets.assign(facetSet.begin(), facetSet.end());

  // lineality space
  {
    std::vector<IntVec> rows = c.equations;
    rows.insert(rows.end(), c.facets.begin(), c.facets.end());
    c.linealityBasis = integer_kernel(IntMatrix::from_rows(rows, dim)).row_list();
  }
  const std::size_t lin = c.linealityBasis.size();

  // one-dimensional faces above the lineality space
  std::map<std::vector<std::size_t>, IntVec> faces;
  for (const IntVec &d : dirs) {
    std::vector<std::size_t> tight;
    std::vector<IntVec> rows = c.equations;
    for (std::size_t f = 0; f < c.facets.size(); ++f)
      if (dot(c.facets[f], d) == 0) {
        tight.push_back(f);
        rows.push_back(c.facets[f]);
      }
    if (tight.size() == c.facets.size())
      continue;  // in the lineality space
    if (rank(IntMatrix::from_rows(rows, dim)) != dim - lin - 1)
      continue;
    auto it = faces.find(tight);
    if (it == faces.end() || d < it->second)
      faces[tight] = d;
  }
  for (auto &[key, ray] : faces)
    c.extremeRays.push_back(ray);
  std::sort(c.extremeRays.begin(), c.extremeRays.end());
  return c;
}

bool cone_contains(const Cone &c, const IntVec &v) {
  for (const IntVec &e : c.equations)
    if (dot(e, v) != 0)
      return false;
  for (const IntVec &h : c.facets)
    if (dot(h, v) < 0)
      return false;
  return true;
}

bool cone_contains(const Cone &c, const RatVec &v) {
  for (const IntVec &e : c.equations)
    if (dot(e, v) != 0)
      return false;
  for (const IntVec &h : c.facets)
    if (dot(h, v) < 0)
      return false;
  return true;
}

bool cone_contains_relint(const Cone &c, const RatVec &v) {
  for (const IntVec &e : c.equations)
    if (dot(e, v) != 0)
      return false;
  for (const IntVec &h : c.facets)
    if (dot(h, v) <= 0)
      return false;
  return true;
}

bool cone_equal(const Cone &a, const Cone &b) {
  return a.dim == b.dim && a.equations == b.equations && a.facets == b.facets;
}

bool is_pointed(const std::vector<IntVec> &vectors, std::size_t dim) {
  return cone_from(vectors, dim).pointed();
}

std::optional<IntVec> positive_functional(const std::vector<IntVec> &vectors,
                                          std::size_t dim) {
  Cone c = cone_from(vectors, dim);
  if (!c.pointed())
    return std::nullopt;
  IntVec u(dim);
  for (const IntVec &h : c.facets)
    for (std::size_t i = 0; i < dim; ++i)
      u[i] += h[i];
  return u;
}

std::optional<IntVec> lattice_solve(const std::vector<IntVec> &generators,
                                    const IntVec &v) {
  if (generators.empty())
    return is_zero(v) ? std::optional<IntVec>(IntVec{}) : std::nullopt;
  const std::size_t dim = v.size();
  HermiteForm hf = hermite_normal_form(IntMatrix::from_rows(generators, dim));
  // s * H == v, solved pivot by pivot
  IntVec rest = v;
  IntVec s(generators.size());
  std::size_t col = 0;
  for (std::size_t r = 0; r < hf.rank; ++r) {
    while (hf.H(r, col) == 0) {
      if (rest[col] != 0)
        return std::nullopt;
      ++col;
    }
    if (rest[col] % hf.H(r, col) != 0)
      return std::nullopt;
    s[r] = rest[col] / hf.H(r, col);
    for (std::size_t c = 0; c < dim; ++c)
      rest[c] -= s[r] * hf.H(r, c);
    ++col;
  }
  if (!is_zero(rest))
    return std::nullopt;
  IntVec t(generators.size());
  for (std::size_t r = 0; r < hf.rank; ++r)
    for (std::size_t i = 0; i < generators.size(); ++i)
      t[i] += s[r] * hf.U(r, i);
  return t;
}

std::vector<IntVec>
fundamental_parallelepiped(const std::vector<IntVec> &simplex, std::size_t dim) {
  LatticeFrame frame(simplex, dim);
  const std::size_t r = frame.dim();
  if (simplex.size() != r)
    throw Error(ErrorKind::InvalidArgument,
                "parallelepiped needs linearly independent vectors");
  std::vector<IntVec> coords;
  for (const IntVec &g : simplex)
    coords.push_back(*frame.coordinates(g));
  IntMatrix gm = IntMatrix::from_columns(coords, r);
  SmithForm sf = smith_normal_form(gm);
  // U^{-1}, column by column
  IntMatrix uinv(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    RatVec e(r, 0);
    e[j] = 1;
    RatVec col = *solve_square(sf.U, e);
    for (std::size_t i = 0; i < r; ++i)
      uinv(i, j) = col[i].get_num();
  }
  std::vector<Int> d = sf.invariants();
  std::vector<IntVec> out;
  IntVec k(r, 0);
  while (true) {
    IntVec x = uinv * k;
    RatVec xr(x.begin(), x.end());
    RatVec lambda = *solve_square(gm, xr);
    IntVec p = x;
    for (std::size_t i = 0; i < r; ++i) {
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), lambda[i].get_num_mpz_t(),
                 lambda[i].get_den_mpz_t());
      for (std::size_t row = 0; row < r; ++row)
        p[row] -= fl * gm(row, i);
    }
    out.push_back(frame.embed(p));
    std::size_t i = 0;
    while (i < r) {
      if (++k[i] < d[i])
        break;
      k[i] = 0;
      ++i;
    }
    if (i == r)
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>>
simplicial_cover(const std::vector<IntVec> &vectors, std::size_t dim) {
  std::vector<std::size_t> all(vectors.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  std::function<std::vector<std::vector<std::size_t>>(
      const std::vector<std::size_t> &)>
      rec = [&](const std::vector<std::size_t> &idx) {
        std::vector<IntVec> sub;
        for (std::size_t i : idx)
          sub.push_back(vectors[i]);
        const std::size_t r = rank(sub);
        std::vector<std::vector<std::size_t>> result;
        if (r == 0)
          return result;
        if (r == 1) {
          result.push_back({idx.front()});
          return result;
        }
        if (idx.size() == r) {
          result.push_back(idx);
          return result;
        }
        Cone c = cone_from(sub, dim, dim);
        if (!c.pointed())
          throw Error(ErrorKind::NotPointed, "simplicial_cover of non-pointed cone");
        const IntVec &apex = vectors[idx.front()];
        for (const IntVec &h : c.facets) {
          if (dot(h, apex) == 0)
            continue;
          std::vector<std::size_t> onFacet;
          for (std::size_t i : idx)
            if (dot(h, vectors[i]) == 0)
              onFacet.push_back(i);
          for (auto cell : rec(onFacet)) {
            cell.insert(cell.begin(), idx.front());
            std::sort(cell.begin(), cell.end());
            result.push_back(cell);
          }
        }
        return result;
      };
  auto cells = rec(all);
  std::sort(cells.begin(), cells.end());
  return cells;
}

HilbertBasis hilbert_basis(const Cone &c) {
  if (!c.pointed())
    throw Error(ErrorKind::NotPointed, "Hilbert basis requires a pointed cone");
  HilbertBasis hb;
  hb.cone = c;
  std::vector<IntVec> gens;
  for (const IntVec &g : c.generators)
    if (!is_zero(g))
      gens.push_back(g);
  if (gens.empty())
    return hb;
  std::set<IntVec> candidates;
  for (const IntVec &g : gens)
    candidates.insert(g);
  for (const auto &cell : simplicial_cover(gens, c.dim)) {
    std::vector<IntVec> simplex;
    for (std::size_t i : cell)
      simplex.push_back(gens[i]);
    for (IntVec &p : fundamental_parallelepiped(simplex, c.dim))
      if (!is_zero(p))
        candidates.insert(std::move(p));
  }
  std::vector<IntVec> cand(candidates.begin(), candidates.end());
  for (const IntVec &x : cand) {
    bool reducible = false;
    for (const IntVec &y : cand) {
      if (y == x)
        continue;
      IntVec diff(x.size());
      for (std::size_t i = 0; i < x.size(); ++i)
        diff[i] = x[i] - y[i];
      if (cone_contains(c, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible)
      hb.elements.push_back(x);
  }
  std::sort(hb.elements.begin(), hb.elements.end(), graded_lex_less);
  return hb;
}

namespace {

// Depth-first search for nonnegative multipliers of `outer` reaching a point
// of the group generated by the lineality generators.
class MembershipSearch {
public:
  MembershipSearch(const std::vector<IntVec> &outer,
                   const std::vector<IntVec> &inner, const Cone &cone,
                   const IntVec &functional)
      : outer_(outer), inner_(inner), cone_(cone), u_(functional),
        mult_(outer.size(), 0) {}

  std::optional<IntVec> run(const IntVec &v) { return dfs(0, v); }
  const std::vector<Int> &multipliers() const { return mult_; }

private:
  std::optional<IntVec> dfs(std::size_t i, const IntVec &rest) {
    if (!cone_contains(cone_, rest))
      return std::nullopt;
    if (dot(u_, rest) == 0)
      return lattice_solve(inner_, rest);
    if (i == outer_.size())
      return std::nullopt;
    auto key = std::make_pair(i, rest);
    if (failed_.count(key))
      return std::nullopt;
    IntVec next(rest.size());
    for (std::size_t k = 0; k < rest.size(); ++k)
      next[k] = rest[k] - outer_[i][k];
    ++mult_[i];
    if (auto t = dfs(i, next))
      return t;
    --mult_[i];
    if (auto t = dfs(i + 1, rest))
      return t;
    failed_.insert(std::move(key));
    return std::nullopt;
  }

  const std::vector<IntVec> &outer_;
  const std::vector<IntVec> &inner_;
  const Cone &cone_;
  const IntVec &u_;
  std::vector<Int> mult_;
  std::set<std::pair<std::size_t, IntVec>> failed_;
};

}  // namespace

MonoidMembership monoid_membership(const IntVec &v,
                                   const std::vector<IntVec> &generators) {
  MonoidMembership res;
  const std::size_t dim = v.size();
  if (generators.empty()) {
    res.member = is_zero(v);
    return res;
  }
  Cone c = cone_from(generators, dim, std::max(dim, kMaxConeDim));
  if (!cone_contains(c, v) || !lattice_solve(generators, v))
    return res;

  std::vector<std::size_t> outerIdx, innerIdx;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool inLineality = true;
    for (const IntVec &h : c.facets)
      if (dot(h, generators[i]) != 0)
        inLineality = false;
    (inLineality ? innerIdx : outerIdx).push_back(i);
  }
  std::vector<IntVec> outer, inner;
  for (std::size_t i : outerIdx)
    outer.push_back(generators[i]);
  for (std::size_t i : innerIdx)
    inner.push_back(generators[i]);
  IntVec u(dim);
  for (const IntVec &h : c.facets)
    for (std::size_t k = 0; k < dim; ++k)
      u[k] += h[k];

  MembershipSearch search(outer, inner, c, u);
  auto t = search.run(v);
  if (!t)
    return res;
  res.member = true;
  res.multipliers.assign(generators.size(), 0);
  for (std::size_t j = 0; j < outerIdx.size(); ++j)
    res.multipliers[outerIdx[j]] = search.multipliers()[j];
  if (!inner.empty()) {
    // shift the group coefficients by a strictly positive relation
    std::vector<LinearConstraint> cons;
    for (std::size_t k = 0; k < dim; ++k) {
      IntVec row;
      for (const IntVec &g : inner)
        row.push_back(g[k]);
      cons.push_back(make_constraint(row, Relation::Equal, 0));
    }
    for (std::size_t j = 0; j < inner.size(); ++j) {
      IntVec row(inner.size(), 0);
      row[j] = 1;
      cons.push_back(make_constraint(row, Relation::GreaterEq, 1));
    }
    auto rel = find_feasible_point(inner.size(), cons);
    Int den = 1;
    for (const Rat &x : *rel)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    IntVec relation;
    for (const Rat &x : *rel)
      relation.push_back(Rat(x * den).get_num());
    Int shift = 0;
    for (std::size_t j = 0; j < inner.size(); ++j)
      if ((*t)[j] < 0) {
        Int need;
        mpz_cdiv_q(need.get_mpz_t(), Int(-(*t)[j]).get_mpz_t(),
                   relation[j].get_mpz_t());
        shift = std::max(shift, need);
      }
    for (std::size_t j = 0; j < inner.size(); ++j)
      res.multipliers[innerIdx[j]] = (*t)[j] + shift * relation[j];
  }
  return res;
}

}  // namespace svc
