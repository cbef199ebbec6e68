#include "svc/virtual_chambers.hpp"
#include "svc/polyhedra.hpp"
#include "svc/supernormal.hpp"
#include "svc/triangulations.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>

namespace svc {

namespace {

long total(const Exponent &e) { return std::accumulate(e.begin(), e.end(), 0L); }

IntVec to_int(const Exponent &e) { return IntVec(e.begin(), e.end()); }

bool tight_rhs(const Configuration &b, const IntVec &c) {
  std::vector<IntVec> pts = representative_points(make_polyhedron(b, c));
  for (std::size_t i = 0; i < b.size(); ++i) {
    bool hit = false;
    for (const IntVec &z : pts)
      if (dot(b[i], z) == c[i]) {
        hit = true;
        break;
      }
    if (!hit)
      return false;
  }
  return true;
}

void for_each_exponent(std::size_t n, std::size_t degreeBound,
                       const std::function<void(const Exponent &)> &fn) {
  Exponent e(n, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == n) {
      fn(e);
      return;
    }
    for (long k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, static_cast<long>(degreeBound));
}

void for_each_divisor(const Exponent &u, const std::function<void(const Exponent &)> &fn) {
  Exponent c(u.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == u.size()) {
      fn(c);
      return;
    }
    for (long k = 0; k <= u[i]; ++k) {
      c[i] = k;
      rec(i + 1);
    }
    c[i] = 0;
  };
  rec(0);
}

Cell all_indices(std::size_t n) {
  Cell c(n);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

}  // namespace

Configuration gale_configuration(const Configuration &b) {
  GaleDual gd = gale_dual(b);
  return Configuration::unchecked(b.size() - b.dim(), gd.columns());
}

Subdivision complement_cells(const Subdivision &s, std::size_t n) {
  std::vector<Cell> out;
  for (const Cell &cell : s.cells) {
    Cell comp;
    for (std::size_t i = 0; i < n; ++i)
      if (!std::binary_search(cell.begin(), cell.end(), i))
        comp.push_back(i);
    out.push_back(comp);
  }
  return canonical(out);
}

std::vector<VirtualChamber> virtual_chambers(const Configuration &b) {
  const std::size_t n = b.size();
  if (n == b.dim())
    return {VirtualChamber{canonical({all_indices(n)}), true}};
  Configuration a = gale_configuration(b);
  std::vector<VirtualChamber> out;
  for (const Subdivision &t : all_triangulations(a, false))
    out.push_back(VirtualChamber{complement_cells(t, n), is_regular(a, t).regular});
  std::sort(out.begin(), out.end());
  return out;
}

Section::Section(Configuration a, Subdivision triangulation)
    : a_(std::move(a)), triangulation_(std::move(triangulation)) {}

RatVec Section::operator()(const RatVec &b) const {
  const std::size_t d = a_.dim();
  if (b.size() != d)
    throw Error(ErrorKind::InvalidArgument, "degree has wrong dimension");
  for (const Cell &cell : triangulation_.cells) {
    RatVec u(a_.size(), 0);
    if (d > 0) {
      auto lambda = solve_square(IntMatrix::from_columns(a_.subset(cell), d), b);
      if (!lambda)
        continue;
      bool nonneg = true;
      for (const Rat &x : *lambda)
        if (x < 0)
          nonneg = false;
      if (!nonneg)
        continue;
      for (std::size_t k = 0; k < cell.size(); ++k)
        u[cell[k]] = (*lambda)[k];
    }
    return u;
  }
  throw Error(ErrorKind::PointOutsideCone, "degree is outside cone(A)");
}

bool Section::in_image(const Exponent &c) const {
  for (const Cell &cell : triangulation_.cells) {
    bool inside = true;
    for (std::size_t i = 0; i < c.size() && inside; ++i)
      if (c[i] != 0 && !std::binary_search(cell.begin(), cell.end(), i))
        inside = false;
    if (inside)
      return true;
  }
  return false;
}

bool Section::in_image(const IntVec &c) const {
  Exponent e;
  for (const Int &x : c)
    e.push_back(x.get_si());
  return in_image(e);
}

Section section_from_triangulation(const Configuration &a,
                                   const Subdivision &triangulation) {
  return Section(a, triangulation);
}

Section section_of(const Configuration &b, const VirtualChamber &vc) {
  const std::size_t n = b.size();
  Configuration a = n == b.dim() ? Configuration::unchecked(0, std::vector<IntVec>(n))
                                 : gale_configuration(b);
  return Section(a, complement_cells(vc.cells, n));
}

VirtualContext virtual_context(const Configuration &b, std::size_t degreeBound) {
  VirtualContext ctx;
  ctx.config = b;
  ctx.degreeBound = degreeBound;
  for_each_exponent(b.size(), degreeBound, [&](const Exponent &c) {
    if (tight_rhs(b, to_int(c)))
      ctx.tight.push_back(c);
  });
  std::stable_sort(ctx.tight.begin(), ctx.tight.end(),
                   [](const Exponent &x, const Exponent &y) {
                     long tx = total(x), ty = total(y);
                     return tx != ty ? tx < ty : x > y;
                   });
  if (b.size() > b.dim())
    ctx.fibers = fiber_table(b, degreeBound);
  return ctx;
}

std::function<bool(const Exponent &)> virtual_membership(const VirtualContext &ctx,
                                                        const VirtualChamber &vc,
                                                        const MonomialIdeal &low) {
  auto memo = std::make_shared<std::map<Exponent, bool>>();
  const long bound = static_cast<long>(ctx.degreeBound);
  return [&ctx, low, memo, bound, s = section_of(ctx.config, vc)](const Exponent &u) {
    if (low.contains(u))
      return true;
    if (total(u) <= bound)
      return false;
    // beyond D membership is decided from the definition directly
    bool found = false;
    for_each_divisor(u, [&](const Exponent &c) {
      if (found || total(c) <= bound || s.in_image(c))
        return;
      auto it = memo->find(c);
      if (it == memo->end())
        it = memo->emplace(c, tight_rhs(ctx.config, to_int(c))).first;
      found = it->second;
    });
    return found;
  };
}

VirtualInitialIdeal virtual_initial_ideal(const VirtualContext &ctx,
                                          const VirtualChamber &vc) {
  const Configuration &b = ctx.config;
  Section s = section_of(b, vc);
  std::vector<Exponent> gens;
  for (const Exponent &c : ctx.tight) {
    if (s.in_image(c))
      continue;
    bool divisible = false;
    for (const Exponent &g : gens)
      if (std::equal(g.begin(), g.end(), c.begin(), std::less_equal<long>()))
        divisible = true;
    if (!divisible)
      gens.push_back(c);
  }
  VirtualInitialIdeal out;
  out.ideal = make_monomial_ideal(std::move(gens));
  out.sourceChamber = vc;
  if (b.size() > b.dim() &&
      !is_A_graded(virtual_membership(ctx, vc, out.ideal), ctx.fibers))
    throw Error(ErrorKind::NotAGraded,
                "ideal fails the Hilbert function check up to degree " +
                    std::to_string(ctx.degreeBound));
  out.certifiedToDegree = ctx.degreeBound;
  return out;
}

VirtualInitialIdeal virtual_initial_ideal(const Configuration &b,
                                          const VirtualChamber &vc,
                                          std::size_t degreeBound) {
  return virtual_initial_ideal(virtual_context(b, degreeBound), vc);
}

VirtualChamber chamber_from_ideal(const Configuration &b, const MonomialIdeal &m) {
  const std::size_t n = b.size();
  VirtualChamber vc;
  vc.cells = canonical(minimal_primes(m));
  if (n == b.dim()) {
    if (!(vc.cells == canonical({all_indices(n)})))
      throw Error(ErrorKind::NotATriangulation,
                  "minimal primes do not form the trivial chamber");
    vc.regular = true;
    return vc;
  }
  for (const Cell &c : vc.cells.cells)
    if (c.size() != b.dim())
      throw Error(ErrorKind::NotATriangulation,
                  "minimal prime of the wrong size " + std::to_string(c.size()));
  Configuration a = gale_configuration(b);
  Subdivision t = complement_cells(vc.cells, n);
  if (!is_triangulation(a, t))
    throw Error(ErrorKind::NotATriangulation,
                "complements of the minimal primes do not triangulate A");
  vc.regular = is_regular(a, t).regular;
  return vc;
}

BijectionReport verify_bijection(const Configuration &b, std::size_t degreeBound) {
  BijectionReport rep;
  VirtualContext ctx = virtual_context(b, degreeBound);
  std::set<std::vector<Exponent>> seen;
  for (const VirtualChamber &vc : virtual_chambers(b)) {
    ++rep.chambers;
    VirtualInitialIdeal m = virtual_initial_ideal(ctx, vc);
    seen.insert(m.ideal.generators);
    if (chamber_from_ideal(b, m.ideal) == vc)
      ++rep.roundTrips;
    rep.ideals.push_back(std::move(m));
  }
  rep.distinctIdeals = seen.size();
  return rep;
}

DivisibilityReport check_gcd_divisibility(
    const Configuration &b, const std::vector<std::pair<IntVec, IntVec>> &pairs) {
  DivisibilityReport rep;
  for (const auto &[u, v] : pairs) {
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] < 0 || u[i] > v[i])
        throw Error(ErrorKind::InvalidArgument, "x^u must divide x^v");
    ++rep.checked;
    IntVec tu = tighten(b, u), tv = tighten(b, v);
    for (std::size_t i = 0; i < tu.size(); ++i)
      if (tu[i] > tv[i]) {
        rep.violations.emplace_back(u, v);
        break;
      }
  }
  return rep;
}

}  // namespace svc
