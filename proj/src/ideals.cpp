#include "svc/ideals.hpp"
#include "svc/cone.hpp"
#include "svc/lp.hpp"
#include "svc/polyhedra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

namespace svc {

namespace {

long total(const Exponent &e) { return std::accumulate(e.begin(), e.end(), 0L); }

bool graded_less(const Exponent &a, const Exponent &b) {
  long ta = total(a), tb = total(b);
  return ta != tb ? ta < tb : a > b;
}

bool divides(const Exponent &a, const Exponent &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

Exponent lcm(const Exponent &a, const Exponent &b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = std::max(a[i], b[i]);
  return out;
}

/// a - b + c
Exponent shift(const Exponent &a, const Exponent &b, const Exponent &c) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] - b[i] + c[i];
  return out;
}

bool coprime(const Exponent &a, const Exponent &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i])
      return false;
  return true;
}

/// x^p - x^q oriented so that the first term is larger; nullopt when zero.
std::optional<Binomial> oriented(Exponent p, Exponent q, const TermOrder &ord) {
  int c = ord.compare(p, q);
  if (c == 0)
    return std::nullopt;
  if (c < 0)
    std::swap(p, q);
  return Binomial{std::move(p), std::move(q), false};
}

class Reducer {
public:
  Reducer(const std::vector<Binomial> &basis, const TermOrder &ord)
      : basis_(basis), ord_(ord) {}

  const Binomial *divisor_of(const Exponent &e, std::size_t skip) const {
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (k != skip && divides(basis_[k].plus, e))
        return &basis_[k];
    return nullptr;
  }

  /// Full normal form; nullopt for zero.
  std::optional<Binomial> reduce(Binomial f,
                                 std::size_t skip = std::size_t(-1)) const {
    while (true) {
      if (const Binomial *g = divisor_of(f.plus, skip)) {
        if (f.monomial) {
          if (g->monomial)
            return std::nullopt;
          f.plus = shift(f.plus, g->plus, g->minus);
          continue;
        }
        if (g->monomial) {
          f = make_monomial(f.minus);
          continue;
        }
        auto r = oriented(shift(f.plus, g->plus, g->minus), f.minus, ord_);
        if (!r)
          return std::nullopt;
        f = *r;
        continue;
      }
      if (f.monomial)
        return f;
      if (const Binomial *g = divisor_of(f.minus, skip)) {
        if (g->monomial)
          f = make_monomial(f.plus);
        else
          f.minus = shift(f.minus, g->plus, g->minus);
        continue;
      }
      return f;
    }
  }

private:
  const std::vector<Binomial> &basis_;
  const TermOrder &ord_;
};

std::optional<Binomial> s_pair(const Binomial &f, const Binomial &g,
                               const TermOrder &ord) {
  Exponent l = lcm(f.plus, g.plus);
  if (f.monomial && g.monomial)
    return std::nullopt;
  if (f.monomial)
    return make_monomial(shift(l, g.plus, g.minus));
  if (g.monomial)
    return make_monomial(shift(l, f.plus, f.minus));
  return oriented(shift(l, f.plus, f.minus), shift(l, g.plus, g.minus), ord);
}

long to_long(const Int &x) {
  if (!x.fits_slong_p())
    throw Error(ErrorKind::Overflow, "weight does not fit in 64 bits");
  return x.get_si();
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const Cell &)> &fn) {
  Cell idx;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (stop)
      return;
    if (idx.size() == k) {
      stop = fn(idx);
      return;
    }
    for (std::size_t i = start; i + (k - idx.size()) <= n && !stop; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

/// u with B^T u = d, if any.
std::optional<RatVec> row_coefficients(const Configuration &b, const Exponent &d) {
  const std::size_t m = b.dim();
  Cell basis;
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < b.size() && rows.size() < m; ++i) {
    rows.push_back(b[i]);
    if (rank(rows) == rows.size())
      basis.push_back(i);
    else
      rows.pop_back();
  }
  if (rows.size() != m)
    return std::nullopt;
  RatVec rhs;
  for (std::size_t i : basis)
    rhs.emplace_back(d[i]);
  auto u = solve_square(IntMatrix::from_rows(rows, m), rhs);
  if (!u)
    return std::nullopt;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (dot(b[i], *u) != d[i])
      return std::nullopt;
  return u;
}

}  // namespace

bool Binomial::operator<(const Binomial &o) const {
  if (plus != o.plus)
    return graded_less(plus, o.plus);
  if (monomial != o.monomial)
    return monomial;
  return graded_less(minus, o.minus);
}

Binomial make_binomial(Exponent plus, Exponent minus) {
  return Binomial{std::move(plus), std::move(minus), false};
}

Binomial make_monomial(Exponent e) {
  Exponent zero(e.size(), 0);
  return Binomial{std::move(e), std::move(zero), true};
}

std::string to_string(const Exponent &e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0)
      continue;
    if (!out.empty())
      out += "*";
    out += "x" + std::to_string(i + 1);
    if (e[i] != 1)
      out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Binomial &b) {
  if (b.monomial)
    return to_string(b.plus);
  return to_string(b.plus) + " - " + to_string(b.minus);
}

int TermOrder::compare(const Exponent &a, const Exponent &b) const {
  for (const auto &w : weights) {
    __int128 sa = 0, sb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      sa += __int128(w[i]) * a[i];
      sb += __int128(w[i]) * b[i];
    }
    if (sa != sb)
      return sa < sb ? -1 : 1;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i])
      return a[i] < b[i] ? -1 : 1;
  return 0;
}

TermOrder graded_order(std::size_t nvars) {
  return TermOrder{{std::vector<long>(nvars, 1)}, nvars};
}

TermOrder WeightOrder::term_order() const {
  Int den = 1;
  for (const Rat &x : omega)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<long> w;
  for (const Rat &x : omega)
    w.push_back(to_long(Rat(x * den).get_num()));
  return TermOrder{{w}, omega.size()};
}

WeightOrder weight_order_for(const Configuration &b, const RatVec &w) {
  const std::size_t m = b.dim();
  if (w.size() != m)
    throw Error(ErrorKind::InvalidArgument, "weight has wrong dimension");
  std::optional<WeightOrder> found;
  for_each_subset(b.size(), m, [&](const Cell &sigma) {
    auto lambda = solve_square(IntMatrix::from_columns(b.subset(sigma), m), w);
    if (!lambda)
      return false;
    for (const Rat &x : *lambda)
      if (x < 0)
        return false;
    WeightOrder wo;
    wo.w = w;
    wo.omega.assign(b.size(), 0);
    for (std::size_t k = 0; k < m; ++k)
      wo.omega[sigma[k]] = (*lambda)[k];
    found = wo;
    return true;
  });
  if (!found)
    throw Error(ErrorKind::NotInCone, "weight is not in cone(B)");
  return *found;
}

WeightOrder weight_order_from_omega(const Configuration &b, const RatVec &omega) {
  if (omega.size() != b.size())
    throw Error(ErrorKind::InvalidArgument, "omega has wrong length");
  WeightOrder wo;
  wo.omega = omega;
  wo.w.assign(b.dim(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (omega[i] < 0)
      throw Error(ErrorKind::InvalidArgument, "omega must be nonnegative");
    for (std::size_t k = 0; k < b.dim(); ++k)
      wo.w[k] += omega[i] * b[i][k];
  }
  return wo;
}

GroebnerBasis buchberger_reduced(const std::vector<Binomial> &generators,
                                 const TermOrder &ord) {
  std::vector<Binomial> g;
  using Pair = std::tuple<long, std::size_t, std::size_t>;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](Binomial f) {
    std::size_t k = g.size();
    g.push_back(std::move(f));
    if (g.size() > kMaxGroebnerElements)
      throw Error(ErrorKind::NonTerminating,
                  "Groebner basis exceeded " +
                      std::to_string(kMaxGroebnerElements) + " elements");
    for (std::size_t i = 0; i < k; ++i) {
      queue.emplace(total(lcm(g[i].plus, g[k].plus)), i, k);
      pending.emplace(i, k);
    }
  };
  for (const Binomial &f : generators) {
    Binomial h = f;
    if (!h.monomial) {
      auto o = oriented(h.plus, h.minus, ord);
      if (!o)
        continue;
      h = *o;
    }
    auto r = Reducer(g, ord).reduce(h);
    if (r)
      add(*r);
  }
  while (!queue.empty()) {
    auto [deg, i, j] = queue.top();
    queue.pop();
    pending.erase({i, j});
    const Binomial &f = g[i], &h = g[j];
    if (coprime(f.plus, h.plus))
      continue;
    Exponent l = lcm(f.plus, h.plus);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k)
      if (k != i && k != j && divides(g[k].plus, l) &&
          !pending.count({std::min(i, k), std::max(i, k)}) &&
          !pending.count({std::min(j, k), std::max(j, k)}))
        chain = true;
    if (chain)
      continue;
    auto s = s_pair(f, h, ord);
    if (!s)
      continue;
    auto r = Reducer(g, ord).reduce(*s);
    if (r)
      add(*r);
  }

  // minimal and reduced
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k)
      if (k != i && divides(g[k].plus, g[i].plus) &&
          (g[k].plus != g[i].plus || k < i))
        redundant = true;
    if (!redundant)
      minimal.push_back(g[i]);
  }
  GroebnerBasis gb;
  gb.order = ord;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Binomial f = minimal[i];
    if (!f.monomial) {
      Reducer others(minimal, ord);
      // only the trailing term can be reducible
      while (const Binomial *d = others.divisor_of(f.minus, i)) {
        if (d->monomial) {
          f = make_monomial(f.plus);
          break;
        }
        f.minus = shift(f.minus, d->plus, d->minus);
      }
    }
    gb.elements.push_back(std::move(f));
  }
  std::sort(gb.elements.begin(), gb.elements.end());
  gb.flippable.assign(gb.elements.size(), false);
  return gb;
}

LatticeIdeal lattice_ideal(const Configuration &b) {
  const std::size_t n = b.size(), m = b.dim();
  LatticeIdeal ideal;
  ideal.config = b;
  // one binomial per row of B, plus t * x1 ... xn - 1 for the saturation
  std::vector<Binomial> gens;
  for (std::size_t k = 0; k < m; ++k) {
    Exponent p(n + 1, 0), q(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      long v = to_long(b[i][k]);
      (v > 0 ? p : q)[i] = v > 0 ? v : -v;
    }
    gens.push_back(make_binomial(p, q));
  }
  Exponent all(n + 1, 1);
  gens.push_back(make_binomial(all, Exponent(n + 1, 0)));
  std::vector<long> elim(n + 1, 0), deg(n + 1, 1);
  elim[n] = 1;
  deg[n] = 0;
  GroebnerBasis withT = buchberger_reduced(gens, TermOrder{{elim, deg}, n + 1});
  std::vector<Binomial> eliminated;
  for (const Binomial &f : withT.elements) {
    if (f.plus[n] != 0 || f.minus[n] != 0)
      continue;
    Exponent p(f.plus.begin(), f.plus.end() - 1), q(f.minus.begin(), f.minus.end() - 1);
    eliminated.push_back(f.monomial ? make_monomial(p) : make_binomial(p, q));
  }
  ideal.generators = buchberger_reduced(eliminated, graded_order(n)).elements;
  bool ok = true;
  for (const Binomial &f : ideal.generators) {
    if (f.monomial) {
      ok = false;
      continue;
    }
    Exponent d(n);
    for (std::size_t i = 0; i < n; ++i)
      d[i] = f.plus[i] - f.minus[i];
    if (!row_coefficients(b, d))
      ok = false;
  }
  ideal.saturationCertified = ok;
  return ideal;
}

GroebnerBasis groebner_basis(const LatticeIdeal &ideal, const WeightOrder &order) {
  return buchberger_reduced(ideal.generators, order.term_order());
}

std::optional<Exponent> normal_form(const Exponent &e, const GroebnerBasis &gb) {
  Exponent cur = e;
  while (true) {
    const Binomial *d = nullptr;
    for (const Binomial &f : gb.elements)
      if (divides(f.plus, cur)) {
        d = &f;
        break;
      }
    if (!d)
      return cur;
    if (d->monomial)
      return std::nullopt;
    cur = shift(cur, d->plus, d->minus);
  }
}

bool MonomialIdeal::contains(const Exponent &e) const {
  for (const Exponent &g : generators)
    if (divides(g, e))
      return true;
  return false;
}

MonomialIdeal make_monomial_ideal(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end(), graded_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal m;
  for (const Exponent &g : gens) {
    bool redundant = false;
    for (const Exponent &h : m.generators)
      if (divides(h, g))
        redundant = true;
    if (!redundant)
      m.generators.push_back(g);
  }
  return m;
}

bool InitialIdeal::is_monomial() const {
  for (const Binomial &f : generators)
    if (!f.monomial)
      return false;
  return true;
}

MonomialIdeal InitialIdeal::first_terms() const {
  std::vector<Exponent> gens;
  for (const Binomial &f : generators)
    gens.push_back(f.plus);
  return make_monomial_ideal(std::move(gens));
}

InitialIdeal initial_ideal(const LatticeIdeal &ideal, const WeightOrder &order) {
  GroebnerBasis gb = groebner_basis(ideal, order);
  InitialIdeal in;
  for (const Binomial &f : gb.elements) {
    if (f.monomial) {
      in.generators.push_back(f);
      continue;
    }
    Rat wp = 0, wm = 0;
    for (std::size_t i = 0; i < f.plus.size(); ++i) {
      wp += order.omega[i] * f.plus[i];
      wm += order.omega[i] * f.minus[i];
    }
    in.generators.push_back(wp == wm ? f : make_monomial(f.plus));
  }
  std::sort(in.generators.begin(), in.generators.end());
  return in;
}

InitialIdeal initial_ideal(const LatticeIdeal &ideal, const RatVec &w) {
  return initial_ideal(ideal, weight_order_for(ideal.config, w));
}

bool same_ideal(const std::vector<Binomial> &a, const std::vector<Binomial> &b,
                std::size_t nvars) {
  TermOrder ord = graded_order(nvars);
  return buchberger_reduced(a, ord).elements ==
         buchberger_reduced(b, ord).elements;
}

GroebnerCone groebner_cone(const GroebnerBasis &gb, const Configuration &b) {
  const std::size_t m = b.dim(), n = b.size();
  GroebnerCone cone;
  cone.flippable.assign(gb.elements.size(), false);
  for (const Binomial &f : gb.elements) {
    if (f.monomial) {
      cone.normals.emplace_back();
      continue;
    }
    Exponent d(n);
    for (std::size_t i = 0; i < n; ++i)
      d[i] = f.plus[i] - f.minus[i];
    auto u = row_coefficients(b, d);
    if (!u)
      throw Error(ErrorKind::InvalidArgument,
                  "basis element is not in the lattice ideal of B");
    cone.normals.push_back(*u);
  }
  Cone cb = cone_from(b.vectors(), m, std::max(m, kMaxConeDim));
  for (std::size_t g = 0; g < gb.elements.size(); ++g) {
    if (cone.normals[g].empty())
      continue;
    std::vector<LinearConstraint> cons;
    for (const IntVec &h : cb.facets)
      cons.push_back(make_constraint(h, Relation::GreaterEq, 0));
    for (const IntVec &e : cb.equations)
      cons.push_back(make_constraint(e, Relation::Equal, 0));
    for (std::size_t h = 0; h < gb.elements.size(); ++h) {
      if (cone.normals[h].empty())
        continue;
      LinearConstraint lc;
      lc.coeffs = cone.normals[h];
      lc.rel = h == g ? Relation::LessEq : Relation::GreaterEq;
      lc.rhs = h == g ? -1 : 0;
      cons.push_back(std::move(lc));
    }
    cone.flippable[g] = find_feasible_point(m, cons).has_value();
  }
  return cone;
}

std::vector<Cell> minimal_primes(const MonomialIdeal &mi) {
  std::set<Cell> covers;
  Cell chosen;
  std::function<void()> rec = [&]() {
    const Exponent *open = nullptr;
    for (const Exponent &g : mi.generators) {
      bool hit = false;
      for (std::size_t v : chosen)
        if (g[v] > 0)
          hit = true;
      if (!hit) {
        open = &g;
        break;
      }
    }
    if (!open) {
      Cell c = chosen;
      std::sort(c.begin(), c.end());
      covers.insert(c);
      return;
    }
    for (std::size_t v = 0; v < open->size(); ++v)
      if ((*open)[v] > 0) {
        chosen.push_back(v);
        rec();
        chosen.pop_back();
      }
  };
  rec();
  std::vector<Cell> out;
  for (const Cell &c : covers) {
    bool minimal = true;
    for (const Cell &d : covers)
      if (d != c && std::includes(c.begin(), c.end(), d.begin(), d.end()))
        minimal = false;
    if (minimal)
      out.push_back(c);
  }
  return out;
}

FiberTable fiber_table(const Configuration &b, std::size_t degreeBound) {
  const std::size_t n = b.size(), m = b.dim();
  GaleDual gd = gale_dual(b);
  Cone cb = cone_from(b.vectors(), m, std::max(m, kMaxConeDim));
  if (!cb.full_dimensional() || !cb.pointed())
    throw Error(ErrorKind::InfiniteFiber,
                "fibers need a pointed full-dimensional cone(B)");
  FiberTable table;
  Cone dual = cone_from(cb.facets, m, std::max(m, kMaxConeDim));
  for (const IntVec &h : hilbert_basis(dual).elements) {
    Exponent e;
    for (std::size_t i = 0; i < n; ++i)
      e.push_back(to_long(dot(b[i], h)));
    table.recessionMonomials.push_back(e);
  }
  std::map<IntVec, IntVec> degrees;
  IntVec u(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t left) {
    if (i == n) {
      IntVec deg = gd.matrixA * u;
      degrees.emplace(deg, u);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      u[i] = static_cast<long>(k);
      rec(i + 1, left - k);
    }
    u[i] = 0;
  };
  rec(0, degreeBound);
  for (const auto &[deg, rep] : degrees) {
    PolyhedronPc p = make_polyhedron(b, rep);
    std::vector<Exponent> fiber;
    for (const IntVec &z : representative_points(p)) {
      Exponent v;
      for (std::size_t i = 0; i < n; ++i)
        v.push_back(to_long(rep[i] - dot(b[i], z)));
      fiber.push_back(std::move(v));
    }
    table.fibers.push_back(std::move(fiber));
  }
  return table;
}

bool is_A_graded(const std::function<bool(const Exponent &)> &inIdeal,
                 const FiberTable &table) {
  for (const Exponent &r : table.recessionMonomials)
    if (!inIdeal(r))
      return false;
  for (const auto &fiber : table.fibers) {
    std::size_t standard = 0;
    for (const Exponent &v : fiber)
      if (!inIdeal(v) && ++standard > 1)
        return false;
    if (standard != 1)
      return false;
  }
  return true;
}

bool is_A_graded(const MonomialIdeal &m, const Configuration &b,
                 std::size_t degreeBound) {
  FiberTable table = fiber_table(b, degreeBound);
  return is_A_graded([&](const Exponent &e) { return m.contains(e); }, table);
}

}  // namespace svc
