#include "svc/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace svc {

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Parse: return "Parse";
  case ErrorKind::RankDeficient: return "RankDeficient";
  case ErrorKind::NotSaturated: return "NotSaturated";
  case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
  case ErrorKind::TooLarge: return "TooLarge";
  case ErrorKind::NotPointed: return "NotPointed";
  case ErrorKind::Unbounded: return "Unbounded";
  case ErrorKind::EmptyPolyhedron: return "EmptyPolyhedron";
  case ErrorKind::NoLatticePoint: return "NoLatticePoint";
  case ErrorKind::NotInCone: return "NotInCone";
  case ErrorKind::NonTerminating: return "NonTerminating";
  case ErrorKind::NotAGraded: return "NotAGraded";
  case ErrorKind::InfiniteFiber: return "InfiniteFiber";
  case ErrorKind::NotATriangulation: return "NotATriangulation";
  case ErrorKind::PointOutsideCone: return "PointOutsideCone";
  case ErrorKind::TooManyPoints: return "TooManyPoints";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec> &rows,
                               std::size_t cols) {
  if (!rows.empty())
    cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::vector<long>> rows) {
  std::vector<IntVec> converted;
  for (const auto &row : rows) {
    IntVec v;
    for (long x : row)
      v.emplace_back(x);
    converted.push_back(std::move(v));
  }
  return from_rows(converted);
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec> &cols,
                                  std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw Error(ErrorKind::InvalidArgument, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = cols[c][r];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVec IntMatrix::column(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVec> IntMatrix::row_list() const {
  std::vector<IntVec> out;
  for (std::size_t r = 0; r < rows_; ++r)
    out.push_back(row(r));
  return out;
}

std::vector<IntVec> IntMatrix::column_list() const {
  std::vector<IntVec> out;
  for (std::size_t c = 0; c < cols_; ++c)
    out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix &other) const {
  if (cols_ != other.rows_)
    throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
  IntMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int &a = (*this)(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        p(i, j) += a * other(k, j);
    }
  return p;
}

IntVec IntMatrix::operator*(const IntVec &v) const {
  if (cols_ != v.size())
    throw Error(ErrorKind::InvalidArgument, "matrix-vector shape mismatch");
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      out[i] += (*this)(i, k) * v[k];
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int &x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Int &factor) {
  if (factor == 0)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Int &factor) {
  if (factor == 0)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, c) = -(*this)(r, c);
}

std::string to_string(const IntMatrix &m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? " " : "") << m(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

// ------------------------------------------------------------ normal forms

namespace {

Int floor_div(const Int &a, const Int &b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix &m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t pivotRow = 0;
  for (std::size_t col = 0; col < h.cols() && pivotRow < h.rows(); ++col) {
    // Euclid on the column below pivotRow.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t r = pivotRow; r < h.rows(); ++r)
        if (h(r, col) != 0 &&
            (best == h.rows() || abs(h(r, col)) < abs(h(best, col))))
          best = r;
      if (best == h.rows())
        break;
      h.swap_rows(pivotRow, best);
      u.swap_rows(pivotRow, best);
      bool done = true;
      for (std::size_t r = pivotRow + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0)
          continue;
        Int q = h(r, col) / h(pivotRow, col);  // truncating
        h.add_row(r, pivotRow, -q);
        u.add_row(r, pivotRow, -q);
        if (h(r, col) != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (h(pivotRow, col) == 0)
      continue;
    if (h(pivotRow, col) < 0) {
      h.negate_row(pivotRow);
      u.negate_row(pivotRow);
    }
    for (std::size_t r = 0; r < pivotRow; ++r) {
      Int q = floor_div(h(r, col), h(pivotRow, col));
      h.add_row(r, pivotRow, -q);
      u.add_row(r, pivotRow, -q);
    }
    ++pivotRow;
  }
  return {std::move(h), std::move(u), pivotRow};
}

std::vector<Int> SmithForm::invariants() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    d.push_back(S(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix &m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the remaining block becomes the pivot
      std::size_t pr = s.rows(), pc = s.cols();
      for (std::size_t r = t; r < s.rows(); ++r)
        for (std::size_t c = t; c < s.cols(); ++c)
          if (s(r, c) != 0 && (pr == s.rows() || abs(s(r, c)) < abs(s(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == s.rows())
        return {std::move(s), std::move(u), std::move(v)};
      s.swap_rows(t, pr);
      u.swap_rows(t, pr);
      s.swap_cols(t, pc);
      v.swap_cols(t, pc);
      bool clean = true;
      for (std::size_t r = t + 1; r < s.rows(); ++r) {
        Int q = s(r, t) / s(t, t);
        s.add_row(r, t, -q);
        u.add_row(r, t, -q);
        if (s(r, t) != 0)
          clean = false;
      }
      for (std::size_t c = t + 1; c < s.cols(); ++c) {
        Int q = s(t, c) / s(t, t);
        s.add_col(c, t, -q);
        v.add_col(c, t, -q);
        if (s(t, c) != 0)
          clean = false;
      }
      if (!clean)
        continue;
      // divisibility of the rest of the block
      std::size_t bad = s.rows();
      for (std::size_t r = t + 1; r < s.rows() && bad == s.rows(); ++r)
        for (std::size_t c = t + 1; c < s.cols(); ++c)
          if (s(r, c) % s(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad == s.rows())
        break;
      s.add_row(t, bad, 1);
      u.add_row(t, bad, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

IntMatrix integer_kernel(const IntMatrix &m) {
  const std::size_t n = m.cols();
  if (n == 0)
    return IntMatrix(0, 0);
  HermiteForm hf = hermite_normal_form(m.transpose());
  std::vector<IntVec> rows;
  for (std::size_t r = hf.rank; r < n; ++r)
    rows.push_back(hf.U.row(r));
  if (rows.empty())
    return IntMatrix(0, n);
  HermiteForm canon = hermite_normal_form(IntMatrix::from_rows(rows));
  IntMatrix k(canon.rank, n);
  for (std::size_t r = 0; r < canon.rank; ++r)
    for (std::size_t c = 0; c < n; ++c)
      k(r, c) = canon.H(r, c);
  return k;
}

Int determinant(const IntMatrix &m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  // Bareiss fraction-free elimination
  IntMatrix a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0)
        ++swap;
      if (swap == n)
        return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix &m) {
  // fraction-free elimination without transforms
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, col) == 0)
      ++piv;
    if (piv == a.rows())
      continue;
    a.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0)
        continue;
      Int f = a(i, col), p = a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a(i, j) = a(i, j) * p - a(r, j) * f;
    }
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<IntVec> &vectors) {
  if (vectors.empty())
    return 0;
  return rank(IntMatrix::from_rows(vectors));
}

Int lattice_index(const std::vector<IntVec> &vectors) {
  if (vectors.empty())
    return 1;
  if (vectors.size() != vectors.front().size())
    throw Error(ErrorKind::InvalidArgument,
                "lattice_index needs exactly m vectors in Z^m");
  return abs(determinant(IntMatrix::from_rows(vectors)));
}

std::optional<RatVec> solve_square(const IntMatrix &m, const RatVec &b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n)
    throw Error(ErrorKind::InvalidArgument, "solve_square shape mismatch");
  std::vector<RatVec> a(n, RatVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m(i, j);
    a[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      return std::nullopt;
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0)
        continue;
      Rat f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j)
        a[r][j] -= f * a[c][j];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = a[i][n] / a[i][i];
  return x;
}

std::optional<IntVec> kernel_line(const IntMatrix &m) {
  IntMatrix k = integer_kernel(m);
  if (k.rows() != 1)
    return std::nullopt;
  return k.row(0);
}

Int dot(const IntVec &a, const IntVec &b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec &a, const RatVec &b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += Rat(a[i]) * b[i];
  return s;
}

Int gcd_of(const IntVec &v) {
  Int g = 0;
  for (const Int &x : v)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVec primitive(const IntVec &v) {
  Int g = gcd_of(v);
  if (g == 0 || g == 1)
    return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i] / g;
  return out;
}

IntVec negated(const IntVec &v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = -v[i];
  return out;
}

bool is_zero(const IntVec &v) {
  return std::all_of(v.begin(), v.end(), [](const Int &x) { return x == 0; });
}

IntVec to_int_vec(std::initializer_list<long> values) {
  IntVec v;
  for (long x : values)
    v.emplace_back(x);
  return v;
}

std::string to_string(const IntVec &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

// ------------------------------------------------------------ LatticeFrame

LatticeFrame::LatticeFrame(const std::vector<IntVec> &vectors, std::size_t dim)
    : ambient_(dim) {
  IntMatrix eq = vectors.empty() ? IntMatrix::identity(dim)
                                 : integer_kernel(IntMatrix::from_rows(vectors));
  equations_ = eq.row_list();
  IntMatrix basis = equations_.empty() ? IntMatrix::identity(dim)
                                       : integer_kernel(eq);
  if (vectors.empty())
    basis = IntMatrix(0, dim);
  basis_ = basis.row_list();
  // choose coordinates on which the basis is independent
  std::vector<IntVec> chosen;
  for (std::size_t c = 0; c < dim && pivots_.size() < basis_.size(); ++c) {
    IntVec colvec(basis_.size());
    for (std::size_t r = 0; r < basis_.size(); ++r)
      colvec[r] = basis_[r][c];
    chosen.push_back(colvec);
    if (rank(chosen) == chosen.size())
      pivots_.push_back(c);
    else
      chosen.pop_back();
  }
}

std::optional<RatVec> LatticeFrame::rational_coordinates(const IntVec &v) const {
  for (const IntVec &e : equations_)
    if (dot(e, v) != 0)
      return std::nullopt;
  const std::size_t r = basis_.size();
  if (r == 0)
    return RatVec{};
  IntMatrix sys(r, r);
  RatVec rhs(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j)
      sys(i, j) = basis_[j][pivots_[i]];
    rhs[i] = v[pivots_[i]];
  }
  return solve_square(sys, rhs);
}

std::optional<IntVec> LatticeFrame::coordinates(const IntVec &v) const {
  auto q = rational_coordinates(v);
  if (!q)
    return std::nullopt;
  IntVec out;
  for (const Rat &x : *q) {
    if (x.get_den() != 1)
      return std::nullopt;
    out.push_back(x.get_num());
  }
  return out;
}

IntVec LatticeFrame::embed(const IntVec &coords) const {
  IntVec v(ambient_);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c)
      v[c] += coords[r] * basis_[r][c];
  return v;
}

// ----------------------------------------------------------- Configuration

Configuration::Configuration(std::size_t dim, std::vector<IntVec> vectors,
                             std::string name)
    : dim_(dim), vectors_(std::move(vectors)), name_(std::move(name)) {
  if (vectors_.empty())
    throw Error(ErrorKind::InvalidArgument, "configuration must be nonempty");
  std::set<IntVec> seen;
  for (const IntVec &v : vectors_) {
    if (v.size() != dim_)
      throw Error(ErrorKind::InvalidArgument, "vector has wrong dimension");
    if (is_zero(v))
      throw Error(ErrorKind::InvalidArgument,
                  "configuration contains the zero vector");
    if (!seen.insert(v).second)
      throw Error(ErrorKind::InvalidArgument,
                  "configuration contains a repeated vector " + to_string(v));
  }
}

Configuration Configuration::from_matrix(const IntMatrix &m, std::string name) {
  return Configuration(m.rows(), m.column_list(), std::move(name));
}

Configuration Configuration::unchecked(std::size_t dim,
                                       std::vector<IntVec> vectors,
                                       std::string name) {
  Configuration c;
  c.dim_ = dim;
  c.vectors_ = std::move(vectors);
  c.name_ = std::move(name);
  return c;
}

IntMatrix Configuration::matrix() const {
  return IntMatrix::from_columns(vectors_, dim_);
}

std::vector<IntVec>
Configuration::subset(const std::vector<std::size_t> &indices) const {
  std::vector<IntVec> out;
  for (std::size_t i : indices)
    out.push_back(vectors_.at(i));
  return out;
}

// ---------------------------------------------------------------- Gale dual

GaleDual gale_dual(const Configuration &b) {
  IntMatrix bm = b.matrix();
  if (rank(bm) != b.dim())
    throw Error(ErrorKind::RankDeficient,
                "rows of B do not have rank m = " + std::to_string(b.dim()));
  for (const Int &d : smith_normal_form(bm).invariants())
    if (d != 1)
      throw Error(ErrorKind::NotSaturated,
                  "B does not generate the lattice Z^m");
  return GaleDual{integer_kernel(bm), b};
}

Int span_index(const std::vector<IntVec> &vectors, std::size_t dim) {
  if (vectors.empty())
    return 1;
  if (rank(vectors) != vectors.size())
    return 0;
  // gcd of the maximal minors
  const std::size_t k = vectors.size();
  Int g = 0;
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i)
    cols[i] = i;
  while (true) {
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        minor(i, j) = vectors[i][cols[j]];
    Int d = determinant(minor);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == dim - k + i - 1)
      --i;
    if (i == 0)
      break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j)
      cols[j] = cols[j - 1] + 1;
  }
  return g;
}

}  // namespace svc
