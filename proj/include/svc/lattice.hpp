// Exact integer linear algebra: matrices over Z, Hermite and Smith normal
// forms, integer kernels, configurations and their Gale duals.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace svc {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

enum class ErrorKind {
  Parse,
  RankDeficient,
  NotSaturated,
  DimensionTooLarge,
  TooLarge,
  NotPointed,
  Unbounded,
  EmptyPolyhedron,
  NoLatticePoint,
  NotInCone,
  NonTerminating,
  NotAGraded,
  InfiniteFiber,
  NotATriangulation,
  PointOutsideCone,
  TooManyPoints,
  InvalidArgument,
  Overflow,
};

const char *to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec> &rows,
                             std::size_t cols = 0);
  static IntMatrix from_rows(std::initializer_list<std::vector<long>> rows);
  static IntMatrix from_columns(const std::vector<IntVec> &cols,
                                std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVec row(std::size_t r) const;
  IntVec column(std::size_t c) const;
  std::vector<IntVec> row_list() const;
  std::vector<IntVec> column_list() const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix &other) const;
  IntVec operator*(const IntVec &v) const;
  bool is_zero() const;
  bool operator==(const IntMatrix &other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int &factor);
  void add_col(std::size_t dst, std::size_t src, const Int &factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::string to_string(const IntMatrix &m);

struct HermiteForm {
  IntMatrix H;
  IntMatrix U;  ///< unimodular, U * M == H
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: H is in row echelon form, pivots are
/// positive and entries above a pivot lie in [0, pivot).
HermiteForm hermite_normal_form(const IntMatrix &m);

struct SmithForm {
  IntMatrix S;  ///< diagonal, d1 | d2 | ...
  IntMatrix U;
  IntMatrix V;  ///< U * M * V == S
  std::vector<Int> invariants() const;
};

SmithForm smith_normal_form(const IntMatrix &m);

/// Basis (as rows) of {v in Z^cols : M v = 0}, in Hermite normal form.
IntMatrix integer_kernel(const IntMatrix &m);

Int determinant(const IntMatrix &m);
std::size_t rank(const IntMatrix &m);
std::size_t rank(const std::vector<IntVec> &vectors);

/// |det| of m vectors in Z^m; zero iff they are dependent.
Int lattice_index(const std::vector<IntVec> &vectors);
/// Index of the lattice generated by linearly independent vectors inside the
/// lattice points of their span; zero if they are dependent.
Int span_index(const std::vector<IntVec> &vectors, std::size_t dim);

/// Unique solution of the square system M x = b, or nullopt if singular.
std::optional<RatVec> solve_square(const IntMatrix &m, const RatVec &b);

/// Nonzero rational solution spanning a one-dimensional kernel.
std::optional<IntVec> kernel_line(const IntMatrix &m);

Int dot(const IntVec &a, const IntVec &b);
Rat dot(const IntVec &a, const RatVec &b);
Int gcd_of(const IntVec &v);
/// v divided by the gcd of its entries; zero stays zero.
IntVec primitive(const IntVec &v);
IntVec negated(const IntVec &v);
bool is_zero(const IntVec &v);
IntVec to_int_vec(std::initializer_list<long> values);
std::string to_string(const IntVec &v);

/// Saturated lattice basis of span(vectors) ∩ Z^m together with coordinate
/// conversion; lets cone computations run full-dimensionally.
class LatticeFrame {
public:
  explicit LatticeFrame(const std::vector<IntVec> &vectors, std::size_t dim);
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<IntVec> &basis() const { return basis_; }
  /// Integer coordinates of v; nullopt if v is not in the lattice.
  std::optional<IntVec> coordinates(const IntVec &v) const;
  std::optional<RatVec> rational_coordinates(const IntVec &v) const;
  IntVec embed(const IntVec &coords) const;
  /// Equations cutting out the span (rows of an integer matrix).
  const std::vector<IntVec> &equations() const { return equations_; }

private:
  std::size_t ambient_;
  std::vector<IntVec> basis_;
  std::vector<IntVec> equations_;
  std::vector<std::size_t> pivots_;  // coordinates where the basis is independent
};

/// Ordered list of distinct nonzero integer vectors b_1..b_n in Z^m.
class Configuration {
public:
  Configuration() = default;
  Configuration(std::size_t dim, std::vector<IntVec> vectors,
                std::string name = {});
  /// Vectors are the columns of the matrix.
  static Configuration from_matrix(const IntMatrix &m, std::string name = {});
  /// Same as the constructor but allows a zero vector or repeats.
  static Configuration unchecked(std::size_t dim, std::vector<IntVec> vectors,
                                 std::string name = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  const IntVec &operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<IntVec> &vectors() const { return vectors_; }
  const std::string &name() const { return name_; }
  /// m x n matrix with the vectors as columns.
  IntMatrix matrix() const;
  std::vector<IntVec> subset(const std::vector<std::size_t> &indices) const;

private:
  std::size_t dim_ = 0;
  std::vector<IntVec> vectors_;
  std::string name_;
};

struct GaleDual {
  IntMatrix matrixA;  ///< (n-m) x n, columns a_1..a_n
  Configuration sourceB;
  /// Columns of A as a configuration in Z^(n-m) (may contain repeats).
  std::vector<IntVec> columns() const { return matrixA.column_list(); }
};

GaleDual gale_dual(const Configuration &b);

}  // namespace svc
