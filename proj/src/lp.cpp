#include "svc/lp.hpp"

namespace svc {

LinearConstraint make_constraint(const IntVec &coeffs, Relation rel,
                                 const Rat &rhs) {
  LinearConstraint c;
  c.coeffs.reserve(coeffs.size());
  for (const Int &x : coeffs)
    c.coeffs.emplace_back(x);
  c.rel = rel;
  c.rhs = rhs;
  return c;
}

// Phase-one simplex on the standard form
//   x = p - q, rows  a.(p - q) +/- slack + artificial = rhs  (rhs >= 0).
std::optional<RatVec>
find_feasible_point(std::size_t numVars,
                    const std::vector<LinearConstraint> &constraints) {
  const std::size_t rows = constraints.size();
  if (rows == 0)
    return RatVec(numVars, 0);

  std::size_t numSlack = 0;
  for (const auto &c : constraints)
    if (c.rel != Relation::Equal)
      ++numSlack;
  const std::size_t slackStart = 2 * numVars;
  const std::size_t artStart = slackStart + numSlack;
  const std::size_t cols = artStart + rows;  // + rhs column
  std::vector<RatVec> t(rows + 1, RatVec(cols + 1, 0));
  std::vector<std::size_t> basis(rows);

  std::size_t slack = slackStart;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto &c = constraints[r];
    if (c.coeffs.size() != numVars)
      throw Error(ErrorKind::InvalidArgument, "constraint width mismatch");
    RatVec &row = t[r];
    for (std::size_t j = 0; j < numVars; ++j) {
      row[j] = c.coeffs[j];
      row[numVars + j] = -c.coeffs[j];
    }
    if (c.rel == Relation::LessEq)
      row[slack++] = 1;
    else if (c.rel == Relation::GreaterEq)
      row[slack++] = -1;
    row[cols] = c.rhs;
    if (row[cols] < 0)
      for (Rat &x : row)
        x = -x;
    row[artStart + r] = 1;
    basis[r] = artStart + r;
  }
  // objective row: minimize sum of artificials, stored as reduced costs
  RatVec &obj = t[rows];
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < artStart || j == cols)
        obj[j] -= t[r][j];

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols)
      break;
    std::size_t leave = rows;
    Rat best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0)
        continue;
      Rat ratio = t[r][cols] / t[r][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows)
      break;  // unbounded phase one cannot happen; objective bounded by 0
    Rat piv = t[leave][enter];
    for (Rat &x : t[leave])
      x /= piv;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave || t[r][enter] == 0)
        continue;
      Rat f = t[r][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0)
          t[r][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (obj[cols] != 0)
    return std::nullopt;
  RatVec x(numVars, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < numVars)
      x[basis[r]] += t[r][cols];
    else if (basis[r] < 2 * numVars)
      x[basis[r] - numVars] -= t[r][cols];
  }
  return x;
}

}  // namespace svc
