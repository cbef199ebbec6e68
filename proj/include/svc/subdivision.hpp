// Index-set subdivisions of a configuration.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace svc {

/// Sorted 0-based indices into a configuration.
using Cell = std::vector<std::size_t>;

/// Maximal cells, each sorted, the list sorted lexicographically.
struct Subdivision {
  std::vector<Cell> cells;

  bool operator==(const Subdivision &) const = default;
  bool operator<(const Subdivision &o) const { return cells < o.cells; }
};

/// Sorts every cell and then the cell list.
Subdivision canonical(std::vector<Cell> cells);

/// Cells printed with 1-based indices, e.g. "{(1,2),(2,3)}".
std::string to_string(const Subdivision &s);

}  // namespace svc
