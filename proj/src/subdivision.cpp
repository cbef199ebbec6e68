#include "svc/subdivision.hpp"

#include <algorithm>

namespace svc {

Subdivision canonical(std::vector<Cell> cells) {
  for (Cell &c : cells)
    std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return Subdivision{std::move(cells)};
}

std::string to_string(const Subdivision &s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.cells.size(); ++k) {
    if (k)
      out += ",";
    out += "(";
    for (std::size_t j = 0; j < s.cells[k].size(); ++j) {
      if (j)
        out += ",";
      out += std::to_string(s.cells[k][j] + 1);
    }
    out += ")";
  }
  return out + "}";
}

}  // namespace svc
