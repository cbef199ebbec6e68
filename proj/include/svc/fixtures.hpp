// Named configurations used by the command-line tool and the tests.
#pragma once

#include "svc/lattice.hpp"

#include <string>
#include <vector>

namespace svc {

struct Fixture {
  std::string name;
  std::string description;
  Configuration config;
};

inline constexpr const char *kFixtureCatalogVersion = "1";

/// Sorted by name.
const std::vector<Fixture> &fixture_catalog();

/// Throws InvalidArgument for an unknown name.
const Fixture &fixture(const std::string &name);

/// P_i with P_0..P_3 given and P_i = (P_{i-2} + P_{i-1} + P_{i mod 2}) / 2.
std::vector<IntVec> generator_sequence(std::size_t count);

}  // namespace svc
