#pragma once

#include <cstdint>
#include <vector>

#include "exec/testcase.hpp"

namespace htg {

// A test case promoted to mutation duty. Score follows the two seed metrics:
// depth of the seed's deepest goal and the number of goals it covered first.
struct Seed {
  TestCase tc;
  int deepest_depth = 0;
  int unique_goals = 0;
  std::uint64_t recency = 0;  // larger = newer, last tiebreak
  int energy = 64;            // mutations spent per selection
  std::vector<int> read_sites;  // read-site sequence of the creating trace
};

}  // namespace htg
