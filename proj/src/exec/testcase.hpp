#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace htg {

enum class Provenance { Primary, Fuzzer, Bmc, TracerCompleted, Selective };

const char* provenance_name(Provenance p);

// A sequence of typed input values answering the program's nondet reads in
// order. Extra values are ignored; missing values read as 0 and flag the
// trace as input-exhausted.
struct TestCase {
  std::string id;
  Provenance provenance = Provenance::Fuzzer;
  std::vector<std::int64_t> values;
};

enum class Outcome { Returned, ReachedError, RuntimeFault, InputExhausted, StepLimit };

const char* outcome_name(Outcome o);

struct ExecutionTrace {
  std::vector<int> goals_hit;                 // first-visit order
  std::set<std::pair<int, int>> goal_edges;   // ordered (previous, current) pairs
  int nondet_reads = 0;
  int int_reads = 0;
  int bool_reads = 0;
  std::vector<int> read_sites;  // nondet site id per read ordinal (-1 if unassigned)
  Outcome outcome = Outcome::Returned;
  std::int64_t return_code = 0;
  std::string fault_kind;       // RuntimeFault only
  bool input_exhausted = false;
  bool loop_capped = false;     // a fuzzing loop bound cut the run short
  std::uint64_t steps = 0;

  bool covered(int goal) const {
    for (int g : goals_hit)
      if (g == goal) return true;
    return false;
  }
};

// Consumed bytes of a trace: ints cost the scalar width, bools one byte.
int consumed_bytes(const ExecutionTrace& t, int int_bytes);

}  // namespace htg
