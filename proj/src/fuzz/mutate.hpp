#pragma once

#include <cstddef>
#include <random>

#include "analysis/ranges.hpp"
#include "fuzz/seed.hpp"

namespace htg {

struct MutationLimits {
  std::size_t min_len = 0;
  std::size_t max_len = 16;
};

// One mutation of `s`: value re-draw, boundary snap, arithmetic +/- delta,
// splice with a partner, append, or drop of the trailing value. Every value
// of the result lies in the range resolved for its stream position (and off
// the excluded set); the length respects [min_len, max_len].
// `force_length_change` biases to append/drop, used after stalls.
TestCase mutate(const Seed& s, const Seed* splice_partner, const RangeMap& ranges,
                const MutationLimits& limits, std::mt19937_64& rng,
                bool force_length_change = false);

// Uniform draw from the range, avoiding excluded values.
std::int64_t draw_in_range(const InputRange& r, std::mt19937_64& rng);

}  // namespace htg
