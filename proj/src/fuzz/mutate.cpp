#include "fuzz/mutate.hpp"

#include <algorithm>

namespace htg {

std::int64_t draw_in_range(const InputRange& r, std::mt19937_64& rng) {
  if (r.lo > r.hi) return 0;
  std::uniform_int_distribution<std::int64_t> dist(r.lo, r.hi);
  for (int tries = 0; tries < 8; ++tries) {
    std::int64_t v = dist(rng);
    if (!r.excluded.count(v)) return v;
  }
  return r.clamp(dist(rng));
}

namespace {

enum class Op { Redraw, BoundarySnap, Arith, Splice, Append, DropLast };

std::int64_t boundary_point(const InputRange& r, std::mt19937_64& rng) {
  std::vector<std::int64_t> points{r.lo, r.hi};
  for (auto [clo, chi] : r.candidates) {
    points.push_back(clo);
    points.push_back(chi);
  }
  for (std::int64_t x : r.excluded) {
    points.push_back(x - 1);
    points.push_back(x + 1);
  }
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
  return points[pick(rng)];
}

}  // namespace

TestCase mutate(const Seed& s, const Seed* splice_partner, const RangeMap& ranges,
                const MutationLimits& limits, std::mt19937_64& rng,
                bool force_length_change) {
  TestCase out;
  out.provenance = Provenance::Fuzzer;
  out.values = s.tc.values;

  auto range_at = [&](std::size_t i) { return ranges.resolve(i, &s.read_sites); };

  Op op;
  if (out.values.size() < limits.min_len) {
    op = Op::Append;
  } else if (force_length_change) {
    bool can_drop = out.values.size() > limits.min_len && !out.values.empty();
    bool can_append = out.values.size() < limits.max_len;
    if (can_append && can_drop)
      op = (rng() & 1) ? Op::Append : Op::DropLast;
    else
      op = can_append ? Op::Append : Op::DropLast;
  } else if (out.values.empty()) {
    op = limits.max_len > 0 ? Op::Append : Op::Redraw;
  } else {
    std::uniform_int_distribution<int> pick(0, 9);
    switch (pick(rng)) {
      case 0: case 1: case 2: op = Op::Redraw; break;
      case 3: case 4: op = Op::BoundarySnap; break;
      case 5: case 6: op = Op::Arith; break;
      case 7: op = splice_partner ? Op::Splice : Op::Redraw; break;
      case 8: op = out.values.size() < limits.max_len ? Op::Append : Op::Redraw; break;
      default: op = out.values.size() > limits.min_len ? Op::DropLast : Op::Redraw; break;
    }
  }

  auto position = [&]() -> std::size_t {
    std::uniform_int_distribution<std::size_t> pick(0, out.values.size() - 1);
    return pick(rng);
  };

  switch (op) {
    case Op::Redraw:
      if (!out.values.empty()) {
        std::size_t i = position();
        out.values[i] = draw_in_range(range_at(i), rng);
      }
      break;
    case Op::BoundarySnap: {
      std::size_t i = position();
      out.values[i] = boundary_point(range_at(i), rng);
      break;
    }
    case Op::Arith: {
      std::size_t i = position();
      std::uniform_int_distribution<std::int64_t> delta(1, 16);
      std::int64_t d = delta(rng);
      out.values[i] += (rng() & 1) ? d : -d;
      break;
    }
    case Op::Splice: {
      const auto& other = splice_partner->tc.values;
      if (!other.empty() && !out.values.empty()) {
        std::uniform_int_distribution<std::size_t> cut(0, out.values.size());
        std::size_t c = cut(rng);
        out.values.resize(c);
        for (std::size_t i = c; i < other.size() && out.values.size() < limits.max_len; ++i)
          out.values.push_back(other[i]);
      }
      break;
    }
    case Op::Append:
      while (out.values.size() < std::max(limits.min_len, out.values.size() + 1) &&
             out.values.size() < std::max<std::size_t>(limits.max_len, limits.min_len)) {
        std::size_t i = out.values.size();
        out.values.push_back(draw_in_range(range_at(i), rng));
        if (out.values.size() >= limits.min_len) break;
      }
      break;
    case Op::DropLast:
      if (!out.values.empty() && out.values.size() > limits.min_len) out.values.pop_back();
      break;
  }

  // Range respect: every emitted value lies in its position's range.
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    InputRange r = range_at(i);
    if (!r.contains(out.values[i])) out.values[i] = r.clamp(out.values[i]);
  }
  return out;
}

}  // namespace htg
