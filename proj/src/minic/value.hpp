#pragma once

#include <cassert>
#include <cstdint>

namespace htg {

// Fixed-width two's-complement integer arithmetic. All program values are
// W-bit signed with wrapping semantics; W is a runtime parameter (2..32) so
// tests can shrink the domain enough for exhaustive enumeration. Intermediate
// math is done in int64_t, which cannot overflow for W <= 32 (products stay
// below 2^62), and the result is wrapped back into the W-bit range.
class Width {
 public:
  explicit constexpr Width(int bits) : bits_(bits) { assert(bits >= 2 && bits <= 32); }

  constexpr int bits() const { return bits_; }
  constexpr std::int64_t min_value() const { return -(std::int64_t(1) << (bits_ - 1)); }
  constexpr std::int64_t max_value() const { return (std::int64_t(1) << (bits_ - 1)) - 1; }
  constexpr std::uint64_t domain_size() const { return std::uint64_t(1) << bits_; }
  // Bytes one scalar read of this width consumes from the input stream.
  constexpr int scalar_bytes() const { return (bits_ + 7) / 8; }

  constexpr std::int64_t wrap(std::int64_t v) const {
    const std::uint64_t mask = domain_size() - 1;
    std::uint64_t u = static_cast<std::uint64_t>(v) & mask;
    if (u > static_cast<std::uint64_t>(max_value()))
      return static_cast<std::int64_t>(u) - static_cast<std::int64_t>(domain_size());
    return static_cast<std::int64_t>(u);
  }

  constexpr bool contains(std::int64_t v) const {
    return v >= min_value() && v <= max_value();
  }

  constexpr std::int64_t add(std::int64_t a, std::int64_t b) const { return wrap(a + b); }
  constexpr std::int64_t sub(std::int64_t a, std::int64_t b) const { return wrap(a - b); }
  constexpr std::int64_t mul(std::int64_t a, std::int64_t b) const { return wrap(a * b); }
  constexpr std::int64_t neg(std::int64_t a) const { return wrap(-a); }

  // C99 truncated division, wrapped (MIN / -1 wraps back to MIN).
  // Callers must reject b == 0 first; division by zero is a PUT fault.
  constexpr std::int64_t div(std::int64_t a, std::int64_t b) const {
    assert(b != 0);
    return wrap(a / b);
  }
  constexpr std::int64_t mod(std::int64_t a, std::int64_t b) const {
    assert(b != 0);
    if (a == min_value() && b == -1) return 0;
    return wrap(a % b);
  }

  friend constexpr bool operator==(Width a, Width b) { return a.bits_ == b.bits_; }

 private:
  int bits_;
};

inline constexpr Width kDefaultWidth{32};

}  // namespace htg
