#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "gemcalc/errors.hpp"

namespace gemcalc {

/// Exact element of (1/2)Z. Genera of non-orientable regular embeddings are
/// half-integers, so every genus and degree quantity is carried in this type.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t whole) : twice_(2 * whole) {}  // NOLINT: integers embed

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  std::int64_t integer() const {
    if (!is_integer()) throw InvariantViolation("half-integer " + to_string() + " is not integral");
    return twice_ / 2;
  }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(HalfInt a, std::int64_t k) { return from_twice(a.twice_ * k); }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return a * k; }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  // "3", "-2", "1/2", "-7/2"
  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

 private:
  std::int64_t twice_ = 0;
};

}  // namespace gemcalc
