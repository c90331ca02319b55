#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace k3inv {

/// Exact signed integer of unbounded magnitude.
///
/// Sign-magnitude representation over base-2^32 limbs (little-endian, no
/// leading zero limbs, zero is the empty limb vector). Supports the ring
/// operations, truncated division with remainder, comparisons and decimal
/// conversion. Every counting function in this library returns one of
/// these; no floating point is used anywhere.
class Integer {
 public:
  Integer() = default;
  Integer(long long value);  // NOLINT: implicit by design, enables mixed arithmetic
  explicit Integer(std::string_view decimal);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
  /// -1, 0 or +1.
  int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

  std::string to_string() const;
  /// Throws std::overflow_error if the value does not fit in 64 bits.
  long long to_int64() const;
  bool fits_int64() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);
  Integer& operator/=(const Integer& rhs);
  Integer& operator%=(const Integer& rhs);

  friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
  friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
  friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
  friend Integer operator/(Integer lhs, const Integer& rhs) { return lhs /= rhs; }
  friend Integer operator%(Integer lhs, const Integer& rhs) { return lhs %= rhs; }

  /// Quotient truncated toward zero, remainder carries the sign of the
  /// numerator, |remainder| < |denominator|. Throws std::domain_error on
  /// division by zero.
  static void div_mod(const Integer& num, const Integer& den,
                      Integer& quotient, Integer& remainder);
  bool divisible_by(const Integer& den) const;

  friend bool operator==(const Integer& lhs, const Integer& rhs) {
    return lhs.negative_ == rhs.negative_ && lhs.limbs_ == rhs.limbs_;
  }
  friend bool operator!=(const Integer& lhs, const Integer& rhs) { return !(lhs == rhs); }
  friend bool operator<(const Integer& lhs, const Integer& rhs) { return compare(lhs, rhs) < 0; }
  friend bool operator>(const Integer& lhs, const Integer& rhs) { return compare(lhs, rhs) > 0; }
  friend bool operator<=(const Integer& lhs, const Integer& rhs) { return compare(lhs, rhs) <= 0; }
  friend bool operator>=(const Integer& lhs, const Integer& rhs) { return compare(lhs, rhs) >= 0; }

  static int compare(const Integer& lhs, const Integer& rhs);

 private:
  using Limbs = std::vector<std::uint32_t>;

  void normalize();
  static int compare_magnitude(const Limbs& a, const Limbs& b);
  static Limbs add_magnitude(const Limbs& a, const Limbs& b);
  static Limbs sub_magnitude(const Limbs& a, const Limbs& b);  // requires a >= b
  static Limbs mul_magnitude(const Limbs& a, const Limbs& b);
  static void div_mod_magnitude(const Limbs& num, const Limbs& den,
                                Limbs& quotient, Limbs& remainder);
  static std::uint32_t div_small_in_place(Limbs& num, std::uint32_t den);

  bool negative_ = false;
  Limbs limbs_;
};

std::ostream& operator<<(std::ostream& os, const Integer& value);

}  // namespace k3inv
