#include "k3inv/integer.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace k3inv {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
constexpr std::uint32_t kDecChunkBase = 1000000000u;  // 10^9, fits one limb
constexpr int kDecChunkDigits = 9;
}  // namespace

Integer::Integer(long long value) {
  if (value == 0) return;
  negative_ = value < 0;
  // two's-complement-safe magnitude, works for LLONG_MIN
  std::uint64_t mag = negative_ ? 0ull - static_cast<std::uint64_t>(value)
                                : static_cast<std::uint64_t>(value);
  limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffull));
  if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

Integer::Integer(std::string_view decimal) {
  std::string_view s = decimal;
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("Integer: empty decimal string");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("Integer: invalid decimal string");
  // fold 9-digit chunks: value = value * 10^9 + chunk
  std::size_t pos = 0;
  std::size_t head = s.size() % kDecChunkDigits;
  if (head == 0) head = kDecChunkDigits;
  while (pos < s.size()) {
    std::size_t len = pos == 0 ? head : kDecChunkDigits;
    std::uint32_t chunk = 0;
    for (std::size_t i = 0; i < len; ++i)
      chunk = chunk * 10 + static_cast<std::uint32_t>(s[pos + i] - '0');
    std::uint64_t carry = chunk;
    for (auto& limb : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * kDecChunkBase + carry;
      limb = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffull));
      carry >>= 32;
    }
    pos += len;
  }
  negative_ = neg;
  normalize();
}

void Integer::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int Integer::compare_magnitude(const Limbs& a, const Limbs& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int Integer::compare(const Integer& lhs, const Integer& rhs) {
  if (lhs.negative_ != rhs.negative_) return lhs.negative_ ? -1 : 1;
  int mag = compare_magnitude(lhs.limbs_, rhs.limbs_);
  return lhs.negative_ ? -mag : mag;
}

Integer::Limbs Integer::add_magnitude(const Limbs& a, const Limbs& b) {
  Limbs out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t sum = carry;
    if (i < a.size()) sum += a[i];
    if (i < b.size()) sum += b[i];
    out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffull));
    carry = sum >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

Integer::Limbs Integer::sub_magnitude(const Limbs& a, const Limbs& b) {
  Limbs out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                       (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    borrow = 0;
    if (cur < 0) {
      cur += static_cast<std::int64_t>(kLimbBase);
      borrow = 1;
    }
    out.push_back(static_cast<std::uint32_t>(cur));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Integer::Limbs Integer::mul_magnitude(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  Limbs out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::uint32_t Integer::div_small_in_place(Limbs& num, std::uint32_t den) {
  std::uint64_t rem = 0;
  for (std::size_t i = num.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | num[i];
    num[i] = static_cast<std::uint32_t>(cur / den);
    rem = cur % den;
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return static_cast<std::uint32_t>(rem);
}

// Shift-subtract long division over limb vectors. The operands in this
// library stay tiny, so the bit-serial loop is never a bottleneck.
void Integer::div_mod_magnitude(const Limbs& num, const Limbs& den,
                                Limbs& quotient, Limbs& remainder) {
  quotient.clear();
  remainder.clear();
  if (compare_magnitude(num, den) < 0) {
    remainder = num;
    return;
  }
  if (den.size() == 1) {
    quotient = num;
    std::uint32_t rem = div_small_in_place(quotient, den[0]);
    if (rem) remainder.push_back(rem);
    return;
  }
  quotient.assign(num.size(), 0);
  for (std::size_t bit = num.size() * 32; bit-- > 0;) {
    // remainder = remainder * 2 + bit(num, bit)
    std::uint32_t carry = (num[bit / 32] >> (bit % 32)) & 1u;
    for (auto& limb : remainder) {
      std::uint32_t high = limb >> 31;
      limb = (limb << 1) | carry;
      carry = high;
    }
    if (carry) remainder.push_back(carry);
    if (compare_magnitude(remainder, den) >= 0) {
      remainder = sub_magnitude(remainder, den);
      quotient[bit / 32] |= 1u << (bit % 32);
    }
  }
  while (!quotient.empty() && quotient.back() == 0) quotient.pop_back();
}

Integer Integer::operator-() const {
  Integer out = *this;
  if (!out.limbs_.empty()) out.negative_ = !out.negative_;
  return out;
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (negative_ == rhs.negative_) {
    limbs_ = add_magnitude(limbs_, rhs.limbs_);
  } else if (compare_magnitude(limbs_, rhs.limbs_) >= 0) {
    limbs_ = sub_magnitude(limbs_, rhs.limbs_);
  } else {
    limbs_ = sub_magnitude(rhs.limbs_, limbs_);
    negative_ = rhs.negative_;
  }
  normalize();
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) { return *this += -rhs; }

Integer& Integer::operator*=(const Integer& rhs) {
  negative_ = negative_ != rhs.negative_;
  limbs_ = mul_magnitude(limbs_, rhs.limbs_);
  normalize();
  return *this;
}

void Integer::div_mod(const Integer& num, const Integer& den,
                      Integer& quotient, Integer& remainder) {
  if (den.is_zero()) throw std::domain_error("Integer: division by zero");
  Limbs q, r;
  div_mod_magnitude(num.limbs_, den.limbs_, q, r);
  quotient.limbs_ = std::move(q);
  quotient.negative_ = num.negative_ != den.negative_;
  quotient.normalize();
  remainder.limbs_ = std::move(r);
  remainder.negative_ = num.negative_;
  remainder.normalize();
}

Integer& Integer::operator/=(const Integer& rhs) {
  Integer q, r;
  div_mod(*this, rhs, q, r);
  return *this = std::move(q);
}

Integer& Integer::operator%=(const Integer& rhs) {
  Integer q, r;
  div_mod(*this, rhs, q, r);
  return *this = std::move(r);
}

bool Integer::divisible_by(const Integer& den) const {
  Integer q, r;
  div_mod(*this, den, q, r);
  return r.is_zero();
}

bool Integer::fits_int64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  std::uint64_t limit = static_cast<std::uint64_t>(std::numeric_limits<long long>::max());
  return mag <= (negative_ ? limit + 1 : limit);
}

long long Integer::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("Integer: value does not fit in 64 bits");
  std::uint64_t mag = 0;
  if (!limbs_.empty()) mag = limbs_[0];
  if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return negative_ ? static_cast<long long>(0ull - mag) : static_cast<long long>(mag);
}

std::string Integer::to_string() const {
  if (limbs_.empty()) return "0";
  Limbs work = limbs_;
  std::string digits;
  while (!work.empty()) {
    std::uint32_t chunk = div_small_in_place(work, kDecChunkBase);
    for (int i = 0; i < kDecChunkDigits; ++i) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::ostream& operator<<(std::ostream& os, const Integer& value) {
  return os << value.to_string();
}

}  // namespace k3inv
