#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsdp {

/// Exact 64-bit integer extended with a -inf sentinel. -inf orders below
/// every finite value and absorbs addition; finite overflow throws.
class Value {
 public:
  constexpr Value() = default;

  static constexpr Value neg_inf() {
    Value v;
    v.neg_inf_ = true;
    return v;
  }

  static constexpr Value of(std::int64_t x) {
    Value v;
    v.x_ = x;
    return v;
  }

  constexpr bool is_neg_inf() const { return neg_inf_; }

  std::int64_t as_int() const {
    if (neg_inf_) throw std::logic_error("Value: -inf has no integer form");
    return x_;
  }

  Value operator+(Value o) const {
    if (neg_inf_ || o.neg_inf_) return neg_inf();
    std::int64_t r;
    if (__builtin_add_overflow(x_, o.x_, &r))
      throw std::overflow_error("Value: integer overflow in addition");
    return of(r);
  }

  Value& operator+=(Value o) {
    *this = *this + o;
    return *this;
  }

  friend constexpr bool operator==(Value a, Value b) {
    if (a.neg_inf_ != b.neg_inf_) return false;
    return a.neg_inf_ || a.x_ == b.x_;
  }
  friend constexpr bool operator!=(Value a, Value b) { return !(a == b); }
  friend constexpr bool operator<(Value a, Value b) {
    if (a.neg_inf_) return !b.neg_inf_;
    if (b.neg_inf_) return false;
    return a.x_ < b.x_;
  }
  friend constexpr bool operator>(Value a, Value b) { return b < a; }
  friend constexpr bool operator<=(Value a, Value b) { return !(b < a); }
  friend constexpr bool operator>=(Value a, Value b) { return !(a < b); }

 private:
  std::int64_t x_ = 0;
  bool neg_inf_ = false;
};

inline std::string to_string(Value v) {
  return v.is_neg_inf() ? "-inf" : std::to_string(v.as_int());
}

}  // namespace nsdp
