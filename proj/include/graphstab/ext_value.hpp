#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphstab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact nonnegative invariant value: a reduced rational, or +inf.
///
/// +inf compares above every finite value and takes part in comparisons and
/// min only; multiplying it throws.
class ExtValue {
 public:
  ExtValue() = default;
  ExtValue(long long v);  // NOLINT(google-explicit-constructor): integers are the common case
  explicit ExtValue(Rational q);

  static ExtValue infinity();

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  bool is_zero() const { return !infinite_ && q_ == 0; }
  bool is_one() const { return !infinite_ && q_ == 1; }

  /// Throws InternalError when infinite.
  const Rational& rational() const;
  /// Value as int64 if it is a finite integer that fits.
  std::optional<std::int64_t> as_int64() const;

  /// "p/q" for finite values, "inf" otherwise.
  std::string to_string() const;
  /// Accepts "inf", "p", or "p/q".
  static ExtValue parse(std::string_view text);

  friend bool operator==(const ExtValue& a, const ExtValue& b);
  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b);
  friend ExtValue operator*(const ExtValue& a, const ExtValue& b);

 private:
  bool infinite_ = false;
  Rational q_ = 0;
};

inline const ExtValue& min(const ExtValue& a, const ExtValue& b) { return b < a ? b : a; }

/// Natural number or infinity; the codomain of stability numbers.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::size_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat infinity() {
    ExtNat n;
    n.infinite_ = true;
    return n;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  /// Meaningful only when finite.
  constexpr std::size_t value() const noexcept { return value_; }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtNat(a.value_ + b.value_);
  }

 private:
  bool infinite_ = false;
  std::size_t value_ = 0;
};

inline constexpr ExtNat min(ExtNat a, ExtNat b) { return b < a ? b : a; }

}  // namespace graphstab
