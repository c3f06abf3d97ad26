#include "graphstab/ext_value.hpp"

#include "graphstab/errors.hpp"

namespace graphstab {

ExtValue::ExtValue(long long v) : q_(v) {
  if (v < 0) throw InputError("invariant values are nonnegative");
}

ExtValue::ExtValue(Rational q) : q_(std::move(q)) {
  if (q_ < 0) throw InputError("invariant values are nonnegative");
}

ExtValue ExtValue::infinity() {
  ExtValue v;
  v.infinite_ = true;
  return v;
}

const Rational& ExtValue::rational() const {
  if (infinite_) throw InternalError("rational() on an infinite value");
  return q_;
}

std::optional<std::int64_t> ExtValue::as_int64() const {
  if (infinite_ || denominator(q_) != 1) return std::nullopt;
  const Integer& p = numerator(q_);
  if (p > std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return p.convert_to<std::int64_t>();
}

std::string ExtValue::to_string() const {
  if (infinite_) return "inf";
  return numerator(q_).str() + "/" + denominator(q_).str();
}

ExtValue ExtValue::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return infinity();
  try {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExtValue(Rational(Integer(std::string(text))));
    const Integer p(std::string(text.substr(0, slash)));
    const Integer q(std::string(text.substr(slash + 1)));
    if (q == 0) throw InputError("zero denominator");
    return ExtValue(Rational(p, q));
  } catch (const std::runtime_error&) {
    throw InputError("cannot parse value '" + std::string(text) + "'");
  }
}

bool operator==(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.q_ == b.q_;
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.q_ < b.q_) return std::strong_ordering::less;
  if (b.q_ < a.q_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtValue operator*(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ || b.infinite_) throw InternalError("product with an infinite value");
  return ExtValue(Rational(a.q_ * b.q_));
}

}  // namespace graphstab
