#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace geobip {

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Thin value wrapper around GMP's mpq_class. Every arithmetic result is
/// canonicalized, so two Scalars are equal iff their numerators and
/// denominators are equal.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// num / den; throws std::domain_error when den == 0.
  static Scalar ratio(long num, long den);

  /// Parses "-12", "3.25", "1e-3", "-2.5E+4" or "7/3". Exact: the text is
  /// never routed through binary floating point. Throws ParseError.
  static Scalar parse(std::string_view text);

  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  /// Canonical text: "n" for integers, "n/d" otherwise.
  std::string str() const { return q_.get_str(); }

  /// Finite decimal text when the denominator is of the form 2^a 5^b,
  /// otherwise the "n/d" form.
  std::string decimal_str() const;

  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.q_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  mpq_class q_;
};

Scalar abs(const Scalar& s);

}  // namespace geobip
