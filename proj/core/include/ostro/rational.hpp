/// Exact rational arithmetic on arbitrary-precision integers.
///
/// Rational is a thin, value-semantic wrapper around GMP's mpq_class that
/// pins the invariants the rest of the library relies on: denominator
/// positive, fraction always in lowest terms, and no silent narrowing.
/// Floating point never enters computation; toDouble/decimal exist for
/// display only.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ostro {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                     // NOLINT: implicit by design
  Rational(const mpz_class& n) : v_(n) {}         // NOLINT
  Rational(long n, long d) { init(mpz_class(n), mpz_class(d)); }
  Rational(const mpz_class& n, const mpz_class& d) { init(n, d); }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool isZero() const { return sgn(v_) == 0; }
  bool isNegative() const { return sgn(v_) < 0; }
  bool isInteger() const { return v_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational reciprocal() const {
    if (isZero()) throw std::domain_error("reciprocal of zero");
    return Rational(mpq_class(1 / v_));
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.isZero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.isZero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Accepts "p" or "p/q" with optional leading sign; q must be nonzero.
  static Rational parse(std::string_view text);

  /// Lossless form "p" or "p/q" with q > 1; round-trips through parse.
  std::string str() const;

  /// Decimal rendering for display only, rounded to `digits` fraction digits.
  std::string decimal(std::size_t digits = 12) const;

  double toDouble() const { return v_.get_d(); }

 private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}

  void init(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  mpq_class v_;
};

}  // namespace ostro
