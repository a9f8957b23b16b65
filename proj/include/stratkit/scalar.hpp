#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace stratkit {

// Ground field of a computation: the rationals (p == 0) or a prime field F_p.
struct Field {
  std::uint64_t p = 0;

  bool rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string str() const;
};

// One exact field element.  Rationals are arbitrary-precision; for p > 0 the
// value is the canonical integer residue in [0, p).
class Scalar {
 public:
  Scalar() = default;  // zero over Q

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  static Scalar fromInt(const Field& f, long n) { return Scalar(f, n); }
  // Accepts "-12" or "3/4"; over F_p a fraction is resolved by modular inverse.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool isZero() const { return value_ == 0; }
  bool isOne() const { return value_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Scalar(const Field& f, mpq_class v) : field_(f), value_(std::move(v)) {
    reduce();
  }
  void reduce();
  void checkSameField(const Scalar& o) const;

  Field field_;
  mpq_class value_ = 0;
};

}  // namespace stratkit
