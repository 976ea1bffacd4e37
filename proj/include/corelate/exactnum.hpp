#pragma once

// Exact coefficient domains: prime fields GF(p), the rationals, and the integers.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace corelate {

using BigInt = mpz_class;

struct GcdResult {
  BigInt g;
  BigInt u;
  BigInt v;
};

/// Extended Euclid: g = gcd(|a|,|b|) >= 0 and u*a + v*b = g.
GcdResult ext_gcd(const BigInt& a, const BigInt& b);

/// Floor division on integers; b != 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

enum class RingKind { PrimeField, Rational, Integer };

class Ring;

// A ring element. The representation is an exact rational; the owning Ring
// keeps it in normal form (residue in [0,p) for GF(p), denominator 1 for Z).
class Scalar {
 public:
  Scalar() = default;

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

 private:
  friend class Ring;
  explicit Scalar(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

class Ring {
 public:
  /// GF(p); p must be prime (checked by trial division).
  static Ring gf(unsigned long p);
  static Ring rational();
  static Ring integer();

  /// Tags used in literals: gf2, gf5, ..., q, z.
  static Ring from_tag(std::string_view tag);

  RingKind kind() const { return kind_; }
  unsigned long characteristic() const { return p_; }
  bool is_field() const { return kind_ != RingKind::Integer; }
  std::string tag() const;
  std::string display_name() const;

  Scalar zero() const { return Scalar{}; }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long n) const;
  Scalar from_bigint(const BigInt& n) const;
  /// n/d, reduced into this ring. Fails with ZeroDenominator, or
  /// InvalidLiteral when d is not invertible here.
  Scalar from_fraction(const BigInt& n, const BigInt& d) const;
  /// Validates and reduces an arbitrary rational into this ring.
  Scalar element(const mpq_class& q) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Multiplicative inverse; ZeroInverse for 0, NotAUnit for non-unit integers.
  Scalar inv(const Scalar& a) const;
  bool is_unit(const Scalar& a) const;

  // Euclidean structure used by the elimination routines. Over a field
  // every nonzero element has norm 1 and quotients are exact.
  BigInt norm(const Scalar& a) const;
  Scalar quotient(const Scalar& a, const Scalar& b) const;
  /// A unit u such that u*a is the distinguished associate (1 over a field,
  /// |a| over Z).
  Scalar normalizing_unit(const Scalar& a) const;

  /// Integer literal, n/d, or residue. GF(p) accepts any integer and reduces it.
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& a) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Ring(RingKind kind, unsigned long p) : kind_(kind), p_(p) {}

  RingKind kind_;
  unsigned long p_;
};

/// scalar_inv of the ring interface, as a free function.
inline Scalar scalar_inv(const Scalar& x, const Ring& ring) { return ring.inv(x); }

/// n/d as a normalized rational; ZeroDenominator when d = 0.
Scalar rational_normalize(const BigInt& n, const BigInt& d);

bool is_prime(unsigned long p);

}  // namespace corelate
