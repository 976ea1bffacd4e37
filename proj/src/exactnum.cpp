#include "corelate/exactnum.hpp"

#include <cctype>

#include "corelate/error.hpp"

namespace corelate {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NotInA: return "NotInA";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::UnknownTheory: return "UnknownTheory";
    case ErrorKind::InvalidLiteral: return "InvalidLiteral";
    case ErrorKind::Internal: return "Internal";
  }
  return "Error";
}

GcdResult ext_gcd(const BigInt& a, const BigInt& b) {
  // Iterative Euclid on (a, b) tracking Bezout coefficients.
  BigInt r0 = a, r1 = b;
  BigInt s0 = 1, s1 = 0;
  BigInt t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    BigInt r2 = r0 - q * r1;
    BigInt s2 = s0 - q * s1;
    BigInt t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0};
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) fail(ErrorKind::ZeroDenominator, "floor_div by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d <= p / d; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Ring Ring::gf(unsigned long p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidLiteral, "GF(" + std::to_string(p) + ") needs a prime");
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::rational() { return Ring(RingKind::Rational, 0); }
Ring Ring::integer() { return Ring(RingKind::Integer, 0); }

Ring Ring::from_tag(std::string_view tag) {
  std::string t;
  for (char c : tag) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "q") return rational();
  if (t == "z") return integer();
  if (t.size() > 2 && t.starts_with("gf")) {
    unsigned long p = 0;
    for (std::size_t i = 2; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
        fail(ErrorKind::InvalidLiteral, "bad ring tag '" + std::string(tag) + "'");
      }
      p = p * 10 + static_cast<unsigned long>(t[i] - '0');
      if (p > 1'000'000'007UL) fail(ErrorKind::InvalidLiteral, "prime too large");
    }
    return gf(p);
  }
  fail(ErrorKind::InvalidLiteral, "unknown ring tag '" + std::string(tag) + "'");
}

std::string Ring::tag() const {
  switch (kind_) {
    case RingKind::PrimeField: return "gf" + std::to_string(p_);
    case RingKind::Rational: return "q";
    case RingKind::Integer: return "z";
  }
  return "?";
}

std::string Ring::display_name() const {
  switch (kind_) {
    case RingKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
    case RingKind::Rational: return "Q";
    case RingKind::Integer: return "Z";
  }
  return "?";
}

Scalar Ring::from_int(long n) const { return from_bigint(BigInt(n)); }

Scalar Ring::from_bigint(const BigInt& n) const {
  if (kind_ == RingKind::PrimeField) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p_);
    return Scalar(mpq_class(r));
  }
  return Scalar(mpq_class(n));
}

Scalar Ring::from_fraction(const BigInt& n, const BigInt& d) const {
  if (d == 0) fail(ErrorKind::ZeroDenominator, "denominator is zero");
  switch (kind_) {
    case RingKind::Rational: {
      mpq_class q(n, d);
      q.canonicalize();
      return Scalar(std::move(q));
    }
    case RingKind::Integer: {
      BigInt r;
      mpz_tdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      if (r != 0) {
        fail(ErrorKind::InvalidLiteral, n.get_str() + "/" + d.get_str() + " is not an integer");
      }
      return Scalar(mpq_class(BigInt(n / d)));
    }
    case RingKind::PrimeField: {
      Scalar den = from_bigint(d);
      if (den.is_zero()) {
        fail(ErrorKind::InvalidLiteral, "denominator vanishes in " + display_name());
      }
      return mul(from_bigint(n), inv(den));
    }
  }
  fail(ErrorKind::Internal, "unreachable ring kind");
}

Scalar Ring::element(const mpq_class& q) const {
  if (q.get_den() == 1) return from_bigint(q.get_num());
  return from_fraction(q.get_num(), q.get_den());
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::PrimeField) return from_bigint(a.v_.get_num() + b.v_.get_num());
  return Scalar(mpq_class(a.v_ + b.v_));
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::PrimeField) return from_bigint(a.v_.get_num() - b.v_.get_num());
  return Scalar(mpq_class(a.v_ - b.v_));
}

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::PrimeField) return from_bigint(a.v_.get_num() * b.v_.get_num());
  return Scalar(mpq_class(a.v_ * b.v_));
}

Scalar Ring::neg(const Scalar& a) const {
  if (kind_ == RingKind::PrimeField) return from_bigint(-a.v_.get_num());
  return Scalar(mpq_class(-a.v_));
}

bool Ring::is_unit(const Scalar& a) const {
  if (a.is_zero()) return false;
  if (kind_ == RingKind::Integer) return abs(a.v_) == 1;
  return true;
}

Scalar Ring::inv(const Scalar& a) const {
  if (a.is_zero()) fail(ErrorKind::ZeroInverse, "0 has no inverse in " + display_name());
  switch (kind_) {
    case RingKind::Integer:
      if (abs(a.v_) != 1) fail(ErrorKind::NotAUnit, a.v_.get_str() + " is not a unit in Z");
      return a;
    case RingKind::Rational: return Scalar(mpq_class(1 / a.v_));
    case RingKind::PrimeField: {
      BigInt r;
      BigInt p(p_);
      mpz_invert(r.get_mpz_t(), a.v_.get_num_mpz_t(), p.get_mpz_t());
      return Scalar(mpq_class(r));
    }
  }
  fail(ErrorKind::Internal, "unreachable ring kind");
}

BigInt Ring::norm(const Scalar& a) const {
  if (a.is_zero()) return 0;
  if (kind_ == RingKind::Integer) return abs(a.v_.get_num());
  return 1;
}

Scalar Ring::quotient(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::Integer) return Scalar(mpq_class(floor_div(a.v_.get_num(), b.v_.get_num())));
  return mul(a, inv(b));
}

Scalar Ring::normalizing_unit(const Scalar& a) const {
  if (a.is_zero()) return one();
  if (kind_ == RingKind::Integer) return from_int(sgn(a.v_) < 0 ? -1 : 1);
  return inv(a);
}

namespace {

bool parse_bigint(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Scalar Ring::parse(std::string_view text) const {
  auto slash = text.find('/');
  BigInt n, d(1);
  bool ok = parse_bigint(text.substr(0, slash), n);
  if (ok && slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    ok = !den.empty() && std::isdigit(static_cast<unsigned char>(den[0])) && parse_bigint(den, d);
  }
  if (!ok) fail(ErrorKind::InvalidLiteral, "bad scalar '" + std::string(text) + "'");
  return from_fraction(n, d);
}

std::string Ring::format(const Scalar& a) const { return a.v_.get_str(); }

Scalar rational_normalize(const BigInt& n, const BigInt& d) {
  return Ring::rational().from_fraction(n, d);
}

}  // namespace corelate
