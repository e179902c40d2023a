#pragma once

// Exact scalars over the two supported fields: arbitrary-precision rationals
// (GMP-backed) and prime fields GF(p) with a runtime modulus.
//
// Field descriptors (QQ, GFp) mint elements and parse/format them; elements
// themselves carry enough state that mixed-field arithmetic is an error, not
// a silent wrong answer.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace lrtwist {

struct field_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

// Rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, 0/1/-1 literals
  Rational(long num, long den) : v_(num, den == 0 ? 1 : den) {
    if (den == 0) throw field_error("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  bool is_zero() const { return sgn(v_) == 0; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw field_error("division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  Rational inverse() const {
    if (is_zero()) throw field_error("inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  // "5/6", "-3"; the denominator is omitted when it is 1.
  std::string str() const { return v_.get_str(); }

  static Rational parse(const std::string& s) {
    std::string t = detail::trimmed(s);
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    mpq_class v;
    if (t.empty() || v.set_str(t, 10) != 0)
      throw field_error("cannot parse rational '" + s + "'");
    if (sgn(v.get_den()) == 0)
      throw field_error("rational with zero denominator '" + s + "'");
    return Rational(v);
  }

 private:
  mpq_class v_;
};

// Element of GF(p). Value is the canonical representative in [0, p).
class Fp {
 public:
  Fp(std::int64_t v, std::int64_t p) : p_(p) {
    if (p < 2) throw field_error("modulus must be at least 2");
    v_ = v % p;
    if (v_ < 0) v_ += p;
  }

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return Fp(p_ - v_, p_); }
  Fp operator+(const Fp& o) const { match(o); return Fp(v_ + o.v_, p_); }
  Fp operator-(const Fp& o) const { match(o); return Fp(v_ - o.v_ + p_, p_); }
  Fp operator*(const Fp& o) const {
    match(o);
    return Fp(std::int64_t((__int128)v_ * o.v_ % p_), p_);
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
  Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
  Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

  Fp inverse() const {
    if (v_ == 0) throw field_error("inverse of zero in GF(p)");
    // extended Euclid; p prime, so every nonzero residue is a unit
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(x0, p_);
  }

  bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  std::string str() const { return std::to_string(v_); }

 private:
  void match(const Fp& o) const {
    if (p_ != o.p_) throw field_error("mixed moduli in GF(p) arithmetic");
  }

  std::int64_t v_, p_;
};

// Field descriptor: the rationals.
struct QQ {
  using Elem = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long n) const { return Rational(n); }
  Rational parse(const std::string& s) const { return Rational::parse(s); }
  std::string name() const { return "Q"; }
  bool operator==(const QQ&) const { return true; }
  bool operator!=(const QQ&) const { return false; }
};

// Field descriptor: GF(p), p prime.
class GFp {
 public:
  using Elem = Fp;

  explicit GFp(std::int64_t p) : p_(p) {
    if (p < 2) throw field_error("modulus must be at least 2");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw field_error("modulus " + std::to_string(p) + " is not prime");
  }

  std::int64_t p() const { return p_; }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(long n) const { return Fp(n, p_); }

  Fp parse(const std::string& s) const {
    std::string t = detail::trimmed(s);
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    mpz_class v;
    if (t.empty() || v.set_str(t, 10) != 0)
      throw field_error("cannot parse GF(p) element '" + s + "'");
    mpz_class r = v % p_;  // may be negative, Fp ctor normalizes
    return Fp(r.get_si(), p_);
  }

  std::string name() const { return "F" + std::to_string(p_); }
  bool operator==(const GFp& o) const { return p_ == o.p_; }
  bool operator!=(const GFp& o) const { return p_ != o.p_; }

 private:
  std::int64_t p_;
};

using FieldTag = std::variant<QQ, GFp>;

// "Q" or "F<p>", e.g. "F5".
inline FieldTag parse_field_tag(const std::string& tag) {
  std::string t = detail::trimmed(tag);
  if (t == "Q") return QQ{};
  if (t.size() >= 2 && t[0] == 'F') {
    std::int64_t p = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') throw field_error("bad field tag '" + tag + "'");
      p = p * 10 + (t[i] - '0');
      if (p > (1LL << 31)) throw field_error("modulus too large in '" + tag + "'");
    }
    return GFp(p);
  }
  throw field_error("bad field tag '" + tag + "' (expected Q or F<p>)");
}

// Dispatches fn on the concrete field descriptor named by tag.
template <class Fn>
decltype(auto) with_field(const std::string& tag, Fn&& fn) {
  return std::visit(std::forward<Fn>(fn), parse_field_tag(tag));
}

}  // namespace lrtwist
