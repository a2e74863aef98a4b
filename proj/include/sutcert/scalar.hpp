#pragma once

// Exact scalar domains: rationals, Gaussian rationals and prime fields.
// Each domain comes with a small "field" object that knows how to build
// constants and parse canonical text; elements carry everything needed for
// arithmetic so generic code only needs the element type.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sutcert {

using Integer = mpz_class;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : v_(n) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational parse(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  const mpq_class& raw() const { return v_; }

  Rational inverse() const;
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string to_string() const;  // "p/q", or "p" for integers

 private:
  mpq_class v_;
};

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = Rational()) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  GaussianRational(long n) : re_(n) {}  // NOLINT

  static GaussianRational parse(std::string_view text);
  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  std::string to_string() const;  // "a/b+c/d i"

 private:
  Rational re_, im_;
};

// Residue modulo an odd prime p < 2^31.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint32_t p, std::int64_t value);

  std::uint32_t prime() const { return p_; }
  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  ModP inverse() const;
  ModP pow(std::uint64_t e) const;

  ModP operator-() const { return ModP(p_, v_ == 0 ? 0 : p_ - v_, raw_tag{}); }
  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP&, const ModP&) = default;

  std::string to_string() const { return std::to_string(v_); }

 private:
  struct raw_tag {};
  ModP(std::uint32_t p, std::uint32_t v, raw_tag) : p_(p), v_(v) {}
  void check(const ModP& o) const;

  std::uint32_t p_ = 0;
  std::uint32_t v_ = 0;
};

bool is_prime(std::uint64_t n);

// --- field descriptors -----------------------------------------------------

struct RationalField {
  using Element = Rational;
  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_integer(long n) const { return Rational(n); }
  Element from_rational(const Rational& q) const { return q; }
  Element parse(std::string_view text) const { return Rational::parse(text); }
  Element conj(const Element& x) const { return x; }
  std::string tag() const { return "Q"; }
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

struct GaussianField {
  using Element = GaussianRational;
  Element zero() const { return GaussianRational(0); }
  Element one() const { return GaussianRational(1); }
  Element from_integer(long n) const { return GaussianRational(n); }
  Element from_rational(const Rational& q) const { return GaussianRational(q); }
  Element parse(std::string_view text) const { return GaussianRational::parse(text); }
  Element conj(const Element& x) const { return x.conj(); }
  std::string tag() const { return "QI"; }
  friend bool operator==(const GaussianField&, const GaussianField&) = default;
};

class PrimeField {
 public:
  using Element = ModP;
  explicit PrimeField(std::uint32_t p);
  std::uint32_t prime() const { return p_; }
  Element zero() const { return ModP(p_, 0); }
  Element one() const { return ModP(p_, 1); }
  Element from_integer(long n) const { return ModP(p_, n); }
  Element from_rational(const Rational& q) const;
  Element parse(std::string_view text) const;
  Element conj(const Element& x) const { return x; }
  std::string tag() const { return "Fp:" + std::to_string(p_); }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

inline std::string to_string(const Rational& x) { return x.to_string(); }
inline std::string to_string(const GaussianRational& x) { return x.to_string(); }
inline std::string to_string(const ModP& x) { return x.to_string(); }

}  // namespace sutcert
