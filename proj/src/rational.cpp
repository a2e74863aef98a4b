#include "sutcert/scalar.hpp"

#include <cctype>

namespace sutcert {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer(s)) throw std::invalid_argument("invalid integer '" + std::string(s) + "'");
  std::string t(s);
  if (t.front() == '+') t.erase(0, 1);
  return Integer(t, 10);
}

}  // namespace

// --- Rational ----------------------------------------------------------------

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s = strip(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  return Rational(parse_integer(std::string_view(s).substr(0, slash)),
                  parse_integer(std::string_view(s).substr(slash + 1)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const { return v_.get_str(10); }

// --- GaussianRational ------------------------------------------------------

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.back() != 'i') return GaussianRational(Rational::parse(s));
  s.pop_back();
  // split at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  Rational re = re_part.empty() ? Rational(0) : Rational::parse(re_part);
  return {re, Rational::parse(im_part)};
}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw DivisionByZero();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im = im_.to_string() + " i";
  if (re_.is_zero()) return im;
  return re_.to_string() + (im_.sign() > 0 ? "+" : "") + im;
}

// --- ModP --------------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModP::ModP(std::uint32_t p, std::int64_t value) : p_(p) {
  if (p == 0) throw std::invalid_argument("modulus must be positive");
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  v_ = static_cast<std::uint32_t>(r);
}

void ModP::check(const ModP& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixing residues of different primes");
}

ModP& ModP::operator+=(const ModP& o) {
  check(o);
  std::uint64_t s = std::uint64_t(v_) + o.v_;
  v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  check(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + p_ - o.v_);
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  check(o);
  v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_);
  return *this;
}

ModP ModP::pow(std::uint64_t e) const {
  ModP result(p_, 1), base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw DivisionByZero();
  return pow(p_ - 2);
}

// --- PrimeField --------------------------------------------------------------

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("invalid prime " + std::to_string(p) + ": need an odd prime below 2^31");
}

ModP PrimeField::from_rational(const Rational& q) const {
  Integer num = q.numerator() % p_, den = q.denominator() % p_;
  ModP d(p_, den.get_si());
  if (d.is_zero()) throw DivisionByZero();
  return ModP(p_, num.get_si()) / d;
}

ModP PrimeField::parse(std::string_view text) const {
  std::string s = strip(text);
  if (s.find('/') != std::string::npos) return from_rational(Rational::parse(s));
  Integer n = parse_integer(s) % p_;
  return ModP(p_, n.get_si());
}

}  // namespace sutcert
