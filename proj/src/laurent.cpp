#include "sutcert/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace sutcert {

bool GradedLex::operator()(const ExponentVector& a, const ExponentVector& b) const {
  std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (da != db) return da < db;
  return a < b;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t variables, const Rational& c) {
  LaurentPolynomial p(variables);
  p.add_term(ExponentVector(variables, 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(ExponentVector exponents, const Rational& c) {
  LaurentPolynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t variables, std::size_t i, std::int64_t e) {
  ExponentVector v(variables, 0);
  v.at(i) = e;
  return monomial(std::move(v));
}

bool LaurentPolynomial::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (auto x : e)
      if (x < 0) return false;
  return true;
}

const std::pair<const ExponentVector, Rational>& LaurentPolynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return *terms_.rbegin();
}

void LaurentPolynomial::check(const LaurentPolynomial& o) const {
  if (vars_ != o.vars_) throw AlphabetMismatch("Laurent polynomials in different numbers of variables");
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (e.size() != vars_) throw std::invalid_argument("exponent vector has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check(b);
  LaurentPolynomial p(a.vars_);
  ExponentVector e(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& by) const {
  if (by.size() != vars_) throw std::invalid_argument("shift has wrong length");
  LaurentPolynomial p(vars_);
  for (const auto& [e, c] : terms_) {
    ExponentVector f = e;
    for (std::size_t i = 0; i < vars_; ++i) f[i] += by[i];
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::inverted_variables() const {
  LaurentPolynomial p(vars_);
  for (const auto& [e, c] : terms_) {
    ExponentVector f = e;
    for (auto& x : f) x = -x;
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& d) const {
  check(d);
  if (d.is_zero()) throw DivisionByZero();
  if (!is_polynomial() || !d.is_polynomial())
    throw std::logic_error("exact division is only defined on the polynomial subring");
  LaurentPolynomial q(vars_), r = *this;
  const auto& [dl_exp, dl_coef] = d.leading_term();
  while (!r.is_zero()) {
    const auto& [rl_exp, rl_coef] = r.leading_term();
    ExponentVector m(vars_);
    for (std::size_t i = 0; i < vars_; ++i) {
      m[i] = rl_exp[i] - dl_exp[i];
      if (m[i] < 0) throw std::logic_error("polynomial division is not exact");
    }
    Rational c = rl_coef / dl_coef;
    q.add_term(m, c);
    r -= d.shifted(m) * constant(vars_, c);
  }
  return q;
}

std::string LaurentPolynomial::to_string(const Alphabet& alphabet) const {
  if (alphabet.rank() != vars_) throw AlphabetMismatch("alphabet does not match polynomial variables");
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "t_" + alphabet.name(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    Rational mag = c.sign() < 0 ? -c : c;
    std::string coef = mag.to_string();
    std::string body = mono.empty() ? coef : (mag == Rational(1) ? mono : coef + "*" + mono);
    if (out.empty())
      out = (c.sign() < 0 ? "-" : "") + body;
    else
      out += (c.sign() < 0 ? " - " : " + ") + body;
  }
  return out;
}

LaurentPolynomial det_laurent(const Matrix<LaurentPolynomial>& input) {
  if (!input.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  const std::size_t vars = input(0, 0).variables();

  // Pull t^{min} out of each row so every entry becomes a polynomial.
  Matrix<LaurentPolynomial> m = input;
  ExponentVector unit(vars, 0);
  for (std::size_t r = 0; r < n; ++r) {
    bool any = false;
    ExponentVector low(vars, 0);
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [e, coef] : m(r, c).terms()) {
        if (!any) {
          low = e;
          any = true;
        } else {
          for (std::size_t i = 0; i < vars; ++i) low[i] = std::min(low[i], e[i]);
        }
      }
    if (!any) return LaurentPolynomial(vars);  // zero row
    ExponentVector neg(vars);
    for (std::size_t i = 0; i < vars; ++i) {
      neg[i] = -low[i];
      unit[i] += low[i];
    }
    for (std::size_t c = 0; c < n; ++c) m(r, c) = m(r, c).shifted(neg);
  }

  // Bareiss: after step k every entry is a (k+1)-minor, and the division by
  // the previous pivot is exact.
  bool negate = false;
  LaurentPolynomial prev = LaurentPolynomial::constant(vars, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return LaurentPolynomial(vars);
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPolynomial v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = v.divide_exact(prev);
      }
      m(i, k) = LaurentPolynomial(vars);
    }
    prev = m(k, k);
  }
  LaurentPolynomial det = m(n - 1, n - 1).shifted(unit);
  return negate ? -det : det;
}

}  // namespace sutcert
