#pragma once

// Multivariate Laurent polynomials with rational coefficients: the group ring
// of Z^g, i.e. the target of abelianized Fox derivatives.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sutcert/matrix.hpp"
#include "sutcert/scalar.hpp"
#include "sutcert/word.hpp"

namespace sutcert {

// Graded lexicographic: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class LaurentPolynomial {
 public:
  using Terms = std::map<ExponentVector, Rational, GradedLex>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t variables) : vars_(variables) {}

  static LaurentPolynomial constant(std::size_t variables, const Rational& c);
  static LaurentPolynomial monomial(ExponentVector exponents, const Rational& c = Rational(1));
  static LaurentPolynomial variable(std::size_t variables, std::size_t i, std::int64_t e = 1);

  std::size_t variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Units of Q[Z^g] are exactly the nonzero monomials.
  bool is_unit() const { return terms_.size() == 1; }
  bool is_polynomial() const;  // no negative exponents

  // Largest term under graded lex.
  const std::pair<const ExponentVector, Rational>& leading_term() const;

  void add_term(const ExponentVector& e, const Rational& c);

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial shifted(const ExponentVector& by) const;  // multiply by t^by
  LaurentPolynomial inverted_variables() const;              // t -> t^-1

  // Exact quotient in Q[t_1..t_g]; both operands must be polynomials and
  // the division must be exact, otherwise std::logic_error.
  LaurentPolynomial divide_exact(const LaurentPolynomial& d) const;

  template <class Field>
  typename Field::Element evaluate(const Field& field, std::span<const typename Field::Element> point) const;

  // "1 - t_x*t_y" with variables named after generators.
  std::string to_string(const Alphabet& alphabet) const;

 private:
  void check(const LaurentPolynomial& o) const;

  std::size_t vars_ = 0;
  Terms terms_;
};

template <class Field>
typename Field::Element LaurentPolynomial::evaluate(const Field& field,
                                                     std::span<const typename Field::Element> point) const {
  if (point.size() != vars_) throw std::invalid_argument("evaluation point has wrong dimension");
  auto result = field.zero();
  for (const auto& [e, c] : terms_) {
    auto term = field.from_rational(c);
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      auto base = e[i] > 0 ? point[i] : field.one() / point[i];
      for (std::int64_t k = 0; k < (e[i] > 0 ? e[i] : -e[i]); ++k) term *= base;
    }
    result += term;
  }
  return result;
}

// Determinant over Q[Z^g]: a monomial unit is factored out of every row to land
// in the polynomial subring, then fraction-free Bareiss elimination runs there.
LaurentPolynomial det_laurent(const Matrix<LaurentPolynomial>& m);

}  // namespace sutcert
