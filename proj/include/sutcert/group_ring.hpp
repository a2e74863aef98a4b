#pragma once

// The integral group ring Z[F] of a free group F.

#include <map>
#include <string>

#include "sutcert/laurent.hpp"
#include "sutcert/scalar.hpp"
#include "sutcert/word.hpp"

namespace sutcert {

class GroupRingElement {
 public:
  using Terms = std::map<Word, Integer>;

  GroupRingElement() = default;
  explicit GroupRingElement(std::size_t rank) : rank_(rank) {}
  GroupRingElement(const Word& w, const Integer& c = 1);  // NOLINT(google-explicit-constructor)

  static GroupRingElement one(std::size_t rank) { return GroupRingElement(Word(rank)); }

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Word& w) const;

  void add_term(const Word& w, const Integer& c);

  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  // Shortlex term order, e.g. "1 - x y x^-1".
  std::string to_string(const Alphabet& alphabet) const;

 private:
  void check(const GroupRingElement& o) const;

  std::size_t rank_ = 0;
  Terms terms_;
};

GroupRingElement group_ring_multiply(const GroupRingElement& a, const GroupRingElement& b);

// Word -> monomial of its exponent vector, extended linearly.
LaurentPolynomial abelianize(const GroupRingElement& x);

}  // namespace sutcert
