#include "sutcert/group_ring.hpp"

namespace sutcert {

GroupRingElement::GroupRingElement(const Word& w, const Integer& c) : rank_(w.rank()) { add_term(w, c); }

void GroupRingElement::check(const GroupRingElement& o) const {
  if (rank_ != o.rank_) throw AlphabetMismatch("group ring elements over different free groups");
}

Integer GroupRingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add_term(const Word& w, const Integer& c) {
  if (w.rank() != rank_) throw AlphabetMismatch("word does not belong to this group ring");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  check(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  check(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.check(b);
  GroupRingElement r(a.rank_);
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) r.add_term(u * v, cu * cv);
  return r;
}

GroupRingElement group_ring_multiply(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }

std::string GroupRingElement::to_string(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    Integer mag = abs(c);
    std::string body;
    if (w.is_identity())
      body = mag.get_str();
    else
      body = (mag == 1 ? "" : mag.get_str() + " ") + format_word(w, alphabet);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

LaurentPolynomial abelianize(const GroupRingElement& x) {
  LaurentPolynomial p(x.rank());
  for (const auto& [w, c] : x.terms()) p.add_term(exponent_vector(w), Rational(c));
  return p;
}

}  // namespace sutcert
