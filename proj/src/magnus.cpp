#include "sutcert/magnus.hpp"

#include <cctype>

namespace sutcert {

TruncatedSeries::TruncatedSeries(std::size_t rank, std::size_t cutoff) : rank_(rank), cutoff_(cutoff) {
  if (cutoff == 0) throw std::invalid_argument("Magnus cutoff must be at least 1");
}

TruncatedSeries TruncatedSeries::one(std::size_t rank, std::size_t cutoff) {
  TruncatedSeries s(rank, cutoff);
  s.terms_.emplace(Monomial{}, 1);
  return s;
}

Integer TruncatedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TruncatedSeries::add_term(const Monomial& m, const Integer& c) {
  if (m.size() > cutoff_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

TruncatedSeries::Terms TruncatedSeries::degree_part(std::size_t k) const {
  Terms out;
  for (const auto& [m, c] : terms_)
    if (m.size() == k) out.emplace(m, c);
  return out;
}

void TruncatedSeries::multiply_letter(const Letter& l) {
  TruncatedSeries next = *this;
  for (const auto& [m, c] : terms_) {
    Monomial e = m;
    for (std::size_t k = 1; m.size() + k <= cutoff_; ++k) {
      e.push_back(l.generator);
      // x -> 1 + X ; x^-1 -> 1 - X + X^2 - ...
      if (l.sign > 0) {
        next.add_term(e, c);
        break;
      }
      next.add_term(e, k % 2 ? Integer(-c) : c);
    }
  }
  terms_ = std::move(next.terms_);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.rank_ != b.rank_ || a.cutoff_ != b.cutoff_)
    throw std::invalid_argument("multiplying series of different rank or cutoff");
  TruncatedSeries r(a.rank_, a.cutoff_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.size() + mb.size() > a.cutoff_) continue;
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(m, ca * cb);
    }
  return r;
}

std::string TruncatedSeries::to_string(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (auto g : m) {
      if (!mono.empty()) mono += '*';
      std::string n = alphabet.name(g);
      for (auto& ch : n) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      mono += n;
    }
    Integer mag = abs(c);
    std::string body = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

TruncatedSeries magnus_expand(const Word& w, std::size_t cutoff) {
  auto s = TruncatedSeries::one(w.rank(), cutoff);
  for (const auto& l : w.letters()) s.multiply_letter(l);
  return s;
}

std::string LcsWeight::to_string() const {
  switch (kind) {
    case Kind::exact: return std::to_string(value);
    case Kind::at_least: return ">= " + std::to_string(value);
    case Kind::infinite: return "infinite";
  }
  return {};
}

LcsWeight lcs_weight(const Word& w, std::size_t cutoff) {
  if (w.is_identity()) return LcsWeight::infinite();
  auto s = magnus_expand(w, cutoff);
  for (const auto& [m, c] : s.terms())
    if (!m.empty()) return LcsWeight::exactly(m.size());  // terms are degree-ordered
  return LcsWeight::at_least(cutoff + 1);
}

}  // namespace sutcert
