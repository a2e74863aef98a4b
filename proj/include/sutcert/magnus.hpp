#pragma once

// Magnus expansion x_i -> 1 + X_i into truncated noncommutative power series,
// and the lower-central weight it detects.
//
// Indexing: with G_0 = G and G_k = [G, G_{k-1}], G_k is the standard
// gamma_{k+1}. lcs_weight(w) = d means w is in gamma_d but not gamma_{d+1},
// i.e. w in G_{d-1}.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sutcert/scalar.hpp"
#include "sutcert/word.hpp"

namespace sutcert {

using Monomial = std::vector<std::uint32_t>;  // noncommutative X_{i1} X_{i2} ...

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class TruncatedSeries {
 public:
  using Terms = std::map<Monomial, Integer, MonomialOrder>;

  TruncatedSeries(std::size_t rank, std::size_t cutoff);
  static TruncatedSeries one(std::size_t rank, std::size_t cutoff);

  std::size_t rank() const { return rank_; }
  std::size_t cutoff() const { return cutoff_; }
  const Terms& terms() const { return terms_; }
  Integer coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Integer& c);

  // Homogeneous component of degree k.
  Terms degree_part(std::size_t k) const;

  // Right multiplication by the series of a single letter.
  void multiply_letter(const Letter& l);

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  // "1 + X*Y - Y*X", with capitalised generator names.
  std::string to_string(const Alphabet& alphabet) const;

 private:
  std::size_t rank_, cutoff_;
  Terms terms_;
};

TruncatedSeries magnus_expand(const Word& w, std::size_t cutoff);

struct LcsWeight {
  enum class Kind { exact, at_least, infinite };
  Kind kind = Kind::infinite;
  std::size_t value = 0;  // the weight, or cutoff+1 for at_least

  static LcsWeight exactly(std::size_t d) { return {Kind::exact, d}; }
  static LcsWeight at_least(std::size_t d) { return {Kind::at_least, d}; }
  static LcsWeight infinite() { return {Kind::infinite, 0}; }

  // True when the word provably lies in gamma_k (standard indexing).
  bool reaches(std::size_t k) const { return kind == Kind::infinite || value >= k; }
  std::string to_string() const;
  friend bool operator==(const LcsWeight&, const LcsWeight&) = default;
};

// Lowest degree d <= cutoff of a nonzero non-constant Magnus term.
LcsWeight lcs_weight(const Word& w, std::size_t cutoff);

}  // namespace sutcert
