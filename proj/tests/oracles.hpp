#pragma once

// Independent reference implementations used only by tests. They favour
// obviousness over speed and share no algorithmic code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "sutcert/group_ring.hpp"
#include "sutcert/matrix.hpp"
#include "sutcert/scalar.hpp"
#include "sutcert/word.hpp"

namespace oracle {

using namespace sutcert;

// Laplace expansion along the first row.
template <class T>
T cofactor_det(const Matrix<T>& m, const T& zero, const T& one) {
  const std::size_t n = m.rows();
  if (n == 0) return one;
  if (n == 1) return m(0, 0);
  T total = zero;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<T> minor(n - 1, n - 1, zero);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    T term = m(0, c) * cofactor_det(minor, zero, one);
    total = (c % 2 == 0) ? total + term : total - term;
  }
  return total;
}

// Fox derivative by recursion on the first letter: d(l w) = d(l) + l d(w).
inline GroupRingElement naive_fox(const Word& w, std::size_t i) {
  const std::size_t rank = w.rank();
  GroupRingElement zero(rank);
  if (w.is_identity()) return zero;
  auto letters = w.letters();
  const Letter& l = letters[0];
  Word lw(rank, std::vector<Letter>{l});
  GroupRingElement head(rank);
  if (l.generator == i) {
    if (l.sign > 0)
      head.add_term(Word(rank), Integer(1));
    else
      head.add_term(lw, Integer(-1));
  }
  Word rest(rank, std::vector<Letter>(letters.begin() + 1, letters.end()));
  return head + group_ring_multiply(GroupRingElement(lw), naive_fox(rest, i));
}

// Noncommutative truncated series as a plain map; letters multiplied one at a time.
using Series = std::map<std::vector<std::uint32_t>, Integer>;

inline Series series_mul(const Series& a, const Series& b, std::size_t cutoff) {
  Series out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma.size() + mb.size() > cutoff) continue;
      auto m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Series naive_magnus(const Word& w, std::size_t cutoff) {
  Series s{{{}, Integer(1)}};
  for (const auto& l : w.letters()) {
    Series f{{{}, Integer(1)}};
    for (std::size_t d = 1; d <= cutoff; ++d) {
      if (l.sign > 0 && d > 1) break;
      std::vector<std::uint32_t> m(d, l.generator);
      f[m] = (l.sign > 0 || d % 2 == 0) ? Integer(1) : Integer(-1);
    }
    s = series_mul(s, f, cutoff);
  }
  return s;
}

// Smallest degree with a nonzero term other than the constant; 0 if none up to cutoff.
inline std::size_t naive_lcs_weight(const Word& w, std::size_t cutoff) {
  auto s = naive_magnus(w, cutoff);
  std::size_t best = 0;
  for (const auto& [m, c] : s)
    if (!m.empty() && (best == 0 || m.size() < best)) best = m.size();
  return best;
}

// Number of Lyndon words of length k over g letters, by enumeration.
inline std::uint64_t lyndon_count(std::size_t g, std::size_t k) {
  std::vector<std::size_t> w(k, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool lyndon = true;
    for (std::size_t r = 1; r < k && lyndon; ++r) {
      // w must be strictly smaller than each proper rotation
      auto rot = w;
      std::rotate(rot.begin(), rot.begin() + r, rot.end());
      if (!(w < rot)) lyndon = false;
    }
    if (lyndon) ++count;
    std::size_t pos = k;
    while (pos > 0 && w[pos - 1] == g - 1) w[--pos] = 0;
    if (pos == 0) break;
    ++w[pos - 1];
  }
  return count;
}

// Word expanded letter by letter from (generator, exponent) pairs, reduced at the end.
inline Word naive_expand(std::size_t rank, const std::vector<std::pair<std::size_t, int>>& runs) {
  std::vector<Letter> raw;
  for (auto [g, e] : runs)
    for (int k = 0; k < std::abs(e); ++k) raw.push_back({static_cast<std::uint32_t>(g), e > 0 ? 1 : -1});
  std::vector<Letter> stack;
  for (const auto& l : raw) {
    if (!stack.empty() && stack.back().generator == l.generator && stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(rank, stack);
}

}  // namespace oracle

namespace testing_support {

using namespace sutcert;

inline Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_d(0, max_len), gen_d(0, rank - 1);
  std::uniform_int_distribution<int> sign_d(0, 1);
  std::size_t len = len_d(rng);
  std::vector<Letter> ls;
  for (std::size_t k = 0; k < len; ++k)
    ls.push_back({static_cast<std::uint32_t>(gen_d(rng)), sign_d(rng) ? 1 : -1});
  return Word(rank, ls);
}

inline Word random_nontrivial_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  for (;;) {
    Word w = random_word(rng, rank, max_len);
    if (!w.is_identity()) return w;
  }
}

// Random element of F^(d) as an iterated commutator of random words.
inline Word random_derived_element(std::mt19937_64& rng, std::size_t rank, std::size_t depth, std::size_t len) {
  if (depth == 0) return random_nontrivial_word(rng, rank, len);
  return commutator(random_derived_element(rng, rank, depth - 1, len),
                    random_derived_element(rng, rank, depth - 1, len));
}

}  // namespace testing_support
