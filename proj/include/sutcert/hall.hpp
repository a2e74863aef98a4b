#pragma once

// Hall basic commutators, their Lie images, coordinates in the lower central
// quotients gamma_k / gamma_{k+1}, and the collection process.
//
// Basic commutators of weight k > 1 are [l, r] with weight(l) + weight(r) = k,
// l < r, and l >= w whenever r = [w, z]. Within a weight, elements are ordered
// lexicographically by the order indices of (left, right).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sutcert/magnus.hpp"
#include "sutcert/matrix.hpp"
#include "sutcert/scalar.hpp"
#include "sutcert/word.hpp"

namespace sutcert {

struct BasicCommutator {
  std::size_t index = 0;   // position in the global order
  std::size_t weight = 1;
  std::optional<std::size_t> generator;  // set for weight 1
  std::size_t left = 0, right = 0;       // indices of the bracket arguments

  bool is_leaf() const { return generator.has_value(); }
  friend bool operator==(const BasicCommutator&, const BasicCommutator&) = default;
};

// Homogeneous noncommutative polynomial.
using LiePolynomial = std::map<Monomial, Integer, MonomialOrder>;

class HallBasis {
 public:
  HallBasis(std::size_t rank, std::size_t max_weight);

  std::size_t rank() const { return rank_; }
  std::size_t max_weight() const { return max_weight_; }
  const std::vector<BasicCommutator>& elements() const { return elements_; }
  const BasicCommutator& operator[](std::size_t i) const { return elements_.at(i); }
  std::size_t size() const { return elements_.size(); }

  // Index range [first, last) of the weight-k elements.
  std::pair<std::size_t, std::size_t> weight_range(std::size_t k) const;
  std::size_t count(std::size_t k) const;

  Word word(std::size_t i) const;               // realised with [u,v] = u v u^-1 v^-1
  std::string to_string(std::size_t i) const;   // "[x1,[x1,x2]]"
  const LiePolynomial& lie(std::size_t i) const { return lie_.at(i); }

 private:
  std::size_t rank_, max_weight_;
  std::vector<BasicCommutator> elements_;
  std::vector<std::size_t> offsets_;  // offsets_[k] = first index of weight k
  std::vector<LiePolynomial> lie_;
};

HallBasis hall_basis(std::size_t rank, std::size_t max_weight);

// Number of basic commutators of weight k on g generators (necklace formula).
std::uint64_t witt_number(std::size_t g, std::size_t k);

struct LcsCoordinates {
  std::size_t weight = 0;
  std::vector<Integer> values;  // one per weight-k basic commutator
  friend bool operator==(const LcsCoordinates&, const LcsCoordinates&) = default;
};

class WeightPrecondition : public std::invalid_argument {
 public:
  WeightPrecondition(std::size_t degree, std::size_t required)
      : std::invalid_argument("word has a nonzero Magnus term in degree " + std::to_string(degree) +
                              ", below the requested weight " + std::to_string(required)),
        degree_(degree) {}
  std::size_t degree() const { return degree_; }

 private:
  std::size_t degree_;
};

// Solves (degree-k Magnus part) = sum c_i Lie(b_i) over the weight-k basic
// commutators. Built once per (rank, k) and reusable.
class LieCoordinateSolver {
 public:
  LieCoordinateSolver(const HallBasis& basis, std::size_t k);

  std::size_t weight() const { return k_; }
  // Requires lcs_weight(w) >= k; throws WeightPrecondition otherwise.
  LcsCoordinates solve(const Word& w) const;
  LcsCoordinates solve_series(const TruncatedSeries& s) const;

 private:
  std::size_t rank_, k_, first_;
  std::vector<Monomial> monomials_;        // rows, one per distinct monomial
  std::map<Monomial, std::size_t, MonomialOrder> row_of_;
  Matrix<Rational> columns_;               // monomials x basis elements
  std::vector<std::size_t> pivot_rows_;    // rows forming an invertible square block
  Matrix<Rational> pivot_inverse_;
};

LcsCoordinates lie_coordinates(const Word& w, std::size_t k);

struct CollectedFactor {
  BasicCommutator commutator;
  std::int64_t exponent;
};

// w = c_1^e_1 ... c_m^e_m modulo gamma_{K+1}, i.e. all factors of weight <= K,
// in increasing basic-commutator order.
struct Collection {
  HallBasis basis;
  std::vector<CollectedFactor> factors;
  Word product() const;
  std::string to_string() const;
};

Collection collect(const Word& w, std::size_t max_weight);

}  // namespace sutcert
