#pragma once

// Derived series membership in a free group F: G^(0) = F, G^(d+1) = [G^(d), G^(d)].
//
// w lies in F^(d) iff it is trivial in the free solvable quotient F/F^(d).
// With N = F^(d-1):  u = v in F/N'  iff  d_i u = d_i v in Z[F/N] for every i.
// Each coset of F^(d) therefore has a canonical key built from the keys of
// F^(d-1) (level 1 key: the exponent vector), and the keys are interned per
// call so repeated comparisons cost one lookup.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "sutcert/word.hpp"

namespace sutcert {

class ResourceExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DerivedBudget {
  std::size_t max_word_length = 100'000;
  std::size_t max_depth = 6;
  std::size_t max_work = 400'000'000;  // interned key entries written, summed over levels
};

// Largest d <= max_depth with w in F^(d). Throws ResourceExceeded instead of
// guessing when the budget does not allow a decision.
std::size_t derived_depth(const Word& w, std::size_t max_depth, const DerivedBudget& budget = {});

bool in_derived_subgroup(const Word& w, std::size_t d, const DerivedBudget& budget = {});

}  // namespace sutcert
