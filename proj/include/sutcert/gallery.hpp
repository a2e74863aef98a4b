#pragma once

// Named example presentations.
//
//   product-g               a_j = x_j, g >= 1
//   gen2-multisuture        (xy, yx), with three suture strings kept verbatim
//   genus3-derived2         (a, b, c) with a in F^(2); ships with the rep beta
//   genus3-plus-handles-g   genus3-derived2 with g-3 one-handles, g >= 3
//   solvable-K              tower whose a-word has derived depth K, K >= 1

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sutcert/certifier.hpp"

namespace sutcert {

class UnknownGalleryEntry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GalleryEntry {
  SuturedPresentation presentation;
  std::optional<Representation<RationalField>> representation;
};

GalleryEntry gallery(std::string_view name);
std::vector<std::string> gallery_patterns();

// x -> [[1,1],[0,1]], y -> [[0,1],[-1,0]], z -> I, further generators -> I.
Representation<RationalField> beta_representation(const Alphabet& alphabet);

struct SolvableTower {
  SuturedPresentation presentation;
  std::size_t a_index = 0;  // the curve of derived depth K
  std::size_t b_index = 1;  // the curve meeting it, conjugated at the next step
};

// Level 1: generators x1,x2 with words ([x1,x2], x2). Level K+1 glues two
// copies of level K (generators of copy 1, then copy 2, then t) and has words
//   a = [a', a''],  b = a' t a'',  c = t,
// followed by the remaining curves of each copy, where the copy's b-curve is
// replaced by its conjugate a b a^-1. The c-curve becomes the next b-curve.
SolvableTower solvable_tower(std::size_t k);

}  // namespace sutcert
