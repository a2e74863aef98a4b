#pragma once

// Fox free differential calculus.
//
// Convention: d(uv) = du + u dv, so d_i(x_j) = delta_ij and
// d_i(x_j^-1) = -delta_ij x_j^-1. Jacobian rows are indexed by the image
// words, columns by the generators.

#include <span>
#include <vector>

#include "sutcert/group_ring.hpp"
#include "sutcert/laurent.hpp"
#include "sutcert/matrix.hpp"
#include "sutcert/representation.hpp"
#include "sutcert/word.hpp"

namespace sutcert {

inline constexpr std::string_view kFoxConvention = "d(uv) = du + u dv";
inline constexpr std::string_view kJacobianConvention =
    "row j = surface word a_j, column i = generator x_i, entry d_{x_i} a_j";

class UnbalancedPresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

GroupRingElement fox_derivative(const Word& w, std::size_t i);

// All partial derivatives d_{x_0} w .. d_{x_{g-1}} w from one pass.
std::vector<GroupRingElement> fox_gradient(const Word& w);

struct FoxJacobian {
  std::size_t source_rank = 0;  // number of image words
  std::size_t target_rank = 0;  // rank of the free group they live in
  Matrix<GroupRingElement> entries;
};

// images must be g words in a rank-g free group.
FoxJacobian fox_jacobian(std::span<const Word> images);

Matrix<LaurentPolynomial> abelianized_jacobian(std::span<const Word> images);

template <class Field>
Matrix<typename Field::Element> evaluate(const GroupRingElement& x, const Representation<Field>& rho) {
  if (x.rank() != rho.rank()) throw AlphabetMismatch("group ring element and representation differ in rank");
  auto result = rho.zero();
  for (const auto& [w, c] : x.terms()) {
    Integer cc = c;
    auto coefficient = rho.field().from_rational(Rational(cc));
    result = result + scaled(rho.image(w), coefficient);
  }
  return result;
}

// rho(d_{x_i} w) for every i, computed from a single pass over w with a
// running product of the prefix image.
template <class Field>
std::vector<Matrix<typename Field::Element>> evaluated_gradient(const Word& w, const Representation<Field>& rho) {
  if (w.rank() != rho.rank()) throw AlphabetMismatch("word and representation differ in rank");
  std::vector<Matrix<typename Field::Element>> out(w.rank(), rho.zero());
  auto prefix = rho.identity();
  for (const auto& l : w.letters()) {
    if (l.sign > 0) {
      out[l.generator] = out[l.generator] + prefix;
      prefix = prefix * rho.letter(l);
    } else {
      prefix = prefix * rho.letter(l);
      out[l.generator] = out[l.generator] - prefix;
    }
  }
  return out;
}

// The gn x gn block matrix (rho(d_{x_i} a_j)), block row j, block column i.
template <class Field>
Matrix<typename Field::Element> evaluated_jacobian(std::span<const Word> images, const Representation<Field>& rho) {
  const std::size_t g = images.size(), n = rho.dimension();
  if (g != rho.rank())
    throw UnbalancedPresentation(std::to_string(g) + " surface words against " + std::to_string(rho.rank()) +
                                 " generators");
  Matrix<typename Field::Element> m(g * n, g * n, rho.field().zero());
  for (std::size_t j = 0; j < g; ++j) {
    auto row = evaluated_gradient(images[j], rho);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(j * n + r, i * n + c) = row[i](r, c);
  }
  return m;
}

}  // namespace sutcert
