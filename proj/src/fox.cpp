#include "sutcert/fox.hpp"

namespace sutcert {

std::vector<GroupRingElement> fox_gradient(const Word& w) {
  std::vector<GroupRingElement> out(w.rank(), GroupRingElement(w.rank()));
  Word prefix(w.rank());
  for (const auto& l : w.letters()) {
    if (l.sign > 0) {
      out[l.generator].add_term(prefix, 1);
      prefix *= Word::generator(w.rank(), l.generator, 1);
    } else {
      prefix *= Word::generator(w.rank(), l.generator, -1);
      out[l.generator].add_term(prefix, -1);
    }
  }
  return out;
}

GroupRingElement fox_derivative(const Word& w, std::size_t i) {
  if (i >= w.rank())
    throw std::out_of_range("generator index " + std::to_string(i) + " outside rank " + std::to_string(w.rank()));
  GroupRingElement d(w.rank());
  Word prefix(w.rank());
  for (const auto& l : w.letters()) {
    if (l.sign < 0) prefix *= Word::generator(w.rank(), l.generator, -1);
    if (l.generator == i) d.add_term(prefix, l.sign);
    if (l.sign > 0) prefix *= Word::generator(w.rank(), l.generator, 1);
  }
  return d;
}

FoxJacobian fox_jacobian(std::span<const Word> images) {
  if (images.empty()) throw UnbalancedPresentation("no image words");
  const std::size_t rank = images.front().rank();
  for (const auto& w : images)
    if (w.rank() != rank) throw AlphabetMismatch("image words live in different free groups");
  if (images.size() != rank)
    throw UnbalancedPresentation(std::to_string(images.size()) + " image words in a rank-" +
                                 std::to_string(rank) + " free group");
  FoxJacobian jac{images.size(), rank, Matrix<GroupRingElement>(images.size(), rank, GroupRingElement(rank))};
  for (std::size_t j = 0; j < images.size(); ++j) {
    auto row = fox_gradient(images[j]);
    for (std::size_t i = 0; i < rank; ++i) jac.entries(j, i) = std::move(row[i]);
  }
  return jac;
}

Matrix<LaurentPolynomial> abelianized_jacobian(std::span<const Word> images) {
  return fox_jacobian(images).entries.map([](const GroupRingElement& x) { return abelianize(x); });
}

}  // namespace sutcert
