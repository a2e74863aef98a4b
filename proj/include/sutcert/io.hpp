#pragma once

// Line-oriented text files for presentations and representations.
//
// Presentation:
//   # note: free text kept as provenance
//   genus: 3
//   generators: x y z
//   rplus: <word> | <word> | <word>
//   sutures: <text> | <text>        (optional, stored verbatim)
//   label: genus3-derived2           (optional)
//
// Representation:
//   dim: 2
//   field: Q | QI | Fp:<prime>
//   x: [[1,1],[0,1]]                 (one line per generator)
//
// Blank lines and lines starting with '#' are ignored.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "sutcert/certifier.hpp"

namespace sutcert {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyRepresentation =
    std::variant<Representation<RationalField>, Representation<GaussianField>, Representation<PrimeField>>;

SuturedPresentation parse_presentation(std::string_view text);
std::string write_presentation(const SuturedPresentation& pres);

AnyRepresentation parse_representation(std::string_view text, const Alphabet& alphabet);

template <class Field>
std::string write_representation(const Representation<Field>& rho) {
  std::string out;
  if (!rho.note().empty()) out += "# note: " + rho.note() + "\n";
  out += "dim: " + std::to_string(rho.dimension()) + "\n";
  out += "field: " + rho.field().tag() + "\n";
  for (std::size_t i = 0; i < rho.rank(); ++i)
    out += rho.alphabet().name(i) + ": " +
           format_matrix(rho.generator(i), [](const auto& x) { return to_string(x); }) + "\n";
  return out;
}

// "[[a,b],[c,d]]" with entries parsed by the field.
template <class Field>
Matrix<typename Field::Element> parse_matrix(std::string_view text, const Field& field);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace sutcert
