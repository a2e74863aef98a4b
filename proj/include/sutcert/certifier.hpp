#pragma once

// Tautness certificates for sutured handlebodies from the Fox-Jacobian
// determinant criterion.
//
// A presentation is the algebraic shadow of (M, R+, gamma): the images
// i_*(a_1..a_g) of free generators of pi_1(R+) in pi_1(M) = F(x_1..x_g).
// For a representation rho the gn x gn matrix (rho(d_{x_i} a_j)) must be
// invertible; when rho is not known to be homologically self-dual the same
// must hold for the dual representation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sutcert/derived.hpp"
#include "sutcert/fox.hpp"
#include "sutcert/laurent.hpp"
#include "sutcert/matrix.hpp"
#include "sutcert/representation.hpp"
#include "sutcert/scalar.hpp"
#include "sutcert/word.hpp"

namespace sutcert {

struct SuturedPresentation {
  std::string label;
  Alphabet alphabet{std::vector<std::string>{"x"}};
  std::vector<Word> surface_words;
  std::vector<std::string> suture_metadata;  // stored verbatim, never interpreted
  std::string note;                          // provenance; not part of equality

  std::size_t genus() const { return alphabet.rank(); }
  // Throws UnbalancedPresentation / AlphabetMismatch on malformed data.
  void validate() const;

  friend bool operator==(const SuturedPresentation& a, const SuturedPresentation& b) {
    return a.label == b.label && a.alphabet == b.alphabet && a.surface_words == b.surface_words &&
           a.suture_metadata == b.suture_metadata;
  }
};

struct ConventionLedger {
  std::string commutator{kCommutatorConvention};
  std::string fox{kFoxConvention};
  std::string jacobian{kJacobianConvention};
};

enum class Verdict { certified, not_certified };
std::string to_string(Verdict v);

template <class Field>
struct Certificate {
  using Scalar = typename Field::Element;

  std::string presentation_label;
  Representation<Field> representation;
  Matrix<Scalar> jacobian;
  Scalar det;
  std::optional<Scalar> dual_det;
  std::optional<std::string> self_dual_reason;
  Verdict verdict = Verdict::not_certified;
  ConventionLedger conventions;
  std::vector<std::string> trail;

  bool certified() const { return verdict == Verdict::certified; }
};

// "unitary" when every generator matrix M has M * conj(M)^T = I (rational and
// Gaussian-rational domains), "SL2" when n = 2 and every det is 1.
template <class Field>
std::optional<std::string> is_self_dual_sufficient(const Representation<Field>& rho) {
  const auto& f = rho.field();
  bool unitary = !std::is_same_v<Field, PrimeField>;
  for (const auto& m : rho.matrices()) {
    if (!unitary) break;
    auto adjoint = m.transposed().map([&](const auto& x) { return f.conj(x); });
    if (!(m * adjoint == rho.identity())) unitary = false;
  }
  if (unitary) return "unitary";
  if (rho.dimension() == 2) {
    bool sl2 = true;
    for (const auto& m : rho.matrices())
      if (!(det_field(m) == f.one())) sl2 = false;
    if (sl2) return "SL2";
  }
  return std::nullopt;
}

template <class Field>
Certificate<Field> certify(const SuturedPresentation& pres, const Representation<Field>& rho,
                           bool assume_self_dual = false) {
  pres.validate();
  if (rho.alphabet().rank() != pres.genus())
    throw AlphabetMismatch("representation has " + std::to_string(rho.rank()) + " generators, presentation has " +
                           std::to_string(pres.genus()));
  Certificate<Field> cert{pres.label, rho, evaluated_jacobian(std::span<const Word>(pres.surface_words), rho),
                          rho.field().zero(), std::nullopt, std::nullopt, Verdict::not_certified, {}, {}};
  cert.det = det_field(cert.jacobian);
  cert.trail.push_back("commutator convention " + cert.conventions.commutator);
  cert.trail.push_back("Fox convention " + cert.conventions.fox + "; " + cert.conventions.jacobian);
  cert.trail.push_back("det of the " + std::to_string(cert.jacobian.rows()) + "x" +
                       std::to_string(cert.jacobian.cols()) + " evaluated Jacobian = " + to_string(cert.det));

  if (assume_self_dual) {
    cert.self_dual_reason = "assumed";
  } else {
    cert.self_dual_reason = is_self_dual_sufficient(rho);
  }
  if (cert.self_dual_reason) {
    cert.trail.push_back("homologically self-dual (" + *cert.self_dual_reason + "): one determinant suffices");
  } else {
    auto dual = rho.dual();
    cert.dual_det = det_field(evaluated_jacobian(std::span<const Word>(pres.surface_words), dual));
    cert.trail.push_back("not known to be self-dual: det for the dual representation = " + to_string(*cert.dual_det));
  }
  bool ok = !cert.det.is_zero() && (cert.self_dual_reason || !cert.dual_det->is_zero());
  cert.verdict = ok ? Verdict::certified : Verdict::not_certified;
  cert.trail.push_back(ok ? "verdict: certified taut (twisted homology product)"
                          : "verdict: not certified by this representation");
  return cert;
}

struct OneDimGenericResult {
  LaurentPolynomial det;  // defines the non-certifying locus in (C*)^g
  bool certified = false;
};

OneDimGenericResult certify_one_dim_generic(const SuturedPresentation& pres);

struct RandomReport {
  std::size_t dimension = 1;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t trials_requested = 0;
  std::size_t trials_run = 0;
  std::size_t failures = 0;
  std::optional<std::size_t> witness_trial;
  std::optional<Representation<PrimeField>> witness;
  std::optional<ModP> det, dual_det;
  bool is_witness() const { return witness.has_value(); }
};

// Samples random F_p representations; the first with det and dual det both
// nonzero is a witness that a complex certifying representation exists. A
// run without witness is inconclusive, never a negative certificate.
RandomReport certify_random(const SuturedPresentation& pres, std::size_t dimension, std::uint32_t prime,
                            std::size_t trials, std::uint64_t seed);

// The representation tried at a given trial index; exposed for reproducibility checks.
Representation<PrimeField> random_representation(const Alphabet& alphabet, std::size_t dimension,
                                                 const PrimeField& field, std::uint64_t seed, std::size_t trial);

// Appends a generator x and the surface word x (a sutured one-handle).
SuturedPresentation attach_handle(const SuturedPresentation& pres);

struct ObstructionWitness {
  Word surface_word;  // in the free generators a_1..a_g of pi_1(R+)
  Word image;         // in pi_1(M)
  std::size_t depth = 0;
};

Alphabet surface_alphabet(std::size_t genus);  // a1..ag

// Finds a word in the surface generators with nonzero surface exponent sum and
// image in F^(2); its existence rules out every one-dimensional certificate.
std::optional<ObstructionWitness> one_dim_obstruction(const SuturedPresentation& pres, std::size_t search_length,
                                                      const DerivedBudget& budget = {});

struct SolvableObstruction {
  std::vector<std::size_t> depths;  // derived depth of each surface word
  std::size_t max_depth = 0;        // D*
  bool obstructs() const { return max_depth > 0; }
  std::string statement() const;
};

class ObstructionIncomplete : public ResourceExceeded {
 public:
  ObstructionIncomplete(const std::string& what, std::vector<std::size_t> partial)
      : ResourceExceeded(what), partial_(std::move(partial)) {}
  const std::vector<std::size_t>& partial_depths() const { return partial_; }

 private:
  std::vector<std::size_t> partial_;
};

SolvableObstruction solvable_obstruction(const SuturedPresentation& pres, std::size_t max_depth,
                                         const DerivedBudget& budget = {});

}  // namespace sutcert
