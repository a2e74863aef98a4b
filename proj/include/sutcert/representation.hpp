#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sutcert/matrix.hpp"
#include "sutcert/scalar.hpp"
#include "sutcert/word.hpp"

namespace sutcert {

class NotInvertible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A linear representation of a free group: one invertible n x n matrix per
// generator over an exact field.
template <class Field>
class Representation {
 public:
  using Scalar = typename Field::Element;
  using Mat = Matrix<Scalar>;

  Representation(Field field, Alphabet alphabet, std::vector<Mat> matrices, std::string note = {})
      : field_(std::move(field)), alphabet_(std::move(alphabet)), matrices_(std::move(matrices)),
        note_(std::move(note)) {
    if (matrices_.size() != alphabet_.rank())
      throw std::invalid_argument("representation needs one matrix per generator (" +
                                  std::to_string(alphabet_.rank()) + "), got " +
                                  std::to_string(matrices_.size()));
    if (matrices_.empty()) throw std::invalid_argument("representation of an empty alphabet");
    dim_ = matrices_.front().rows();
    if (dim_ == 0) throw std::invalid_argument("representation dimension must be positive");
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
      const auto& m = matrices_[i];
      if (m.rows() != dim_ || m.cols() != dim_)
        throw std::invalid_argument("matrix for '" + alphabet_.name(i) + "' is not " +
                                    std::to_string(dim_) + "x" + std::to_string(dim_));
      if (det_field(m).is_zero())
        throw NotInvertible("matrix for '" + alphabet_.name(i) + "' is not invertible");
      inverses_.push_back(inverse(m, field_.zero(), field_.one()));
    }
  }

  const Field& field() const { return field_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t rank() const { return alphabet_.rank(); }
  std::size_t dimension() const { return dim_; }
  const std::string& note() const { return note_; }
  const std::vector<Mat>& matrices() const { return matrices_; }
  const Mat& generator(std::size_t i) const { return matrices_.at(i); }
  const Mat& generator_inverse(std::size_t i) const { return inverses_.at(i); }
  const Mat& letter(const Letter& l) const { return l.sign > 0 ? generator(l.generator) : generator_inverse(l.generator); }

  Mat identity() const { return Mat::identity(dim_, field_.zero(), field_.one()); }
  Mat zero() const { return Mat(dim_, dim_, field_.zero()); }

  Mat image(const Word& w) const {
    if (w.rank() != rank()) throw AlphabetMismatch("word and representation live on different groups");
    Mat r = identity();
    for (const auto& l : w.letters()) r = r * letter(l);
    return r;
  }

  // g -> inverse-transpose of its image.
  Representation dual() const {
    std::vector<Mat> ms;
    for (const auto& inv : inverses_) ms.push_back(inv.transposed());
    return Representation(field_, alphabet_, std::move(ms), note_.empty() ? "dual" : "dual of " + note_);
  }

  // Appends a generator sent to the identity matrix.
  Representation extended_by_identity(const std::string& name) const {
    auto ms = matrices_;
    ms.push_back(identity());
    return Representation(field_, alphabet_.extended(name), std::move(ms), note_);
  }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.field_ == b.field_ && a.alphabet_ == b.alphabet_ && a.matrices_ == b.matrices_;
  }

 private:
  Field field_;
  Alphabet alphabet_;
  std::vector<Mat> matrices_;
  std::vector<Mat> inverses_;
  std::size_t dim_ = 0;
  std::string note_;
};

template <class Field>
Representation<Field> dual_representation(const Representation<Field>& rho) {
  return rho.dual();
}

}  // namespace sutcert
