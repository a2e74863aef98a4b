#pragma once

// Freely reduced words in a free group of finite rank.
//
// Commutator convention used throughout the library:
//   [u,v] := u v u^-1 v^-1

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sutcert {

inline constexpr std::string_view kCommutatorConvention = "[u,v] = u v u^-1 v^-1";

using ExponentVector = std::vector<std::int64_t>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownGenerator : public std::runtime_error {
 public:
  explicit UnknownGenerator(std::string name)
      : std::runtime_error("unknown generator '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Letter {
  std::uint32_t generator = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  bool cancels(const Letter& other) const {
    return generator == other.generator && sign == -other.sign;
  }
  friend bool operator==(const Letter&, const Letter&) = default;
  // x_i < x_i^-1 < x_{i+1}
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.generator <=> b.generator; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

// Generator names of a free group. Names are identifiers: letters followed by
// optional digits. The default alphabets x,y,z (rank <= 3) and x1,x2,x3 accept
// each other's names as aliases.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  static Alphabet standard(std::size_t rank);  // x1..xg
  static Alphabet letters(std::size_t rank);   // x,y,z for rank <= 3, else x1..xg

  std::size_t rank() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  // Name not yet used, for appending a generator: continues x,y,z, then x<k>.
  std::string fresh_name() const;
  Alphabet extended(std::string name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

bool is_identifier(std::string_view s);

// A word stored freely reduced at all times. Carries the rank of its ambient
// free group so that mixing words of different groups is caught.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}
  Word(std::size_t rank, std::vector<Letter> letters);

  static Word generator(std::size_t rank, std::size_t index, int sign = 1);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word prefix(std::size_t n) const;

  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v);

  friend bool operator==(const Word&, const Word&) = default;
  // shortlex
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  void push(Letter l);

  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
Word commutator(const Word& u, const Word& v);
Word power(const Word& w, std::int64_t n);

// Signed letter count per generator; zero iff w lies in the commutator subgroup.
ExponentVector exponent_vector(const Word& w);

// Substitutes images[i] for generator i. All images must share one rank, which
// becomes the rank of the result; target_rank is used when images is empty.
Word apply_homomorphism(const Word& w, std::span<const Word> images,
                        std::optional<std::size_t> target_rank = std::nullopt);

Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

// Smallest alphabet over x,y,z or x1..xn covering every identifier in text.
Alphabet infer_alphabet(std::string_view text);

}  // namespace sutcert
