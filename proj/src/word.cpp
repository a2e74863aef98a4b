#include "sutcert/word.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace sutcert {

namespace {

constexpr std::array<std::string_view, 3> kLetterNames = {"x", "y", "z"};

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

void check_rank(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw AlphabetMismatch("words live in free groups of rank " + std::to_string(u.rank()) +
                           " and " + std::to_string(v.rank()));
}

}  // namespace

// ---------------------------------------------------------------------------
// Alphabet

bool is_identifier(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_alpha(s[i])) ++i;
  if (i == 0) return false;
  while (i < s.size() && is_digit(s[i])) ++i;
  return i == s.size();
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet must have rank >= 1");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw std::invalid_argument("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name '" + n + "'");
  }
}

Alphabet Alphabet::standard(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  return Alphabet(std::move(names));
}

Alphabet Alphabet::letters(std::size_t rank) {
  if (rank > kLetterNames.size()) return standard(rank);
  return Alphabet(std::vector<std::string>(kLetterNames.begin(), kLetterNames.begin() + rank));
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  if (rank() > kLetterNames.size()) return std::nullopt;
  // x,y,z <-> x1,x2,x3 aliases on the default alphabets
  if (*this == letters(rank())) {
    for (std::size_t i = 0; i < rank(); ++i)
      if (name == "x" + std::to_string(i + 1)) return i;
  } else if (*this == standard(rank())) {
    for (std::size_t i = 0; i < rank(); ++i)
      if (name == kLetterNames[i]) return i;
  }
  return std::nullopt;
}

std::string Alphabet::fresh_name() const {
  auto taken = [&](const std::string& n) {
    return std::find(names_.begin(), names_.end(), n) != names_.end();
  };
  if (rank() < kLetterNames.size() && *this == letters(rank())) return std::string(kLetterNames[rank()]);
  for (std::size_t k = rank() + 1;; ++k) {
    std::string n = "x" + std::to_string(k);
    if (!taken(n)) return n;
  }
}

Alphabet Alphabet::extended(std::string name) const {
  auto names = names_;
  names.push_back(std::move(name));
  return Alphabet(std::move(names));
}

// ---------------------------------------------------------------------------
// Word

Word::Word(std::size_t rank, std::vector<Letter> letters) : rank_(rank) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) push(l);
}

void Word::push(Letter l) {
  if (l.generator >= rank_)
    throw std::out_of_range("generator index " + std::to_string(l.generator) +
                            " outside rank " + std::to_string(rank_));
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  if (!letters_.empty() && letters_.back().cancels(l))
    letters_.pop_back();
  else
    letters_.push_back(l);
}

Word Word::generator(std::size_t rank, std::size_t index, int sign) {
  Word w(rank);
  w.push(Letter{static_cast<std::uint32_t>(index), sign});
  return w;
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word Word::prefix(std::size_t n) const {
  Word w(rank_);
  w.letters_.assign(letters_.begin(), letters_.begin() + std::min(n, letters_.size()));
  return w;
}

Word& Word::operator*=(const Word& v) {
  check_rank(*this, v);
  for (const auto& l : v.letters_) push(l);
  return *this;
}

Word operator*(const Word& u, const Word& v) {
  Word w = u;
  w *= v;
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

Word multiply(const Word& u, const Word& v) { return u * v; }
Word invert(const Word& w) { return w.inverse(); }

Word commutator(const Word& u, const Word& v) {
  check_rank(u, v);
  return u * v * u.inverse() * v.inverse();
}

Word power(const Word& w, std::int64_t n) {
  Word base = n < 0 ? w.inverse() : w;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Word result(w.rank());
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

ExponentVector exponent_vector(const Word& w) {
  ExponentVector v(w.rank(), 0);
  for (const auto& l : w.letters()) v[l.generator] += l.sign;
  return v;
}

Word apply_homomorphism(const Word& w, std::span<const Word> images,
                        std::optional<std::size_t> target_rank) {
  if (images.size() != w.rank())
    throw std::invalid_argument("homomorphism has " + std::to_string(images.size()) +
                                " images for a rank-" + std::to_string(w.rank()) + " source");
  std::size_t rank = images.empty() ? target_rank.value_or(0) : images.front().rank();
  for (const auto& im : images)
    if (im.rank() != rank) throw AlphabetMismatch("homomorphism images live in different groups");
  std::vector<Word> inverses;
  inverses.reserve(images.size());
  for (const auto& im : images) inverses.push_back(im.inverse());
  Word result(rank);
  for (const auto& l : w.letters()) result *= (l.sign > 0 ? images[l.generator] : inverses[l.generator]);
  return result;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

// word := term+ ; term := atom power? ;
// atom := identifier | '(' word ')' | '[' word ',' word ']' | '1'
// power := '^' '-'? digits
class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w = word();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return w;
  }

 private:
  static constexpr std::int64_t kMaxPower = 1'000'000;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("syntax error: " + msg, pos_); }

  void skip() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  bool at_atom_start() {
    skip();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return is_alpha(c) || c == '(' || c == '[' || c == '1';
  }

  Word word() {
    if (!at_atom_start()) fail(pos_ >= text_.size() ? "unexpected end of input" : "expected a generator, '(' or '['");
    Word w(alphabet_.rank());
    while (at_atom_start()) w *= term();
    return w;
  }

  // In a juxtaposed run such as "xaby^2" the power binds to the last name only.
  Word term() {
    Word head(alphabet_.rank());
    Word a(alphabet_.rank());
    skip();
    if (is_alpha(text_[pos_])) {
      auto names = identifier();
      for (std::size_t k = 0; k + 1 < names.size(); ++k) head *= Word::generator(alphabet_.rank(), names[k]);
      a = Word::generator(alphabet_.rank(), names.back());
    } else {
      a = atom();
    }
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip();
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
        skip();
      }
      std::size_t start = pos_;
      std::int64_t n = 0;
      while (pos_ < text_.size() && is_digit(text_[pos_])) {
        n = n * 10 + (text_[pos_] - '0');
        if (n > kMaxPower) fail("exponent too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected digits after '^'");
      a = power(a, negative ? -n : n);
    }
    return head * a;
  }

  Word atom() {
    skip();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      return commutator(u, v);
    }
    if (c == '1') {
      ++pos_;
      return Word(alphabet_.rank());
    }
    fail("expected a generator, '(' or '['");
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
    if (text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // Generator indices named by the identifier at pos_.
  std::vector<std::size_t> identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_alpha(text_[pos_])) ++pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    std::string_view ident = text_.substr(start, pos_ - start);
    if (auto i = alphabet_.find(ident)) return {*i};
    // A run such as "xaby" is read as juxtaposed generator names.
    auto parts = split(ident);
    if (!parts) throw UnknownGenerator(std::string(ident));
    return *parts;
  }

  // Segment ident into alphabet names, preferring longer names first.
  std::optional<std::vector<std::size_t>> split(std::string_view ident) const {
    std::vector<std::optional<std::vector<std::size_t>>> best(ident.size() + 1);
    best[ident.size()] = std::vector<std::size_t>{};
    for (std::size_t i = ident.size(); i-- > 0;) {
      for (std::size_t len = ident.size() - i; len >= 1; --len) {
        if (!best[i + len]) continue;
        auto g = alphabet_.find(ident.substr(i, len));
        if (!g) continue;
        std::vector<std::size_t> seq{*g};
        seq.insert(seq.end(), best[i + len]->begin(), best[i + len]->end());
        best[i] = std::move(seq);
        break;
      }
    }
    return best[0];
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return WordParser(text, alphabet).parse();
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (alphabet.rank() != w.rank())
    throw AlphabetMismatch("alphabet of rank " + std::to_string(alphabet.rank()) +
                           " cannot print a rank-" + std::to_string(w.rank()) + " word");
  if (w.is_identity()) return "1";
  std::string out;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    std::int64_t e = static_cast<std::int64_t>(j - i) * letters[i].sign;
    if (!out.empty()) out += ' ';
    out += alphabet.name(letters[i].generator);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Alphabet infer_alphabet(std::string_view text) {
  std::size_t letter_rank = 0, standard_rank = 0;
  bool letter_mode = false, standard_mode = false;
  for (std::size_t i = 0; i < text.size();) {
    if (!is_alpha(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && is_alpha(text[i])) ++i;
    std::size_t alpha_end = i;
    while (i < text.size() && is_digit(text[i])) ++i;
    std::string_view ident = text.substr(start, i - start);
    if (alpha_end == i) {
      for (char c : ident) {
        auto it = std::find(kLetterNames.begin(), kLetterNames.end(), std::string_view(&c, 1));
        if (it == kLetterNames.end()) throw UnknownGenerator(std::string(ident));
        letter_rank = std::max<std::size_t>(letter_rank, it - kLetterNames.begin() + 1);
      }
      letter_mode = true;
    } else if (ident.front() == 'x' && alpha_end == start + 1) {
      std::size_t n = std::stoul(std::string(ident.substr(1)));
      if (n == 0) throw UnknownGenerator(std::string(ident));
      standard_rank = std::max(standard_rank, n);
      standard_mode = true;
    } else {
      throw UnknownGenerator(std::string(ident));
    }
  }
  if (letter_mode && standard_mode) {
    if (standard_rank <= kLetterNames.size()) return Alphabet::letters(std::max(letter_rank, standard_rank));
    throw std::invalid_argument("cannot mix x,y,z with x1,x2,... beyond rank 3; pass --generators");
  }
  if (standard_mode) return Alphabet::standard(standard_rank);
  return Alphabet::letters(std::max<std::size_t>(letter_rank, 1));
}

}  // namespace sutcert
