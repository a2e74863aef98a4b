#include "sutcert/gallery.hpp"

#include <charconv>

namespace sutcert {

namespace {

constexpr std::size_t kMaxGenus = 1000;
constexpr std::size_t kMaxTowerLevel = 8;

std::size_t parameter(std::string_view name, std::string_view prefix, std::size_t lo, std::size_t hi) {
  auto digits = name.substr(prefix.size());
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size())
    throw UnknownGalleryEntry("gallery entry '" + std::string(name) + "' needs a numeric parameter");
  if (value < lo || value > hi)
    throw std::out_of_range("parameter of '" + std::string(prefix) + "' must lie in [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "], got " + std::to_string(value));
  return value;
}

SuturedPresentation product(std::size_t g) {
  SuturedPresentation p;
  p.label = "product-" + std::to_string(g);
  p.alphabet = Alphabet::standard(g);
  for (std::size_t j = 0; j < g; ++j) p.surface_words.push_back(Word::generator(g, j));
  p.note = "product sutured handlebody: each surface generator maps to a free generator";
  return p;
}

SuturedPresentation gen2_multisuture() {
  SuturedPresentation p;
  p.label = "gen2-multisuture";
  p.alphabet = Alphabet::letters(2);
  p.surface_words = {parse_word("xy", p.alphabet), parse_word("yx", p.alphabet)};
  // The letters a, b do not belong to the ambient alphabet; kept as text only.
  p.suture_metadata = {"yx", "xaby", "(xaby^2x)^-1"};
  p.note = "genus two handlebody with three sutures";
  return p;
}

SuturedPresentation genus3_derived2() {
  SuturedPresentation p;
  p.label = "genus3-derived2";
  p.alphabet = Alphabet::letters(3);
  p.surface_words = {parse_word("[[x,y][x^-1,y],z[y^-1,x][y,x]z^-1]", p.alphabet),
                     parse_word("[x,y][y^-1,x^-1]", p.alphabet), parse_word("z", p.alphabet)};
  p.note = "genus three handlebody whose first surface curve lies in the second derived subgroup";
  return p;
}

Word shifted_copy(const Word& w, std::size_t rank, std::uint32_t offset) {
  std::vector<Letter> ls;
  for (const auto& l : w.letters()) ls.push_back({l.generator + offset, l.sign});
  return Word(rank, std::move(ls));
}

}  // namespace

Representation<RationalField> beta_representation(const Alphabet& alphabet) {
  if (alphabet.rank() < 3) throw std::invalid_argument("beta needs at least three generators");
  using M = Matrix<Rational>;
  auto r = [](long v) { return Rational(v); };
  std::vector<M> ms{M({{r(1), r(1)}, {r(0), r(1)}}), M({{r(0), r(1)}, {r(-1), r(0)}})};
  while (ms.size() < alphabet.rank()) ms.push_back(M::identity(2, r(0), r(1)));
  return Representation<RationalField>(RationalField{}, alphabet, std::move(ms),
                                       "beta: x -> [[1,1],[0,1]], y -> [[0,1],[-1,0]], others -> identity");
}

SolvableTower solvable_tower(std::size_t k) {
  if (k == 0) throw std::out_of_range("tower level must be at least 1");
  SolvableTower tower;
  auto& base = tower.presentation;
  base.alphabet = Alphabet::standard(2);
  base.surface_words = {parse_word("[x1,x2]", base.alphabet), parse_word("x2", base.alphabet)};
  base.suture_metadata = {"[x1,x2]"};
  tower.a_index = 0;
  tower.b_index = 1;

  for (std::size_t level = 2; level <= k; ++level) {
    const auto& prev = tower.presentation;
    const std::size_t g = prev.genus(), rank = 2 * g + 1;
    const auto offset = static_cast<std::uint32_t>(g);
    Word a1 = shifted_copy(prev.surface_words[tower.a_index], rank, 0);
    Word a2 = shifted_copy(prev.surface_words[tower.a_index], rank, offset);
    Word t = Word::generator(rank, 2 * g);

    SuturedPresentation next;
    next.alphabet = Alphabet::standard(rank);
    next.surface_words = {commutator(a1, a2), a1 * t * a2, t};
    for (std::uint32_t copy = 0; copy < 2; ++copy) {
      const Word& a = copy == 0 ? a1 : a2;
      for (std::size_t j = 0; j < g; ++j) {
        if (j == tower.a_index) continue;
        Word w = shifted_copy(prev.surface_words[j], rank, copy * offset);
        if (j == tower.b_index) w = a * w * a.inverse();
        next.surface_words.push_back(std::move(w));
      }
    }
    next.suture_metadata = prev.suture_metadata;
    tower.presentation = std::move(next);
    tower.a_index = 0;
    tower.b_index = 2;
  }
  tower.presentation.label = "solvable-" + std::to_string(k);
  tower.presentation.note =
      "tower of depth " + std::to_string(k) +
      "; the curve meeting a in each copy is conjugated by that copy's a, all other curves are carried unchanged";
  return tower;
}

GalleryEntry gallery(std::string_view name) {
  using namespace std::string_view_literals;
  if (name == "gen2-multisuture") return {gen2_multisuture(), std::nullopt};
  if (name == "genus3-derived2") {
    auto p = genus3_derived2();
    auto beta = beta_representation(p.alphabet);
    return {std::move(p), std::move(beta)};
  }
  if (name.starts_with("genus3-plus-handles-")) {
    auto g = parameter(name, "genus3-plus-handles-"sv, 3, kMaxGenus);
    auto p = genus3_derived2();
    auto beta = beta_representation(p.alphabet);
    for (std::size_t h = 3; h < g; ++h) {
      auto next = attach_handle(p);
      beta = beta.extended_by_identity(next.alphabet.name(h));
      p = std::move(next);
    }
    p.label = std::string(name);
    return {std::move(p), std::move(beta)};
  }
  if (name.starts_with("product-")) return {product(parameter(name, "product-"sv, 1, kMaxGenus)), std::nullopt};
  if (name.starts_with("solvable-"))
    return {solvable_tower(parameter(name, "solvable-"sv, 1, kMaxTowerLevel)).presentation, std::nullopt};
  throw UnknownGalleryEntry("unknown gallery entry '" + std::string(name) + "'; known: product-<g>, gen2-multisuture, "
                            "genus3-derived2, genus3-plus-handles-<g>, solvable-<K>");
}

std::vector<std::string> gallery_patterns() {
  return {"product-<g>", "gen2-multisuture", "genus3-derived2", "genus3-plus-handles-<g>", "solvable-<K>"};
}

}  // namespace sutcert
