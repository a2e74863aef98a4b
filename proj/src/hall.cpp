#include "sutcert/hall.hpp"

namespace sutcert {

namespace {

LiePolynomial concat(const LiePolynomial& a, const LiePolynomial& b) {
  LiePolynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      auto& slot = out[m];
      slot += ca * cb;
    }
  return out;
}

LiePolynomial bracket(const LiePolynomial& a, const LiePolynomial& b) {
  LiePolynomial out = concat(a, b);
  for (const auto& [m, c] : concat(b, a)) out[m] -= c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

HallBasis::HallBasis(std::size_t rank, std::size_t max_weight) : rank_(rank), max_weight_(max_weight) {
  if (rank == 0 || max_weight == 0) throw std::invalid_argument("Hall basis needs rank >= 1 and weight >= 1");
  offsets_.assign(max_weight + 2, 0);
  offsets_[1] = 0;
  for (std::size_t g = 0; g < rank; ++g) {
    BasicCommutator b;
    b.index = g;
    b.weight = 1;
    b.generator = g;
    elements_.push_back(b);
    lie_.push_back(LiePolynomial{{Monomial{static_cast<std::uint32_t>(g)}, Integer(1)}});
  }
  for (std::size_t k = 2; k <= max_weight; ++k) {
    offsets_[k] = elements_.size();
    const std::size_t existing = elements_.size();
    // Iterating l then r in increasing index gives the (left, right) lexicographic order.
    for (std::size_t l = 0; l < existing; ++l) {
      for (std::size_t r = l + 1; r < existing; ++r) {
        if (elements_[l].weight + elements_[r].weight != k) continue;
        if (!elements_[r].is_leaf() && l < elements_[r].left) continue;
        BasicCommutator b;
        b.index = elements_.size();
        b.weight = k;
        b.left = l;
        b.right = r;
        elements_.push_back(b);
        lie_.push_back(bracket(lie_[l], lie_[r]));
      }
    }
  }
  offsets_[max_weight + 1] = elements_.size();
}

std::pair<std::size_t, std::size_t> HallBasis::weight_range(std::size_t k) const {
  if (k == 0 || k > max_weight_) throw std::out_of_range("weight outside the basis");
  return {offsets_[k], offsets_[k + 1]};
}

std::size_t HallBasis::count(std::size_t k) const {
  auto [a, b] = weight_range(k);
  return b - a;
}

Word HallBasis::word(std::size_t i) const {
  const auto& b = elements_.at(i);
  if (b.is_leaf()) return Word::generator(rank_, *b.generator);
  return commutator(word(b.left), word(b.right));
}

std::string HallBasis::to_string(std::size_t i) const {
  const auto& b = elements_.at(i);
  if (b.is_leaf()) return "x" + std::to_string(*b.generator + 1);
  return "[" + to_string(b.left) + "," + to_string(b.right) + "]";
}

HallBasis hall_basis(std::size_t rank, std::size_t max_weight) { return HallBasis(rank, max_weight); }

std::uint64_t witt_number(std::size_t g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("weight must be positive");
  auto mobius = [](std::size_t n) {
    int mu = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
    return n > 1 ? -mu : mu;
  };
  Integer sum = 0;
  for (std::size_t d = 1; d <= k; ++d) {
    if (k % d) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), g, k / d);
    sum += mobius(d) * p;
  }
  sum /= static_cast<unsigned long>(k);
  return sum.get_ui();
}

// ---------------------------------------------------------------------------

LieCoordinateSolver::LieCoordinateSolver(const HallBasis& basis, std::size_t k)
    : rank_(basis.rank()), k_(k) {
  auto [first, last] = basis.weight_range(k);
  first_ = first;
  const std::size_t n = last - first;
  for (std::size_t b = first; b < last; ++b)
    for (const auto& [m, c] : basis.lie(b))
      if (row_of_.emplace(m, monomials_.size()).second) monomials_.push_back(m);

  columns_ = Matrix<Rational>(monomials_.size(), n, Rational(0));
  for (std::size_t b = first; b < last; ++b)
    for (const auto& [m, c] : basis.lie(b)) columns_(row_of_.at(m), b - first) = Rational(c);

  // Row-pivoted elimination picks n original rows spanning the column space.
  Matrix<Rational> work = columns_;
  std::vector<bool> used(monomials_.size(), false);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = 0;
    while (p < monomials_.size() && (used[p] || work(p, c).is_zero())) ++p;
    if (p == monomials_.size()) throw std::logic_error("Lie images of basic commutators are dependent");
    used[p] = true;
    pivot_rows_.push_back(p);
    for (std::size_t r = 0; r < monomials_.size(); ++r) {
      if (r == p || work(r, c).is_zero()) continue;
      Rational f = work(r, c) / work(p, c);
      for (std::size_t j = c; j < n; ++j) work(r, j) -= f * work(p, j);
    }
  }
  Matrix<Rational> square(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) square(i, j) = columns_(pivot_rows_[i], j);
  if (n > 0) pivot_inverse_ = inverse(square, Rational(0), Rational(1));
}

LcsCoordinates LieCoordinateSolver::solve(const Word& w) const {
  if (w.rank() != rank_) throw AlphabetMismatch("word rank differs from the Hall basis rank");
  return solve_series(magnus_expand(w, k_));
}

LcsCoordinates LieCoordinateSolver::solve_series(const TruncatedSeries& s) const {
  for (const auto& [m, c] : s.terms())
    if (!m.empty() && m.size() < k_) throw WeightPrecondition(m.size(), k_);
  const std::size_t n = columns_.cols();
  std::vector<Rational> rhs(monomials_.size(), Rational(0));
  for (const auto& [m, c] : s.degree_part(k_)) {
    auto it = row_of_.find(m);
    if (it == row_of_.end()) throw std::logic_error("degree-k Magnus part is not a Lie element");
    rhs[it->second] = Rational(c);
  }
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i] += pivot_inverse_(i, j) * rhs[pivot_rows_[j]];
  // The solution must reproduce every monomial, not just the pivot rows.
  for (std::size_t r = 0; r < monomials_.size(); ++r) {
    Rational v(0);
    for (std::size_t j = 0; j < n; ++j) v += columns_(r, j) * x[j];
    if (v != rhs[r]) throw std::logic_error("degree-k Magnus part is not in the span of basic commutators");
  }
  LcsCoordinates out{k_, {}};
  for (const auto& v : x) {
    if (!v.is_integer()) throw std::logic_error("non-integral Lie coordinate " + v.to_string());
    out.values.push_back(v.numerator());
  }
  return out;
}

LcsCoordinates lie_coordinates(const Word& w, std::size_t k) {
  return LieCoordinateSolver(hall_basis(w.rank(), k), k).solve(w);
}

// ---------------------------------------------------------------------------

Word Collection::product() const {
  Word w(basis.rank());
  for (const auto& f : factors) w *= power(basis.word(f.commutator.index), f.exponent);
  return w;
}

std::string Collection::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " * ";
    out += basis.to_string(f.commutator.index) + "^" + std::to_string(f.exponent);
  }
  return out;
}

Collection collect(const Word& w, std::size_t max_weight) {
  Collection result{hall_basis(w.rank(), max_weight), {}};
  Word remainder = w;
  for (std::size_t k = 1; k <= max_weight; ++k) {
    LieCoordinateSolver solver(result.basis, k);
    auto coords = solver.solve(remainder);
    auto [first, last] = result.basis.weight_range(k);
    Word block(w.rank());
    for (std::size_t i = 0; i < coords.values.size(); ++i) {
      if (coords.values[i] == 0) continue;
      if (!coords.values[i].fits_slong_p()) throw std::overflow_error("collected exponent out of range");
      std::int64_t e = coords.values[i].get_si();
      result.factors.push_back({result.basis[first + i], e});
      block *= power(result.basis.word(first + i), e);
    }
    (void)last;
    // Left division keeps the factors in increasing order: w = P_1 ... P_k r.
    remainder = block.inverse() * remainder;
  }
  return result;
}

}  // namespace sutcert
