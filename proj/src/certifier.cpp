#include "sutcert/certifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <thread>

namespace sutcert {

void SuturedPresentation::validate() const {
  if (surface_words.size() != genus())
    throw UnbalancedPresentation("presentation '" + label + "' has " + std::to_string(surface_words.size()) +
                                 " surface words for genus " + std::to_string(genus()));
  for (std::size_t j = 0; j < surface_words.size(); ++j)
    if (surface_words[j].rank() != genus())
      throw AlphabetMismatch("surface word " + std::to_string(j + 1) + " is not over the ambient alphabet");
}

std::string to_string(Verdict v) {
  return v == Verdict::certified ? "certified" : "not-certified-by-this-representation";
}

OneDimGenericResult certify_one_dim_generic(const SuturedPresentation& pres) {
  pres.validate();
  auto det = det_laurent(abelianized_jacobian(std::span<const Word>(pres.surface_words)));
  bool ok = !det.is_zero();
  return {std::move(det), ok};
}

// ---------------------------------------------------------------------------

namespace {

// Uniform in [0, bound) by rejection, so the stream is the same on every
// standard library (std::uniform_int_distribution is not).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

struct TrialOutcome {
  bool success = false;
  ModP det, dual_det;
};

}  // namespace

Representation<PrimeField> random_representation(const Alphabet& alphabet, std::size_t dimension,
                                                 const PrimeField& field, std::uint64_t seed, std::size_t trial) {
  const auto t = static_cast<std::uint64_t>(trial);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<Matrix<ModP>> ms;
  for (std::size_t g = 0; g < alphabet.rank(); ++g) {
    for (;;) {
      Matrix<ModP> m(dimension, dimension, field.zero());
      for (std::size_t r = 0; r < dimension; ++r)
        for (std::size_t c = 0; c < dimension; ++c)
          m(r, c) = field.from_integer(static_cast<long>(uniform_below(rng, field.prime())));
      if (!det_field(m).is_zero()) {
        ms.push_back(std::move(m));
        break;
      }
    }
  }
  return Representation<PrimeField>(field, alphabet, std::move(ms),
                                    "random over " + field.tag() + ", seed " + std::to_string(seed) + ", trial " +
                                        std::to_string(trial));
}

RandomReport certify_random(const SuturedPresentation& pres, std::size_t dimension, std::uint32_t prime,
                            std::size_t trials, std::uint64_t seed) {
  pres.validate();
  PrimeField field(prime);  // throws on an invalid prime
  if (trials == 0) throw std::invalid_argument("at least one trial is required");
  if (dimension == 0) throw std::invalid_argument("dimension must be positive");

  RandomReport report;
  report.dimension = dimension;
  report.prime = prime;
  report.seed = seed;
  report.trials_requested = trials;

  auto run_trial = [&](std::size_t t) {
    auto rho = random_representation(pres.alphabet, dimension, field, seed, t);
    std::span<const Word> words(pres.surface_words);
    TrialOutcome out;
    out.det = det_field(evaluated_jacobian(words, rho));
    out.dual_det = det_field(evaluated_jacobian(words, rho.dual()));
    out.success = !out.det.is_zero() && !out.dual_det.is_zero();
    return out;
  };

  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunk = workers * 4;
  for (std::size_t start = 0; start < trials; start += chunk) {
    const std::size_t end = std::min(trials, start + chunk);
    std::vector<TrialOutcome> outcomes(end - start);
    std::vector<std::exception_ptr> errors(end - start);
    std::atomic<std::size_t> next{start};
    auto work = [&] {
      for (std::size_t t; (t = next.fetch_add(1)) < end;) {
        try {
          outcomes[t - start] = run_trial(t);
        } catch (...) {
          errors[t - start] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t k = 1; k < std::min(workers, end - start); ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    // Scan in trial order so the lowest successful index wins regardless of scheduling.
    for (std::size_t t = start; t < end; ++t) {
      if (errors[t - start]) std::rethrow_exception(errors[t - start]);
      const auto& o = outcomes[t - start];
      if (o.success) {
        report.trials_run = t + 1;
        report.failures = t;
        report.witness_trial = t;
        report.witness = random_representation(pres.alphabet, dimension, field, seed, t);
        report.det = o.det;
        report.dual_det = o.dual_det;
        return report;
      }
    }
  }
  report.trials_run = trials;
  report.failures = trials;
  return report;
}

// ---------------------------------------------------------------------------

SuturedPresentation attach_handle(const SuturedPresentation& pres) {
  pres.validate();
  const std::size_t g = pres.genus();
  SuturedPresentation out;
  out.alphabet = pres.alphabet.extended(pres.alphabet.fresh_name());
  for (const auto& w : pres.surface_words) out.surface_words.emplace_back(g + 1, std::vector<Letter>(w.letters().begin(), w.letters().end()));
  out.surface_words.push_back(Word::generator(g + 1, g));
  out.suture_metadata = pres.suture_metadata;
  out.label = pres.label + "+handle";
  out.note = pres.note.empty() ? "one-handle attached" : pres.note + "; one-handle attached";
  return out;
}

Alphabet surface_alphabet(std::size_t genus) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= genus; ++j) names.push_back("a" + std::to_string(j));
  return Alphabet(std::move(names));
}

std::optional<ObstructionWitness> one_dim_obstruction(const SuturedPresentation& pres, std::size_t search_length,
                                                      const DerivedBudget& budget) {
  pres.validate();
  if (search_length == 0) throw std::invalid_argument("search length must be at least 1");
  const std::size_t g = pres.genus();
  std::span<const Word> images(pres.surface_words);

  auto test = [&](const Word& w) -> std::optional<ObstructionWitness> {
    auto e = exponent_vector(w);
    if (std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; })) return std::nullopt;
    Word image = apply_homomorphism(w, images, g);
    std::size_t depth = derived_depth(image, 2, budget);
    if (depth < 2) return std::nullopt;
    return ObstructionWitness{w, std::move(image), depth};
  };

  for (std::size_t j = 0; j < g; ++j)
    if (auto hit = test(Word::generator(g, j))) return hit;

  std::vector<Letter> alphabet_letters;
  for (std::uint32_t j = 0; j < g; ++j) {
    alphabet_letters.push_back({j, 1});
    alphabet_letters.push_back({j, -1});
  }
  std::vector<Word> level{Word(g)};
  for (std::size_t len = 1; len <= search_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (const auto& l : alphabet_letters) {
        if (!w.is_identity() && w.letters().back().cancels(l)) continue;
        Word v = w * Word(g, std::vector<Letter>{l});
        if (len == 1 && l.sign > 0) {
          next.push_back(std::move(v));  // already tested above
          continue;
        }
        if (auto hit = test(v)) return hit;
        next.push_back(std::move(v));
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

std::string SolvableObstruction::statement() const {
  if (max_depth == 0) return "no solvable obstruction: every surface word has derived depth 0";
  return "no solvable representation of degree <= " + std::to_string(max_depth - 1) + " certifies";
}

SolvableObstruction solvable_obstruction(const SuturedPresentation& pres, std::size_t max_depth,
                                         const DerivedBudget& budget) {
  pres.validate();
  if (max_depth == 0) throw std::invalid_argument("maximum depth must be at least 1");
  SolvableObstruction out;
  for (const auto& w : pres.surface_words) {
    try {
      out.depths.push_back(derived_depth(w, max_depth, budget));
    } catch (const ResourceExceeded& e) {
      throw ObstructionIncomplete(e.what(), out.depths);
    }
    out.max_depth = std::max(out.max_depth, out.depths.back());
  }
  return out;
}

}  // namespace sutcert
