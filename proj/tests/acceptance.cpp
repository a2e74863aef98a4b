// Acceptance checks. Prints one [PASS]/[FAIL] line per criterion, followed by
// indented detail lines, and exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "sutcert/certifier.hpp"
#include "sutcert/cli.hpp"
#include "sutcert/derived.hpp"
#include "sutcert/fox.hpp"
#include "sutcert/gallery.hpp"
#include "sutcert/hall.hpp"
#include "sutcert/io.hpp"
#include "sutcert/magnus.hpp"

using namespace sutcert;
using testing_support::random_derived_element;
using testing_support::random_nontrivial_word;
using testing_support::random_word;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("failed: " + what);
    }
  }
  void note(const std::string& line) { details.push_back(line); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << " s";
  return o.str();
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream o;
  for (std::size_t i = 0; i < xs.size(); ++i) o << (i ? "; " : "") << xs[i];
  return o.str();
}

// ---------------------------------------------------------------------------
// 1. the printed 6x6 matrix for genus3-derived2 under beta

const long kPrinted[6][6] = {
    {-18, -12, 48, -1, 13, -16}, {29, 19, -76, 2, -20, 25}, {0, -2, -4, 3, 0, 0},
    {1, 3, 4, -4, 0, 0},         {0, 0, 0, 0, 1, 0},        {0, 0, 0, 0, 0, 1},
};

Outcome matrix_reproduction() {
  Outcome r;
  auto entry = gallery("genus3-derived2");
  const auto& pres = entry.presentation;
  const auto& beta = *entry.representation;
  const auto& al = pres.alphabet;
  Word x = parse_word("x", al), y = parse_word("y", al), z = parse_word("z", al);

  std::vector<std::vector<Rational>> rows(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) rows[i].push_back(Rational(kPrinted[i][j]));
  Matrix<Rational> printed(rows);
  Rational printed_det = oracle::cofactor_det(printed, Rational(0), Rational(1));
  r.note("determinant of the printed matrix (cofactor expansion): " + printed_det.to_string());

  auto cert = certify(pres, beta);
  r.require(cert.det == printed_det, "certificate determinant " + cert.det.to_string() + " equals printed determinant");
  r.require(oracle::cofactor_det(cert.jacobian, Rational(0), Rational(1)) == cert.det,
            "certificate determinant agrees with cofactor expansion");

  std::size_t best = 37;
  std::string best_name;
  Matrix<Rational> best_matrix = printed;
  bool any_match = false;
  for (int left = 1; left >= 0; --left) {
    auto comm = [&](const Word& u, const Word& v) {
      return left ? u * v * invert(u) * invert(v) : invert(u) * invert(v) * u * v;
    };
    for (int swap = 0; swap <= 1; ++swap) {
      Word p = comm(x, y) * comm(invert(x), y);
      Word q = z * comm(invert(y), x) * comm(y, x) * invert(z);
      std::vector<Word> words{swap ? comm(q, p) : comm(p, q), comm(x, y) * comm(invert(y), invert(x)), z};
      if (left && !swap && words != pres.surface_words) r.require(false, "reference convention reproduces gallery words");
      auto m = evaluated_jacobian(std::span<const Word>(words), beta);
      for (int transpose = 0; transpose <= 1; ++transpose) {
        Matrix<Rational> mm = transpose ? m.transposed() : m;
        std::string name = std::string(left ? "[u,v]=uvu^-1v^-1" : "[u,v]=u^-1v^-1uv") +
                           (swap ? ", a-brackets swapped" : ", a-brackets as listed") +
                           (transpose ? ", transposed" : ", rows=surface words");
        Rational d = det_field(mm);
        r.require(!d.is_zero(), "invertible under " + name);
        std::size_t diff = 0;
        for (std::size_t i = 0; i < 6; ++i)
          for (std::size_t j = 0; j < 6; ++j) diff += !(mm(i, j) == printed(i, j));
        r.note(name + ": det " + d.to_string() + ", " + std::to_string(diff) + "/36 entries differ");
        if (diff == 0) any_match = true;
        if (diff < best) {
          best = diff;
          best_name = name;
          best_matrix = mm;
        }
      }
    }
  }
  r.note(any_match ? "entrywise match found" : "no convention matches entrywise; best match: " + best_name);
  if (!any_match) {
    for (std::size_t i = 0; i < 6; ++i) {
      std::string line = "  row " + std::to_string(i + 1) + ":";
      for (std::size_t j = 0; j < 6; ++j) {
        line += " " + best_matrix(i, j).to_string();
        if (!(best_matrix(i, j) == printed(i, j))) line += "(printed " + printed(i, j).to_string() + ")";
      }
      r.note(line);
    }
  }
  r.summary = any_match ? "printed 6x6 matrix reproduced entrywise; invertible under all 8 conventions"
                        : "invertible under all 8 conventions, det = " + cert.det.to_string() +
                              " = det(printed); no entrywise match (diff reported)";
  return r;
}

// ---------------------------------------------------------------------------
// 2. two-generator multi-suture example

Outcome two_generator_example() {
  Outcome r;
  auto pres = gallery("gen2-multisuture").presentation;
  auto g = certify_one_dim_generic(pres);
  auto s = g.det.to_string(pres.alphabet);
  r.require(s == "1 - t_x*t_y", "generic determinant prints 1 - t_x*t_y, got " + s);
  r.require(g.certified, "generically certified");

  std::ostringstream out, err;
  auto path = (std::filesystem::temp_directory_path() / "sutcert_acceptance_gen2.txt").string();
  write_file(path, write_presentation(pres));
  int code = run_cli({"certify1d", path}, out, err);
  auto first = out.str().substr(0, out.str().find('\n'));
  r.require(code == 0 && first == "1 - t_x*t_y", "certify1d prints 1 - t_x*t_y, got '" + first + "'");

  std::vector<Matrix<Rational>> ones(2, Matrix<Rational>::identity(1, Rational(0), Rational(1)));
  Representation<RationalField> trivial(RationalField{}, pres.alphabet, ones);
  auto cert = certify(pres, trivial);
  r.require(cert.det.is_zero() && !cert.certified(), "trivial representation gives det 0");
  r.summary = "certify1d prints '" + first + "'; trivial representation det = " + cert.det.to_string();
  return r;
}

// ---------------------------------------------------------------------------
// 3. handle attachment leaves determinants unchanged

Outcome handle_attachment() {
  Outcome r;
  auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  int same = 0, certified = 0;
  for (int t = 0; t < 100; ++t) {
    std::size_t g = 2 + t % 3;
    SuturedPresentation pres;
    pres.label = "random";
    pres.alphabet = Alphabet::standard(g);
    for (std::size_t j = 0; j < g; ++j) pres.surface_words.push_back(random_word(rng, g, 10));
    PrimeField f(t % 2 ? 10007 : 101);
    auto rho = random_representation(pres.alphabet, 1 + t % 3, f, 31, t);
    auto before = certify(pres, rho);
    auto handled = attach_handle(pres);
    auto after = certify(handled, rho.extended_by_identity(handled.alphabet.name(g)));
    bool ok = before.det == after.det && after.jacobian.rows() == before.jacobian.rows() + rho.dimension();
    same += ok;
    certified += before.certified();
  }
  r.require(same == 100, std::to_string(100 - same) + " triples changed determinant");

  auto gen2 = gallery("gen2-multisuture").presentation;
  auto twice = attach_handle(attach_handle(gen2));
  auto s = certify_one_dim_generic(twice).det.to_string(twice.alphabet);
  r.require(s == "1 - t_x*t_y", "double attachment keeps 1 - t_x*t_y, got " + s);
  r.summary = std::to_string(same) + "/100 determinants identical (" + std::to_string(certified) +
              " nonzero); double attachment on gen2 gives " + s + "; " + fmt_seconds(seconds_since(t0));
  return r;
}

// ---------------------------------------------------------------------------
// 4. abelian obstruction for genus3-derived2

Outcome abelian_obstruction() {
  Outcome r;
  auto t0 = Clock::now();
  auto pres = gallery("genus3-derived2").presentation;
  auto w = one_dim_obstruction(pres, 1);
  std::string witness = w ? format_word(w->surface_word, surface_alphabet(3)) : "none";
  r.require(witness == "a1", "witness a1 at search length 1, got " + witness);
  auto generic = certify_one_dim_generic(pres);
  r.require(generic.det.is_zero(), "generic determinant is the zero polynomial");
  int failures = 0;
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    PrimeField f(p);
    for (int t = 0; t < 50; ++t) failures += !certify(pres, random_representation(pres.alphabet, 1, f, 1000 + p, t)).certified();
  }
  r.require(failures == 200, "all 200 one-dimensional F_p certifications fail");
  double secs = seconds_since(t0);
  r.require(secs < 30, "runtime under 30 s");
  r.summary = "witness " + witness + ", generic det = " + generic.det.to_string(pres.alphabet) + ", " +
              std::to_string(failures) + "/200 F_p trials fail; " + fmt_seconds(secs);
  return r;
}

// ---------------------------------------------------------------------------
// 5. solvable towers and vanishing of evaluated Fox derivatives

Outcome solvable_scaling() {
  Outcome r;
  auto t0 = Clock::now();
  std::vector<std::string> seen;
  for (std::size_t k = 1; k <= 3; ++k) {
    auto pres = gallery("solvable-" + std::to_string(k)).presentation;
    auto tower = solvable_tower(k);
    std::size_t depth = derived_depth(tower.presentation.surface_words[tower.a_index], k + 2);
    auto obs = solvable_obstruction(pres, k + 2);
    r.require(depth == k, "solvable-" + std::to_string(k) + " a-word depth " + std::to_string(depth));
    r.require(obs.max_depth == k, "solvable-" + std::to_string(k) + " obstruction degree " + std::to_string(obs.max_depth));
    std::string expected = "no solvable representation of degree <= " + std::to_string(k - 1) + " certifies";
    r.require(obs.statement() == expected, "statement '" + obs.statement() + "'");
    seen.push_back("K=" + std::to_string(k) + ": depth " + std::to_string(depth) + ", bound " + std::to_string(k - 1));
  }

  std::mt19937_64 rng(77);
  PrimeField f(10007);
  std::uniform_int_distribution<long> nz(1, 10006), any(0, 10006);
  auto alphabet = Alphabet::letters(3);
  int zero1 = 0, zero2 = 0, nontrivial1 = 0, nontrivial2 = 0;
  for (int t = 0; t < 100; ++t) {
    Word w = random_derived_element(rng, 3, 2, 3);
    nontrivial1 += !w.is_identity();
    std::vector<Matrix<ModP>> ms;
    for (int i = 0; i < 3; ++i) ms.push_back(Matrix<ModP>({{f.from_integer(nz(rng))}}));
    Representation<PrimeField> rho(f, alphabet, ms);
    bool all = true;
    for (const auto& m : evaluated_gradient(w, rho)) all = all && m == rho.zero();
    zero1 += all;
  }
  for (int t = 0; t < 50; ++t) {
    Word w = random_derived_element(rng, 3, 3, 2);
    nontrivial2 += !w.is_identity();
    std::vector<Matrix<ModP>> ms;
    for (int i = 0; i < 3; ++i)
      ms.push_back(Matrix<ModP>({{f.from_integer(nz(rng)), f.from_integer(any(rng))},
                                 {f.zero(), f.from_integer(nz(rng))}}));
    Representation<PrimeField> rho(f, alphabet, ms);
    bool all = true;
    for (const auto& m : evaluated_gradient(w, rho)) all = all && m == rho.zero();
    zero2 += all;
  }
  r.require(zero1 == 100, "second derived term under one-dimensional representations");
  r.require(zero2 == 50, "third derived term under upper-triangular representations");
  double secs = seconds_since(t0);
  r.require(secs < 120, "runtime under 2 min");
  r.summary = join(seen) + "; derivative images vanish for " + std::to_string(zero1) + "/100 (" +
              std::to_string(nontrivial1) + " nontrivial) and " + std::to_string(zero2) + "/50 (" +
              std::to_string(nontrivial2) + " nontrivial); " + fmt_seconds(secs);
  return r;
}

// ---------------------------------------------------------------------------
// 6. lower central series: Hall counts, collection, commutation with a fixed word

std::vector<Word> words_up_to(std::size_t rank, std::size_t max_len) {
  std::vector<Word> out, frontier{Word(rank)};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (std::uint32_t g = 0; g < rank; ++g)
        for (int s : {1, -1}) {
          Word e = w * Word(rank, std::vector<Letter>{{g, s}});
          if (e.length() == len) next.push_back(e);
        }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Distinct nontrivial elements of the k-th lower central term built from short words.
std::vector<Word> lcs_samples(std::size_t rank, std::size_t k) {
  auto letters = words_up_to(rank, 1);
  std::set<Word> out;
  if (k == 2) {
    for (const auto& p : words_up_to(rank, 2))
      for (const auto& q : letters) out.insert(commutator(p, q));
  } else {
    for (const auto& p : letters)
      for (const auto& q : letters)
        for (const auto& s : letters) out.insert(commutator(p, commutator(q, s)));
  }
  out.erase(Word(rank));
  return {out.begin(), out.end()};
}

bool independent(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] - a[j] * b[i] != 0) return true;
  return false;
}

bool is_zero(const std::vector<Integer>& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

std::string show(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

Outcome lower_central_suite(Outcome& corrected) {
  Outcome r;
  auto t0 = Clock::now();
  const std::uint64_t rank2[] = {2, 1, 2, 3, 6, 9}, rank3[] = {3, 3, 8, 18};
  auto b2 = hall_basis(2, 6);
  auto b3 = hall_basis(3, 4);
  for (std::size_t k = 1; k <= 6; ++k) {
    r.require(b2.count(k) == rank2[k - 1], "rank 2 weight " + std::to_string(k) + " count");
    r.require(oracle::lyndon_count(2, k) == rank2[k - 1], "rank 2 Lyndon oracle weight " + std::to_string(k));
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    r.require(b3.count(k) == rank3[k - 1], "rank 3 weight " + std::to_string(k) + " count");
    r.require(oracle::lyndon_count(3, k) == rank3[k - 1], "rank 3 Lyndon oracle weight " + std::to_string(k));
  }
  r.note("Hall counts rank 2 through weight 6 and rank 3 through weight 4 match Witt numbers and Lyndon enumeration");

  std::mt19937_64 rng(606);
  int round_trips = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t rank = 2 + t % 2;
    Word w = random_word(rng, rank, 16);
    auto col = collect(w, 4);
    Word rest = w * invert(col.product());
    std::size_t low = oracle::naive_lcs_weight(rest, 4);
    round_trips += low == 0;  // no nonconstant Magnus term through degree 4
  }
  r.require(round_trips == 200, "collection remainder has weight >= 5");
  r.note("collection round-trip at cutoff 4: " + std::to_string(round_trips) + "/200");

  // Commutation with gamma, k = 2 and 3, over all short gamma and sampled lcs elements.
  struct Sweep {
    std::size_t pairs = 0, shortest = 0;
    std::string example;
    void record(std::size_t size, const std::string& text) {
      ++pairs;
      if (example.empty() || size < shortest) {
        shortest = size;
        example = text;
      }
    }
  };
  std::size_t additivity_checked = 0, additivity_failed = 0;
  std::map<std::size_t, Sweep> literal, independent_only;
  const std::size_t rank = 2;
  auto gammas = words_up_to(rank, 2);
  Alphabet al = Alphabet::letters(rank);
  for (std::size_t k = 2; k <= 3; ++k) {
    auto basis = hall_basis(rank, k + 1);
    LieCoordinateSolver solver(basis, k + 1);
    auto us = lcs_samples(rank, k);
    struct Entry {
      Word gamma, u;
      ExponentVector e;
    };
    std::map<std::vector<Integer>, std::vector<Entry>> by_value;
    for (const auto& g : gammas) {
      auto e = exponent_vector(g);
      std::vector<std::vector<Integer>> cu;
      for (const auto& u : us) {
        auto c = solver.solve(commutator(g, u)).values;
        cu.push_back(c);
        if (!is_zero(c)) by_value[c].push_back({g, u, e});
      }
      for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t j = 0; j < us.size(); ++j) {
          auto c = solver.solve(commutator(g, us[i] * us[j])).values;
          ++additivity_checked;
          bool ok = true;
          for (std::size_t m = 0; m < c.size(); ++m) ok = ok && c[m] == cu[i][m] + cu[j][m];
          additivity_failed += !ok;
        }
    }
    literal[k];
    independent_only[k];
    for (const auto& [value, entries] : by_value)
      for (const auto& a : entries)
        for (const auto& b : entries) {
          if (a.e == b.e) continue;
          std::size_t size = a.gamma.length() + a.u.length() + b.gamma.length() + b.u.length();
          std::string text = "gamma=" + format_word(a.gamma, al) + ", u=" + format_word(a.u, al) +
                             ", delta=" + format_word(b.gamma, al) + ", v=" + format_word(b.u, al) +
                             " share nonzero coordinates " + show(value);
          literal[k].record(size, text);
          if (independent(a.e, b.e)) independent_only[k].record(size, text);
        }
    r.note("k=" + std::to_string(k) + ": " + std::to_string(gammas.size()) + " words gamma of length <= 2, " +
           std::to_string(us.size()) + " lcs elements");
  }
  r.require(additivity_failed == 0, std::to_string(additivity_failed) + " additivity violations");
  r.note("additivity of commutation with gamma: " + std::to_string(additivity_checked - additivity_failed) + "/" +
         std::to_string(additivity_checked) + " hold");

  // Disjointness as stated: distinct nonzero exponent vectors.
  std::size_t literal_pairs = 0;
  for (const auto& [k, sw] : literal) {
    literal_pairs += sw.pairs;
    r.require(sw.pairs == 0, "disjointness for distinct exponent vectors, k=" + std::to_string(k) + ": " +
                                 std::to_string(sw.pairs) + " coinciding pairs, shortest " + sw.example);
  }
  // Same sweep restricted to linearly independent exponent vectors, reported as its own line.
  std::string per_k;
  for (const auto& [k, sw] : independent_only) {
    corrected.require(sw.pairs == 0, "k=" + std::to_string(k) + ": " + std::to_string(sw.pairs) +
                                         " coinciding pairs, shortest " + sw.example);
    per_k += (per_k.empty() ? "" : ", ") + std::string("k=") + std::to_string(k) + ": " + std::to_string(sw.pairs);
  }
  // cross-check of the weight-4 coincidence with the series oracle alone:
  // [x,[y,[x,y]]] and [y,[x,[x,y]]] agree through degree 4 (Jacobi identity)
  Word x = Word::generator(rank, 0), y = Word::generator(rank, 1), xy = commutator(x, y);
  Word lhs = commutator(x, commutator(y, xy)), rhs = commutator(y, commutator(x, xy));
  bool jacobi = oracle::naive_lcs_weight(lhs * invert(rhs), 4) == 0 && oracle::naive_lcs_weight(lhs, 4) == 4;
  corrected.note(std::string("series oracle: [x,[y,[x,y]]] and [y,[x,[x,y]]] ") +
                 (jacobi ? "have the same nonzero degree-4 part" : "differ in degree 4"));
  corrected.summary = "disjointness with linearly independent exponent vectors, coinciding pairs " + per_k;

  double secs = seconds_since(t0);
  r.require(secs < 120, "runtime under 2 min");
  r.summary = "Hall counts, " + std::to_string(round_trips) + "/200 collections, additivity " +
              std::to_string(additivity_checked - additivity_failed) + "/" + std::to_string(additivity_checked) +
              ", disjointness for distinct exponent vectors: " + std::to_string(literal_pairs) + " coinciding pairs; " +
              fmt_seconds(secs);
  return r;
}

// ---------------------------------------------------------------------------
// 7. Fox calculus identities

Outcome fox_identities() {
  Outcome r;
  auto t0 = Clock::now();
  std::mt19937_64 rng(7007);
  const std::size_t rank = 3;
  const int n = 1000;
  auto one = GroupRingElement::one(rank);
  auto gr = [](const Word& w) { return GroupRingElement(w); };
  PrimeField f(10007);
  auto alphabet = Alphabet::letters(rank);
  int fundamental = 0, product = 0, inverse_rule = 0, conjugation = 0, row_conjugate = 0, row_cancel = 0;
  for (int t = 0; t < n; ++t) {
    Word u = random_word(rng, rank, 30), v = random_word(rng, rank, 30);
    auto du = fox_gradient(u), dv = fox_gradient(v);
    std::size_t i = t % rank;

    GroupRingElement lhs(rank);
    for (std::size_t k = 0; k < rank; ++k) lhs += du[k] * (gr(Word::generator(rank, k)) - one);
    fundamental += lhs == gr(u) - one;

    product += fox_derivative(u * v, i) == du[i] + gr(u) * dv[i];
    inverse_rule += fox_derivative(invert(u), i) == GroupRingElement(rank) - gr(invert(u)) * du[i];
    Word conj = u * v * invert(u);
    conjugation += fox_derivative(conj, i) == (one - gr(conj)) * du[i] + gr(u) * dv[i];

    // the two row operations, evaluated under a random representation
    auto rho = random_representation(alphabet, 1 + t % 2, f, 88, t);
    auto a = evaluated_gradient(conj, rho)[i];
    row_conjugate += a == (rho.identity() - rho.image(conj)) * evaluate(du[i], rho) + rho.image(u) * evaluate(dv[i], rho);
    Word cd = u * invert(v);
    auto b = evaluated_gradient(cd, rho)[i];
    row_cancel += b == evaluate(du[i], rho) - rho.image(cd) * evaluate(dv[i], rho);
  }
  auto check = [&](int got, const char* name) {
    r.require(got == n, std::string(name) + ": " + std::to_string(got) + "/" + std::to_string(n));
    r.note(std::string(name) + ": " + std::to_string(got) + "/" + std::to_string(n));
  };
  check(fundamental, "fundamental identity");
  check(product, "product rule");
  check(inverse_rule, "inverse rule");
  check(conjugation, "conjugation identity");
  check(row_conjugate, "row operation d(u v u^-1) under a representation");
  check(row_cancel, "row operation d(c d^-1) under a representation");
  double secs = seconds_since(t0);
  r.require(secs < 60, "runtime under 1 min");
  r.summary = "six identities on " + std::to_string(n) + " random instances each; " + fmt_seconds(secs);
  return r;
}

// ---------------------------------------------------------------------------
// 8. JSON reports are byte-identical across reruns

Outcome determinism() {
  Outcome r;
  auto dir = std::filesystem::temp_directory_path() / "sutcert_acceptance";
  std::filesystem::create_directories(dir);
  auto path = [&](const char* n) { return (dir / n).string(); };
  auto run = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return std::make_pair(code, out.str());
  };
  run({"gallery", "genus3-derived2", "--out", path("g3.txt"), "--rep-out", path("beta.txt")});
  run({"gallery", "gen2-multisuture", "--out", path("gen2.txt")});
  run({"gallery", "solvable-3", "--out", path("s3.txt")});
  std::vector<std::vector<std::string>> commands = {
      {"certify", path("g3.txt"), path("beta.txt"), "--json"},
      {"certify1d", path("gen2.txt"), "--json"},
      {"certify1d", path("g3.txt"), "--json"},
      {"random", path("g3.txt"), "--dim", "2", "--prime", "10007", "--trials", "40", "--seed", "5", "--json"},
      {"random", path("g3.txt"), "--dim", "1", "--prime", "7", "--trials", "64", "--seed", "9", "--json"},
      {"obstruct", path("g3.txt"), "--json"},
      {"obstruct", path("s3.txt"), "--max-depth", "5", "--json"},
  };
  int identical = 0;
  for (const auto& c : commands) {
    auto a = run(c), b = run(c);
    bool same = a == b && !a.second.empty() && a.second.front() == '{';
    identical += same;
    r.require(same, "rerun of " + c[0] + " differs");
  }
  r.summary = std::to_string(identical) + "/" + std::to_string(commands.size()) + " JSON reports byte-identical";
  return r;
}

void print(int id, const Outcome& o, const char* suffix = "") {
  std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << id << suffix << ": " << o.summary << "\n";
  for (const auto& d : o.details) std::cout << "    " << d << "\n";
}

}  // namespace

int main() {
  bool ok = true;
  auto guarded = [&](int id, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    print(id, o);
    ok = ok && o.pass;
  };
  guarded(1, matrix_reproduction);
  guarded(2, two_generator_example);
  guarded(3, handle_attachment);
  guarded(4, abelian_obstruction);
  guarded(5, solvable_scaling);
  Outcome corrected;
  guarded(6, [&] { return lower_central_suite(corrected); });
  print(6, corrected, " (independent exponent vectors)");
  guarded(7, fox_identities);
  guarded(8, determinism);
  std::cout.flush();
  return ok ? 0 : 1;
}
