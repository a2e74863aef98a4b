#include "sutcert/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace sutcert {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto a = s.find_first_not_of(ws);
  if (a == std::string_view::npos) return {};
  auto b = s.find_last_not_of(ws);
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto p = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

struct Field_ {
  std::string value;
  std::size_t line = 0;
};

struct KeyValues {
  std::map<std::string, Field_> fields;
  std::vector<std::pair<std::string, Field_>> ordered;
  std::string note;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

KeyValues read_key_values(std::string_view text) {
  KeyValues kv;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    auto raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.starts_with("note:")) {
        if (!kv.note.empty()) kv.note += "\n";
        kv.note += std::string(trim(body.substr(5)));
      }
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(line_no, "expected 'key: value'");
    std::string key(trim(line.substr(0, colon)));
    Field_ f{std::string(trim(line.substr(colon + 1))), line_no};
    if (key.empty()) fail(line_no, "empty key");
    if (!kv.fields.emplace(key, f).second) fail(line_no, "duplicate key '" + key + "'");
    kv.ordered.emplace_back(key, f);
  }
  return kv;
}

std::size_t parse_count(const Field_& f, const std::string& what) {
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(f.value.data(), f.value.data() + f.value.size(), v);
  if (f.value.empty() || ec != std::errc{} || end != f.value.data() + f.value.size() || v == 0)
    fail(f.line, what + " must be a positive integer, got '" + f.value + "'");
  return v;
}

}  // namespace

SuturedPresentation parse_presentation(std::string_view text) {
  auto kv = read_key_values(text);
  for (const auto& [key, f] : kv.ordered)
    if (key != "genus" && key != "generators" && key != "rplus" && key != "sutures" && key != "label")
      fail(f.line, "unknown key '" + key + "'");
  auto need = [&](const std::string& key) -> const Field_& {
    auto it = kv.fields.find(key);
    if (it == kv.fields.end()) throw InputError("missing required key '" + key + "'");
    return it->second;
  };

  const auto& genus_f = need("genus");
  const std::size_t genus = parse_count(genus_f, "genus");

  const auto& gens_f = need("generators");
  std::vector<std::string> names;
  {
    std::istringstream is(gens_f.value);
    for (std::string n; is >> n;) names.push_back(n);
  }
  if (names.size() != genus)
    fail(gens_f.line, std::to_string(names.size()) + " generators declared for genus " + std::to_string(genus));
  SuturedPresentation pres;
  try {
    pres.alphabet = Alphabet(names);
  } catch (const std::exception& e) {
    fail(gens_f.line, e.what());
  }

  const auto& rplus_f = need("rplus");
  auto parts = split(rplus_f.value, '|');
  if (parts.size() != genus)
    fail(rplus_f.line, std::to_string(parts.size()) + " surface words for genus " + std::to_string(genus) +
                           " (a handlebody presentation must be balanced)");
  for (std::size_t j = 0; j < parts.size(); ++j) {
    try {
      pres.surface_words.push_back(parse_word(parts[j], pres.alphabet));
    } catch (const ParseError& e) {
      fail(rplus_f.line, "surface word " + std::to_string(j + 1) + ": " + e.what());
    } catch (const UnknownGenerator& e) {
      fail(rplus_f.line, "surface word " + std::to_string(j + 1) + ": " + e.what());
    }
  }
  if (auto it = kv.fields.find("sutures"); it != kv.fields.end() && !it->second.value.empty())
    pres.suture_metadata = split(it->second.value, '|');
  if (auto it = kv.fields.find("label"); it != kv.fields.end()) pres.label = it->second.value;
  pres.note = kv.note;
  return pres;
}

std::string write_presentation(const SuturedPresentation& pres) {
  std::string out;
  if (!pres.note.empty()) {
    std::istringstream is(pres.note);
    for (std::string line; std::getline(is, line);) out += "# note: " + line + "\n";
  }
  out += "genus: " + std::to_string(pres.genus()) + "\n";
  out += "generators:";
  for (const auto& n : pres.alphabet.names()) out += " " + n;
  out += "\nrplus: ";
  for (std::size_t j = 0; j < pres.surface_words.size(); ++j) {
    if (j) out += " | ";
    out += format_word(pres.surface_words[j], pres.alphabet);
  }
  out += "\n";
  if (!pres.suture_metadata.empty()) {
    out += "sutures: ";
    for (std::size_t j = 0; j < pres.suture_metadata.size(); ++j) {
      if (j) out += " | ";
      out += pres.suture_metadata[j];
    }
    out += "\n";
  }
  if (!pres.label.empty()) out += "label: " + pres.label + "\n";
  return out;
}

template <class Field>
Matrix<typename Field::Element> parse_matrix(std::string_view text, const Field& field) {
  auto s = trim(text);
  auto bad = [&](const std::string& why) -> InputError {
    return InputError("malformed matrix '" + std::string(s) + "': " + why);
  };
  if (s.size() < 4 || s.front() != '[' || s.back() != ']') throw bad("expected [[...],...]");
  auto inner = trim(s.substr(1, s.size() - 2));
  std::vector<std::vector<typename Field::Element>> rows;
  std::size_t pos = 0;
  while (pos < inner.size()) {
    if (inner[pos] != '[') throw bad("expected '[' to open a row");
    auto close = inner.find(']', pos);
    if (close == std::string_view::npos) throw bad("unterminated row");
    std::vector<typename Field::Element> row;
    for (const auto& entry : split(inner.substr(pos + 1, close - pos - 1), ',')) {
      if (entry.empty()) throw bad("empty entry");
      try {
        row.push_back(field.parse(entry));
      } catch (const std::exception& e) {
        throw bad("entry '" + entry + "': " + e.what());
      }
    }
    rows.push_back(std::move(row));
    pos = close + 1;
    while (pos < inner.size() && (inner[pos] == ' ' || inner[pos] == '\t')) ++pos;
    if (pos < inner.size()) {
      if (inner[pos] != ',') throw bad("expected ',' between rows");
      ++pos;
      while (pos < inner.size() && (inner[pos] == ' ' || inner[pos] == '\t')) ++pos;
      if (pos == inner.size()) throw bad("trailing ','");
    }
  }
  if (rows.empty()) throw bad("no rows");
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw bad("matrix is not square");
  return Matrix<typename Field::Element>(std::move(rows));
}

template Matrix<Rational> parse_matrix(std::string_view, const RationalField&);
template Matrix<GaussianRational> parse_matrix(std::string_view, const GaussianField&);
template Matrix<ModP> parse_matrix(std::string_view, const PrimeField&);

namespace {

template <class Field>
Representation<Field> build_representation(const KeyValues& kv, const Field& field, std::size_t dim,
                                           const Alphabet& alphabet) {
  std::vector<std::optional<Matrix<typename Field::Element>>> ms(alphabet.rank());
  for (const auto& [key, f] : kv.ordered) {
    if (key == "dim" || key == "field") continue;
    auto idx = alphabet.find(key);
    if (!idx) fail(f.line, "generator '" + key + "' is not in the presentation alphabet");
    if (ms[*idx]) fail(f.line, "generator '" + key + "' given twice");
    try {
      ms[*idx] = parse_matrix(f.value, field);
    } catch (const InputError& e) {
      fail(f.line, e.what());
    }
    if (ms[*idx]->rows() != dim)
      fail(f.line, "matrix for '" + key + "' is " + std::to_string(ms[*idx]->rows()) + "x" +
                       std::to_string(ms[*idx]->rows()) + ", declared dim is " + std::to_string(dim));
  }
  std::vector<Matrix<typename Field::Element>> out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (!ms[i]) throw InputError("no matrix for generator '" + alphabet.name(i) + "'");
    out.push_back(std::move(*ms[i]));
  }
  try {
    return Representation<Field>(field, alphabet, std::move(out), kv.note);
  } catch (const NotInvertible& e) {
    throw InputError(e.what());
  }
}

}  // namespace

AnyRepresentation parse_representation(std::string_view text, const Alphabet& alphabet) {
  auto kv = read_key_values(text);
  auto dim_it = kv.fields.find("dim");
  if (dim_it == kv.fields.end()) throw InputError("missing required key 'dim'");
  const std::size_t dim = parse_count(dim_it->second, "dim");
  auto field_it = kv.fields.find("field");
  if (field_it == kv.fields.end()) throw InputError("missing required key 'field'");
  const auto& tag = field_it->second.value;
  if (tag == "Q") return build_representation(kv, RationalField{}, dim, alphabet);
  if (tag == "QI") return build_representation(kv, GaussianField{}, dim, alphabet);
  if (tag.starts_with("Fp:")) {
    std::uint64_t p = 0;
    auto digits = std::string_view(tag).substr(3);
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size() || p > UINT32_MAX)
      fail(field_it->second.line, "bad prime in '" + tag + "'");
    std::optional<PrimeField> field;
    try {
      field.emplace(static_cast<std::uint32_t>(p));
    } catch (const std::exception& e) {
      fail(field_it->second.line, e.what());
    }
    return build_representation(kv, *field, dim, alphabet);
  }
  fail(field_it->second.line, "unknown field '" + tag + "' (expected Q, QI or Fp:<prime>)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InputError("error writing '" + path + "'");
}

}  // namespace sutcert
