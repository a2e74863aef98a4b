#include "sutcert/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <variant>

#include "sutcert/certifier.hpp"
#include "sutcert/fox.hpp"
#include "sutcert/gallery.hpp"
#include "sutcert/hall.hpp"
#include "sutcert/io.hpp"
#include "sutcert/magnus.hpp"
#include "sutcert/report.hpp"

namespace sutcert {

namespace {

struct Options {
  std::string presentation, representation, word, generators, name, out_path, rep_out_path;
  bool json = false, assume_self_dual = false;
  std::size_t dim = 1, trials = 100, max_depth = 4, search_length = 1, cutoff = 8, rank = 2, weight = 3;
  std::uint32_t prime = 2147483647u;
  std::uint64_t seed = 0;
};

Alphabet tool_alphabet(const Options& o) {
  if (o.generators.empty()) return infer_alphabet(o.word);
  std::vector<std::string> names;
  std::istringstream is(o.generators);
  for (std::string n; is >> n;) names.push_back(n);
  return Alphabet(names);
}

SuturedPresentation load_presentation(const std::string& path) {
  try {
    return parse_presentation(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void print_matrix(std::ostream& out, const auto& m, const std::string& indent) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << to_string(m(r, c));
    out << "]\n";
  }
}

template <class Field>
void print_representation(std::ostream& out, const Representation<Field>& rho) {
  out << "representation: " << rho.field().tag() << ", dimension " << rho.dimension();
  if (!rho.note().empty()) out << " (" << rho.note() << ")";
  out << "\n";
  for (std::size_t i = 0; i < rho.rank(); ++i)
    out << "  " << rho.alphabet().name(i) << " -> "
        << format_matrix(rho.generator(i), [](const auto& x) { return to_string(x); }) << "\n";
}

int cmd_certify(const Options& o, std::ostream& out) {
  auto pres = load_presentation(o.presentation);
  AnyRepresentation any = [&] {
    try {
      return parse_representation(read_file(o.representation), pres.alphabet);
    } catch (const InputError& e) {
      throw InputError(o.representation + ": " + e.what());
    }
  }();
  return std::visit(
      [&](const auto& rho) {
        auto cert = certify(pres, rho, o.assume_self_dual);
        if (o.json) {
          out << dump(certificate_json(pres, cert));
        } else {
          out << "presentation: " << pres.label << " (genus " << pres.genus() << ")\n";
          print_representation(out, rho);
          out << "evaluated Jacobian (" << cert.jacobian.rows() << "x" << cert.jacobian.cols() << "):\n";
          print_matrix(out, cert.jacobian, "  ");
          out << "det: " << to_string(cert.det) << "\n";
          if (cert.self_dual_reason)
            out << "self-dual: " << *cert.self_dual_reason << "\n";
          else
            out << "dual det: " << to_string(*cert.dual_det) << "\n";
          out << "verdict: " << to_string(cert.verdict) << "\n";
          for (const auto& line : cert.trail) out << "  - " << line << "\n";
        }
        return cert.certified() ? kExitCertified : kExitNotCertified;
      },
      any);
}

int cmd_certify1d(const Options& o, std::ostream& out) {
  auto pres = load_presentation(o.presentation);
  auto result = certify_one_dim_generic(pres);
  if (o.json) {
    out << dump(one_dim_json(pres, result));
  } else {
    out << result.det.to_string(pres.alphabet) << "\n";
    out << (result.certified ? "verdict: generically certified; the polynomial cuts out the non-certifying locus\n"
                             : "verdict: no one-dimensional representation certifies\n");
  }
  return result.certified ? kExitCertified : kExitNotCertified;
}

int cmd_random(const Options& o, std::ostream& out) {
  auto pres = load_presentation(o.presentation);
  auto report = certify_random(pres, o.dim, o.prime, o.trials, o.seed);
  if (o.json) {
    out << dump(random_json(pres, report));
  } else if (report.is_witness()) {
    out << "witness at trial " << *report.witness_trial << " (seed " << o.seed << ", " << report.failures
        << " earlier failures)\n";
    print_representation(out, *report.witness);
    out << "det: " << report.det->to_string() << "\ndual det: " << report.dual_det->to_string() << "\n";
    out << "a certifying complex representation of dimension " << o.dim << " exists\n";
  } else {
    out << "inconclusive: " << report.failures << " failures in " << report.trials_run << " trials over F_" << o.prime
        << " (seed " << o.seed << ")\n";
  }
  return report.is_witness() ? kExitCertified : kExitInconclusive;
}

int cmd_obstruct(const Options& o, std::ostream& out) {
  auto pres = load_presentation(o.presentation);
  ObstructionRun run;
  run.max_depth = o.max_depth;
  run.search_length = o.search_length;
  try {
    run.solvable = solvable_obstruction(pres, o.max_depth);
    run.depths = run.solvable->depths;
    run.one_dim_searched = true;
    run.one_dim_witness = one_dim_obstruction(pres, o.search_length);
  } catch (const ObstructionIncomplete& e) {
    run.depths = e.partial_depths();
    run.resource_error = e.what();
  } catch (const ResourceExceeded& e) {
    run.resource_error = e.what();
  }
  if (o.json) {
    out << dump(obstruction_json(pres, run));
  } else {
    for (std::size_t i = 0; i < run.depths.size(); ++i) out << "a" << i + 1 << " depth " << run.depths[i] << "\n";
    if (run.solvable) {
      out << "degree bound D* = " << run.solvable->max_depth << "\n" << run.solvable->statement() << "\n";
    }
    if (run.one_dim_witness) {
      auto sa = surface_alphabet(pres.genus());
      out << "one-dimensional obstruction: " << format_word(run.one_dim_witness->surface_word, sa)
          << " has nonzero exponent sum and image of derived depth " << run.one_dim_witness->depth
          << "; no one-dimensional representation certifies\n";
    } else if (run.one_dim_searched) {
      out << "one-dimensional obstruction: none found up to length " << o.search_length << " (not a proof)\n";
    }
    if (run.resource_error) out << "incomplete: " << *run.resource_error << "\n";
  }
  return run.resource_error ? kExitResource : kExitCertified;
}

int cmd_fox(const Options& o, std::ostream& out) {
  auto alphabet = tool_alphabet(o);
  auto w = parse_word(o.word, alphabet);
  auto grad = fox_gradient(w);
  for (std::size_t i = 0; i < grad.size(); ++i)
    out << (i ? " ; " : "") << "d/d" << alphabet.name(i) << ": " << grad[i].to_string(alphabet);
  out << "\n";
  return 0;
}

int cmd_magnus(const Options& o, std::ostream& out) {
  auto alphabet = tool_alphabet(o);
  out << magnus_expand(parse_word(o.word, alphabet), o.cutoff).to_string(alphabet) << "\n";
  return 0;
}

int cmd_lcs_weight(const Options& o, std::ostream& out) {
  auto alphabet = tool_alphabet(o);
  out << lcs_weight(parse_word(o.word, alphabet), o.cutoff).to_string() << "\n";
  return 0;
}

int cmd_hall(const Options& o, std::ostream& out) {
  auto basis = hall_basis(o.rank, o.weight);
  for (std::size_t k = 1; k <= o.weight; ++k) {
    out << "weight " << k << ":";
    auto [first, last] = basis.weight_range(k);
    for (auto i = first; i < last; ++i) out << (i == first ? " " : ", ") << basis.to_string(i);
    out << "\n";
  }
  return 0;
}

int cmd_collect(const Options& o, std::ostream& out) {
  auto alphabet = tool_alphabet(o);
  out << collect(parse_word(o.word, alphabet), o.weight).to_string() << "\n";
  return 0;
}

int cmd_gallery(const Options& o, std::ostream& out) {
  auto entry = gallery(o.name);
  auto text = write_presentation(entry.presentation);
  if (o.out_path.empty())
    out << text;
  else
    write_file(o.out_path, text);
  if (!o.rep_out_path.empty()) {
    if (!entry.representation) throw InputError("gallery entry '" + o.name + "' has no stored representation");
    write_file(o.rep_out_path, write_representation(*entry.representation));
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact tautness certificates for sutured handlebody presentations", "sutcert"};
  app.require_subcommand(1);

  auto* certify_cmd = app.add_subcommand("certify", "certify a presentation with a representation file");
  certify_cmd->add_option("presentation", o.presentation)->required();
  certify_cmd->add_option("representation", o.representation)->required();
  certify_cmd->add_flag("--assume-self-dual", o.assume_self_dual, "skip the dual determinant");
  certify_cmd->add_flag("--json", o.json);

  auto* c1d = app.add_subcommand("certify1d", "generic one-dimensional determinant");
  c1d->add_option("presentation", o.presentation)->required();
  c1d->add_flag("--json", o.json);

  auto* random_cmd = app.add_subcommand("random", "randomized certification over a prime field");
  random_cmd->add_option("presentation", o.presentation)->required();
  random_cmd->add_option("--dim", o.dim)->check(CLI::PositiveNumber);
  random_cmd->add_option("--prime", o.prime);
  random_cmd->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", o.seed);
  random_cmd->add_flag("--json", o.json);

  auto* obstruct_cmd = app.add_subcommand("obstruct", "derived-series obstructions");
  obstruct_cmd->add_option("presentation", o.presentation)->required();
  obstruct_cmd->add_option("--max-depth", o.max_depth)->check(CLI::PositiveNumber);
  obstruct_cmd->add_option("--search-length", o.search_length)->check(CLI::PositiveNumber);
  obstruct_cmd->add_flag("--json", o.json);

  auto add_word = [&](CLI::App* sub) {
    sub->add_option("word", o.word)->required();
    sub->add_option("--generators", o.generators, "space-separated generator names");
  };
  auto* fox_cmd = app.add_subcommand("fox", "Fox derivatives of a word");
  add_word(fox_cmd);
  auto* magnus_cmd = app.add_subcommand("magnus", "truncated Magnus expansion");
  add_word(magnus_cmd);
  magnus_cmd->add_option("--cutoff", o.cutoff)->check(CLI::PositiveNumber);
  auto* lcs_cmd = app.add_subcommand("lcs-weight", "lower central series weight");
  add_word(lcs_cmd);
  lcs_cmd->add_option("--cutoff", o.cutoff)->check(CLI::PositiveNumber);
  auto* hall_cmd = app.add_subcommand("hall", "Hall basic commutators");
  hall_cmd->add_option("--rank", o.rank)->check(CLI::PositiveNumber);
  hall_cmd->add_option("--weight", o.weight)->check(CLI::PositiveNumber);
  auto* collect_cmd = app.add_subcommand("collect", "collection into basic commutators");
  add_word(collect_cmd);
  collect_cmd->add_option("--weight", o.weight)->check(CLI::PositiveNumber);
  auto* gallery_cmd = app.add_subcommand("gallery", "write a gallery presentation");
  gallery_cmd->add_option("name", o.name)->required();
  gallery_cmd->add_option("--out", o.out_path, "presentation file (default: standard output)");
  gallery_cmd->add_option("--rep-out", o.rep_out_path, "write the stored representation here");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (certify_cmd->parsed()) return cmd_certify(o, out);
    if (c1d->parsed()) return cmd_certify1d(o, out);
    if (random_cmd->parsed()) return cmd_random(o, out);
    if (obstruct_cmd->parsed()) return cmd_obstruct(o, out);
    if (fox_cmd->parsed()) return cmd_fox(o, out);
    if (magnus_cmd->parsed()) return cmd_magnus(o, out);
    if (lcs_cmd->parsed()) return cmd_lcs_weight(o, out);
    if (hall_cmd->parsed()) return cmd_hall(o, out);
    if (collect_cmd->parsed()) return cmd_collect(o, out);
    if (gallery_cmd->parsed()) return cmd_gallery(o, out);
  } catch (const ResourceExceeded& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace sutcert
