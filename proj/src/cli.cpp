#include "qpkit/cli.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <array>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "qpkit/error.hpp"
#include "qpkit/formats.hpp"
#include "qpkit/garside.hpp"

namespace qpkit {

namespace {

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

// Accumulates the RunReport of one command.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  std::string load(const std::string& path) {
    std::string text = read_text_file(path);
    files_.push_back(path);
    digest_input_ += std::to_string(text.size()) + ":" + text;
    return text;
  }

  json& details() { return details_; }

  int finish(const std::string& verdict, int exit_code, const std::string& summary,
             bool compact, std::ostream& out, std::ostream& err) {
    json report = {
        {"command", command_},
        {"inputs", {{"files", files_}, {"sha256", sha256_hex(digest_input_)}}},
        {"verdict", verdict},
        {"details", details_},
        {"exit_code", exit_code},
    };
    out << (compact ? report.dump() : report.dump(2)) << '\n';
    err << command_ << ": " << summary << '\n';
    return exit_code;
  }

 private:
  std::string command_;
  std::vector<std::string> files_;
  std::string digest_input_;
  json details_ = json::object();
};

json permutation_json(const StrandPermutation& p) {
  return std::vector<int>(p.images().begin(), p.images().end());
}

json surface_json(const SurfaceType& t) {
  return {{"chi", t.euler_characteristic},
          {"boundary", t.boundary_components},
          {"genus", t.genus}};
}

std::string surface_summary(const SurfaceType& t) {
  return "chi=" + std::to_string(t.euler_characteristic) +
         " boundary=" + std::to_string(t.boundary_components) +
         " genus=" + std::to_string(t.genus);
}

json obstruction_json(const SphereObstructionReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes)
    classes.push_back({{"class", c.cls.coefficients},
                       {"c1_pairing", c.c1_pairing},
                       {"adjunction_satisfiable", c.adjunction_satisfiable}});
  return {{"square", r.square}, {"genus", r.genus}, {"classes", classes}};
}

int obstruction_exit(const SphereObstructionReport& r) {
  return r.verdict == ObstructionVerdict::NoSphereInClassList ? kExitAffirmative
                                                              : kExitNegative;
}

std::string obstruction_summary(const SphereObstructionReport& r) {
  std::string s = to_string(r.verdict) + " (" + std::to_string(r.classes.size()) +
                  " class(es) of square " + std::to_string(r.square) + ")";
  return s;
}

struct Options {
  std::vector<std::string> files;
  std::optional<int> strands;
  std::optional<std::int64_t> square;
  int genus = 0;
  int budget = 100;
  bool compact = false;
  std::string candidate;
};

int dispatch(const std::string& command, const Options& opt, std::ostream& out,
             std::ostream& err) {
  Report report(command);
  auto need = [&](std::size_t n) {
    if (opt.files.size() != n)
      throw Error(ErrorKind::MalformedInput,
                  command + " expects " + std::to_string(n) + " input file(s)");
  };
  auto need_square = [&]() {
    if (!opt.square) throw Error(ErrorKind::MalformedInput, "--square is required");
    return *opt.square;
  };

  if (command == "equal") {
    need(2);
    auto u = read_braid(report.load(opt.files[0]), opt.strands);
    auto v = read_braid(report.load(opt.files[1]), opt.strands);
    bool eq = words_equal(u, v);
    auto& d = report.details();
    d["strands"] = u.strands();
    d["lengths"] = {u.size(), v.size()};
    d["exponent_sums"] = {exponent_sum(u), exponent_sum(v)};
    d["permutations"] = {permutation_json(closure_permutation(u)),
                         permutation_json(closure_permutation(v))};
    return report.finish(eq ? "equal" : "not-equal", eq ? kExitAffirmative : kExitNegative,
                         eq ? "words are equal in B_" + std::to_string(u.strands())
                            : "words differ in B_" + std::to_string(u.strands()),
                         opt.compact, out, err);
  }
  if (command == "normalize") {
    need(1);
    auto w = read_braid(report.load(opt.files[0]), opt.strands);
    auto form = canonical_form(w);
    json factors = json::array();
    for (const auto& f : form.factors) factors.push_back(permutation_json(f.permutation()));
    auto& d = report.details();
    d["strands"] = form.strands;
    d["delta_power"] = form.delta_power;
    d["factors"] = factors;
    d["word"] = format_word(to_word(form));
    return report.finish("normalized", kExitAffirmative,
                         "Delta^" + std::to_string(form.delta_power) + " and " +
                             std::to_string(form.factors.size()) + " simple factor(s)",
                         opt.compact, out, err);
  }
  if (command == "qp-expand") {
    need(1);
    auto f = factorization_from_json(parse_json(report.load(opt.files[0])));
    auto w = expand(f);
    auto& d = report.details();
    d["strands"] = w.strands();
    d["word"] = format_word(w);
    d["length"] = w.size();
    d["exponent_sum"] = exponent_sum(w);
    return report.finish("expanded", kExitAffirmative,
                         std::to_string(w.size()) + " letters", opt.compact, out, err);
  }
  if (command == "qp-surface") {
    need(1);
    auto f = factorization_from_json(parse_json(report.load(opt.files[0])));
    auto t = surface_type(f);
    report.details() = surface_json(t);
    return report.finish("surface", kExitAffirmative, surface_summary(t), opt.compact, out, err);
  }
  if (command == "qp-sum") {
    need(2);
    auto f = factorization_from_json(parse_json(report.load(opt.files[0])));
    auto g = factorization_from_json(parse_json(report.load(opt.files[1])));
    auto sum = boundary_sum(f, g);
    auto t = surface_type(sum);
    report.details()["factorization"] = to_json(sum);
    report.details()["surface"] = surface_json(t);
    return report.finish("summed", kExitAffirmative, surface_summary(t), opt.compact, out, err);
  }
  if (command == "pi1-simplify") {
    need(1);
    if (opt.budget < 0) throw Error(ErrorKind::MalformedInput, "--budget must be nonnegative");
    auto p = presentation_from_json(parse_json(report.load(opt.files[0])));
    auto result = tietze_simplify(p, opt.budget);
    auto verdict = is_infinite_cyclic_certificate(p, opt.budget);
    auto& d = report.details();
    d["presentation"] = to_json(result.presentation);
    d["labels"] = result.presentation.labels();
    d["steps"] = result.steps;
    d["budget_exhausted"] = result.budget_exhausted;
    d["abelianization"] = abelianization(p).to_string();
    return report.finish(to_string(verdict),
                         verdict == CyclicVerdict::CertifiedZ ? kExitAffirmative : kExitNegative,
                         to_string(verdict) + " after " + std::to_string(result.steps) +
                             " Tietze move(s)",
                         opt.compact, out, err);
  }
  if (command == "abelianize") {
    need(1);
    auto p = presentation_from_json(parse_json(report.load(opt.files[0])));
    auto inv = abelianization(p);
    report.details()["free_rank"] = inv.free_rank;
    report.details()["torsion"] = inv.torsion;
    return report.finish(inv.to_string(), kExitAffirmative, inv.to_string(), opt.compact, out,
                         err);
  }
  if (command == "subword-check") {
    need(1);
    auto p = presentation_from_json(parse_json(report.load(opt.files[0])));
    std::vector<int> ids;
    std::istringstream in(opt.candidate);
    for (std::string tok; in >> tok;) {
      try {
        std::size_t used = 0;
        ids.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::MalformedToken, "candidate token '" + tok + "'");
      }
    }
    auto candidate = word_from_ids(ids);
    for (const auto& l : candidate)
      if (l.generator > p.generator_count())
        throw Error(ErrorKind::IndexOutOfRange, "candidate uses an unknown generator");
    auto verdict = weinbaum_subword_test(p, candidate);
    report.details()["candidate"] = ids;
    return report.finish(to_string(verdict),
                         verdict == SubwordVerdict::Nontrivial ? kExitAffirmative : kExitNegative,
                         to_string(verdict), opt.compact, out, err);
  }
  if (command == "lattice-classes") {
    need(1);
    auto lat = lattice_from_json(parse_json(report.load(opt.files[0])));
    auto classes = classes_of_square(lat.form, need_square());
    json list = json::array();
    for (const auto& c : classes) list.push_back(c.coefficients);
    report.details()["square"] = *opt.square;
    report.details()["classes"] = list;
    return report.finish("classes", kExitAffirmative,
                         std::to_string(classes.size()) + " class(es) up to sign", opt.compact,
                         out, err);
  }
  if (command == "lattice-sphere-check") {
    need(1);
    auto lat = lattice_from_json(parse_json(report.load(opt.files[0])));
    if (!lat.c1) throw Error(ErrorKind::MalformedInput, "lattice file needs c1");
    auto r = sphere_obstruction_report(lat.form, *lat.c1, need_square(), opt.genus);
    report.details() = obstruction_json(r);
    return report.finish(to_string(r.verdict), obstruction_exit(r), obstruction_summary(r),
                         opt.compact, out, err);
  }
  if (command == "stein-check" || command == "no-sphere") {
    need(1);
    auto diagram = stein_from_json(parse_json(report.load(opt.files[0])));
    auto validation = validate_stein(diagram);
    json comps = json::array();
    for (const auto& c : diagram.components())
      comps.push_back({{"tb", tb(c.counts)},
                       {"rotation", rotation(c.counts)},
                       {"framing", c.framing},
                       {"parity_ok", parity_consistent(c.counts)}});
    json violations = json::array();
    for (const auto& v : validation.violations)
      violations.push_back({{"component", v.component + 1}, {"reason", v.reason}});
    auto& d = report.details();
    d["components"] = comps;
    d["violations"] = violations;
    if (command == "stein-check") {
      if (!validation.ok())
        return report.finish("violation", kExitNegative,
                             std::to_string(validation.violations.size()) + " violation(s)",
                             opt.compact, out, err);
      auto [q, c1] = to_lattice(diagram);
      d["lattice"] = to_json(q, c1);
      return report.finish("stein_ok", kExitAffirmative, "framings equal tb - 1", opt.compact,
                           out, err);
    }
    auto [q, c1] = to_lattice(diagram);  // NotStein propagates as an input error
    auto r = sphere_obstruction_report(q, c1, need_square(), opt.genus);
    d["lattice"] = to_json(q, c1);
    d["obstruction"] = obstruction_json(r);
    return report.finish(to_string(r.verdict), obstruction_exit(r), obstruction_summary(r),
                         opt.compact, out, err);
  }
  throw Error(ErrorKind::MalformedInput, "unknown command " + command);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid, braided-surface, presentation and lattice checks", "qpkit"};
  app.require_subcommand(1, 1);
  Options opt;
  std::string single_file;

  struct CommandInfo {
    const char* name;
    const char* help;
    int files;
    bool strands, square, genus, budget, candidate;
  };
  const CommandInfo commands[] = {
      {"equal", "Decide whether two braid words are equal", 2, true, false, false, false, false},
      {"normalize", "Left-greedy normal form of a braid word", 1, true, false, false, false, false},
      {"qp-expand", "Expand a quasipositive factorization", 1, false, false, false, false, false},
      {"qp-surface", "Topology of the braided surface of a factorization", 1, false, false, false,
       false, false},
      {"qp-sum", "Boundary sum of two factorizations", 2, false, false, false, false, false},
      {"pi1-simplify", "Tietze-simplify a presentation, certify Z", 1, false, false, false, true,
       false},
      {"abelianize", "Abelian invariants of a presentation", 1, false, false, false, false, false},
      {"subword-check", "One-relator proper-subword test", 1, false, false, false, false, true},
      {"lattice-classes", "Classes of a given square in a negative definite form", 1, false, true,
       false, false, false},
      {"lattice-sphere-check", "Adjunction obstruction on a lattice file", 1, false, true, true,
       false, false},
      {"stein-check", "Validate Stein handle data and emit (Q, c1)", 1, false, false, false, false,
       false},
      {"no-sphere", "stein-check, then the sphere obstruction", 1, false, true, true, false,
       false},
  };
  for (const auto& s : commands) {
    auto* sub = app.add_subcommand(s.name, s.help);
    if (s.candidate) {
      sub->add_option("file", single_file, "presentation file")->required();
      sub->add_option("candidate", opt.candidate, "candidate word, e.g. \"1 2\"")->required();
    } else {
      sub->add_option("files", opt.files, "input file(s)")->required()->expected(s.files);
    }
    if (s.strands) sub->add_option("--strands", opt.strands, "strand count");
    if (s.square) sub->add_option("--square", opt.square, "self-intersection")->required();
    if (s.genus) sub->add_option("--genus", opt.genus, "surface genus")->check(CLI::NonNegativeNumber);
    if (s.budget) sub->add_option("--budget", opt.budget, "Tietze step budget");
    sub->add_flag("--json", opt.compact, "single-line JSON on stdout");
  }

  std::vector<std::string> storage{"qpkit"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "qpkit: " << e.what() << '\n';
    return kExitInputError;
  }

  if (!single_file.empty()) opt.files.push_back(single_file);
  try {
    return dispatch(app.get_subcommands().front()->get_name(), opt, out, err);
  } catch (const Error& e) {
    err << "qpkit: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "qpkit: internal error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace qpkit
