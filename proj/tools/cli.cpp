#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fuzz.hpp"
#include "pirank/error.hpp"
#include "report.hpp"

namespace pirank {

namespace {

struct Options {
  int rank = 0;
  bool json = false;
  std::uint64_t seed = 1;
  int trials = 100;
  std::uint64_t budget = 0;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed_input:
    case ErrorKind::domain: return 2;
    case ErrorKind::budget: return 3;
    case ErrorKind::precondition: return 4;
    case ErrorKind::invariant: return 5;
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::malformed_input, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Words may use any letters; when they do not fit the requested rank the
// generators are renamed a, b, ... in alphabetical order.
std::pair<Word, int> read_word(const std::string& text, int requested, std::ostream& err) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isalpha(c); })) {
    fail(ErrorKind::malformed_input, "a word is a string of letters a..z, A..Z, got '" + text + "'");
  }
  const int inferred = infer_rank(text);
  std::map<char, char> rename;
  for (char c : text) rename.emplace(static_cast<char>(std::tolower(static_cast<unsigned char>(c))), 0);
  const int rank = requested > 0 ? requested : static_cast<int>(rename.size());
  if (inferred <= rank) return {parse_word(text, Alphabet(rank)), rank};
  if (static_cast<int>(rename.size()) > rank) {
    fail(ErrorKind::malformed_input, "word '" + text + "' uses more than " + std::to_string(rank) + " generators");
  }
  char next = 'a';
  std::string note = "renamed";
  for (auto& [from, to] : rename) {
    to = next++;
    note += std::string(" ") + from + "->" + to;
  }
  std::string renamed;
  for (char c : text) {
    const char r = rename[static_cast<char>(std::tolower(static_cast<unsigned char>(c)))];
    renamed += std::isupper(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(r)) : r;
  }
  err << note << '\n';
  return {parse_word(renamed, Alphabet(rank)), rank};
}

void emit(std::ostream& out, const Options& o, const report::json& j, const std::string& text) {
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

int cmd_rank(const std::string& word, const Options& o, std::ostream& out, std::ostream& err) {
  const auto [w, rank] = read_word(word, o.rank, err);
  EnumerationOptions options;
  if (o.budget) options.budget = o.budget;
  const PrimitivityRankReport r = primitivity_rank(w, rank, options);
  emit(out, o, report::rank_json(r, rank), report::rank_text(r, rank));
  return 0;
}

int cmd_stack(const std::string& word, const Options& o, std::ostream& out, std::ostream& err) {
  const auto [w, rank] = read_word(word, o.rank, err);
  const auto hypotheses = report::stacking_hypotheses(w);
  if (!std::all_of(hypotheses.begin(), hypotheses.end(), [](const report::Hypothesis& h) { return h.holds; })) {
    emit(out, o, {{"command", "stack"}, {"word", to_string(w)}, {"hypotheses", report::checklist_json(hypotheses)}},
         report::checklist_text(hypotheses) + "no stacking: the word must be cyclically reduced and not a proper power\n");
    return 4;
  }
  StackingOptions options;
  if (o.budget) options.budget = o.budget;
  const Stacking st = find_stacking(w, rank, options);
  emit(out, o, report::stacking_json(w, rank, st), report::stacking_text(w, rank, st));
  return verify_stacking(w, rank, st) ? 0 : 5;
}

int cmd_verify(const std::string& path, const Options& o, std::ostream& out) {
  const AdjunctionInstance inst = parse_instance(read_file(path));
  const DependenceTheoremReport r = verify_dependence_theorem(inst);
  emit(out, o, report::dependence_json(r), report::dependence_text(r));
  if (!r.hypotheses_hold) return 4;
  return r.violated() ? 5 : 0;
}

int cmd_pushout(const std::string& path, const Options& o, std::ostream& out) {
  const BranchedMap f = parse_branched_map(read_file(path));
  const PushoutInequalityReport r = pushout_inequality(f);
  if (!r.relator_indivisible) {
    emit(out, o, report::pushout_json(r, nullptr), report::pushout_text(r, nullptr));
    return 4;
  }
  const PushoutResult p = one_relator_pushout(f);
  emit(out, o, report::pushout_json(r, &p), report::pushout_text(r, &p));
  return r.violated() ? 5 : 0;
}

int cmd_classify(const std::string& word, const std::string& path, const Options& o, std::ostream& out,
                 std::ostream& err) {
  const auto [w, rank] = read_word(word, o.rank, err);
  const TwoComplex x = one_relator_complex(w, rank);
  const BranchedMap f = branched_map_by_labels(parse_complex(read_file(path)), x);
  EnumerationOptions options;
  if (o.budget) options.budget = o.budget;
  const PrimitivityRankReport pr = primitivity_rank(w, rank, options);
  const ClassificationResult c = classify_immersion(f, pr);
  emit(out, o, report::classification_json(c, pr), report::classification_text(c, pr));
  return c.kind == Classification::boundary_case_violation ? 5 : 0;
}

int cmd_fuzz(const std::string& kind, const Options& o, std::ostream& out) {
  const fuzz::FuzzSummary s = o.budget ? fuzz::run_fuzz(kind, o.seed, o.trials, o.budget) : fuzz::run_fuzz(kind, o.seed, o.trials);
  emit(out, o, report::fuzz_json(s), report::fuzz_text(s));
  return s.violations ? 5 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"primitivity rank, stackings, adjunction spaces and one-relator pushouts"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--rank", o.rank, "rank of the free group (default: from the letters)")->check(CLI::PositiveNumber);
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--budget", o.budget, "max partitions or orders explored")->check(CLI::PositiveNumber);
  };
  std::string word;
  std::string path;
  std::string kind;

  auto* rank = app.add_subcommand("rank", "primitivity rank and w-subgroups of a word");
  rank->add_option("word", word)->required();
  common(rank);
  auto* stack = app.add_subcommand("stack", "a stacking of an indivisible word");
  stack->add_option("word", word)->required();
  common(stack);
  auto* verify = app.add_subcommand("verify", "check the dependence inequality on an instance file");
  verify->add_option("instance", path)->required();
  common(verify);
  auto* pushout = app.add_subcommand("pushout", "one-relator pushout of a branched map file");
  pushout->add_option("map", path)->required();
  common(pushout);
  auto* classify = app.add_subcommand("classify", "classify an immersed complex over the complex of a word");
  classify->add_option("word", word)->required();
  classify->add_option("complex", path)->required();
  common(classify);
  auto* fuzz = app.add_subcommand("fuzz", "random checks: dependence, updown or pushout");
  fuzz->add_option("kind", kind)->required()->check(CLI::IsMember({"dependence", "updown", "pushout"}));
  fuzz->add_option("--seed", o.seed, "master seed");
  fuzz->add_option("--trials", o.trials, "number of trials")->check(CLI::PositiveNumber);
  common(fuzz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  try {
    if (rank->parsed()) return cmd_rank(word, o, out, err);
    if (stack->parsed()) return cmd_stack(word, o, out, err);
    if (verify->parsed()) return cmd_verify(path, o, out);
    if (pushout->parsed()) return cmd_pushout(path, o, out);
    if (classify->parsed()) return cmd_classify(word, path, o, out, err);
    return cmd_fuzz(kind, o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
}

}  // namespace pirank
