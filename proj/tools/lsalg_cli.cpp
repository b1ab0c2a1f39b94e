// lsalg: analyze finite pointed semiautomata from the command line.
//
// Subcommands parse the text formats documented in the README, run the
// library analyses, and emit either a human-readable report or a
// machine-readable JSON document (schema 1).  Exit code 0 means the
// analysis completed (a negative verdict is still a result); nonzero is
// reserved for unusable input or usage errors.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lsalg/errors.hpp"
#include "lsalg/io.hpp"
#include "lsalg/monoid.hpp"
#include "lsalg/morphism.hpp"
#include "lsalg/synthesis.hpp"
#include "lsalg/words.hpp"

using json = nlohmann::ordered_json;
using namespace lsalg;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char out[24];
  std::snprintf(out, sizeof out, "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return out;
}

struct Input {
  std::string path;
  std::string content;
};

Input load(const std::string& path) { return Input{path, read_file(path)}; }

json input_json(const std::vector<Input>& inputs) {
  json out = json::array();
  for (const Input& in : inputs)
    out.push_back({{"path", in.path}, {"digest", digest(in.content)}});
  return out;
}

// Every command fills a payload and a text rendering; the frame around
// them is shared so reports stay byte-identical apart from the separated
// timing field.
struct Report {
  std::string command;
  std::vector<Input> inputs;
  json payload;
  std::string text;
};

int emit(const Report& report, bool as_json,
         std::chrono::steady_clock::time_point start) {
  double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  if (as_json) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = report.command;
    doc["inputs"] = input_json(report.inputs);
    doc["payload"] = report.payload;
    doc["timing"] = {{"elapsed_ms", elapsed_ms}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << report.text;
    std::cout << "time: " << elapsed_ms << " ms\n";
  }
  return 0;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string render_table(const MonoidOp& op) {
  int width = 1;
  for (int v = op.size() - 1; v >= 10; v /= 10) ++width;
  std::ostringstream out;
  auto cell = [&](State v) {
    std::string s = std::to_string(v);
    return std::string(static_cast<std::size_t>(width + 1 - static_cast<int>(s.size())), ' ') + s;
  };
  out << "unit: " << op.unit << "\n    ";
  for (State y = 0; y < op.size(); ++y) out << cell(y);
  out << "\n    " << std::string(static_cast<std::size_t>((width + 1) * op.size()), '-') << "\n";
  for (State x = 0; x < op.size(); ++x) {
    out << cell(x) << " |";
    for (State y = 0; y < op.size(); ++y) out << cell(op.apply(x, y));
    out << "\n";
  }
  return out.str();
}

json table_json(const MonoidOp& op) {
  return json{{"unit", op.unit}, {"table", op.table}};
}

json family_json(const Algebra& alg, const FamilyReport& report) {
  json symbols = json::array();
  for (Sym s = 0; s < alg.symbol_count(); ++s) {
    const SymbolFlags& flags = report.symbols[static_cast<std::size_t>(s)];
    json entry{{"symbol", alg.symbol_name(s)},
               {"injective", flags.injective},
               {"surjective", flags.surjective},
               {"bijective", flags.bijective}};
    const auto& inj = report.injection_witnesses[static_cast<std::size_t>(s)];
    entry["injection_witness"] =
        inj ? json{{"x1", inj->x1}, {"x2", inj->x2}} : json(nullptr);
    const auto& sur = report.surjection_witnesses[static_cast<std::size_t>(s)];
    entry["surjection_witness"] = sur ? json{{"missing", sur->missing}} : json(nullptr);
    symbols.push_back(std::move(entry));
  }

  json out{{"commutative", report.commutative}};
  out["commute_witness"] =
      report.commute_witness
          ? json{{"s", alg.symbol_name(report.commute_witness->s)},
                 {"t", alg.symbol_name(report.commute_witness->t)},
                 {"x", report.commute_witness->x}}
          : json(nullptr);
  out["symbols"] = std::move(symbols);
  out["unambiguous"] = report.unambiguous;
  if (report.unambiguity_witness) {
    json w;
    std::visit(
        [&](const auto& v) {
          using W = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<W, InjectionWitness>) {
            w = json{{"kind", "not-injective"},
                     {"s", alg.symbol_name(v.s)},
                     {"x1", v.x1},
                     {"x2", v.x2}};
          } else if constexpr (std::is_same_v<W, OverlapWitness>) {
            w = json{{"kind", "images-overlap"},
                     {"s", alg.symbol_name(v.s)},
                     {"t", alg.symbol_name(v.t)},
                     {"x1", v.x1},
                     {"x2", v.x2}};
          } else {
            w = json{{"kind", "base-in-image"}, {"s", alg.symbol_name(v.s)}, {"x", v.x}};
          }
        },
        *report.unambiguity_witness);
    out["unambiguity_witness"] = std::move(w);
  } else {
    out["unambiguity_witness"] = nullptr;
  }
  return out;
}

json elements_json(const TransformationMonoid& monoid) {
  json out = json::array();
  for (const SelfMap& m : monoid.elements()) out.push_back(m.image);
  return out;
}

// ---------------------------------------------------------------------

int cmd_check(const std::string& path, bool as_json) {
  auto start = std::chrono::steady_clock::now();
  Input input = load(path);
  Algebra alg = parse_algebra_file(input.content).algebra;

  bool minimal = is_minimal(alg);
  FamilyReport report = family_report(alg);

  Report out;
  out.command = "check";
  out.inputs = {input};
  out.payload = json{{"states", alg.size()},
                     {"base", alg.base()},
                     {"alphabet", alg.alphabet()},
                     {"minimal", minimal}};
  json family = family_json(alg, report);
  for (auto& [key, value] : family.items()) out.payload[key] = value;

  std::ostringstream text;
  text << "states: " << alg.size() << "  base: " << alg.base() << "  alphabet:";
  for (const auto& sym : alg.alphabet()) text << " " << sym;
  text << "\nminimal: " << yes_no(minimal) << "\n";
  text << "commutative: " << yes_no(report.commutative);
  if (report.commute_witness)
    text << "  (witness: " << alg.symbol_name(report.commute_witness->s) << ", "
         << alg.symbol_name(report.commute_witness->t) << " at state "
         << report.commute_witness->x << ")";
  text << "\n";
  for (Sym s = 0; s < alg.symbol_count(); ++s) {
    const SymbolFlags& flags = report.symbols[static_cast<std::size_t>(s)];
    text << "symbol " << alg.symbol_name(s) << ": injective=" << yes_no(flags.injective)
         << " surjective=" << yes_no(flags.surjective)
         << " bijective=" << yes_no(flags.bijective) << "\n";
  }
  text << "unambiguous: " << yes_no(report.unambiguous) << "\n";
  out.text = text.str();
  return emit(out, as_json, start);
}

int cmd_synthesize(const std::string& path, std::size_t cap, bool oracle, bool as_json) {
  auto start = std::chrono::steady_clock::now();
  Input input = load(path);
  Algebra alg = parse_algebra_file(input.content).algebra;

  if (oracle && alg.size() > kDefaultOracleBound)
    throw UsageError("--oracle refuses " + std::to_string(alg.size()) +
                     " states (bound " + std::to_string(kDefaultOracleBound) + ")");

  SynthesisResult result = synthesize(alg, cap);

  Report out;
  out.command = "synthesize";
  out.inputs = {input};
  std::ostringstream text;

  if (result.is_regular()) {
    const RegularOutcome& outcome = result.outcome();
    MonoidClassification cls = classify_monoid(alg, outcome.op, outcome.reflection);
    out.payload = json{{"regular", true},
                       {"operation", table_json(outcome.op)},
                       {"reflection", outcome.reflection.tables},
                       {"monoid_size", outcome.monoid.size()},
                       {"classification",
                        {{"commutative", cls.commutative},
                         {"left_cancellative", cls.left_cancellative},
                         {"right_cancellative", cls.right_cancellative},
                         {"group", cls.group}}}};
    text << "regular: yes\n" << render_table(outcome.op);
    text << "commutative: " << yes_no(cls.commutative)
         << "  left-cancellative: " << yes_no(cls.left_cancellative)
         << "  right-cancellative: " << yes_no(cls.right_cancellative)
         << "  group: " << yes_no(cls.group) << "\n";
  } else {
    const Obstruction& obstruction = result.obstruction();
    json witness;
    std::ostringstream why;
    if (obstruction.reason == NotRegularReason::NotMinimal) {
      witness = json{{"unreached", *obstruction.unreached}};
      why << "not minimal: state " << *obstruction.unreached << " is unreachable";
      out.payload = json{{"regular", false}, {"reason", "not-minimal"}, {"witness", witness}};
    } else {
      witness = json{{"collision",
                      {obstruction.collision->first.image, obstruction.collision->second.image}}};
      why << "two monoid elements agree at the base point";
      out.payload =
          json{{"regular", false}, {"reason", "phi-not-injective"}, {"witness", witness}};
    }
    text << "regular: no (" << why.str() << ")\n";
  }

  if (oracle) {
    std::vector<MonoidOp> found = brute_force_operation_search(alg);
    bool agrees = result.is_regular()
                      ? (found.size() == 1 && found.front() == result.outcome().op)
                      : found.empty();
    out.payload["oracle"] = json{{"tables_found", found.size()}, {"agrees", agrees}};
    text << "oracle: " << found.size() << " table(s), agreement: " << yes_no(agrees)
         << "\n";
  }

  out.text = text.str();
  return emit(out, as_json, start);
}

int cmd_monoid(const std::string& path, std::size_t cap, bool with_centraliser,
               bool as_json) {
  auto start = std::chrono::steady_clock::now();
  Input input = load(path);
  Algebra alg = parse_algebra_file(input.content).algebra;

  auto gens = generator_maps(alg);
  TransformationMonoid monoid = generate_monoid(gens, cap);
  EvalReport eval = evaluate_at_base(monoid, alg.base());
  bool minimal = is_minimal(alg);

  Report out;
  out.command = "monoid";
  out.inputs = {input};
  out.payload = json{{"size", monoid.size()},
                     {"elements", elements_json(monoid)},
                     {"phi", eval.phi},
                     {"phi_injective", eval.injective},
                     {"phi_surjective", eval.surjective}};
  out.payload["collision"] =
      eval.collision ? json{eval.collision->first, eval.collision->second} : json(nullptr);
  out.payload["minimal"] = minimal;

  std::ostringstream text;
  text << "monoid size: " << monoid.size() << "\n";
  text << "phi injective: " << yes_no(eval.injective)
       << "  surjective: " << yes_no(eval.surjective) << "\n";
  if (eval.collision)
    text << "phi collision: elements " << eval.collision->first << " and "
         << eval.collision->second << "\n";

  if (minimal) {
    EquivalenceReport eq = equivalence_report(alg, cap);
    out.payload["equivalence"] = json{{"operation_exists", eq.operation_exists},
                                      {"phi_injective", eq.phi_injective},
                                      {"centraliser_phi_surjective", eq.centraliser_phi_surjective},
                                      {"mirrored_generators", eq.mirrored_generators},
                                      {"phi_matching_bijection", eq.phi_matching_bijection},
                                      {"consistent", eq.consistent}};
    text << "equivalence flags: " << yes_no(eq.operation_exists) << " "
         << yes_no(eq.phi_injective) << " " << yes_no(eq.centraliser_phi_surjective)
         << " " << yes_no(eq.mirrored_generators) << " "
         << yes_no(eq.phi_matching_bijection)
         << "  consistent: " << yes_no(eq.consistent) << "\n";
  } else {
    out.payload["equivalence"] = nullptr;
    text << "equivalence: skipped (not minimal)\n";
  }

  if (with_centraliser) {
    // Fast path through the reflected operation when one exists, the
    // exponential enumeration otherwise.
    std::optional<SynthesisResult> synth;
    if (minimal) synth = synthesize(alg, cap);
    bool fast = synth && synth->is_regular();
    TransformationMonoid central =
        fast ? centraliser(gens, CentraliserStrategy::ViaReflectionOp, cap,
                           &synth->outcome().op)
             : centraliser(gens, CentraliserStrategy::Enumerate, cap);
    out.payload["centraliser"] =
        json{{"strategy", fast ? "via-reflection-op" : "enumerate"},
             {"size", central.size()},
             {"elements", elements_json(central)}};
    text << "centraliser size: " << central.size() << "\n";
  } else {
    out.payload["centraliser"] = nullptr;
  }

  out.text = text.str();
  return emit(out, as_json, start);
}

int cmd_fold(const std::string& path, const std::string& word_text, int max_word_len,
             bool as_json) {
  auto start = std::chrono::steady_clock::now();
  Input input = load(path);
  Algebra alg = parse_algebra_file(input.content).algebra;
  Word word = parse_word(word_text);
  if (static_cast<int>(word.size()) > max_word_len)
    throw UsageError("word longer than --max-word-len (" +
                     std::to_string(max_word_len) + ")");
  State state = fold(word, alg);

  Report out;
  out.command = "fold";
  out.inputs = {input};
  out.payload = json{{"word", format_word(word)}, {"state", state}};
  out.text = "fold(" + format_word(word) + ") = " + std::to_string(state) + "\n";
  return emit(out, as_json, start);
}

int cmd_morphism(const std::string& src_path, const std::string& dst_path, bool as_json) {
  auto start = std::chrono::steady_clock::now();
  Input src_input = load(src_path);
  Input dst_input = load(dst_path);
  Algebra src = parse_algebra_file(src_input.content).algebra;
  Algebra dst = parse_algebra_file(dst_input.content).algebra;

  MorphismSearch search = find_morphism(src, dst);

  Report out;
  out.command = "morphism";
  out.inputs = {src_input, dst_input};
  std::ostringstream text;
  if (search.found()) {
    bool iso = is_isomorphism(src, dst, *search.morphism);
    out.payload =
        json{{"found", true}, {"map", search.morphism->map}, {"isomorphism", iso}};
    text << "morphism:";
    for (State y : search.morphism->map) text << " " << y;
    text << "\nisomorphism: " << yes_no(iso) << "\n";
  } else {
    const auto& c = *search.conflict;
    out.payload = json{{"found", false},
                       {"conflict",
                        {{"state", c.state},
                         {"assigned", c.assigned},
                         {"required", c.required},
                         {"via_symbol", src.symbol_name(c.via_symbol)},
                         {"via_state", c.via_state}}}};
    text << "no morphism: state " << c.state << " forced to both " << c.assigned
         << " and " << c.required << " (via " << src.symbol_name(c.via_symbol)
         << " from state " << c.via_state << ")\n";
  }
  out.text = text.str();
  return emit(out, as_json, start);
}

int cmd_quotient(const std::string& path, const std::string& classes_path,
                 const std::string& out_path, bool as_json) {
  auto start = std::chrono::steady_clock::now();
  Input input = load(path);
  ParsedFile parsed = parse_algebra_file(input.content);

  std::vector<Input> inputs = {input};
  Partition part{{}};
  if (!classes_path.empty()) {
    Input classes_input = load(classes_path);
    inputs.push_back(classes_input);
    part = parse_partition(classes_input.content, parsed.algebra.size());
  } else if (parsed.partition) {
    part = *parsed.partition;
  } else {
    throw UsageError("no partition: add a 'classes:' line or pass --classes FILE");
  }

  QuotientResult result = quotient(parsed.algebra, part);

  Report out;
  out.command = "quotient";
  out.inputs = inputs;
  std::ostringstream text;
  if (result.ok()) {
    std::string file_text = format_algebra(*result.algebra);
    out.payload = json{{"compatible", true},
                       {"classes", part.classes},
                       {"quotient",
                        {{"states", result.algebra->size()}, {"file", file_text}}},
                       {"projection", result.projection->map}};
    text << "compatible: yes\nquotient states: " << result.algebra->size() << "\n"
         << file_text;
    if (!out_path.empty()) {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + out_path + "'");
      file << file_text;
      text << "written: " << out_path << "\n";
    }
  } else {
    const auto& w = *result.witness;
    out.payload = json{{"compatible", false},
                       {"witness",
                        {{"s", parsed.algebra.symbol_name(w.s)},
                         {"x1", w.x1},
                         {"x2", w.x2}}}};
    text << "compatible: no (symbol " << parsed.algebra.symbol_name(w.s) << " separates "
         << w.x1 << " ~ " << w.x2 << ")\n";
  }
  out.text = text.str();
  return emit(out, as_json, start);
}

int cmd_boundary(const std::string& path, const std::string& alphabet_arg,
                 std::size_t cap, bool as_json) {
  auto start = std::chrono::steady_clock::now();
  Input input = load(path);
  std::vector<std::string> alphabet;
  if (!alphabet_arg.empty()) {
    std::istringstream stream(alphabet_arg);
    std::string sym;
    while (stream >> sym) alphabet.push_back(sym);
  }
  BoundarySet A = parse_boundary_set(input.content, alphabet);
  if (A.alphabet.empty())
    throw UsageError("empty alphabet: pass --alphabet for bare boundary sets");

  BoundaryCheck check = validate_boundary_set(A);
  if (!check.ok) {
    std::ostringstream why;
    why << "invalid boundary set:";
    for (const BoundaryViolation& v : check.violations) {
      switch (v.kind) {
        case BoundaryViolation::Kind::MissingEmpty: why << " [missing empty word]"; break;
        case BoundaryViolation::Kind::TailMissing:
          why << " [tail of '" << format_word(v.word) << "' missing]";
          break;
        case BoundaryViolation::Kind::ForeignSymbol:
          why << " [foreign symbol in '" << format_word(v.word) << "']";
          break;
        case BoundaryViolation::Kind::Duplicate:
          why << " [duplicate '" << format_word(v.word) << "']";
          break;
      }
    }
    throw UsageError(why.str());
  }

  BoundaryAlgebra ba = boundary_algebra(A);
  bool by_theorem = boundary_regular_by_theorem(A);
  bool by_synthesis = synthesize(ba.algebra, cap).is_regular();

  json labels = json::array();
  std::vector<std::string> dot_labels;
  for (std::size_t i = 0; i < ba.labels.size(); ++i) {
    labels.push_back(
        {{"word", format_word(ba.labels[i])}, {"frontier", static_cast<bool>(ba.frontier[i])}});
    dot_labels.push_back(format_word(ba.labels[i]));
  }

  Report out;
  out.command = "boundary";
  out.inputs = {input};
  out.payload = json{{"words", A.words.size()},
                     {"alphabet", A.alphabet},
                     {"states", ba.algebra.size()},
                     {"labels", labels},
                     {"theorem_regular", by_theorem},
                     {"synthesized_regular", by_synthesis},
                     {"agree", by_theorem == by_synthesis},
                     {"algebra_file", format_algebra(ba.algebra)}};

  std::ostringstream text;
  text << "members: " << A.words.size() << "  states: " << ba.algebra.size() << "\n";
  text << "frontier:";
  bool first_frontier = true;
  for (std::size_t i = 0; i < ba.labels.size(); ++i)
    if (ba.frontier[i]) {
      text << (first_frontier ? " " : ", ") << format_word(ba.labels[i]);
      first_frontier = false;
    }
  text << "\nregular by theorem: " << yes_no(by_theorem)
       << "\nregular by synthesis: " << yes_no(by_synthesis)
       << "\nagree: " << yes_no(by_theorem == by_synthesis) << "\n";
  out.text = text.str();
  return emit(out, as_json, start);
}

int cmd_export_dot(const std::string& path, const std::string& out_path, bool as_json) {
  auto start = std::chrono::steady_clock::now();
  Input input = load(path);
  Algebra alg = parse_algebra_file(input.content).algebra;
  std::string dot = export_dot(alg);

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + out_path + "'");
    file << dot;
  }

  if (as_json) {
    Report out;
    out.command = "export-dot";
    out.inputs = {input};
    out.payload = json{{"dot", dot}};
    return emit(out, true, start);
  }
  std::cout << dot;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis toolkit for finite pointed semiautomata"};
  app.require_subcommand(1);

  // check
  std::string check_file;
  bool check_json = false;
  auto* check = app.add_subcommand("check", "family flags, witnesses, and minimality");
  check->add_option("file", check_file, "algebra file")->required();
  check->add_flag("--json", check_json, "JSON report");

  // synthesize
  std::string synth_file;
  bool synth_json = false, synth_oracle = false;
  std::size_t synth_cap = kDefaultCap;
  auto* synth =
      app.add_subcommand("synthesize", "decide and build the compatible operation");
  synth->add_option("file", synth_file, "algebra file")->required();
  synth->add_option("--cap", synth_cap, "monoid element budget");
  synth->add_flag("--oracle", synth_oracle, "cross-check with the exhaustive search");
  synth->add_flag("--json", synth_json, "JSON report");

  // monoid
  std::string monoid_file;
  bool monoid_json = false, monoid_central = false;
  std::size_t monoid_cap = kDefaultCap;
  auto* monoid_cmd =
      app.add_subcommand("monoid", "transformation monoid, Phi table, equivalences");
  monoid_cmd->add_option("file", monoid_file, "algebra file")->required();
  monoid_cmd->add_option("--cap", monoid_cap, "monoid element budget");
  monoid_cmd->add_flag("--centraliser", monoid_central, "also compute the centraliser");
  monoid_cmd->add_flag("--json", monoid_json, "JSON report");

  // fold
  std::string fold_file, fold_word;
  bool fold_json = false;
  int fold_max_len = 64;
  auto* fold_cmd = app.add_subcommand("fold", "evaluate a word in an algebra");
  fold_cmd->add_option("file", fold_file, "algebra file")->required();
  fold_cmd->add_option("word", fold_word, "symbols separated by spaces, '-' for empty")
      ->required();
  fold_cmd->add_option("--max-word-len", fold_max_len, "reject longer words");
  fold_cmd->add_flag("--json", fold_json, "JSON report");

  // morphism
  std::string morph_src, morph_dst;
  bool morph_json = false;
  auto* morph = app.add_subcommand("morphism", "unique structure map between algebras");
  morph->add_option("src", morph_src, "source algebra file (must be minimal)")->required();
  morph->add_option("dst", morph_dst, "target algebra file")->required();
  morph->add_flag("--json", morph_json, "JSON report");

  // quotient
  std::string quot_file, quot_classes, quot_out;
  bool quot_json = false;
  auto* quot = app.add_subcommand("quotient", "quotient by a compatible partition");
  quot->add_option("file", quot_file, "algebra file")->required();
  quot->add_option("--classes", quot_classes, "partition file (classes: line)");
  quot->add_option("-o,--output", quot_out, "write the quotient algebra here");
  quot->add_flag("--json", quot_json, "JSON report");

  // boundary
  std::string bound_file, bound_alphabet;
  bool bound_json = false;
  std::size_t bound_cap = kDefaultCap;
  auto* bound = app.add_subcommand("boundary", "boundary algebra and its regularity");
  bound->add_option("file", bound_file, "boundary-set file (first line '-')")->required();
  bound->add_option("--alphabet", bound_alphabet, "symbols, e.g. \"a b\"");
  bound->add_option("--cap", bound_cap, "monoid element budget");
  bound->add_flag("--json", bound_json, "JSON report");

  // export-dot
  std::string dot_file, dot_out;
  bool dot_json = false;
  auto* dot = app.add_subcommand("export-dot", "semiautomaton digraph in DOT");
  dot->add_option("file", dot_file, "algebra file")->required();
  dot->add_option("-o,--output", dot_out, "write DOT here instead of stdout");
  dot->add_flag("--json", dot_json, "JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(check_file, check_json);
    if (synth->parsed()) return cmd_synthesize(synth_file, synth_cap, synth_oracle, synth_json);
    if (monoid_cmd->parsed())
      return cmd_monoid(monoid_file, monoid_cap, monoid_central, monoid_json);
    if (fold_cmd->parsed()) return cmd_fold(fold_file, fold_word, fold_max_len, fold_json);
    if (morph->parsed()) return cmd_morphism(morph_src, morph_dst, morph_json);
    if (quot->parsed()) return cmd_quotient(quot_file, quot_classes, quot_out, quot_json);
    if (bound->parsed()) return cmd_boundary(bound_file, bound_alphabet, bound_cap, bound_json);
    if (dot->parsed()) return cmd_export_dot(dot_file, dot_out, dot_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
