#include "cutpoint/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cutpoint/analysis/chomsky.hpp"
#include "cutpoint/analysis/witness.hpp"
#include "cutpoint/cli/document.hpp"
#include "cutpoint/cli/verify.hpp"
#include "cutpoint/constructions/one_state_gfa.hpp"
#include "cutpoint/constructions/px.hpp"
#include "cutpoint/constructions/quantum.hpp"
#include "cutpoint/constructions/rotation.hpp"
#include "cutpoint/constructions/two_state_pfa.hpp"

namespace cutpoint {

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by commands whose bounded search came back empty.
struct NotFound : std::runtime_error {
  explicit NotFound(std::string report) : std::runtime_error("not found"), report(std::move(report)) {}
  std::string report;
};

std::string shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Automaton load_automaton(const std::string& path) { return parse_automaton(read_input(path)); }

Scalar parse_cutpoint_value(const std::string& text) {
  try {
    return Scalar(parse_exact_number(text));
  } catch (const ParseError&) {
    throw UsageError("cutpoint must be a rational such as 2/5 or 0.4, got '" + text + "'");
  }
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  try {
    return parse_exact_number(text);
  } catch (const ParseError&) {
    throw UsageError(what + " must be a rational such as 1/2, got '" + text + "'");
  }
}

PythTriple parse_triple(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("triple must be given as M,N");
  try {
    return PythTriple{std::stoul(text.substr(0, comma)), std::stoul(text.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw UsageError("triple must be given as M,N, got '" + text + "'");
  }
}

// "a=1/2,b=2" or "1/2,2" (letters a, b, c, ... in order).
std::pair<Alphabet, std::vector<Rational>> parse_numbers(const std::string& text) {
  std::string letters;
  std::vector<Rational> numbers;
  std::stringstream in(text);
  std::string item;
  char next = 'a';
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      letters.push_back(next++);
      numbers.push_back(parse_rational_arg(item, "transition number"));
    } else {
      if (eq != 1) throw UsageError("letters in --numbers must be single characters: '" + item + "'");
      letters.push_back(item[0]);
      numbers.push_back(parse_rational_arg(item.substr(2), "transition number"));
    }
  }
  if (letters.empty()) throw UsageError("--numbers needs at least one number");
  return {Alphabet(letters), numbers};
}

Direction parse_direction(const std::string& text) {
  if (text == "lt" || text == "<") return Direction::Less;
  if (text == "gt" || text == ">") return Direction::Greater;
  throw UsageError("direction must be lt or gt, got '" + text + "'");
}

std::string value_text(const Scalar& v) {
  if (v.is_exact() && v.is_real()) return to_string(v.rational()) + " (" + shortest(v.to_approx_real()) + ")";
  if (v.is_real()) return shortest(v.real_double());
  return v.to_string();
}

json value_json(const Scalar& v) {
  json j;
  if (v.is_exact() && v.is_real()) {
    j["exact"] = to_string(v.rational());
    j["float"] = v.to_approx_real();
  } else if (v.is_real()) {
    j["float"] = v.real_double();
  } else {
    j["text"] = v.to_string();
  }
  return j;
}

std::string spec_text(const OneStateGfaSpec& s) {
  std::string out = "numbers";
  for (std::size_t j = 0; j < s.alphabet.size(); ++j) {
    out += std::string(j ? ", " : " ") + s.alphabet[j] + "=" + to_string(s.numbers[j]);
  }
  out += "; accept when the product ";
  if (s.mode == OneStateMode::Inclusive) {
    out += "= ";
  } else {
    out += s.direction == Direction::Less ? "< " : "> ";
  }
  return out + to_string(s.cutpoint);
}

json spec_json(const OneStateGfaSpec& s) {
  json j;
  j["alphabet"] = s.alphabet.symbols();
  json numbers = json::object();
  for (std::size_t k = 0; k < s.alphabet.size(); ++k) numbers[std::string(1, s.alphabet[k])] = to_string(s.numbers[k]);
  j["numbers"] = std::move(numbers);
  j["cutpoint"] = to_string(s.cutpoint);
  j["direction"] = to_string(s.direction);
  j["mode"] = to_string(s.mode);
  j["automaton"] = json::parse(serialize_automaton(to_gfa(s)));
  return j;
}

std::string bin_text(const DensityReport& r, std::size_t i) {
  const Rational lo = -1 + r.bin_width * i;
  const Rational hi = -1 + r.bin_width * (i + 1);
  return "[" + to_string(lo) + ", " + to_string(hi) + (i + 1 == r.bins ? "]" : ")");
}

struct Options {
  bool json = false;
  // eval
  std::string file, word;
  std::optional<std::size_t> length;
  // enum / csv / transform / classify
  std::string cutpoint_text, mode_text = "strict";
  std::size_t max = 0;
  double eps = kDefaultEqualityEpsilon;
  // construct
  std::string triple = "2,1", model = "gfa", x_text;
  unsigned long n = 0;
  // 1-state
  std::string numbers, direction = "lt";
  bool inclusive = false;
  // separate
  std::string file_b, cutpoint_b, mode_b = "strict";
  // density
  std::size_t bins = 0;
  // verify
  std::string suite = "all";
};

std::string run_eval(const Options& o) {
  const Automaton aut = load_automaton(o.file);
  std::string w = o.word;
  if (o.length) {
    if (!aut.alphabet().is_unary()) throw UsageError("--length needs a unary automaton; use --word");
    w.assign(*o.length, aut.alphabet()[0]);
  }
  const Scalar v = value(aut, w);
  if (o.json) return json{{"word", w}, {"value", value_json(v)}}.dump(2);
  return value_text(v);
}

std::string run_enum(const Options& o) {
  const Automaton aut = load_automaton(o.file);
  const CutpointSpec cp{parse_cutpoint_value(o.cutpoint_text), parse_cut_mode(o.mode_text)};
  check_cutpoint(cp, aut.model());
  const std::string bits = enum_unary(aut, cp, o.max, o.eps);
  if (o.json) return json{{"cutpoint", cp.value.to_string()}, {"mode", o.mode_text}, {"bits", bits}}.dump(2);
  return bits;
}

std::string run_csv(const Options& o) {
  const Automaton aut = load_automaton(o.file);
  std::ostringstream out;
  emit_csv(aut, o.max, out);
  std::string text = out.str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

std::string run_construct(const std::string& family, const Options& o) {
  if (family == "rotation") {
    if (o.model != "gfa" && o.model != "mcqfa") throw UsageError("--model must be gfa or mcqfa");
    return serialize_automaton(rotation(parse_triple(o.triple), o.model == "gfa" ? RotationModel::Gfa : RotationModel::Mcqfa));
  }
  if (family == "px") return serialize_automaton(px(parse_rational_arg(o.x_text, "--x")));
  return serialize_automaton(modn_mcqfa(o.n));
}

std::string run_transform(const Options& o, std::string& notice) {
  const Automaton aut = load_automaton(o.file);
  const TransformResult r = exclusive_to_zero(aut, parse_cutpoint_value(o.cutpoint_text));
  if (r.notice) notice = *r.notice;
  return serialize_automaton(r.machine);
}

std::string run_classify(const Options& o) {
  const Automaton aut = load_automaton(o.file);
  const auto* p = aut.get_if<Pfa<Rational>>();
  if (!p) throw DomainError("classify-2pfa needs an exact (rational) pfa document");
  const TwoStatePfaAnalysis a = analyze_2state_pfa(*p, parse_rational_arg(o.cutpoint_text, "--cutpoint"));
  if (!o.json) return a.language.to_string();
  json j;
  j["language"] = a.language.to_string();
  j["case"] = to_string(a.case_tag);
  for (const auto& [k, v] : {std::pair{"x", &a.x}, {"y", &a.y}, {"c", &a.c}, {"z", &a.z}, {"r", &a.r}, {"t", &a.t}}) {
    j[k] = to_string(*v);
  }
  return j.dump(2);
}

OneStateGfaSpec spec_from_flags(const Options& o) {
  auto [alphabet, numbers] = parse_numbers(o.numbers);
  OneStateGfaSpec s;
  s.alphabet = alphabet;
  s.numbers = numbers;
  s.cutpoint = parse_rational_arg(o.cutpoint_text, "--cutpoint");
  s.direction = parse_direction(o.direction);
  s.mode = o.inclusive ? OneStateMode::Inclusive : OneStateMode::Strict;
  return s;
}

std::string run_decompose(const Options& o) {
  const LanguageDescriptor d = decompose_1state(spec_from_flags(o));
  if (o.json) return serialize_descriptor(d);
  return std::string(form_name(d)) + ": " + describe(d);
}

std::string run_build(const Options& o) {
  const OneStateGfaSpec s = build_1state(parse_descriptor(read_input(o.file)));
  if (o.json) return spec_json(s).dump(2);
  return spec_text(s);
}

std::string run_chomsky(const Options& o) {
  ChomskyVerdict v;
  if (!o.file.empty()) {
    const std::string text = read_input(o.file);
    const json j = json::parse(text, nullptr, false);
    if (j.is_object() && j.contains("form")) {
      const LanguageDescriptor d = parse_descriptor(text);
      if (const auto* f = std::get_if<LambdaForm>(&d.form)) {
        v = chomsky_classify(f->solution);
      } else if (const auto* f = std::get_if<VForm>(&d.form)) {
        v = chomsky_classify(f->solution);
      } else {
        throw DomainError(std::string("chomsky needs a '<' solution component; descriptor form is ") + form_name(d));
      }
    } else {
      v = chomsky_classify(parse_solution(text));
    }
  } else {
    if (o.numbers.empty()) throw UsageError("chomsky needs DESCFILE or --numbers");
    v = chomsky_classify_gfa(spec_from_flags(o));
  }
  if (o.json) return json{{"verdict", to_string(v)}}.dump(2);
  return to_string(v);
}

std::string run_separate(const Options& o) {
  const Automaton a = load_automaton(o.file);
  const Automaton b = load_automaton(o.file_b);
  const CutpointSpec ca{parse_cutpoint_value(o.cutpoint_text), parse_cut_mode(o.mode_text)};
  const CutpointSpec cb{parse_cutpoint_value(o.cutpoint_b), parse_cut_mode(o.mode_b)};
  const auto w = separate(a, ca, b, cb, o.max, o.eps);
  if (!w) {
    const std::string none = "no separating length m <= " + std::to_string(o.max);
    throw NotFound(o.json ? json{{"found", false}, {"max", o.max}}.dump(2) : none);
  }
  if (o.json) {
    return json{{"found", true},         {"m", w->m},
                {"value_a", value_json(w->value_a)}, {"value_b", value_json(w->value_b)},
                {"member_a", w->member_a}, {"member_b", w->member_b}}
        .dump(2);
  }
  return "m=" + std::to_string(w->m) + "\nA: value " + value_text(w->value_a) + (w->member_a ? ", member" : ", not member") +
         "\nB: value " + value_text(w->value_b) + (w->member_b ? ", member" : ", not member");
}

std::string run_density(const Options& o) {
  const DensityReport r = density_report(parse_triple(o.triple), o.bins, o.max);
  std::string text;
  if (o.json) {
    json hits = json::array();
    for (const auto& h : r.first_hit) hits.push_back(h ? json(*h) : json("miss"));
    text = json{{"bins", r.bins}, {"horizon", r.horizon}, {"bin_width", to_string(r.bin_width)},
                {"first_hit", hits}, {"misses", r.misses()}}
               .dump(2);
  } else {
    for (std::size_t i = 0; i < r.bins; ++i) {
      text += bin_text(r, i) + ": " + (r.first_hit[i] ? "k=" + std::to_string(*r.first_hit[i]) : "miss") + "\n";
    }
    text += std::to_string(r.bins - r.misses()) + "/" + std::to_string(r.bins) + " bins hit for k <= " +
            std::to_string(r.horizon);
  }
  if (r.misses() != 0) throw NotFound(text);
  return text;
}

std::string run_verify(const Options& o, bool& all_passed) {
  const auto results = run_suite(o.suite);
  all_passed = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (o.json) {
    json items = json::array();
    for (const auto& r : results) {
      items.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds},
                       {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
    }
    return json{{"suite", o.suite}, {"passed", all_passed}, {"checks", items}}.dump(2);
  }
  std::string text;
  for (const auto& r : results) {
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %gs", r.seconds, r.limit_seconds);
    text += std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + " (" + timing + ")";
    if (!r.detail.empty()) text += ": " + r.detail;
    text += "\n";
  }
  text.pop_back();
  return text;
}

}  // namespace

std::size_t emit_csv(const Automaton& aut, std::size_t max_length, std::ostream& sink) {
  const auto values = unary_values(aut, max_length);
  sink << "m,value_exact,value_float\n";
  for (std::size_t m = 0; m < values.size(); ++m) {
    const Scalar& v = values[m];
    sink << m << ',';
    if (v.is_exact()) sink << to_string(v.rational());
    sink << ',' << shortest(v.to_approx_real()) << '\n';
  }
  if (!sink) throw std::runtime_error("failed to write CSV output");
  return values.size();
}

CommandOutcome run_command(const std::vector<std::string>& args) {
  CLI::App app{"Cutpoint languages of finite automata: evaluation, constructions and checks", "cutpoint"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON report");

  auto* eval = app.add_subcommand("eval", "Accepting value of a word");
  eval->add_option("FILE", o.file, "Automaton document")->required();
  auto* word_opt = eval->add_option("--word", o.word, "Input word");
  auto* len_opt = eval->add_option("--length", o.length, "Evaluate a^N (unary automata)");
  word_opt->excludes(len_opt);

  auto* enumerate = app.add_subcommand("enum", "Membership bits of a^0 .. a^N");
  enumerate->add_option("FILE", o.file, "Automaton document")->required();
  enumerate->add_option("--cutpoint", o.cutpoint_text, "Cutpoint, e.g. 2/5")->required();
  enumerate->add_option("--mode", o.mode_text, "strict | inclusive | exclusive");
  enumerate->add_option("--max", o.max, "Largest length N")->required();
  enumerate->add_option("--eps", o.eps, "Equality tolerance for binary64 values");

  auto* csv = app.add_subcommand("csv", "Values of a^0 .. a^N as CSV");
  csv->add_option("FILE", o.file, "Automaton document")->required();
  csv->add_option("--max", o.max, "Largest length N")->required();

  auto* construct = app.add_subcommand("construct", "Emit a document for a built-in family");
  construct->require_subcommand(1);
  auto* c_rot = construct->add_subcommand("rotation", "Rotation automaton of a Pythagorean triple");
  c_rot->add_option("--triple", o.triple, "Generator M,N")->required();
  c_rot->add_option("--model", o.model, "gfa | mcqfa");
  auto* c_px = construct->add_subcommand("px", "3-state PFA P_x");
  c_px->add_option("--x", o.x_text, "x in (0, 1/2]")->required();
  auto* c_modn = construct->add_subcommand("modn", "Mod-n MCQFA");
  c_modn->add_option("--n", o.n, "n >= 2")->required();

  auto* transform = app.add_subcommand("transform", "Machine transforms");
  transform->require_subcommand(1);
  auto* t_ex = transform->add_subcommand("exclusive-to-zero", "MCQFA with exclusive cutpoint 0 for the same language");
  t_ex->add_option("FILE", o.file, "MCQFA document")->required();
  t_ex->add_option("--cutpoint", o.cutpoint_text, "Exclusive cutpoint in (0, 1]")->required();

  auto* classify = app.add_subcommand("classify-2pfa", "Name the strict cutpoint language of a 2-state unary PFA");
  classify->add_option("FILE", o.file, "PFA document")->required();
  classify->add_option("--cutpoint", o.cutpoint_text, "Cutpoint in [0, 1)")->required();

  auto add_numbers = [&](CLI::App* cmd, bool required) {
    auto* num = cmd->add_option("--numbers", o.numbers, "Transition numbers, a=1/2,b=2 or 1/2,2");
    auto* cut = cmd->add_option("--cutpoint", o.cutpoint_text, "Cutpoint");
    cmd->add_option("--direction", o.direction, "lt | gt");
    if (required) {
      num->required();
      cut->required();
    }
  };
  auto* decompose = app.add_subcommand("decompose-1gfa", "Descriptor of a 1-state GFA language");
  add_numbers(decompose, true);
  decompose->add_flag("--inclusive", o.inclusive, "Inclusive cutpoint (direction ignored)");

  auto* build = app.add_subcommand("build-1gfa", "1-state GFA for a descriptor");
  build->add_option("DESCFILE", o.file, "Descriptor document")->required();

  auto* chomsky = app.add_subcommand("chomsky", "Regular / context-free classification of a solution language");
  chomsky->add_option("DESCFILE", o.file, "Descriptor or solution document");
  add_numbers(chomsky, false);

  auto* sep = app.add_subcommand("separate", "Least length in exactly one of two cutpoint languages");
  sep->add_option("FILEA", o.file, "First automaton")->required();
  sep->add_option("FILEB", o.file_b, "Second automaton")->required();
  sep->add_option("--cutpoint-a", o.cutpoint_text, "Cutpoint for FILEA")->required();
  sep->add_option("--cutpoint-b", o.cutpoint_b, "Cutpoint for FILEB")->required();
  sep->add_option("--mode-a", o.mode_text, "strict | inclusive | exclusive");
  sep->add_option("--mode-b", o.mode_b, "strict | inclusive | exclusive");
  sep->add_option("--max", o.max, "Largest length N")->required();
  sep->add_option("--eps", o.eps, "Equality tolerance for binary64 values");

  auto* density = app.add_subcommand("density", "First hits of cos(k theta) in equal bins of [-1, 1]");
  density->add_option("--triple", o.triple, "Generator M,N")->required();
  density->add_option("--bins", o.bins, "Number of bins")->required();
  density->add_option("--max", o.max, "Largest k")->required();

  auto* verify = app.add_subcommand("verify", "Run the self-check suites");
  verify->add_option("--suite", o.suite, "all | rotation | px | onestate | mcqfa");

  for (auto* sub : {eval, enumerate, csv, construct, c_rot, c_px, c_modn, transform, t_ex, classify, decompose, build,
                    chomsky, sep, density, verify}) {
    sub->fallthrough();
  }

  CommandOutcome outcome;
  for (const auto& arg : args) {
    if (arg.starts_with("-")) continue;
    if (app.get_subcommand_no_throw(arg) == nullptr) {
      outcome.exit_code = kExitUsage;
      outcome.error = "error: unknown command '" + arg + "'\n\n" + app.help();
      return outcome;
    }
    break;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    outcome.output = out.str();
    return outcome;
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    outcome.output = out.str();
    return outcome;
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    outcome.exit_code = kExitUsage;
    outcome.error = err.str() + out.str();
    if (outcome.error.empty()) outcome.error = std::string(e.what()) + "\n";
    return outcome;
  }

  try {
    bool passed = true;
    std::string notice;
    if (eval->parsed()) {
      if (!o.length && word_opt->count() == 0) throw UsageError("eval needs --word or --length");
      outcome.output = run_eval(o);
    } else if (enumerate->parsed()) {
      outcome.output = run_enum(o);
    } else if (csv->parsed()) {
      outcome.output = run_csv(o);
    } else if (construct->parsed()) {
      outcome.output = run_construct(c_rot->parsed() ? "rotation" : c_px->parsed() ? "px" : "modn", o);
    } else if (transform->parsed()) {
      outcome.output = run_transform(o, notice);
    } else if (classify->parsed()) {
      outcome.output = run_classify(o);
    } else if (decompose->parsed()) {
      outcome.output = run_decompose(o);
    } else if (build->parsed()) {
      outcome.output = run_build(o);
    } else if (chomsky->parsed()) {
      outcome.output = run_chomsky(o);
    } else if (sep->parsed()) {
      outcome.output = run_separate(o);
    } else if (density->parsed()) {
      outcome.output = run_density(o);
    } else if (verify->parsed()) {
      outcome.output = run_verify(o, passed);
      if (!passed) outcome.exit_code = kExitValidation;
    }
    if (!notice.empty()) outcome.error = "note: " + notice + "\n";
    if (!outcome.output.empty()) outcome.output += "\n";
  } catch (const NotFound& e) {
    outcome.exit_code = kExitNotFound;
    outcome.output = e.report + "\n";
  } catch (const UsageError& e) {
    outcome.exit_code = kExitUsage;
    outcome.error = std::string("error: ") + e.what() + "\n";
  } catch (const ParseError& e) {
    outcome.exit_code = kExitUsage;
    outcome.error = std::string("parse error: ") + e.what() + "\n";
  } catch (const ValidationError& e) {
    outcome.exit_code = kExitValidation;
    outcome.error = "validation failed:\n";
    for (const auto& v : e.violations()) outcome.error += "  - " + v + "\n";
  } catch (const std::exception& e) {
    outcome.exit_code = kExitValidation;
    outcome.error = std::string("error: ") + e.what() + "\n";
  }
  return outcome;
}

}  // namespace cutpoint
