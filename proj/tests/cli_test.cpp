#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cutpoint/cli/commands.hpp"
#include "cutpoint/cli/document.hpp"
#include "cutpoint/cli/verify.hpp"
#include "cutpoint/constructions/px.hpp"
#include "cutpoint/constructions/quantum.hpp"
#include "cutpoint/constructions/rotation.hpp"
#include "cutpoint/langsem/descriptor.hpp"
#include "support/oracles.hpp"

using namespace cutpoint;
using oracle::q;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("cutpoint-cli-" + std::to_string(std::random_device{}()) + "-" + std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto file = path_ / name;
    std::ofstream(file) << text;
    return file.string();
  }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

constexpr const char* kSwapPfa = R"({"model": "pfa", "states": 2, "alphabet": "a", "scalar": "rational",
  "transitions": {"a": [[0, 1], [1, 0]]}, "initial": [1, 0], "final": [0, 1]})";

constexpr const char* kLeakyPfa = R"({"model": "pfa", "states": 2, "alphabet": "a", "scalar": "rational",
  "transitions": {"a": [["1/2", 0], ["0.4", 1]]}, "initial": [1, 0], "final": [1, 0]})";

constexpr const char* kResetQfa = R"({"model": "qfa", "states": 2, "alphabet": "a", "scalar": "rational",
  "transitions": {"a": [[[1, 0], [0, 0]], [[0, 1], [0, 0]]]}, "initial": {"basis": 1}, "final": [0]})";

CommandOutcome run(std::initializer_list<std::string> args) { return run_command(std::vector<std::string>(args)); }

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST(ParseExactNumber, Forms) {
  EXPECT_EQ(parse_exact_number("3/5"), q(3, 5));
  EXPECT_EQ(parse_exact_number("-4/8"), q(-1, 2));
  EXPECT_EQ(parse_exact_number("7"), 7);
  EXPECT_EQ(parse_exact_number("0.9"), q(9, 10));
  EXPECT_EQ(parse_exact_number("-1.25"), q(-5, 4));
  EXPECT_THROW(parse_exact_number("1/0"), ParseError);
  EXPECT_THROW(parse_exact_number("abc"), ParseError);
}

TEST(ParseAutomaton, Examples) {
  const std::string doc = serialize_automaton(rotation(PythTriple{2, 1}, RotationModel::Gfa));
  const Automaton r = parse_automaton(doc);
  EXPECT_EQ(r.model(), Model::Gfa);
  EXPECT_TRUE(r.is_exact());
  EXPECT_EQ(r.states(), 2u);
  EXPECT_EQ(value(r, "a").rational(), q(3, 5));

  try {
    parse_automaton(kLeakyPfa);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_FALSE(e.violations().empty());
  }

  const Automaton reset = parse_automaton(kResetQfa);
  EXPECT_EQ(reset.model(), Model::Qfa);
  EXPECT_EQ(value(reset, "a").rational(), 1);
  EXPECT_EQ(value(reset, "").rational(), 0);
}

TEST(ParseAutomaton, MalformedDocuments) {
  EXPECT_THROW(parse_automaton("{"), ParseError);
  EXPECT_THROW(parse_automaton(R"({"model": "dfa"})"), ParseError);
  EXPECT_THROW(parse_automaton(R"({"model": "gfa", "states": 1, "alphabet": "a", "scalar": "rational",
    "transitions": {"a": [["x"]]}, "initial": [1], "final": [1]})"),
               ParseError);
  EXPECT_THROW(parse_automaton(R"({"model": "gfa", "states": 2, "alphabet": "a", "scalar": "rational",
    "transitions": {"a": [[1]]}, "initial": [1, 0], "final": [1, 0]})"),
               ValidationError);
}

TEST(ParseAutomaton, RoundTripKeepsExactValues) {
  std::vector<Automaton> machines = {rotation(PythTriple{2, 1}, RotationModel::Gfa),
                                     rotation(PythTriple{3, 2}, RotationModel::Mcqfa), Automaton(px(q(1, 3))),
                                     Automaton(modn_mcqfa(5))};
  Gfa<Rational> g;
  g.alphabet = Alphabet("ab");
  g.transitions.emplace('a', Matrix<Rational>{{q(1, 2), q(-3, 7)}, {2, 0}});
  g.transitions.emplace('b', Matrix<Rational>{{0, 1}, {q(5, 3), q(1, 9)}});
  g.initial = Matrix<Rational>::column({1, q(-1, 4)});
  g.final_row = Matrix<Rational>::row({q(2, 3), 1});
  g.left_marker = Matrix<Rational>{{1, 1}, {0, 1}};
  g.right_marker = Matrix<Rational>{{2, 0}, {0, q(1, 2)}};
  machines.emplace_back(g);
  machines.push_back(parse_automaton(kResetQfa));

  std::mt19937_64 rng(51);
  for (const auto& m : machines) {
    const Automaton back = parse_automaton(serialize_automaton(m));
    EXPECT_EQ(back.model(), m.model());
    const std::string& letters = m.alphabet().symbols();
    for (std::size_t len = 0; len <= 20; ++len) {
      for (int rep = 0; rep < 5; ++rep) {
        std::string w;
        for (std::size_t i = 0; i < len; ++i) w += letters[rng() % letters.size()];
        EXPECT_EQ(value(back, w), value(m, w)) << w;
      }
    }
  }
}

TEST(ParseDescriptor, RoundTrip) {
  const char* text = R"({"alphabet": "abc", "form": "v",
    "solution": {"letters": "ab", "coefficients": {"a": "2", "b": "1/2"}, "threshold": "3", "relation": "<"},
    "parity": {"X": "ab", "Y": "b", "i": 1}, "indicator": "c"})";
  const LanguageDescriptor d = parse_descriptor(text);
  EXPECT_TRUE(std::holds_alternative<VForm>(d.form));
  const LanguageDescriptor back = parse_descriptor(serialize_descriptor(d));
  for (const auto& w : oracle::words("abc", 6)) EXPECT_EQ(desc_member(back, w), desc_member(d, w)) << w;

  const SolutionDescriptor inf =
      parse_solution(R"({"letters": "a", "coefficients": {"a": "2"}, "threshold": "inf", "relation": "<"})");
  EXPECT_TRUE(inf.threshold_is_infinite());
  EXPECT_THROW(parse_descriptor(R"({"alphabet": "a", "form": "circle"})"), ParseError);
}

TEST(EmitCsv, Examples) {
  std::ostringstream px_rows;
  EXPECT_EQ(emit_csv(px(q(1, 2)), 2, px_rows), 3u);
  EXPECT_EQ(px_rows.str(), "m,value_exact,value_float\n0,0,0\n1,0,0\n2,1,1\n");

  std::ostringstream rot_rows;
  EXPECT_EQ(emit_csv(rotation(PythTriple{2, 1}, RotationModel::Gfa), 1, rot_rows), 2u);
  EXPECT_EQ(rot_rows.str(), "m,value_exact,value_float\n0,1,1\n1,3/5,0.6\n");

  std::ostringstream modn_rows;
  EXPECT_EQ(emit_csv(Automaton(modn_mcqfa(4)), 0, modn_rows), 1u);
  EXPECT_EQ(modn_rows.str(), "m,value_exact,value_float\n0,,1\n");
}

TEST(Commands, EnumClassifySeparate) {
  const TempDir dir;
  const std::string px_file = dir.write("px.json", run({"construct", "px", "--x", "1/2"}).output);
  const CommandOutcome e = run({"enum", px_file, "--cutpoint", "2/5", "--mode", "strict", "--max", "4"});
  EXPECT_EQ(e.exit_code, kExitOk);
  EXPECT_EQ(trimmed(e.output), "00101");

  const std::string swap = dir.write("swap.json", kSwapPfa);
  const CommandOutcome c = run({"classify-2pfa", swap, "--cutpoint", "1/2"});
  EXPECT_EQ(c.exit_code, kExitOk);
  EXPECT_EQ(trimmed(c.output), "CoEven");

  const std::string rot = dir.write("rot.json", run({"construct", "rotation", "--triple", "2,1"}).output);
  const CommandOutcome s = run({"separate", rot, rot, "--cutpoint-a", "1/10", "--cutpoint-b", "1/5", "--max", "100"});
  EXPECT_EQ(s.exit_code, kExitOk);
  EXPECT_NE(s.output.find("m=12"), std::string::npos);
  EXPECT_NE(s.output.find("32125393/244140625"), std::string::npos);

  const CommandOutcome none = run({"separate", rot, rot, "--cutpoint-a", "1/10", "--cutpoint-b", "1/10", "--max", "30"});
  EXPECT_EQ(none.exit_code, kExitNotFound);
}

TEST(Commands, ConstructOutputsParseAndValidate) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"construct", "rotation", "--triple", "2,1"},
                                                               {"construct", "rotation", "--triple", "3,2", "--model", "mcqfa"},
                                                               {"construct", "px", "--x", "1/4"},
                                                               {"construct", "modn", "--n", "6"}}) {
    const CommandOutcome out = run_command(args);
    ASSERT_EQ(out.exit_code, kExitOk) << out.error;
    const Automaton a = parse_automaton(out.output);
    EXPECT_TRUE(validate(a).empty());
  }
  EXPECT_EQ(run({"construct", "rotation", "--triple", "3,1"}).exit_code, kExitValidation);
  EXPECT_EQ(run({"construct", "px", "--x", "3/4"}).exit_code, kExitValidation);
}

TEST(Commands, EvalCsvAndTransform) {
  const TempDir dir;
  const std::string rot = dir.write("rot.json", run({"construct", "rotation", "--triple", "2,1"}).output);
  EXPECT_EQ(trimmed(run({"eval", rot, "--word", "aa"}).output), "-7/25 (-0.28)");
  EXPECT_EQ(trimmed(run({"eval", rot, "--length", "2"}).output), "-7/25 (-0.28)");
  EXPECT_EQ(run({"eval", rot, "--word", "ab"}).exit_code, kExitValidation);
  EXPECT_EQ(run({"csv", rot, "--max", "1"}).output, "m,value_exact,value_float\n0,1,1\n1,3/5,0.6\n");

  const std::string mc =
      dir.write("mc.json", run({"construct", "rotation", "--triple", "2,1", "--model", "mcqfa"}).output);
  const CommandOutcome t = run({"transform", "exclusive-to-zero", mc, "--cutpoint", "1/2"});
  ASSERT_EQ(t.exit_code, kExitOk) << t.error;
  const Automaton built = parse_automaton(t.output);
  EXPECT_EQ(built.states(), 5u);
  EXPECT_NEAR(value(built, "a").real_double(), 49.0 / 6250, 1e-12);

  const CommandOutcome same = run({"transform", "exclusive-to-zero", mc, "--cutpoint", "0"});
  EXPECT_EQ(same.exit_code, kExitOk);
  EXPECT_NE(same.error.find("note:"), std::string::npos);
}

TEST(Commands, OneStateCommands) {
  const TempDir dir;
  const CommandOutcome d =
      run({"--json", "decompose-1gfa", "--numbers", "a=1/2,b=2", "--cutpoint", "1", "--direction", "gt"});
  ASSERT_EQ(d.exit_code, kExitOk) << d.error;
  const LanguageDescriptor desc = parse_descriptor(d.output);
  for (const auto& w : oracle::words("ab", 6)) {
    EXPECT_EQ(desc_member(desc, w), oracle::count(w, 'a') < oracle::count(w, 'b')) << w;
  }
  const std::string file = dir.write("d.json", d.output);
  EXPECT_EQ(trimmed(run({"chomsky", file}).output), "ContextFreeNonRegular");
  EXPECT_EQ(trimmed(run({"chomsky", "--numbers", "2,3", "--cutpoint", "1", "--direction", "gt"}).output), "Regular");
  EXPECT_EQ(trimmed(run({"chomsky", "--numbers", "2,1/3", "--cutpoint", "1", "--direction", "gt"}).output),
            "NonContextFree");

  const CommandOutcome b = run({"build-1gfa", file});
  EXPECT_EQ(b.exit_code, kExitOk);
  EXPECT_NE(b.output.find("a=1/2"), std::string::npos);
}

TEST(Commands, ErrorsAndExitCodes) {
  const TempDir dir;
  const CommandOutcome unknown = run({"bogus"});
  EXPECT_EQ(unknown.exit_code, kExitUsage);
  EXPECT_NE(unknown.error.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).exit_code, kExitUsage);
  EXPECT_EQ(run({"enum"}).exit_code, kExitUsage);

  const std::string leaky = dir.write("leaky.json", kLeakyPfa);
  const CommandOutcome invalid = run({"csv", leaky, "--max", "3"});
  EXPECT_EQ(invalid.exit_code, kExitValidation);
  EXPECT_FALSE(invalid.error.empty());

  const std::string broken = dir.write("broken.json", "{\"model\": ");
  EXPECT_EQ(run({"csv", broken, "--max", "3"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"csv", dir.write("x", "") + ".missing", "--max", "3"}).exit_code, kExitUsage);

  EXPECT_EQ(run({"density", "--triple", "2,1", "--bins", "4", "--max", "100"}).exit_code, kExitOk);
  EXPECT_EQ(run({"density", "--triple", "2,1", "--bins", "100", "--max", "10"}).exit_code, kExitNotFound);
}

TEST(Commands, JsonReports) {
  const TempDir dir;
  const std::string px_file = dir.write("px.json", run({"construct", "px", "--x", "1/2"}).output);
  const CommandOutcome e = run({"--json", "enum", px_file, "--cutpoint", "2/5", "--max", "4"});
  EXPECT_NE(e.output.find("\"bits\": \"00101\""), std::string::npos);
  const CommandOutcome v = run({"--json", "verify", "--suite", "mcqfa"});
  EXPECT_EQ(v.exit_code, kExitOk);
  EXPECT_NE(v.output.find("\"passed\": true"), std::string::npos);
}

TEST(Verify, SuitesAreDeterministic) {
  EXPECT_EQ(suite_checks("rotation"), (std::vector<int>{3, 4, 5, 6}));
  EXPECT_EQ(suite_checks("all").size(), 13u);
  EXPECT_THROW(suite_checks("nope"), DomainError);
  const auto first = run_suite("px");
  const auto second = run_suite("px");
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_TRUE(first[i].passed) << first[i].title << ": " << first[i].detail;
    EXPECT_EQ(first[i].passed, second[i].passed);
    EXPECT_EQ(first[i].detail, second[i].detail);
  }
}
