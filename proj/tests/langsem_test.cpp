#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cutpoint/constructions/px.hpp"
#include "cutpoint/constructions/rotation.hpp"
#include "cutpoint/langsem/cutpoint.hpp"
#include "cutpoint/langsem/descriptor.hpp"
#include "cutpoint/langsem/unary_name.hpp"
#include "support/oracles.hpp"

using namespace cutpoint;
using oracle::q;
using Kind = UnaryRegularName::Kind;

namespace {

CutpointSpec strict(Scalar v) { return {std::move(v), CutMode::Strict}; }
CutpointSpec inclusive(Scalar v) { return {std::move(v), CutMode::Inclusive}; }
CutpointSpec exclusive(Scalar v) { return {std::move(v), CutMode::Exclusive}; }

SolutionDescriptor exact_solution(const std::string& letters, std::vector<Rational> bases, Rational tau,
                                  Relation rel = Relation::Less) {
  SolutionDescriptor s;
  s.letters = Alphabet(letters);
  s.coefficients = std::move(bases);
  s.threshold = std::move(tau);
  s.relation = rel;
  return s;
}

LanguageDescriptor more_bs_than_as() {
  LanguageDescriptor d;
  d.alphabet = Alphabet("ab");
  d.form = LambdaForm{exact_solution("ab", {2, q(1, 2)}, 1), ParityDescriptor{Alphabet("ab"), Alphabet(""), 0}};
  return d;
}

}  // namespace

TEST(CutMember, Examples) {
  EXPECT_TRUE(cut_member(Rational(q(3, 5)), strict(Rational(q(2, 5)))));
  EXPECT_TRUE(cut_member(Rational(q(2, 5)), inclusive(Rational(q(2, 5)))));
  const double c = std::cos(4 * std::numbers::pi / 4);
  EXPECT_TRUE(cut_member(c * c, inclusive(1.0)));
}

TEST(CutMember, ExactAndApproximate) {
  EXPECT_FALSE(cut_member(Rational(q(2, 5)), strict(Rational(q(2, 5)))));
  EXPECT_TRUE(cut_member(Rational(q(2, 5)), exclusive(Rational(q(1, 3)))));
  EXPECT_TRUE(cut_member(0.4 + 1e-12, inclusive(Rational(q(2, 5)))));
  EXPECT_FALSE(cut_member(0.4 + 1e-6, inclusive(Rational(q(2, 5)))));
  EXPECT_TRUE(cut_member(0.4 + 1e-6, inclusive(Rational(q(2, 5))), 1e-5));
  EXPECT_THROW(cut_member(GaussianRational(0, 1), strict(Rational(0))), DomainError);
}

TEST(CutMember, InclusiveAndExclusiveAreComplements) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int i = 0; i < 500; ++i) {
    const Rational v = q(d(rng), 3);
    const Rational lam = q(d(rng), 3);
    EXPECT_NE(cut_member(v, inclusive(lam)), cut_member(v, exclusive(lam)));
    const double x = v.get_d();
    EXPECT_NE(cut_member(x, inclusive(lam)), cut_member(x, exclusive(lam)));
  }
}

TEST(EnumUnary, Examples) {
  const Automaton r = rotation(PythTriple{2, 1}, RotationModel::Gfa);
  EXPECT_EQ(enum_unary(r, strict(Rational(q(9, 10))), 4), "10000");
  EXPECT_EQ(enum_unary(r, strict(Rational(-1)), 4), "11111");
  EXPECT_EQ(enum_unary(Automaton(px(q(1, 2))), strict(Rational(q(2, 5))), 4), "00101");
}

TEST(EnumUnary, MatchesOracleBits) {
  const auto cos = oracle::cosines(3, 2, 40);
  const Automaton r = rotation(PythTriple{3, 2}, RotationModel::Gfa);
  const Rational lam = q(1, 7);
  const std::string bits = enum_unary(r, strict(lam), 40);
  ASSERT_EQ(bits.size(), 41u);
  for (std::size_t k = 0; k <= 40; ++k) EXPECT_EQ(bits[k] == '1', cos[k] > lam) << k;

  const auto pv = oracle::px_values(q(1, 3), 40);
  const std::string pbits = enum_unary(Automaton(px(q(1, 3))), strict(Rational(q(1, 3))), 40);
  for (std::size_t m = 0; m <= 40; ++m) EXPECT_EQ(pbits[m] == '1', pv[m] > q(1, 3)) << m;
}

TEST(EnumUnary, RejectsNonUnary) {
  Gfa<Rational> g;
  g.alphabet = Alphabet("ab");
  g.transitions.emplace('a', Matrix<Rational>::identity(1));
  g.transitions.emplace('b', Matrix<Rational>::identity(1));
  g.initial = Matrix<Rational>::column({1});
  g.final_row = Matrix<Rational>::row({1});
  EXPECT_THROW(enum_unary(Automaton(g), strict(Rational(0)), 3), DomainError);
}

TEST(Parikh, Examples) {
  const Alphabet ab("ab");
  EXPECT_EQ(parikh(ab, "abb"), (ParikhVector{1, 2}));
  EXPECT_EQ(parikh(ab, ""), (ParikhVector{0, 0}));
  EXPECT_EQ(parikh(ab, "aab"), (ParikhVector{2, 1}));
  EXPECT_THROW(parikh(ab, "abc"), DomainError);
}

TEST(DescMember, Examples) {
  const LanguageDescriptor d = more_bs_than_as();
  EXPECT_TRUE(desc_member(d, "abb"));
  EXPECT_FALSE(desc_member(d, "ab"));

  LanguageDescriptor eq;
  eq.alphabet = Alphabet("ab");
  eq.form = InclusiveForm{exact_solution("ab", {2, q(1, 2)}, 1, Relation::Equals),
                          ParityDescriptor{Alphabet("ab"), Alphabet(""), 0}};
  EXPECT_TRUE(desc_member(eq, "ab"));
  EXPECT_FALSE(desc_member(eq, "abb"));
  EXPECT_THROW(desc_member(d, "abc"), DomainError);
}

TEST(DescMember, MoreBsThanAsOracle) {
  const LanguageDescriptor d = more_bs_than_as();
  for (const auto& w : oracle::words("ab", 8)) {
    EXPECT_EQ(desc_member(d, w), oracle::count(w, 'b') > oracle::count(w, 'a')) << w;
  }
}

TEST(DescMember, FormsCombineComponents) {
  SolutionDescriptor sol = exact_solution("a", {2}, 5);  // 2^x < 5 iff x <= 2
  ParityDescriptor par{Alphabet("a"), Alphabet("a"), 1};
  IndicatorDescriptor ind{Alphabet("ab"), Alphabet("b")};

  LanguageDescriptor lam{Alphabet("ab"), LambdaForm{sol, par}};
  LanguageDescriptor v{Alphabet("ab"), VForm{sol, par, ind}};
  LanguageDescriptor only{Alphabet("ab"), IndicatorOnly{ind}};
  for (const auto& w : oracle::words("ab", 7)) {
    const auto na = oracle::count(w, 'a');
    const auto nb = oracle::count(w, 'b');
    EXPECT_EQ(desc_member(lam, w), nb == 0 && na <= 2 && na % 2 == 1) << w;
    EXPECT_EQ(desc_member(v, w), nb > 0 || na <= 2 || na % 2 == 1) << w;
    EXPECT_EQ(desc_member(only, w), nb > 0) << w;
  }
}

TEST(DescMember, InfiniteThresholdAndZeroPower) {
  SolutionDescriptor s;
  s.letters = Alphabet("a");
  s.coefficients = std::vector<Rational>{2};
  s.threshold = PositiveInfinity{};
  for (std::size_t m = 0; m < 10; ++m) EXPECT_TRUE(solution_member(s, std::string(m, 'a')));

  const SolutionDescriptor one = exact_solution("a", {q(1, 3)}, 1);
  EXPECT_FALSE(solution_member(one, ""));
  EXPECT_TRUE(solution_member(one, "a"));
}

TEST(DescMember, ParikhClosed) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(1, 5);
  for (int i = 0; i < 30; ++i) {
    SolutionDescriptor sol = exact_solution("abc", {q(num(rng), num(rng)), q(num(rng), num(rng)), q(num(rng), num(rng))},
                                            q(num(rng), num(rng)));
    LanguageDescriptor d{Alphabet("abc"), LambdaForm{sol, ParityDescriptor{Alphabet("abc"), Alphabet("ac"), i % 2}}};
    for (auto w : oracle::words("abc", 5)) {
      const bool base = desc_member(d, w);
      std::sort(w.begin(), w.end());
      do {
        ASSERT_EQ(desc_member(d, w), base) << w;
      } while (std::next_permutation(w.begin(), w.end()));
    }
  }
}

TEST(DescMember, ExactAgreesWithLogsWhenMarginIsWide) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(1, 9);
  std::size_t compared = 0;
  for (int i = 0; i < 200; ++i) {
    const std::vector<Rational> bases = {q(num(rng), num(rng)), q(num(rng), num(rng))};
    const Rational tau = q(num(rng), num(rng));
    const SolutionDescriptor exact = exact_solution("ab", bases, tau);
    SolutionDescriptor approx = exact;
    approx.coefficients = std::vector<double>{std::log(bases[0].get_d()), std::log(bases[1].get_d())};
    approx.threshold = std::log(tau.get_d());
    for (const auto& w : oracle::words("ab", 6)) {
      const auto x = parikh(Alphabet("ab"), w);
      const double lhs = std::get<std::vector<double>>(approx.coefficients)[0] * static_cast<double>(x[0]) +
                         std::get<std::vector<double>>(approx.coefficients)[1] * static_cast<double>(x[1]);
      if (std::abs(lhs - std::get<double>(approx.threshold)) <= 1e-6) continue;
      ++compared;
      EXPECT_EQ(solution_member(exact, w), solution_member(approx, w)) << w;
    }
  }
  EXPECT_GT(compared, 1000u);
}

TEST(Descriptor, InvariantsChecked) {
  SolutionDescriptor bad = exact_solution("ab", {2, 0}, 1);
  EXPECT_THROW(check_descriptor(bad), DomainError);
  SolutionDescriptor arity = exact_solution("ab", {2}, 1);
  EXPECT_THROW(check_descriptor(arity), DomainError);

  LanguageDescriptor mismatch{Alphabet("ab"),
                              LambdaForm{exact_solution("ab", {2, 3}, 1), ParityDescriptor{Alphabet("a"), Alphabet("a"), 0}}};
  EXPECT_THROW(check_descriptor(mismatch), DomainError);

  SolutionDescriptor inf;
  inf.letters = Alphabet("a");
  inf.coefficients = std::vector<Rational>{2};
  inf.threshold = PositiveInfinity{};
  LanguageDescriptor v{Alphabet("ab"), VForm{inf, ParityDescriptor{Alphabet("a"), Alphabet(""), 0},
                                             IndicatorDescriptor{Alphabet("ab"), Alphabet("b")}}};
  EXPECT_THROW(check_descriptor(v), DomainError);
}

TEST(NamedMember, Examples) {
  EXPECT_TRUE(named_member(UnaryRegularName(Kind::LessAndEven, 4), 2));
  EXPECT_TRUE(named_member(UnaryRegularName::complement_of(UnaryRegularName(Kind::Even)), 3));
  EXPECT_FALSE(named_member(UnaryRegularName(Kind::ModN, 4), 6));
}

TEST(NamedMember, AllKindsAgainstDefinitions) {
  const std::size_t n = 5;
  for (std::size_t m = 0; m < 30; ++m) {
    const bool less = m <= n;
    const bool even = m % 2 == 0;
    EXPECT_FALSE(named_member(UnaryRegularName(Kind::Empty), m));
    EXPECT_TRUE(named_member(UnaryRegularName(Kind::All), m));
    EXPECT_EQ(named_member(UnaryRegularName(Kind::EpsilonOnly), m), m == 0);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::APlus), m), m > 0);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::Even), m), even);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::CoEven), m), !even);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::Less, n), m), less);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::CoLess, n), m), !less);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::LessAndEven, n), m), less && even);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::LessAndCoEven, n), m), less && !even);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::CoLessAndEven, n), m), !less && even);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::CoLessAndCoEven, n), m), !less && !even);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::SingletonLength, n), m), m == n);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::LessOrEven, n), m), less || even);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::LessOrCoEven, n), m), less || !even);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::CoLessOrEven, n), m), !less || even);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::CoLessOrCoEven, n), m), !less || !even);
    EXPECT_EQ(named_member(UnaryRegularName(Kind::ModN, n), m), m % n == 0);
  }
}

TEST(UnaryRegularName, TextRoundTrip) {
  const std::vector<UnaryRegularName> names = {
      UnaryRegularName(Kind::CoEven), UnaryRegularName(Kind::Less, 2), UnaryRegularName(Kind::ModN, 7),
      UnaryRegularName::complement_of(UnaryRegularName(Kind::LessAndEven, 3))};
  EXPECT_EQ(names[0].to_string(), "CoEven");
  EXPECT_EQ(names[1].to_string(), "Less(2)");
  EXPECT_EQ(names[3].to_string(), "Complement(LessAndEven(3))");
  for (const auto& n : names) EXPECT_EQ(UnaryRegularName::parse(n.to_string()), n);
  EXPECT_THROW(UnaryRegularName::parse("Less"), ParseError);
}
