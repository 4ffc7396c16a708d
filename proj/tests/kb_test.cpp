#include <doctest.h>

#include <random>

#include "stratrev/kb.hpp"
#include "stratrev/parser.hpp"
#include "stratrev/semantics.hpp"
#include "support/naive_logic.hpp"
#include "support/test_util.hpp"

using namespace stratrev;
using testutil::base_of;
using testutil::f;
using testutil::kb_of;

TEST_CASE("strata must be individually consistent") {
  CHECK_NOTHROW(kb_of({{"a"}, {"!a"}}));
  CHECK_THROWS_AS(kb_of({{"a", "!a"}}), InvalidInputError);
  CHECK_NOTHROW(kb_of({{}, {"a"}}));  // empty strata are fine
}

TEST_CASE("with_sure_formula prepends a top stratum") {
  StratifiedKB k2 = testutil::three_layer_kb();
  StratifiedKB with = with_sure_formula(k2, f("c"));
  REQUIRE(with.stratum_count() == 4);
  CHECK(with.strata()[0] == base_of({"c"}));
  CHECK(with.strata()[1] == base_of({"a | b"}));

  StratifiedKB empty;
  CHECK(with_sure_formula(empty, f("a")).stratum_count() == 1);

  CHECK_THROWS_AS(with_sure_formula(empty, f("a & !a")), InvalidInputError);
}

TEST_CASE("conflicts of the stratum-two state") {
  Base state = base_of({"c", "a | b", "!a", "!b", "!c | b", "d", "e"});
  auto found = conflicts(state);
  REQUIRE(found.size() == 2);
  CHECK(found[0] == base_of({"a | b", "!a", "!b"}));
  CHECK(found[1] == base_of({"c", "!b", "!c | b"}));

  CHECK(conflicts(base_of({"a", "b | c"})).empty());

  auto found6 = conflicts(base_of({"c", "a | b", "!a", "!b", "!c | b", "d"}));
  CHECK(found6.size() == 2);
}

TEST_CASE("kernel is the union of all conflicts") {
  Base state = base_of({"c", "a | b", "!a", "!b", "!c | b", "d", "e"});
  Base k = kernel(state);
  // d and e sit in no conflict
  CHECK(set_intersection(k, base_of({"!a", "!b", "!c | b"})) ==
        base_of({"!a", "!b", "!c | b"}));
  CHECK_FALSE(k.contains(f("d")));
  CHECK_FALSE(k.contains(f("e")));

  CHECK(kernel(base_of({"a", "b"})).empty());
  CHECK(kernel(base_of({"a", "!a", "b"})) == base_of({"a", "!a"}));
}

TEST_CASE("conflicts are minimal and inconsistent by construction") {
  std::mt19937 rng(37);
  std::vector<Formula> pool{f("a"),      f("!a"),     f("b"),     f("!b"),
                            f("a | b"),  f("!a | !b"), f("b | c"), f("!c"),
                            f("c -> a")};
  for (int round = 0; round < 60; ++round) {
    Base b;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 5; ++i) b.insert(pool[pick(rng)]);
    for (const auto& c : conflicts(b)) {
      CHECK_FALSE(is_consistent(c));
      for (const auto& member : c) {
        Base smaller = c;
        smaller.erase(member);
        CHECK(is_consistent(smaller));
      }
    }
  }
}

TEST_CASE("conflicts match the naive oracle on pool subsets") {
  std::vector<Formula> pool{f("a"), f("!a"), f("b"), f("a | b"),
                            f("!a | !b"), f("!b | c"), f("!c")};
  for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
    std::vector<Formula> picked;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if ((mask >> i) & 1) picked.push_back(pool[i]);
    Base b(picked);

    auto ours = conflicts(b);
    auto naive_sets = naive::minimal_inconsistent_subsets(picked);
    REQUIRE(ours.size() == naive_sets.size());
    for (const auto& ns : naive_sets) {
      Base as_base(ns);
      CHECK(std::find(ours.begin(), ours.end(), as_base) != ours.end());
    }
    CHECK((kernel(b).empty()) == is_consistent(b));
  }
}

TEST_CASE("size-k disjunctions") {
  Base c = base_of({"!a", "!b", "!c | b"});
  CHECK(disjunctions_of_size(c, 2) ==
        base_of({"!a | !b", "!a | !c | b", "!b | !c | b"}));
  CHECK(disjunctions_of_size(base_of({"x", "y"}), 4).empty());
  CHECK(disjunctions_of_size(c, 1) == c);
  CHECK_THROWS_AS(disjunctions_of_size(c, 0), InvalidInputError);

  Base c4 = base_of({"!a | b", "!b", "d -> r", "r -> !a"});
  Base d3 = disjunctions_of_size(c4, 3);
  CHECK(d3.size() == 4);
  for (const auto& member : d3) CHECK(is_valid(member));
}

TEST_CASE("size-k disjunction counts and entailment from sources") {
  std::mt19937 rng(41);
  std::vector<Formula> pool{f("a"), f("!b"), f("b | c"), f("!a | c"), f("d")};
  auto binomial = [](std::size_t n, std::size_t k) {
    if (k > n) return std::size_t{0};
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  for (int round = 0; round < 40; ++round) {
    Base source;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 4; ++i) source.insert(pool[pick(rng)]);
    for (std::size_t k = 1; k <= source.size(); ++k) {
      Base dk = disjunctions_of_size(source, k);
      CHECK(dk.size() <= binomial(source.size(), k));
      // each disjunction follows from any one of its source formulas, and
      // in particular from the source conjunction
      for (const auto& member : source)
        for (const auto& weak : dk)
          if (subsumes(member, weak)) CHECK(entails(Base{member}, weak));
      for (const auto& weak : dk) CHECK(entails(source, weak));
    }
  }
}

TEST_CASE("stratified KB text format") {
  StratifiedKB kb = parse_stratified_kb(
      "# comment\n"
      "[stratum 1]\n"
      "a | b\n"
      "\n"
      "[stratum 2]\n"
      "!a # trailing comment\n"
      "!b\n");
  REQUIRE(kb.stratum_count() == 2);
  CHECK(kb.strata()[0] == base_of({"a | b"}));
  CHECK(kb.strata()[1] == base_of({"!a", "!b"}));

  CHECK(parse_stratified_kb("").stratum_count() == 0);
  CHECK(parse_stratified_kb("[stratum 1]\n[stratum 2]\nb\n").strata()[0] ==
        Base{});

  CHECK_THROWS_AS(parse_stratified_kb("a\n"), InvalidInputError);
  CHECK_THROWS_AS(parse_stratified_kb("[stratum 2]\na\n"), InvalidInputError);
  CHECK_THROWS_AS(parse_stratified_kb("[stratum 1]\na\n[stratum 3]\nb\n"),
                  InvalidInputError);
  CHECK_THROWS_AS(parse_stratified_kb("[stratum one]\n"), InvalidInputError);
  CHECK_THROWS_AS(parse_stratified_kb("[stratum 1]\na &\n"), ParseError);
  CHECK_THROWS_AS(parse_stratified_kb("[stratum 1]\na\n!a\n"),
                  InvalidInputError);
}

TEST_CASE("flat base files") {
  Base b = parse_base_text("# note\na | b\n!c\n");
  CHECK(b == base_of({"a | b", "!c"}));
  CHECK_THROWS_AS(parse_base_text("[stratum 1]\na\n"), InvalidInputError);
}

TEST_CASE("subbase flattening and cardinality vectors") {
  Subbase sb;
  sb.sure = base_of({"c"});
  sb.strata = {base_of({"a | b"}), base_of({"!a", "d"})};
  CHECK(sb.flatten() == base_of({"c", "a | b", "!a", "d"}));
  CHECK(sb.cardinality_vector() ==
        std::vector<std::size_t>{1, 1, 2});
}
