#include <doctest.h>

#include <random>

#include "stratrev/engine.hpp"
#include "stratrev/lex.hpp"
#include "stratrev/semantics.hpp"
#include "support/corpus.hpp"
#include "support/test_util.hpp"

using namespace stratrev;
using testutil::base_of;
using testutil::f;
using testutil::interp;

TEST_CASE("dma on the three-layer example") {
  auto out = dma(testutil::three_layer_kb(), f("c"));
  REQUIRE(out.is_base());
  CHECK(equivalent(*out.base, base_of({"!a", "b", "c", "d", "e"})));

  REQUIRE(out.trace.size() == 3);
  CHECK(out.trace[0].action == StratumAction::Merged);
  CHECK(out.trace[1].action == StratumAction::Revised);
  CHECK(out.trace[1].weakening_size == 2);
  CHECK(out.trace[1].kernel_part == base_of({"!a", "!b", "!c | b"}));
  CHECK(out.trace[2].action == StratumAction::Dropped);
}

TEST_CASE("dma keeps a consistent union untouched") {
  StratifiedKB kb = testutil::kb_of({{"a"}, {"b | c"}});
  auto out = dma(kb, f("!c"));
  CHECK(*out.base == base_of({"a", "b | c", "!c"}));
  for (const auto& t : out.trace) CHECK(t.action == StratumAction::Merged);
}

TEST_CASE("dma weakens the whole stratum on the five-atom example") {
  auto out = dma(testutil::five_atom_kb(), f("a | b"));
  CHECK(out.base->size() == 12);
  CHECK(out.trace[1].weakening_size == 3);
  CHECK(equivalent(*out.base,
                   set_union(base_of({"a | b", "c | d | e"}),
                             disjunctions_of_size(
                                 base_of({"!a", "!b", "!c", "!d", "!e"}), 3))));
}

TEST_CASE("dma rejects an unsatisfiable sure formula") {
  CHECK_THROWS_AS(dma(testutil::three_layer_kb(), f("c & !c")),
                  InvalidInputError);
}

TEST_CASE("whole-dma is equivalent to dma and syntactically larger") {
  auto direct = dma(testutil::three_layer_kb(), f("c"));
  auto whole = whole_dma(testutil::three_layer_kb(), f("c"));
  CHECK(equivalent(*whole.base, *direct.base));
  CHECK(whole.base->size() == 12);  // {c, a|b} plus all 10 pairs of S_2
  CHECK(direct.base->size() == 7);

  auto pool = corpus::instances(60, 77);
  for (const auto& inst : pool) {
    auto a = dma(inst.kb, inst.sure);
    auto b = whole_dma(inst.kb, inst.sure);
    CHECK(equivalent(*a.base, *b.base));
  }
}

TEST_CASE("whole-dma merges consistent strata wholesale") {
  StratifiedKB kb = testutil::kb_of({{"a"}, {"b | c"}});
  auto out = whole_dma(kb, f("!c"));
  CHECK(*out.base == base_of({"a", "b | c", "!c"}));
}

TEST_CASE("model-track driver reduces to the operator on one stratum") {
  StratifiedKB kb = testutil::kb_of({{"!a", "!b"}});
  Formula phi = f("a | b");
  auto out = revise_model_based(
      kb, phi, [](const Base& k, const Formula& mu, const Signature& sig) {
        return dalal_revise(k, mu, sig);
      });
  Signature sig = signature_of(kb, phi);
  CHECK(*out.model_set == dalal_revise(base_of({"!a", "!b"}), phi, sig));
}

TEST_CASE("model-track driver intersects while possible") {
  StratifiedKB kb = testutil::kb_of({{"a"}, {"b"}});
  Formula phi = f("a | b");
  auto out = revise_model_based(
      kb, phi, [](const Base& k, const Formula& mu, const Signature& sig) {
        return dalal_revise(k, mu, sig);
      });
  Signature sig = signature_of(kb, phi);
  CHECK(*out.model_set == enumerate_models(base_of({"a", "b"}), sig));
  CHECK(out.trace[0].action == StratumAction::Merged);
  CHECK(out.trace[1].action == StratumAction::Merged);
}

TEST_CASE("operator probes reject broken plug-ins") {
  StratifiedKB kb = testutil::kb_of({{"a"}});
  // returns models of the wrong formula
  ModelRevisionOperator bad_model =
      [](const Base&, const Formula&, const Signature& sig) {
        return enumerate_models(Base{}, sig);
      };
  CHECK_THROWS_AS(revise_model_based(kb, f("!a"), bad_model),
                  InvalidInputError);
  // returns an inconsistent base
  FormulaRevisionOperator bad_formula = [](const Base& k, const Formula& phi) {
    Base out = k;
    out.insert(phi);
    return out;
  };
  CHECK_THROWS_AS(revise_formula_based(kb, f("!a"), bad_formula),
                  InvalidInputError);
}

TEST_CASE("formula-track driver with the weakening operator equals dma") {
  FormulaRevisionOperator weaken = [](const Base& k, const Formula& phi) {
    return dma_revise(k, phi);
  };
  std::vector<std::pair<StratifiedKB, Formula>> cases = {
      {testutil::three_layer_kb(), f("c")},
      {testutil::implication_kb(), f("c")},
      {testutil::five_atom_kb(), f("a | b")},
      {testutil::four_formula_kb(), f("c")},
  };
  for (const auto& [kb, phi] : cases) {
    auto direct = dma(kb, phi);
    auto generic = revise_formula_based(kb, phi, weaken);
    CHECK(*direct.base == *generic.base);
  }
}

TEST_CASE("formula-track driver keeps the running base expanded") {
  auto out = cmr(testutil::five_atom_kb(), f("a | b"));
  // the running base's members survive as members, not as one conjunction
  CHECK(out.base->contains(f("a | b")));
  CHECK(out.base->contains(f("c | d | e")));
}

TEST_CASE("dr on the running examples") {
  Signature sig2{"a", "b", "c", "d", "e"};
  auto out2 = dr(testutil::three_layer_kb(), f("c"));
  ModelSet expect2(sig2, {interp(sig2, {"a", "c", "d", "e"}).bits(),
                          interp(sig2, {"b", "c", "d", "e"}).bits()});
  CHECK(*out2.model_set == expect2);

  Signature sig4{"a", "b", "c", "d", "r"};
  auto out4 = dr(testutil::implication_kb(), f("c"));
  ModelSet expect4(sig4, {interp(sig4, {"a", "c", "d", "r"}).bits()});
  CHECK(*out4.model_set == expect4);

  StratifiedKB consistent = testutil::kb_of({{"a"}, {"b"}});
  auto out = dr(consistent, f("a | b"));
  CHECK(*out.model_set ==
        enumerate_models(base_of({"a", "b"}),
                         signature_of(consistent, f("a | b"))));
}

TEST_CASE("cmr on the running examples") {
  auto out5 = cmr(testutil::five_atom_kb(), f("a | b"));
  CHECK(out5.base->size() == 6);
  CHECK(*out5.base == base_of({"!a | !b", "a | b", "c | d | e", "!c | !d",
                               "!d | !e", "!c | !e"}));

  auto out6 = cmr(testutil::four_formula_kb(), f("c"));
  CHECK(equivalent(*out6.base, base_of({"c", "!a", "!c | b", "d"})));

  StratifiedKB consistent = testutil::kb_of({{"a"}, {"b"}});
  auto out = cmr(consistent, f("a | b"));
  CHECK(equivalent(*out.base, base_of({"a", "b", "a | b"})));
}

TEST_CASE("cmr and dma agree up to equivalence on random instances") {
  auto pool = corpus::instances(60, 2024);
  for (const auto& inst : pool) {
    auto weakened = dma(inst.kb, inst.sure);
    auto revised = cmr(inst.kb, inst.sure);
    CHECK(equivalent(*weakened.base, *revised.base));
  }
}

TEST_CASE("dr outcome strictly refines dma on the implication example") {
  auto models = dr(testutil::implication_kb(), f("c"));
  auto weakened = dma(testutil::implication_kb(), f("c"));
  Signature sig = signature_of(testutil::implication_kb(), f("c"));
  // every dr model satisfies the dma base...
  for (std::size_t i = 0; i < models.model_set->size(); ++i) {
    Interpretation w = models.model_set->interpretation(i);
    for (const auto& member : *weakened.base) CHECK(evaluate(member, w));
  }
  // ...but the dma base has models dr discarded
  ModelSet dma_models = enumerate_models(*weakened.base, sig);
  CHECK(dma_models.size() > models.model_set->size());
}

TEST_CASE("size relations between cmr and dma outputs") {
  // The five-atom example has two disjoint conflict families in its second
  // stratum; the reduced revision ends strictly smaller.
  auto out5_cmr = cmr(testutil::five_atom_kb(), f("a | b"));
  auto out5_dma = dma(testutil::five_atom_kb(), f("a | b"));
  CHECK(out5_cmr.base->size() < out5_dma.base->size());

  // When every conflict family shares a formula, cmr never ends larger.
  // The corpus check with the precondition families is below; here: the
  // one-stratum shared-conflict shape.
  StratifiedKB shared = testutil::kb_of({{"!b", "!a", "!c | b", "d"}});
  auto c = cmr(shared, f("c & (a | b)"));
  auto d = dma(shared, f("c & (a | b)"));
  CHECK(c.base->size() <= d.base->size());
}

namespace {

// Per-stratum conflict families of a cmr run: for each stratum that needed
// revision, the set of stratum-side parts of the conflicts with the running
// conjunction.
struct ConflictFamilies {
  bool any = false;             // some stratum had conflicts
  bool pairwise_disjoint = true;  // distinct parts never overlap
  bool share_member = true;       // each stratum's parts share a formula
  Base replayed;                  // the cmr output, replayed step by step
};

ConflictFamilies replay_cmr_families(const StratifiedKB& kb,
                                     const Formula& sure) {
  ConflictFamilies out;
  Base acc{sure};
  for (const Base& stratum : kb.strata()) {
    Base merged = set_union(acc, stratum);
    if (is_consistent(merged)) {
      acc = std::move(merged);
      continue;
    }
    Formula running = conjunction_of(acc);
    Base with_running = stratum;
    with_running.insert(running);
    std::vector<Base> parts;
    for (const auto& conflict : conflicts(with_running)) {
      Base part = set_intersection(conflict, stratum);
      if (!part.empty() &&
          std::find(parts.begin(), parts.end(), part) == parts.end())
        parts.push_back(std::move(part));
    }
    if (!parts.empty()) {
      out.any = true;
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          if (!set_intersection(parts[i], parts[j]).empty())
            out.pairwise_disjoint = false;
      Base common = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i)
        common = set_intersection(common, parts[i]);
      if (common.empty()) out.share_member = false;
    }
    Base revised = cm_reduce(stratum, running);
    revised.erase(running);
    acc = set_union(revised, acc);
  }
  out.replayed = std::move(acc);
  return out;
}

}  // namespace

TEST_CASE("size relations under the conflict-family preconditions") {
  auto pool = corpus::instances(120, 909);
  std::size_t shared_eligible = 0;
  for (const auto& inst : pool) {
    ConflictFamilies families = replay_cmr_families(inst.kb, inst.sure);
    auto reduced = cmr(inst.kb, inst.sure);
    CHECK(families.replayed == *reduced.base);
    if (!families.any) continue;
    auto weakened = dma(inst.kb, inst.sure);
    if (families.share_member) {
      ++shared_eligible;
      CHECK(reduced.base->size() <= weakened.base->size());
    }
    // Disjoint families do not force a strictly smaller cmr output in
    // general (single or tiny conflict parts end in a tie); the strict case
    // is pinned on the five-atom example above.
    if (families.pairwise_disjoint)
      CHECK(reduced.base->size() <= weakened.base->size());
  }
  CHECK(shared_eligible > 0);
}
