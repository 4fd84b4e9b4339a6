#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bpd/classify.hpp"
#include "bpd/errors.hpp"
#include "bpd/poly.hpp"
#include "bpd/trace.hpp"

using namespace bpd;

TEST_CASE("the witness droop table") {
  const DroopPlan plan = witness_plan(Permutation::parse("1423"));
  CHECK(plan.moves == std::vector<Rect>{{1, 2, 1, 3}});
  CHECK(witness_plan(Permutation::parse("12543")).moves ==
        std::vector<Rect>{{2, 3, 2, 4}, {1, 2, 1, 3}});
  CHECK(witness_plan(Permutation::parse("241653")).moves.size() == 3);
  CHECK_THROWS_AS(witness_plan(Permutation::parse("2143")), UnknownPattern);
}

TEST_CASE("all seven plans execute and witness the configuration") {
  for (const Permutation& pi : PatternSet::pi().patterns) {
    const EmbedResult res = embed_plan(pi, pi, [&] {
      std::vector<int> occ;
      for (int i = 1; i <= pi.size(); ++i) occ.push_back(i);
      return occ;
    }());
    REQUIRE_FALSE(res.blocked());
    CHECK(res.translated == witness_plan(pi).moves);  // identity embedding
    CHECK(co_nonreduced(*res.diagram));
    CHECK(trace(*res.diagram).perm == pi);
  }
}

TEST_CASE("the 1423 plan end state and its co-trace") {
  const EmbedResult res = embed_plan(Permutation::parse("1423"), Permutation::parse("1423"),
                                     {1, 2, 3, 4});
  REQUIRE_FALSE(res.blocked());
  CHECK(res.diagram->to_text() == "..r-\nr-jr\n|r-+\n||r+");
  const TraceResult t = trace(co(*res.diagram));
  CHECK(t.perm == Permutation::parse("3412"));
  CHECK_FALSE(t.reduced);
}

TEST_CASE("embedding translates by non-pattern pipes and reports blocks") {
  // 13524: its only 1423 occurrence is blocked by pipe 3, a (1,2) pipe.
  const Permutation w = Permutation::parse("13524");
  const auto occs = occurrences(w, Permutation::parse("1423"));
  REQUIRE(occs == std::vector<std::vector<int>>{{1, 3, 4, 5}});
  const EmbedResult res = embed_plan(w, Permutation::parse("1423"), occs[0]);
  CHECK(res.translated == std::vector<Rect>{{1, 3, 1, 4}});
  REQUIRE(res.blocked());
  CHECK(res.blocked_move == 0);
  REQUIRE(res.blocking.size() == 1);
  CHECK(res.blocking[0].pipe == 3);
  CHECK(res.blocking[0].x == 1);
  CHECK(res.blocking[0].y == 2);
  const auto j = res.to_json();
  CHECK(j["blocked"] == true);

  // 246153: 25143 occurrence blocked by the (1,3) pipe 4.
  const Permutation w2 = Permutation::parse("246153");
  const EmbedResult res2 =
      embed_plan(w2, Permutation::parse("25143"), {1, 3, 4, 5, 6});
  REQUIRE(res2.blocked());
  REQUIRE(res2.blocking.size() == 1);
  CHECK(res2.blocking[0].pipe == 4);
  CHECK(res2.blocking[0].x == 1);
  CHECK(res2.blocking[0].y == 3);

  CHECK_THROWS_AS(embed_plan(w, Permutation::parse("1423"), {1, 2, 3, 4}), InvalidOccurrence);
  CHECK_THROWS_AS(embed_plan(w, Permutation::parse("1423"), {1, 3, 4}), InvalidOccurrence);
}

TEST_CASE("embedding is deterministic and sound when unblocked") {
  const Permutation pi1423 = Permutation::parse("1423");
  for (const Permutation& w : all_permutations(5)) {
    for (const Permutation& pi : PatternSet::pi().patterns) {
      if (pi.size() > 5) continue;
      for (const auto& occ : occurrences(w, pi)) {
        const EmbedResult a = embed_plan(w, pi, occ);
        const EmbedResult b = embed_plan(w, pi, occ);
        CHECK(a.translated == b.translated);
        CHECK(a.blocked() == b.blocked());
        if (!a.blocked()) {
          CHECK(trace(*a.diagram).perm == w);
          CHECK(co_nonreduced(*a.diagram));  // Lemma: unblocked embeds witness
        }
      }
    }
  }
}

TEST_CASE("the blocked 1423 construction succeeds on the worked example") {
  const auto d = witness(Permutation::parse("13524"));
  REQUIRE(d.has_value());
  CHECK(d->to_text() == "..r--\nr-jr-\n|.rjr\n|r+-+\n|||r+");
  CHECK(trace(*d).perm == Permutation::parse("13524"));
  CHECK(co_nonreduced(*d));
}

TEST_CASE("witness matches pattern containment on S_5 and S_6") {
  for (int n = 5; n <= 6; ++n)
    for (const Permutation& w : all_permutations(n)) {
      const auto d = witness(w);
      CHECK(d.has_value() == !avoids_all(w, PatternSet::pi()));
      if (d) {
        CHECK(d->is_valid());
        CHECK(trace(*d).perm == w);
        CHECK(co_nonreduced(*d));
      }
    }
}

TEST_CASE("witness named cases") {
  CHECK(witness(Permutation::parse("1423"))->to_text() == "..r-\nr-jr\n|r-+\n||r+");
  CHECK_FALSE(witness(Permutation::identity(5)).has_value());
}

TEST_CASE("all_co_reduced") {
  CHECK(all_co_reduced(Permutation::identity(4)));
  CHECK_FALSE(all_co_reduced(Permutation::parse("1423")));
  CHECK(all_co_reduced(Permutation::parse("2143")));
}

TEST_CASE("size guardrails") {
  EnumerateOptions tight;
  tight.max_n = 3;
  CHECK_THROWS_AS(witness(Permutation::parse("1423"), tight), LimitExceeded);
  CHECK_THROWS_AS(all_co_reduced(Permutation::parse("1423"), tight), LimitExceeded);
  CHECK_THROWS_AS(schubert(Permutation::parse("1423"), tight), LimitExceeded);
}

TEST_CASE("n=1 boundary") {
  const Permutation one = Permutation::identity(1);
  CHECK(all_co_reduced(one));
  CHECK_FALSE(witness(one).has_value());
  CHECK_FALSE(nonreduced_bpd_witness(one).has_value());
  CHECK(verify_main_theorem(1).disagreements == 0);
  CHECK(schubert(one) == MultiPoly::constant(1, 1));
  CHECK(verify_g_to_s(one));
}

TEST_CASE("the K-droop construction on 2143 itself") {
  WitnessRoute route;
  const auto d = nonreduced_bpd_witness(Permutation::parse("2143"), {}, &route);
  REQUIRE(d.has_value());
  CHECK(route == WitnessRoute::Constructive);
  CHECK(d->to_text() == "..r-\n.r+-\nr+jr\n||r+");
  CHECK_FALSE(nonreduced_bpd_witness(Permutation::parse("1324")).has_value());
}

TEST_CASE("the K-droop construction works constructively across S_5") {
  const Permutation p2143 = Permutation::parse("2143");
  for (const Permutation& w : all_permutations(5)) {
    WitnessRoute route;
    const auto d = nonreduced_bpd_witness(w, {}, &route);
    const BpdSet set = bpds_of(w);
    CHECK(d.has_value() == (set.all.size() != set.reduced.size()));
    CHECK(d.has_value() == contains(w, p2143));
    if (d) {
      CHECK(route == WitnessRoute::Constructive);
      CHECK(trace(*d).perm == w);
      CHECK_FALSE(is_reduced(*d));
    }
  }
}

TEST_CASE("theorem report for small n") {
  const TheoremReport r3 = verify_main_theorem(3);
  CHECK(r3.disagreements == 0);
  CHECK(r3.rows.size() == 6);
  for (const auto& row : r3.rows) CHECK(row.avoids_pi);

  const TheoremReport r4 = verify_main_theorem(4);
  CHECK(r4.disagreements == 0);
  std::vector<Permutation> nonavoiders;
  for (const auto& row : r4.rows)
    if (!row.avoids_pi) nonavoiders.push_back(row.w);
  CHECK(nonavoiders == std::vector<Permutation>{Permutation::parse("1423")});
  CHECK(r4.to_text().find("disagreements=0") != std::string::npos);
  CHECK(r4.to_json()["disagreements"] == 0);
}

TEST_CASE("co-reverse pattern check") {
  const ReverseReport r2 = co_reverse_pattern_check(2);
  CHECK(r2.nonreduced_checked == 0);  // vacuous
  for (int n = 3; n <= 4; ++n) {
    const ReverseReport r = co_reverse_pattern_check(n);
    CHECK(r.violations.empty());
    if (n == 4) CHECK(r.nonreduced_checked > 0);
  }
}

TEST_CASE("a_{w,v} > 0 for some Pi^r-containing v when w is 2143-containing but Pi-avoiding") {
  const PatternSet pir = PatternSet::pi().reversed();
  const Permutation p2143 = Permutation::parse("2143");
  int checked = 0;
  for (const Permutation& w : all_permutations(5)) {
    if (!contains(w, p2143) || !avoids_all(w, PatternSet::pi())) continue;
    ++checked;
    bool found = false;
    for (const auto& [v, a] : a_table(w).entries)
      if (a > 0 && !avoids_all(v, pir)) found = true;
    CHECK(found);
  }
  CHECK(checked > 0);
}
