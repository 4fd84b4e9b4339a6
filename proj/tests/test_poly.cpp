#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bpd/errors.hpp"
#include "bpd/poly.hpp"

using namespace bpd;

namespace {

MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }

}  // namespace

TEST_CASE("arithmetic and divided differences") {
  const int n = 3;
  const MultiPoly f = x(n, 1) * x(n, 1);  // x1^2
  CHECK(f.divided_difference(1) == x(n, 1) + x(n, 2));
  CHECK(x(n, 2).divided_difference(1) == MultiPoly::constant(n, -1));
  CHECK((x(n, 1) * x(n, 2)).divided_difference(1).is_zero());
  CHECK(f.divided_difference(1).divided_difference(1).is_zero());
  CHECK(f.str() == "x1^2");
  CHECK((x(n, 1) + x(n, 2)).total_degree() == 1);
  CHECK(MultiPoly::constant(n, 0).is_zero());
}

TEST_CASE("schubert polynomials from BPD sums") {
  CHECK(schubert(Permutation::identity(3)) == MultiPoly::constant(3, 1));
  CHECK(schubert(Permutation::parse("21")) == x(2, 1));
  CHECK(schubert(Permutation::parse("132")) == x(3, 1) + x(3, 2));
}

TEST_CASE("grothendieck polynomials from BPD sums") {
  CHECK(grothendieck(Permutation::identity(3)) == MultiPoly::constant(3, 1));
  CHECK(grothendieck(Permutation::parse("21")) == x(2, 1));
  const MultiPoly g132 = grothendieck(Permutation::parse("132"));
  CHECK(g132 == x(3, 1) + x(3, 2) - x(3, 1) * x(3, 2));
  CHECK(g132.str() == "x1 + x2 - x1*x2");
}

TEST_CASE("oracle base cases") {
  const MultiPoly s = schubert_oracle(Permutation::parse("4321"));
  std::vector<int> exp{3, 2, 1, 0};
  CHECK(s == MultiPoly::monomial(4, exp, 1));
  CHECK(grothendieck_oracle(Permutation::parse("321")) ==
        MultiPoly::monomial(3, {2, 1, 0}, 1));
  CHECK(grothendieck_oracle(Permutation::parse("132")) ==
        x(3, 1) + x(3, 2) - x(3, 1) * x(3, 2));
}

TEST_CASE("both BPD formulas agree with the divided-difference oracles on S_4") {
  for (const Permutation& w : all_permutations(4)) {
    CHECK(schubert(w) == schubert_oracle(w));
    CHECK(grothendieck(w) == grothendieck_oracle(w));
  }
}

TEST_CASE("schubert structure") {
  for (const Permutation& w : all_permutations(4)) {
    const MultiPoly s = schubert(w);
    CHECK(s.is_homogeneous());
    CHECK(s.total_degree() == w.length());
    CHECK(s.coefficient(w.lehmer_code()) == 1);
    const MultiPoly g = grothendieck(w);
    CHECK(g.homogeneous_component(w.length()) == s);
    CHECK(g.min_degree() == w.length());
  }
}

TEST_CASE("a_table") {
  const ExpansionTable id = a_table(Permutation::identity(3));
  REQUIRE(id.entries.size() == 1);
  CHECK(id.entries.at(Permutation::identity(3)) == 1);

  for (const Permutation& w : all_permutations(4)) {
    const ExpansionTable t = a_table(w);
    REQUIRE(t.entries.count(w) == 1);
    CHECK(t.entries.at(w) == 1);
    for (const auto& [v, a] : t.entries) {
      CHECK(a > 0);
      CHECK(v.length() >= w.length());
    }
  }

  // The 1423 figure's BPD has a non-reduced co-BPD, so it is not counted:
  // BPD(1423) has 3 members but only 2 contribute to the table.
  const ExpansionTable t1423 = a_table(Permutation::parse("1423"));
  Int total = 0;
  for (const auto& [v, a] : t1423.entries) total += a;
  CHECK(total == 2);
  CHECK(bpds_of(Permutation::parse("1423")).all.size() == 3);
  CHECK(t1423.to_csv().substr(0, 6) == "w,v,a\n");
}

TEST_CASE("the transition identity holds on S_4") {
  for (const Permutation& w : all_permutations(4)) CHECK(verify_g_to_s(w));
  CHECK(verify_g_to_s(Permutation::identity(2)));
  CHECK(verify_g_to_s(Permutation::parse("1423")));
}

TEST_CASE("schubert_expand") {
  CHECK(schubert_expand(x(3, 1) * x(3, 2), 3) ==
        std::map<Permutation, Int>{{Permutation::parse("231"), 1}});
  for (const Permutation& v : all_permutations(3))
    CHECK(schubert_expand(schubert(v), 3) == std::map<Permutation, Int>{{v, 1}});

  for (const Permutation& w : all_permutations(4)) {
    const auto coeffs = schubert_expand(grothendieck(w), 4);
    const ExpansionTable t = a_table(w);
    CHECK(coeffs.size() == t.entries.size());
    for (const auto& [v, c] : coeffs) {
      const int sign = (v.length() - w.length()) % 2 == 0 ? 1 : -1;
      REQUIRE(t.entries.count(v) == 1);
      CHECK(c == t.entries.at(v) * sign);
    }
  }

  CHECK_THROWS_AS(schubert_expand(x(3, 2) * x(3, 2), 3), NotInSpan);
}

TEST_CASE("serialization") {
  const MultiPoly g = grothendieck(Permutation::parse("132"));
  const auto j = g.to_json();
  REQUIRE(j.size() == 3);
  CHECK(j[0]["exp"] == nlohmann::json({1, 0, 0}));
  CHECK(j[0]["coef"] == 1);
  CHECK(j[2]["exp"] == nlohmann::json({1, 1, 0}));
  CHECK(j[2]["coef"] == -1);
}
