#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "bpd/errors.hpp"
#include "bpd/perm.hpp"

using namespace bpd;

namespace {

// Independent containment oracle: try every index subset.
bool contains_brute(const Permutation& w, const Permutation& p) {
  const int n = w.size(), k = p.size();
  if (k > n) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = a + 1; b < k && ok; ++b)
        ok = (p(a + 1) < p(b + 1)) == (w(idx[a] + 1) < w(idx[b] + 1));
    if (ok) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TEST_CASE("parsing accepts both forms and rejects junk") {
  CHECK(Permutation::parse("25143") == Permutation::parse("2,5,1,4,3"));
  CHECK(Permutation::parse("1") == Permutation::identity(1));
  CHECK_THROWS_AS(Permutation::parse("1223"), InvalidInput);
  CHECK_THROWS_AS(Permutation::parse("10,2"), InvalidInput);
  CHECK_THROWS_AS(Permutation::parse("a"), InvalidInput);
  CHECK_THROWS_AS(Permutation::parse(""), InvalidInput);
  CHECK(Permutation::parse("10,2,1,3,4,5,6,7,8,9").size() == 10);
}

TEST_CASE("length") {
  CHECK(Permutation::parse("1432").length() == 3);
  CHECK(Permutation::identity(6).length() == 0);
  CHECK(Permutation::parse("25143").length() == 5);
}

TEST_CASE("containment worked examples") {
  std::vector<int> wit;
  CHECK(contains(Permutation::parse("526134"), Permutation::parse("1423"), &wit));
  std::vector<int> values;
  const Permutation w = Permutation::parse("526134");
  for (int i : wit) values.push_back(w(i));
  CHECK(values == std::vector<int>{2, 6, 3, 4});
  CHECK(std::is_sorted(wit.begin(), wit.end()));
  CHECK_FALSE(contains(Permutation::parse("526134"), Permutation::parse("1234")));
  CHECK(contains(Permutation::parse("526134"), Permutation::parse("1")));
}

TEST_CASE("containment agrees with the subset oracle") {
  const std::vector<Permutation> pats = {
      Permutation::parse("1423"), Permutation::parse("2143"), Permutation::parse("321"),
      Permutation::parse("12543"), Permutation::parse("13254")};
  for (const Permutation& w : all_permutations(5))
    for (const Permutation& p : pats)
      CHECK(contains(w, p) == contains_brute(w, p));
  // a couple of larger spot checks
  for (const char* ws : {"526134", "3612547", "45312678", "87654321"}) {
    const Permutation w = Permutation::parse(ws);
    for (const Permutation& p : pats) CHECK(contains(w, p) == contains_brute(w, p));
  }
}

TEST_CASE("occurrences come in lexicographic order") {
  const auto occ = occurrences(Permutation::parse("13524"), Permutation::parse("1423"));
  CHECK(occ == std::vector<std::vector<int>>{{1, 3, 4, 5}});
  const auto many = occurrences(Permutation::parse("14325"), Permutation::parse("132"));
  CHECK(std::is_sorted(many.begin(), many.end()));
  CHECK_FALSE(many.empty());
}

TEST_CASE("pattern set Pi") {
  const PatternSet& pi = PatternSet::pi();
  REQUIRE(pi.patterns.size() == 7);
  CHECK_FALSE(avoids_all(Permutation::parse("1423"), pi));
  CHECK(avoids_all(Permutation::identity(8), pi));
  CHECK(avoids_all(Permutation::parse("2143"), pi));
  const PatternSet pir = pi.reversed();
  CHECK(pir.patterns[0] == Permutation::parse("3241"));
  CHECK(pir.patterns[6] == Permutation::parse("356142"));
}

TEST_CASE("reverse") {
  CHECK(Permutation::parse("1423").reversed() == Permutation::parse("3241"));
  CHECK(Permutation::identity(4).reversed() == Permutation::parse("4321"));
  for (const Permutation& w : all_permutations(5)) {
    CHECK(w.reversed().reversed() == w);
    CHECK(w.reversed().length() == 10 - w.length());
  }
}

TEST_CASE("inverse is an involution") {
  for (const Permutation& w : all_permutations(5)) CHECK(w.inverse().inverse() == w);
}

TEST_CASE("rothe diagram") {
  CHECK(rothe_diagram(Permutation::identity(4)).empty());
  CHECK(rothe_diagram(Permutation::parse("21")) ==
        std::set<std::pair<int, int>>{{1, 1}});
  CHECK(rothe_diagram(Permutation::parse("1423")) ==
        std::set<std::pair<int, int>>{{2, 2}, {2, 3}});
  for (int n = 1; n <= 7; ++n)
    for (const Permutation& w : all_permutations(n))
      CHECK(static_cast<int>(rothe_diagram(w).size()) == w.length());
}

TEST_CASE("lehmer code") {
  CHECK(Permutation::identity(5).lehmer_code() == std::vector<int>{0, 0, 0, 0, 0});
  CHECK(Permutation::parse("1423").lehmer_code() == std::vector<int>{0, 2, 0, 0});
  CHECK(Permutation::parse("4321").lehmer_code() == std::vector<int>{3, 2, 1, 0});
  for (const Permutation& w : all_permutations(5)) {
    const auto code = w.lehmer_code();
    CHECK(std::accumulate(code.begin(), code.end(), 0) == w.length());
  }
}

TEST_CASE("containment order sanity") {
  // reflexive, and transitive along a chain
  const Permutation a = Permutation::parse("132"), b = Permutation::parse("1423"),
                    c = Permutation::parse("15243");
  CHECK(contains(a, a));
  CHECK(contains(b, a));
  CHECK(contains(c, b));
  CHECK(contains(c, a));
}
