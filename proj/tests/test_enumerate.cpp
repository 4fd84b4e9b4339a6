#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <set>

#include "bpd/enumerate.hpp"
#include "bpd/errors.hpp"
#include "bpd/trace.hpp"

using namespace bpd;

TEST_CASE("diagram counts for small n") {
  CHECK(all_diagrams(1).size() == 1);
  CHECK(all_diagrams(1)[0].to_text() == "r");
  CHECK(all_diagrams(2).size() == 2);
  CHECK(all_diagrams(3).size() == 7);
  CHECK(all_diagrams(4).size() == 42);
  CHECK(all_diagrams(5).size() == 429);
}

TEST_CASE("n=2 yields exactly the two Rothe BPDs") {
  std::set<std::string> texts;
  for (const Diagram& d : all_diagrams(2)) texts.insert(d.to_text());
  CHECK(texts == std::set<std::string>{rothe_bpd(Permutation::parse("12")).to_text(),
                                       rothe_bpd(Permutation::parse("21")).to_text()});
}

TEST_CASE("every emitted diagram is valid and unique") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> seen;
    for (const Diagram& d : all_diagrams(n)) {
      CHECK(d.is_valid());
      CHECK(seen.insert(d.to_text()).second);
    }
  }
}

TEST_CASE("partition by traced permutation") {
  for (int n = 3; n <= 5; ++n) {
    size_t total = 0;
    for (const Permutation& w : all_permutations(n)) {
      const BpdSet set = bpds_of(w);
      total += set.all.size();
      CHECK(set.reduced.size() <= set.all.size());
      const std::string rothe = rothe_bpd(w).to_text();
      bool has_rothe = false;
      for (const Diagram& d : set.reduced) has_rothe |= d.to_text() == rothe;
      CHECK(has_rothe);
      for (const Diagram& d : set.all) CHECK(trace(d).perm == w);
      CHECK(std::is_sorted(set.all.begin(), set.all.end(),
                           [](const Diagram& a, const Diagram& b) {
                             return a.to_text() < b.to_text();
                           }));
    }
    CHECK(total == all_diagrams(n).size());
  }
}

TEST_CASE("specific BPD sets") {
  CHECK(bpds_of(Permutation::identity(4)).all.size() == 1);
  CHECK(bpds_of(Permutation::identity(4)).reduced.size() == 1);
  CHECK(bpds_of(Permutation::parse("321")).all.size() == 1);
  const BpdSet s2143 = bpds_of(Permutation::parse("2143"));
  CHECK(s2143.all.size() > s2143.reduced.size());
}

TEST_CASE("the n=3 count cross-checks against move closures") {
  size_t by_closure = 0;
  for (const Permutation& w : all_permutations(3)) by_closure += closure_of(w, true).size();
  CHECK(by_closure == all_diagrams(3).size());
}

TEST_CASE("closure_of(132) without K gives the two reduced diagrams") {
  const auto closure = closure_of(Permutation::parse("132"), false);
  CHECK(closure.size() == 2);
  const BpdSet set = bpds_of(Permutation::parse("132"));
  REQUIRE(set.reduced.size() == 2);
  CHECK(closure[0] == set.reduced[0]);
  CHECK(closure[1] == set.reduced[1]);
  CHECK(closure_of(Permutation::parse("132"), true).size() == set.all.size());
}

TEST_CASE("parallel generation preserves the sequential order") {
  EnumerateOptions par;
  par.jobs = 4;
  CHECK(all_diagrams(4, par) == all_diagrams(4));
  CHECK(all_diagrams(5, par) == all_diagrams(5));
}

TEST_CASE("size guardrail") {
  CHECK_THROWS_AS(all_diagrams(8), LimitExceeded);
  CHECK_THROWS_AS(all_diagrams(0), LimitExceeded);
  EnumerateOptions tight;
  tight.max_n = 3;
  CHECK_THROWS_AS(all_diagrams(4, tight), LimitExceeded);
  CHECK_THROWS_AS(bpds_of(Permutation::identity(4), tight), LimitExceeded);
}

TEST_CASE("disk cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "bpd-cache-test";
  std::filesystem::remove_all(dir);
  EnumerateOptions opts;
  opts.cache_dir = dir;
  const Permutation w = Permutation::parse("2143");
  const BpdSet first = bpds_of(w, opts);
  const auto file = dir / (std::string("v") + kLibraryVersion) / "n4" / "2143.json";
  CHECK(std::filesystem::exists(file));
  const BpdSet second = bpds_of(w, opts);  // served from disk
  REQUIRE(second.all.size() == first.all.size());
  for (size_t i = 0; i < first.all.size(); ++i) CHECK(second.all[i] == first.all[i]);
  CHECK(second.reduced.size() == first.reduced.size());
  std::filesystem::remove_all(dir);
}

TEST_CASE("vexillary equivalence on S_5") {
  const Permutation p2143 = Permutation::parse("2143");
  for (const Permutation& w : all_permutations(5)) {
    const BpdSet set = bpds_of(w);
    CHECK((set.all.size() == set.reduced.size()) == !contains(w, p2143));
  }
}
