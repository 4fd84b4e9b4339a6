// Acceptance suite: one line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "bpd/classify.hpp"
#include "bpd/errors.hpp"
#include "bpd/poly.hpp"

using namespace bpd;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<std::string()>& run) {
  const auto start = Clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = run();  // empty string means pass
    ok = detail.empty();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  std::printf("%s  %2d. %s (%lldms)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              static_cast<long long>(ms), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string run_cli(const std::string& cli, const std::string& args, int* exit_code) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

EnumerateOptions jobs(int j) {
  EnumerateOptions o;
  o.jobs = j;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "main theorem exhaustive, n=3..6", [] {
    const auto t0 = Clock::now();
    for (int n = 3; n <= 6; ++n) {
      const TheoremReport rep = verify_main_theorem(n, jobs(4));
      if (rep.disagreements != 0)
        return "n=" + std::to_string(n) + ": " + std::to_string(rep.disagreements) +
               " disagreements";
      if (n == 4) {
        std::vector<Permutation> non;
        for (const auto& row : rep.rows)
          if (!row.avoids_pi) non.push_back(row.w);
        if (non != std::vector<Permutation>{Permutation::parse("1423")})
          return std::string("n=4 non-avoiding set is not exactly {1423}");
      }
      const auto secs =
          std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - t0).count();
      if (n <= 5 && secs >= 60) return std::string("n<=5 exceeded the 1 minute target");
      if (n == 6 && secs >= 1800) return std::string("n=6 exceeded the 30 minute target");
    }
    return std::string();
  });

  criterion(2, "configuration presence matches co-trace reducedness, n<=5", [] {
    for (int n = 1; n <= 5; ++n)
      for (const Diagram& d : all_diagrams(n))
        if (find_configurations(d).empty() == !is_reduced(co(d)))
          return "exception at\n" + d.to_text();
    return std::string();
  });

  criterion(3, "droop (1,1)->(2,3) on rothe(1423): co-BPD non-reduced, traces 3412", [] {
    const Diagram end = apply_droop(rothe_bpd(Permutation::parse("1423")), {1, 2, 1, 3});
    const TraceResult t = trace(co(end));
    if (t.reduced) return std::string("co-BPD is reduced");
    if (t.perm != Permutation::parse("3412"))
      return "co-BPD traces " + t.perm.str() + ", not 3412";
    return std::string();
  });

  criterion(4, "all seven witness plans execute and contain the configuration", [] {
    for (const Permutation& pi : PatternSet::pi().patterns) {
      Diagram d = rothe_bpd(pi);
      for (const Rect& r : witness_plan(pi).moves) d = apply_droop(d, r);
      if (find_configurations(d).empty()) return pi.str() + ": end state has no configuration";
      if (is_reduced(co(d))) return pi.str() + ": co-BPD is reduced";
    }
    return std::string();
  });

  criterion(5, "polynomial formulas equal the divided-difference oracles, S_4 and S_5", [] {
    for (int n = 4; n <= 5; ++n) {
      const auto t0 = Clock::now();
      for (const Permutation& w : all_permutations(n)) {
        if (!(schubert(w) == schubert_oracle(w))) return "Schubert mismatch at " + w.str();
        if (!(grothendieck(w) == grothendieck_oracle(w)))
          return "Grothendieck mismatch at " + w.str();
      }
      const auto secs =
          std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - t0).count();
      if (secs >= 300) return "S_" + std::to_string(n) + " exceeded the 5 minute target";
    }
    return std::string();
  });

  criterion(6, "Grothendieck-to-Schubert identity, S_4 and S_5", [] {
    for (int n = 4; n <= 5; ++n)
      for (const Permutation& w : all_permutations(n))
        if (!verify_g_to_s(w)) return "identity fails at " + w.str();
    return std::string();
  });

  criterion(7, "move-closure completeness on S_4", [] {
    for (const Permutation& w : all_permutations(4)) {
      const BpdSet set = bpds_of(w);
      auto texts = [](const std::vector<Diagram>& v) {
        std::set<std::string> out;
        for (const Diagram& d : v) out.insert(d.to_text());
        return out;
      };
      if (texts(closure_of(w, false)) != texts(set.reduced))
        return "droop closure misses bpd(" + w.str() + ")";
      if (texts(closure_of(w, true)) != texts(set.all))
        return "droop+K closure misses BPD(" + w.str() + ")";
    }
    return std::string();
  });

  criterion(8, "vexillary equivalence and constructive witnesses on S_5", [] {
    const Permutation p2143 = Permutation::parse("2143");
    for (const Permutation& w : all_permutations(5)) {
      const BpdSet set = bpds_of(w);
      const bool all_red = set.all.size() == set.reduced.size();
      if (all_red != !contains(w, p2143)) return "vexillary equivalence fails at " + w.str();
      if (contains(w, p2143)) {
        WitnessRoute route;
        const auto d = nonreduced_bpd_witness(w, {}, &route);
        if (!d) return "no non-reduced witness for " + w.str();
        if (route != WitnessRoute::Constructive)
          return "construction fell back to search at " + w.str();
        if (trace(*d).perm != w || is_reduced(*d)) return "bad witness for " + w.str();
      }
    }
    return std::string();
  });

  criterion(9, "non-reduced co-traces contain a reversed pattern, n<=5", [] {
    for (int n = 1; n <= 5; ++n) {
      const ReverseReport rep = co_reverse_pattern_check(n, jobs(4));
      if (!rep.violations.empty())
        return "n=" + std::to_string(n) + ": " + std::to_string(rep.violations.size()) +
               " violations";
    }
    return std::string();
  });

  criterion(10, "structural lemmas and case predictions, n<=5", [] {
    const std::vector<std::vector<Permutation>> predicted = {
        {Permutation::parse("1423"), Permutation::parse("13254")},
        {Permutation::parse("1423"), Permutation::parse("12543"), Permutation::parse("13254"),
         Permutation::parse("25143"), Permutation::parse("216543"),
         Permutation::parse("241653")},
        {Permutation::parse("1423"), Permutation::parse("12543"), Permutation::parse("13254"),
         Permutation::parse("215643"), Permutation::parse("216543")}};
    for (int n = 1; n <= 5; ++n)
      for (const Diagram& d : all_diagrams(n)) {
        if (!lemma_predicates(d).all_pass()) return "lemma violation at\n" + d.to_text();
        const auto insts = find_configurations(d);
        if (insts.empty()) continue;
        const Permutation perm = trace(d).perm;
        for (const ConfigInstance& inst : insts) {
          const ConfigCase c = classify_case(d, inst);
          bool ok = false;
          for (const Permutation& p : predicted[static_cast<int>(c)]) ok |= contains(perm, p);
          if (!ok)
            return std::string(config_case_name(c)) + " prediction fails at\n" + d.to_text();
        }
      }
    return std::string();
  });

  criterion(11, "determinism: verify-theorem --n 5 --jobs 8 twice, byte-identical", [&cli] {
    if (cli.empty()) return std::string("CLI path not supplied");
    int code1 = 0, code2 = 0;
    const std::string out1 = run_cli(cli, "verify-theorem --n 5 --jobs 8", &code1);
    const std::string out2 = run_cli(cli, "verify-theorem --n 5 --jobs 8", &code2);
    if (code1 != 0 || code2 != 0)
      return "exit codes " + std::to_string(code1) + ", " + std::to_string(code2);
    if (out1.empty()) return std::string("no output");
    if (out1 != out2) return std::string("outputs differ between runs");
    return std::string();
  });

  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  else std::printf("all 11 criteria passed\n");
  return g_failures == 0 ? 0 : 1;
}
