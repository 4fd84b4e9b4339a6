#include "bpd/classify.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "bpd/errors.hpp"
#include "bpd/trace.hpp"

namespace bpd {

namespace {

// Droop plans per pattern; (a,b) \searrow (c,d) stored as rect rows [a..c], cols [b..d].
const std::vector<std::pair<const char*, std::vector<Rect>>> kWitnessPlans = {
    {"1423", {{1, 2, 1, 3}}},
    {"12543", {{2, 3, 2, 4}, {1, 2, 1, 3}}},
    {"13254", {{2, 4, 3, 4}, {1, 2, 1, 3}}},
    {"25143", {{1, 2, 2, 4}, {3, 4, 1, 3}}},
    {"215643", {{1, 4, 2, 4}, {2, 3, 1, 3}}},
    {"216543", {{1, 4, 2, 4}, {2, 3, 1, 3}}},
    {"241653", {{2, 4, 4, 5}, {1, 2, 2, 4}, {3, 4, 1, 3}}},
};

std::pair<int, int> blocking_form(const Permutation& w, int pipe,
                                  const std::vector<int>& occ_rows,
                                  const std::vector<int>& occ_cols) {
  const Permutation inv = w.inverse();
  const int exit_row = inv(pipe);
  int x = 0, y = 0;
  for (int r : occ_rows)
    if (r < exit_row) ++x;
  for (int c : occ_cols)
    if (c < pipe) ++y;
  return {x, y};
}

struct RectProbe {
  bool active = false;
  std::vector<std::pair<int, int>> elbows;  // non-corner elbows when blocked-shaped
  bool shaped = false;                       // corners match the droop pattern
};

RectProbe probe(const Diagram& d, const Rect& r) {
  RectProbe p;
  const int n = d.size();
  if (!(1 <= r.top && r.top < r.bottom && r.bottom <= n && 1 <= r.left && r.left < r.right &&
        r.right <= n))
    return p;
  if (d.at(r.top, r.left) != Tile::SE || d.at(r.bottom, r.right) != Tile::Blank) return p;
  const Tile tr = d.at(r.top, r.right), bl = d.at(r.bottom, r.left);
  if ((tr != Tile::H && tr != Tile::NW) || (bl != Tile::V && bl != Tile::NW)) return p;
  p.shaped = true;
  for (int i = r.top; i <= r.bottom; ++i)
    for (int j = r.left; j <= r.right; ++j) {
      const bool corner = (i == r.top || i == r.bottom) && (j == r.left || j == r.right);
      const Tile t = d.at(i, j);
      if (!corner && (t == Tile::SE || t == Tile::NW)) p.elbows.push_back({i, j});
    }
  p.active = p.elbows.empty();
  return p;
}

}  // namespace

DroopPlan witness_plan(const Permutation& pi) {
  for (const auto& [name, moves] : kWitnessPlans)
    if (pi == Permutation::parse(name)) return {pi, moves};
  throw UnknownPattern(pi.str() + " is not one of the seven patterns");
}

nlohmann::json EmbedResult::to_json() const {
  nlohmann::json moves = nlohmann::json::array();
  for (const Rect& r : translated) moves.push_back({r.top, r.bottom, r.left, r.right});
  nlohmann::json j = {{"moves", moves}, {"blocked", blocked()}};
  if (blocked()) {
    j["blocked_move"] = blocked_move;
    nlohmann::json bl = nlohmann::json::array();
    for (const auto& b : blocking)
      bl.push_back({{"pipe", b.pipe}, {"form", {b.x, b.y}}});
    j["blocking"] = bl;
  } else {
    j["diagram"] = diagram->to_json();
  }
  return j;
}

EmbedResult embed_plan(const Permutation& w, const Permutation& pi,
                       const std::vector<int>& occurrence) {
  const DroopPlan base = witness_plan(pi);
  const int k = pi.size();
  if (static_cast<int>(occurrence.size()) != k) throw InvalidOccurrence("wrong occurrence size");
  for (int i = 1; i < k; ++i)
    if (occurrence[i - 1] >= occurrence[i]) throw InvalidOccurrence("indices not increasing");
  if (occurrence.front() < 1 || occurrence.back() > w.size())
    throw InvalidOccurrence("indices out of range");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if ((pi(i + 1) < pi(j + 1)) != (w(occurrence[i]) < w(occurrence[j])))
        throw InvalidOccurrence("values are not order-isomorphic to the pattern");

  // Row r of the pattern grid lands on the occurrence's r-th position; column
  // c lands on the c-th smallest occurrence value.
  std::vector<int> cols;
  for (int idx : occurrence) cols.push_back(w(idx));
  std::sort(cols.begin(), cols.end());
  const std::vector<int>& rows = occurrence;

  EmbedResult res;
  for (const Rect& m : base.moves)
    res.translated.push_back(
        {rows[m.top - 1], rows[m.bottom - 1], cols[m.left - 1], cols[m.right - 1]});

  Diagram d = rothe_bpd(w);
  for (size_t i = 0; i < res.translated.size(); ++i) {
    const Rect& r = res.translated[i];
    const RectProbe p = probe(d, r);
    if (!p.active) {
      res.blocked_move = static_cast<int>(i);
      if (p.shaped && !p.elbows.empty()) {
        const PipePaths paths = follow_pipes(d);
        std::vector<int> pipes;
        for (const auto& [er, ec] : p.elbows)
          pipes.push_back(paths.label_at(er, ec, kNorth | kEast | kSouth | kWest));
        std::sort(pipes.begin(), pipes.end());
        pipes.erase(std::unique(pipes.begin(), pipes.end()), pipes.end());
        for (int pipe : pipes) {
          const auto [x, y] = blocking_form(w, pipe, rows, cols);
          res.blocking.push_back({pipe, x, y});
        }
      }
      return res;
    }
    d = apply_droop(d, r);
  }
  res.diagram = std::move(d);
  return res;
}

bool all_co_reduced(const Permutation& w, const EnumerateOptions& opts) {
  for (const Diagram& d : bpds_of(w, opts).all)
    if (co_nonreduced(d)) return false;
  return true;
}

namespace {

// Blocked 1423 case: droop the right-most blocking pipe into the target
// blank, retarget to its old elbow, and repeat until the pattern pipe's own
// droop is clear.
std::optional<Diagram> construct_1423(const Diagram& start, const Rect& move) {
  Diagram d = start;
  std::pair<int, int> target{move.bottom, move.right};
  for (int guard = 0; guard <= d.size() * d.size(); ++guard) {
    const Rect r{move.top, target.first, move.left, target.second};
    const RectProbe p = probe(d, r);
    if (p.active) {
      d = apply_droop(d, r);
      return co_nonreduced(d) ? std::optional<Diagram>(d) : std::nullopt;
    }
    if (!p.shaped || p.elbows.empty()) return std::nullopt;
    auto rightmost = *std::max_element(
        p.elbows.begin(), p.elbows.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    if (d.at(rightmost.first, rightmost.second) != Tile::SE) return std::nullopt;
    const Rect sub{rightmost.first, target.first, rightmost.second, target.second};
    if (!probe(d, sub).active) return std::nullopt;
    d = apply_droop(d, sub);
    target = rightmost;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Diagram> witness(const Permutation& w, const EnumerateOptions& opts) {
  if (w.size() > opts.max_n)
    throw LimitExceeded("witness: n > " + std::to_string(opts.max_n));
  bool contains_some = false;
  for (const Permutation& pi : PatternSet::pi().patterns) {
    for (const auto& occ : occurrences(w, pi)) {
      contains_some = true;
      EmbedResult res = embed_plan(w, pi, occ);
      if (!res.blocked()) {
        if (co_nonreduced(*res.diagram)) return res.diagram;
        continue;
      }
      if (pi == Permutation::parse("1423")) {  // the constructive blocked case
        auto built = construct_1423(rothe_bpd(w), res.translated[0]);
        if (built) return built;
      }
    }
  }
  if (!contains_some) return std::nullopt;
  // The remaining blocked patterns are covered by exhaustive search.
  for (const Diagram& d : bpds_of(w, opts).all)
    if (co_nonreduced(d)) return d;
  throw InternalInconsistency("witness: " + w.str() +
                              " contains a pattern but no non-reduced co-BPD exists");
}

std::optional<Diagram> nonreduced_bpd_witness(const Permutation& w, const EnumerateOptions& opts,
                                              WitnessRoute* route) {
  if (route) *route = WitnessRoute::None;
  const Permutation pat2143 = Permutation::parse("2143");
  const auto occs = occurrences(w, pat2143);
  if (occs.empty()) return std::nullopt;

  // "i and j as large as possible": maximize the '2' value, then the '1'
  // value, then take the lexicographically smallest positions.
  std::vector<int> best;
  for (const auto& occ : occs) {
    if (best.empty()) { best = occ; continue; }
    const auto key = [&](const std::vector<int>& o) {
      return std::make_tuple(w(o[0]), w(o[1]), -o[0], -o[1], -o[2], -o[3]);
    };
    if (key(occ) > key(best)) best = occ;
  }
  const int p1 = best[0], p2 = best[1], p3 = best[2], p4 = best[3];
  const int jv = w(p1), iv = w(p2), kv = w(p4);  // values: iv < jv < kv < w(p3)

  auto constructed = [&]() -> std::optional<Diagram> {
    try {
      Diagram d = rothe_bpd(w);
      const Permutation inv = w.inverse();
      std::pair<int, int> blank{p3, kv};
      if (d.at(blank.first, blank.second) != Tile::Blank)
        throw ConstructionFailed("expected blank southeast of the i and j elbows");
      // Blocking pipes j' with j < j' < k exiting between i and l droop into
      // the blank from largest to smallest.
      std::vector<int> blockers;
      for (int m = jv + 1; m < kv; ++m)
        if (p2 < inv(m) && inv(m) < p3) blockers.push_back(m);
      std::sort(blockers.rbegin(), blockers.rend());
      for (int m : blockers) {
        const std::pair<int, int> elbow{inv(m), m};
        if (!(elbow.first < blank.first && elbow.second < blank.second)) continue;
        d = apply_droop(d, {elbow.first, blank.first, elbow.second, blank.second});
        blank = elbow;
      }
      d = apply_droop(d, {p2, blank.first, iv, blank.second});
      // K-droop j over the fresh SE elbow of i at (p2, blank col).
      d = apply_k_droop(d, {MoveKind::KForm2, {p1, blank.first, jv, blank.second}, p2});
      const TraceResult t = trace(d);
      if (t.perm != w || t.reduced)
        throw ConstructionFailed("construction produced the wrong diagram");
      return d;
    } catch (const Error&) {
      return std::nullopt;
    }
  }();
  if (constructed) {
    if (route) *route = WitnessRoute::Constructive;
    return constructed;
  }
  for (const Diagram& d : bpds_of(w, opts).all)
    if (!is_reduced(d)) {
      if (route) *route = WitnessRoute::Search;
      return d;
    }
  throw InternalInconsistency("nonreduced_bpd_witness: " + w.str() +
                              " contains 2143 but has no non-reduced BPD");
}

namespace {

struct Agg {
  int count = 0, nonred_co = 0;
};

// Fan the per-diagram work across jobs; counts merge commutatively, so the
// result is independent of the chunking.
std::map<Permutation, Agg> aggregate(const std::vector<Diagram>& diagrams, int jobs) {
  jobs = std::max(1, jobs);
  auto work = [](const Diagram* begin, const Diagram* end) {
    std::map<Permutation, Agg> local;
    for (const Diagram* d = begin; d != end; ++d) {
      Agg& a = local[trace(*d).perm];
      ++a.count;
      if (co_nonreduced(*d)) ++a.nonred_co;
    }
    return local;
  };
  if (jobs == 1 || diagrams.size() < 64) return work(diagrams.data(), diagrams.data() + diagrams.size());
  std::vector<std::future<std::map<Permutation, Agg>>> futs;
  const size_t chunk = (diagrams.size() + jobs - 1) / jobs;
  for (size_t lo = 0; lo < diagrams.size(); lo += chunk) {
    const size_t hi = std::min(lo + chunk, diagrams.size());
    futs.push_back(std::async(std::launch::async, work, diagrams.data() + lo, diagrams.data() + hi));
  }
  std::map<Permutation, Agg> merged;
  for (auto& f : futs)
    for (const auto& [w, a] : f.get()) {
      merged[w].count += a.count;
      merged[w].nonred_co += a.nonred_co;
    }
  return merged;
}

}  // namespace

TheoremReport verify_main_theorem(int n, const EnumerateOptions& opts) {
  TheoremReport rep;
  rep.n = n;
  const std::map<Permutation, Agg> agg = aggregate(all_diagrams(n, opts), opts.jobs);
  for (const Permutation& w : all_permutations(n)) {
    const auto it = agg.find(w);
    const Agg a = it == agg.end() ? Agg{} : it->second;
    TheoremReport::Row row{w, avoids_all(w, PatternSet::pi()), a.nonred_co == 0, a.count,
                           a.nonred_co};
    if (!row.agree()) ++rep.disagreements;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string TheoremReport::to_text() const {
  std::string out = "verify-theorem n=" + std::to_string(n) + "\n";
  int nonavoiders = 0;
  for (const auto& r : rows) {
    if (!r.avoids_pi) ++nonavoiders;
    out += r.w.str() + " avoids_pi=" + (r.avoids_pi ? "yes" : "no ") +
           " all_co_reduced=" + (r.all_co_reduced ? "yes" : "no ") +
           " bpds=" + std::to_string(r.bpd_count) +
           " nonreduced_co=" + std::to_string(r.nonreduced_co_count) +
           (r.agree() ? "" : "  DISAGREE") + "\n";
  }
  out += "permutations=" + std::to_string(rows.size()) +
         " non_avoiders=" + std::to_string(nonavoiders) +
         " disagreements=" + std::to_string(disagreements) + "\n";
  return out;
}

nlohmann::json TheoremReport::to_json() const {
  nlohmann::json rws = nlohmann::json::array();
  for (const auto& r : rows)
    rws.push_back({{"w", r.w.entries()},
                   {"avoids_pi", r.avoids_pi},
                   {"all_co_reduced", r.all_co_reduced},
                   {"bpds", r.bpd_count},
                   {"nonreduced_co", r.nonreduced_co_count},
                   {"agree", r.agree()}});
  return {{"n", n}, {"rows", rws}, {"disagreements", disagreements}};
}

ReverseReport co_reverse_pattern_check(int n, const EnumerateOptions& opts) {
  ReverseReport rep;
  rep.n = n;
  const PatternSet pir = PatternSet::pi().reversed();
  const auto diagrams = all_diagrams(n, opts);
  const int jobs = std::max(1, opts.jobs);
  auto work = [&pir](const Diagram* begin, const Diagram* end) {
    std::pair<int, std::vector<Diagram>> local{0, {}};
    for (const Diagram* d = begin; d != end; ++d) {
      if (is_reduced(*d)) continue;
      ++local.first;
      if (avoids_all(trace(co(*d)).perm, pir)) local.second.push_back(*d);
    }
    return local;
  };
  if (jobs == 1 || diagrams.size() < 64) {
    auto [count, viol] = work(diagrams.data(), diagrams.data() + diagrams.size());
    rep.nonreduced_checked = count;
    rep.violations = std::move(viol);
    return rep;
  }
  std::vector<std::future<std::pair<int, std::vector<Diagram>>>> futs;
  const size_t chunk = (diagrams.size() + jobs - 1) / jobs;
  for (size_t lo = 0; lo < diagrams.size(); lo += chunk) {
    const size_t hi = std::min(lo + chunk, diagrams.size());
    futs.push_back(std::async(std::launch::async, work, diagrams.data() + lo, diagrams.data() + hi));
  }
  for (auto& f : futs) {  // chunks are in scan order, so the merge is stable
    auto [count, viol] = f.get();
    rep.nonreduced_checked += count;
    rep.violations.insert(rep.violations.end(), viol.begin(), viol.end());
  }
  return rep;
}

std::string ReverseReport::to_text() const {
  std::string out = "co-reverse-check n=" + std::to_string(n) +
                    " nonreduced=" + std::to_string(nonreduced_checked) +
                    " violations=" + std::to_string(violations.size()) + "\n";
  for (const Diagram& d : violations) out += d.to_text() + "\n\n";
  return out;
}

nlohmann::json ReverseReport::to_json() const {
  nlohmann::json v = nlohmann::json::array();
  for (const Diagram& d : violations) v.push_back(d.to_json());
  return {{"n", n}, {"nonreduced_checked", nonreduced_checked}, {"violations", v}};
}

}  // namespace bpd
