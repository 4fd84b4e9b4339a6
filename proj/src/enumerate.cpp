#include "bpd/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <set>

#include "bpd/errors.hpp"
#include "bpd/moves.hpp"
#include "bpd/trace.hpp"

namespace bpd {

namespace {

void check_n(int n, const EnumerateOptions& opts) {
  if (n < 1 || n > opts.max_n)
    throw LimitExceeded("n = " + std::to_string(n) + " outside 1.." + std::to_string(opts.max_n));
}

// Candidate tiles at a cell, forced by (south-in, west-in) and the boundary.
// The fixed ordering below makes the generation order deterministic.
int candidates(int n, int row, int col, bool sin, bool win, Tile out[2]) {
  Tile base[2];
  int k = 0;
  if (sin && win) base[k++] = Tile::X;
  else if (sin) { base[k++] = Tile::V; base[k++] = Tile::SE; }
  else if (win) { base[k++] = Tile::H; base[k++] = Tile::NW; }
  else base[k++] = Tile::Blank;
  int m = 0;
  for (int i = 0; i < k; ++i) {
    if (row == 1 && tile_has(base[i], kNorth)) continue;
    if (col == n && !tile_has(base[i], kEast)) continue;
    out[m++] = base[i];
  }
  return m;
}

void dfs(Diagram& d, int row, int col, const std::function<void(const Diagram&)>& fn) {
  const int n = d.size();
  if (row == 0) {
    fn(d);
    return;
  }
  const bool sin = row == n ? true : tile_has(d.at(row + 1, col), kNorth);
  const bool win = col == 1 ? false : tile_has(d.at(row, col - 1), kEast);
  Tile cand[2];
  const int m = candidates(n, row, col, sin, win, cand);
  const int nrow = col == n ? row - 1 : row;
  const int ncol = col == n ? 1 : col + 1;
  for (int i = 0; i < m; ++i) {
    d.set(row, col, cand[i]);
    dfs(d, nrow, ncol, fn);
  }
  d.set(row, col, Tile::Blank);
}

}  // namespace

void for_each_diagram(int n, const std::function<void(const Diagram&)>& fn,
                      const EnumerateOptions& opts) {
  check_n(n, opts);
  Diagram d(n, Mode::Bpd);
  dfs(d, n, 1, fn);
}

std::vector<Diagram> all_diagrams(int n, const EnumerateOptions& opts) {
  check_n(n, opts);
  if (opts.jobs <= 1 || n < 3) {
    std::vector<Diagram> out;
    for_each_diagram(n, [&](const Diagram& d) { out.push_back(d); }, opts);
    return out;
  }
  // Fan out: enumerate the bottom row sequentially, expand each prefix in a
  // worker, and concatenate in prefix order so the result order matches the
  // sequential scan.
  std::vector<Diagram> prefixes;
  {
    Diagram d(n, Mode::Bpd);
    std::function<void(int)> bottom = [&](int col) {
      if (col > n) {
        prefixes.push_back(d);
        return;
      }
      const bool win = col == 1 ? false : tile_has(d.at(n, col - 1), kEast);
      Tile cand[2];
      const int m = candidates(n, n, col, true, win, cand);
      for (int i = 0; i < m; ++i) {
        d.set(n, col, cand[i]);
        bottom(col + 1);
      }
      d.set(n, col, Tile::Blank);
    };
    bottom(1);
  }
  std::vector<std::future<std::vector<Diagram>>> futs;
  for (const auto& p : prefixes)
    futs.push_back(std::async(std::launch::async, [p, n]() {
      std::vector<Diagram> out;
      Diagram d = p;
      dfs(d, n - 1, 1, [&](const Diagram& g) { out.push_back(g); });
      return out;
    }));
  std::vector<Diagram> out;
  for (auto& f : futs) {
    auto part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

using Groups = std::map<Permutation, BpdSet>;

std::shared_ptr<const Groups> groups_for(int n, const EnumerateOptions& opts) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Groups>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  auto groups = std::make_shared<Groups>();
  for (const Diagram& d : all_diagrams(n, opts)) {
    const TraceResult t = trace(d);
    auto [it, fresh] = groups->try_emplace(t.perm, BpdSet{t.perm, {}, {}});
    it->second.all.push_back(d);
    if (t.reduced) it->second.reduced.push_back(d);
  }
  auto by_text = [](const Diagram& a, const Diagram& b) { return a.to_text() < b.to_text(); };
  for (auto& [w, set] : *groups) {
    std::sort(set.all.begin(), set.all.end(), by_text);
    std::sort(set.reduced.begin(), set.reduced.end(), by_text);
  }
  std::lock_guard lock(mu);
  auto [it, fresh] = memo.try_emplace(n, groups);
  return it->second;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int n, const Permutation& w) {
  return dir / (std::string("v") + kLibraryVersion) / ("n" + std::to_string(n)) /
         (w.str() + ".json");
}

std::optional<BpdSet> cache_load(const std::filesystem::path& file, const Permutation& w) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  nlohmann::json j;
  in >> j;
  BpdSet set{w, {}, {}};
  for (const auto& item : j) {
    Diagram d = Diagram::from_json(item);
    set.all.push_back(d);
    if (is_reduced(d)) set.reduced.push_back(d);
  }
  return set;
}

void cache_store(const std::filesystem::path& file, const BpdSet& set) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  nlohmann::json j = nlohmann::json::array();
  for (const Diagram& d : set.all) j.push_back(d.to_json());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;  // cache is best-effort
    out << j;
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace

BpdSet bpds_of(const Permutation& w, const EnumerateOptions& opts) {
  check_n(w.size(), opts);
  if (opts.cache_dir) {
    const auto file = cache_file(*opts.cache_dir, w.size(), w);
    if (auto hit = cache_load(file, w)) return *hit;
  }
  auto groups = groups_for(w.size(), opts);
  auto it = groups->find(w);
  BpdSet set = it != groups->end() ? it->second : BpdSet{w, {}, {}};
  if (opts.cache_dir) cache_store(cache_file(*opts.cache_dir, w.size(), w), set);
  return set;
}

std::vector<Diagram> closure_of(const Permutation& w, bool use_k, const EnumerateOptions& opts) {
  check_n(w.size(), opts);
  std::map<std::string, Diagram> seen;
  std::deque<Diagram> frontier;
  const Diagram start = rothe_bpd(w);
  seen.emplace(start.to_text(), start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    const Diagram d = frontier.front();
    frontier.pop_front();
    std::vector<Diagram> next;
    for (const Rect& r : find_active_regions(d)) next.push_back(apply_droop(d, r));
    if (use_k)
      for (const DroopMove& m : find_k_droops(d)) next.push_back(apply_k_droop(d, m));
    for (Diagram& g : next) {
      auto [it, fresh] = seen.emplace(g.to_text(), g);
      if (fresh) frontier.push_back(std::move(g));
    }
  }
  std::vector<Diagram> out;
  for (auto& [text, d] : seen) out.push_back(d);
  return out;
}

}  // namespace bpd
