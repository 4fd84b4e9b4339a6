#include "bpd/config.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "bpd/errors.hpp"

namespace bpd {

namespace {

using Cell = std::pair<int, int>;

bool is_elbow(Tile t) { return t == Tile::SE || t == Tile::NW; }

// First SE/NW strictly beyond (r,c) in direction (dr,dc); {0,0} if none.
Cell closest_elbow(const Diagram& d, int r, int c, int dr, int dc) {
  r += dr;
  c += dc;
  while (1 <= r && r <= d.size() && 1 <= c && c <= d.size()) {
    if (is_elbow(d.at(r, c))) return {r, c};
    r += dr;
    c += dc;
  }
  return {0, 0};
}

bool tile_at(const Diagram& d, Cell cell, Tile t) {
  return cell.first != 0 && d.at(cell.first, cell.second) == t;
}

// SE -> (right) NW -> (below) SE -> ... until the target SE; the walk is
// strictly monotone southeast, so it terminates.
bool are_chain_to(const Diagram& d, Cell from, Cell target, std::vector<Cell>& chain) {
  Cell a = from;
  chain = {a};
  while (true) {
    if (a == target) return true;
    const Cell j = closest_elbow(d, a.first, a.second, 0, 1);
    if (!tile_at(d, j, Tile::NW)) return false;
    const Cell e = closest_elbow(d, j.first, j.second, 1, 0);
    if (!tile_at(d, e, Tile::SE)) return false;
    a = e;
    chain.push_back(a);
  }
}

// NW -> (below) SE -> (right) NW -> ... until the target NW.
bool jay_chain_to(const Diagram& d, Cell from, Cell target, std::vector<Cell>& chain) {
  Cell b = from;
  chain = {b};
  while (true) {
    if (b == target) return true;
    const Cell e = closest_elbow(d, b.first, b.second, 1, 0);
    if (!tile_at(d, e, Tile::SE)) return false;
    const Cell j = closest_elbow(d, e.first, e.second, 0, 1);
    if (!tile_at(d, j, Tile::NW)) return false;
    b = j;
    chain.push_back(b);
  }
}

}  // namespace

nlohmann::json ConfigInstance::to_json() const {
  auto cells = [](const std::vector<Cell>& v) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [r, c] : v) j.push_back({r, c});
    return j;
  };
  return {{"top_flat", {top_flat.first, top_flat.second}},
          {"bottom_flat", {bottom_flat.first, bottom_flat.second}},
          {"are_chain", cells(are_chain)},
          {"jay_chain", cells(jay_chain)},
          {"p", p},
          {"q", q}};
}

std::vector<ConfigInstance> find_configurations(const Diagram& d) {
  if (!d.is_valid()) throw InvalidInput("find_configurations: diagram is not valid");
  if (d.mode() != Mode::Bpd) throw InvalidInput("find_configurations expects a BPD");
  const int n = d.size();
  std::vector<Cell> flats;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (d.at(r, c) == Tile::H) flats.push_back({r, c});

  std::vector<ConfigInstance> out;
  std::optional<PipePaths> paths;
  for (const Cell& top : flats) {
    const Cell j0 = closest_elbow(d, top.first, top.second, 0, 1);
    if (!tile_at(d, j0, Tile::NW)) continue;
    const Cell e0 = closest_elbow(d, top.first, top.second, 1, 0);
    if (!tile_at(d, e0, Tile::SE)) continue;
    for (const Cell& bot : flats) {
      if (!(bot.first > top.first && bot.second > top.second)) continue;
      const Cell la = closest_elbow(d, bot.first, bot.second, 0, -1);
      if (!tile_at(d, la, Tile::SE)) continue;
      const Cell ja = closest_elbow(d, bot.first, bot.second, -1, 0);
      if (!tile_at(d, ja, Tile::NW)) continue;
      ConfigInstance inst;
      if (!are_chain_to(d, e0, la, inst.are_chain)) continue;
      if (!jay_chain_to(d, j0, ja, inst.jay_chain)) continue;
      inst.top_flat = top;
      inst.bottom_flat = bot;
      if (!paths) paths = follow_pipes(d);
      const int u = paths->label_at(top.first, top.second, kWest);
      const int v = paths->label_at(la.first, la.second, kSouth);
      if (u == 0 || v == 0 || u == v)
        throw InternalInconsistency("find_configurations: bad witness pipe labels");
      inst.p = std::min(u, v);
      inst.q = std::max(u, v);
      out.push_back(std::move(inst));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool co_nonreduced(const Diagram& d) {
  const bool nonred = !is_reduced(co(d));
  const bool has_config = !find_configurations(d).empty();
  if (nonred != has_config)
    throw InternalInconsistency("configuration presence disagrees with co-trace on:\n" +
                                d.to_text());
  return nonred;
}

const char* config_case_name(ConfigCase c) {
  switch (c) {
    case ConfigCase::NoDroopAfter: return "NoDroopAfter";
    case ConfigCase::CrossBefore: return "CrossBefore";
    case ConfigCase::DroopAfter: return "DroopAfter";
  }
  return "?";
}

ConfigCase classify_case(const Diagram& d, const ConfigInstance& inst) {
  const auto all = find_configurations(d);
  if (std::find(all.begin(), all.end(), inst) == all.end())
    throw InvalidInput("classify_case: instance not found in diagram");

  const PipePaths paths = follow_pipes(d);
  const Cell la = inst.are_chain.back();
  const int u = paths.label_at(inst.top_flat.first, inst.top_flat.second, kWest);
  const int v = paths.label_at(la.first, la.second, kSouth);
  // Witness moment per pipe: the top flat for u, the bottom SE elbow for v.
  const int wit_u = paths.arc_index(u, inst.top_flat.first, inst.top_flat.second);
  const int wit_v = paths.arc_index(v, la.first, la.second);

  for (const auto& m : paths.meetings) {
    if (m.bump || std::minmax(u, v) != std::minmax(m.a, m.b)) continue;
    const int iu = paths.arc_index(u, m.row, m.col);
    const int iv = paths.arc_index(v, m.row, m.col);
    if (iu >= 0 && iv >= 0 && iu < wit_u && iv < wit_v) return ConfigCase::CrossBefore;
  }

  const int q = std::max(u, v);
  const int wit_q = q == u ? wit_u : wit_v;
  const auto& qpath = paths.paths[q - 1];
  for (size_t k = wit_q + 1; k < qpath.size(); ++k)
    if (d.at(qpath[k].row, qpath[k].col) == Tile::NW) return ConfigCase::DroopAfter;
  return ConfigCase::NoDroopAfter;
}

nlohmann::json config_instance_json(const Diagram& d, const ConfigInstance& inst) {
  nlohmann::json j = inst.to_json();
  j["case"] = config_case_name(classify_case(d, inst));
  return j;
}

const char* pipe_shape_name(PipeShape s) {
  switch (s) {
    case PipeShape::JayElbow: return "jay-elbow";
    case PipeShape::OneFlat: return "one-flat";
    case PipeShape::TwoFlats: return "two-flats";
    case PipeShape::DoubleFlat: return "double-flat";
  }
  return "?";
}

bool LemmaReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

nlohmann::json LemmaReport::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : entries)
    j.push_back({{"shape", pipe_shape_name(e.shape)}, {"pipe", e.pipe}, {"pass", e.pass}});
  return j;
}

namespace {

// Occurrence of the pattern whose minimum is pipe r's exit: the subsequence
// must start at r's exit row with value r.
bool pattern_with_r_as_one(const Permutation& w, int r, const std::vector<int>& pat) {
  const int n = w.size();
  int pos = 0;
  for (int i = 1; i <= n; ++i)
    if (w(i) == r) pos = i;
  const int k = static_cast<int>(pat.size());
  std::vector<int> idx{pos};
  std::function<bool(int, int)> rec = [&](int depth, int start) {
    if (depth == k) return true;
    for (int i = start; i <= n; ++i) {
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j)
        ok = (pat[j] < pat[depth]) == (w(idx[j]) < w(i));
      if (!ok) continue;
      idx.push_back(i);
      if (rec(depth + 1, i + 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  return rec(1, pos + 1);
}

const std::vector<std::vector<int>> kOneFlat = {{1, 4, 2, 3}, {1, 4, 3, 2}, {1, 3, 2, 5, 4}};
const std::vector<std::vector<int>> kTwoFlats = {{1, 4, 2, 3}, {1, 3, 2, 5, 4}, {1, 5, 4, 3, 2}};
const std::vector<std::vector<int>> kDoubleFlat = {
    {1, 4, 2, 3}, {1, 3, 2, 5, 4}, {1, 4, 5, 3, 2}, {1, 5, 4, 3, 2}};

}  // namespace

LemmaReport lemma_predicates(const Diagram& d) {
  if (!d.is_valid()) throw InvalidInput("lemma_predicates: diagram is not valid");
  const PipePaths paths = follow_pipes(d);
  const Permutation& w = paths.perm;
  const int n = d.size();
  std::vector<int> pos(n + 1);
  for (int i = 1; i <= n; ++i) pos[w(i)] = i;

  LemmaReport rep;
  for (int r = 1; r <= n; ++r) {
    const auto& path = paths.paths[r - 1];
    std::vector<Tile> tiles;
    tiles.reserve(path.size());
    for (const auto& s : path) tiles.push_back(d.at(s.row, s.col));

    if (std::find(tiles.begin(), tiles.end(), Tile::NW) != tiles.end()) {
      // A pipe with a jay elbow forces s, t with r < s < t exiting as r t s.
      bool ok = false;
      for (int s = r + 1; s <= n && !ok; ++s)
        for (int t = s + 1; t <= n && !ok; ++t)
          ok = pos[r] < pos[t] && pos[t] < pos[s];
      rep.entries.push_back({PipeShape::JayElbow, r, ok});
    }

    std::vector<size_t> se;
    for (size_t k = 0; k < tiles.size(); ++k)
      if (tiles[k] == Tile::SE) se.push_back(k);
    for (size_t si = 0; si + 1 < se.size(); ++si) {
      const std::vector<Tile> seg(tiles.begin() + se[si] + 1, tiles.begin() + se[si + 1]);
      const std::vector<std::vector<int>>* pats = nullptr;
      PipeShape shape{};
      if (seg == std::vector<Tile>{Tile::H, Tile::NW}) {
        pats = &kOneFlat;
        shape = PipeShape::OneFlat;
      } else if (seg == std::vector<Tile>{Tile::H, Tile::H, Tile::NW}) {
        pats = &kTwoFlats;
        shape = PipeShape::TwoFlats;
      } else if (seg == std::vector<Tile>{Tile::H, Tile::NW, Tile::V}) {
        pats = &kDoubleFlat;
        shape = PipeShape::DoubleFlat;
      }
      if (!pats) continue;
      bool ok = false;
      for (const auto& pat : *pats)
        if (pattern_with_r_as_one(w, r, pat)) { ok = true; break; }
      rep.entries.push_back({shape, r, ok});
    }
  }
  return rep;
}

}  // namespace bpd
