#include "bpd/trace.hpp"

#include <algorithm>
#include <deque>

#include "bpd/errors.hpp"

namespace bpd {

namespace {

std::pair<int, int> pair_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

TraceResult trace(const Diagram& d) {
  if (!d.is_valid()) throw InvalidInput("trace: diagram is not valid");
  const int n = d.size();
  const bool bpd = d.mode() == Mode::Bpd;

  TraceResult res{Permutation::identity(n), {}, {}, {}, {}, true};
  std::vector<int> exit_label(n + 1, 0);
  // Label on the row-frontier edge of each column: the N edge of the last
  // processed cell (BPD) or its S edge (co-BPD).
  std::vector<int> col_label(n + 1, 0);

  auto need = [](int label, const char* what) {
    if (label == 0) throw InternalInconsistency(std::string("trace: missing label on ") + what);
    return label;
  };

  for (int step = 0; step < n; ++step) {
    // BPD: rows bottom to top; co-BPD: top to bottom. Either way a cell's
    // vertical-in neighbor and west neighbor are already processed.
    const int r = bpd ? n - step : 1 + step;
    int west = 0;
    for (int c = 1; c <= n; ++c) {
      const Tile t = d.at(r, c);
      const int vin = (step == 0) ? (tile_has(t, bpd ? kSouth : kNorth) ? c : 0) : col_label[c];
      int vout = 0, eout = 0;
      switch (t) {
        case Tile::Blank:
          break;
        case Tile::V:
          vout = need(vin, "V");
          break;
        case Tile::H:
          eout = need(west, "H");
          break;
        case Tile::SE:  // BPD only: S -> E
          eout = need(vin, "SE");
          break;
        case Tile::NW:  // BPD only: W -> N
          vout = need(west, "NW");
          break;
        case Tile::NE:  // co-BPD only: N -> E
          eout = need(vin, "NE");
          break;
        case Tile::SW:  // co-BPD only: W -> S
          vout = need(west, "SW");
          break;
        case Tile::X: {
          const int a = need(vin, "X vertical"), b = need(west, "X horizontal");
          int& count = res.crossings[pair_key(a, b)];
          ++count;
          if (count > 1) {
            res.bumps.insert({r, c});
            eout = a;
            vout = b;
          } else {
            vout = a;
            eout = b;
          }
          break;
        }
      }
      col_label[c] = vout;
      west = eout;
      if (t == Tile::Blank) res.blank_rows.push_back(r);
      if ((bpd && t == Tile::NW) || (!bpd && t == Tile::SW)) res.jay_rows.push_back(r);
    }
    exit_label[r] = need(west, "east boundary");
  }

  std::vector<int> perm(exit_label.begin() + 1, exit_label.end());
  try {
    res.perm = Permutation(perm);
  } catch (const InvalidInput&) {
    throw InternalInconsistency("trace: exit labels are not a permutation");
  }
  std::sort(res.blank_rows.begin(), res.blank_rows.end());
  std::sort(res.jay_rows.begin(), res.jay_rows.end());
  res.reduced = res.bumps.empty();
  return res;
}

bool is_reduced(const Diagram& d) { return trace(d).reduced; }

nlohmann::json TraceResult::to_json() const {
  nlohmann::json cr = nlohmann::json::array();
  for (const auto& [key, count] : crossings)
    cr.push_back({{"pipes", {key.first, key.second}}, {"count", count}});
  nlohmann::json bp = nlohmann::json::array();
  for (const auto& [r, c] : bumps) bp.push_back({r, c});
  return {{"perm", perm.entries()}, {"reduced", reduced},      {"crossings", cr},
          {"bumps", bp},            {"blank_rows", blank_rows}, {"jay_rows", jay_rows}};
}

int PipePaths::arc_index(int label, int row, int col) const {
  const auto& p = paths[label - 1];
  for (size_t k = 0; k < p.size(); ++k)
    if (p[k].row == row && p[k].col == col) return static_cast<int>(k);
  return -1;
}

int PipePaths::label_at(int row, int col, unsigned in_edges) const {
  for (size_t lab = 1; lab <= paths.size(); ++lab)
    for (const auto& s : paths[lab - 1])
      if (s.row == row && s.col == col && (s.in_edge & in_edges))
        return static_cast<int>(lab);
  return 0;
}

PipePaths follow_pipes(const Diagram& d) {
  if (!d.is_valid()) throw InvalidInput("follow_pipes: diagram is not valid");
  const int n = d.size();
  const bool bpd = d.mode() == Mode::Bpd;

  PipePaths out{Permutation::identity(n), std::vector<std::vector<PipeStep>>(n), {}};
  std::vector<int> exit_label(n + 1, 0);
  std::map<std::pair<int, int>, int> count;
  // First arrival at an X waits for its partner.
  std::map<std::pair<int, int>, std::pair<int, unsigned>> waiting;

  struct Head {
    int label, row, col;
    unsigned in;
  };
  std::deque<Head> q;
  for (int c = 1; c <= n; ++c)
    q.push_back(bpd ? Head{c, n, c, kSouth} : Head{c, 1, c, kNorth});

  auto emit = [&](int label, int row, int col, unsigned in, unsigned outE) {
    out.paths[label - 1].push_back({row, col, in, outE});
    if (outE == kEast) {
      if (col == n) exit_label[row] = label;
      else q.push_back({label, row, col + 1, kWest});
    } else if (outE == kNorth) {
      q.push_back({label, row - 1, col, kSouth});
    } else if (outE == kSouth) {
      q.push_back({label, row + 1, col, kNorth});
    } else {
      throw InternalInconsistency("follow_pipes: pipe moved against travel direction");
    }
  };

  while (!q.empty()) {
    const Head h = q.front();
    q.pop_front();
    const Tile t = d.at(h.row, h.col);
    if (!tile_has(t, h.in)) throw InternalInconsistency("follow_pipes: entered a closed edge");
    if (t == Tile::X) {
      auto it = waiting.find({h.row, h.col});
      if (it == waiting.end()) {
        waiting[{h.row, h.col}] = {h.label, h.in};
        continue;
      }
      auto [other, other_in] = it->second;
      waiting.erase(it);
      // One label arrives vertically, the other from the west.
      const bool h_vertical = (h.in == kSouth || h.in == kNorth);
      const int vlab = h_vertical ? h.label : other;
      const int wlab = h_vertical ? other : h.label;
      const unsigned vin = h_vertical ? h.in : other_in;
      int& cnt = count[pair_key(vlab, wlab)];
      ++cnt;
      const bool bump = cnt > 1;
      out.meetings.push_back({h.row, h.col, std::min(vlab, wlab), std::max(vlab, wlab), bump});
      const unsigned vthrough = bpd ? kNorth : kSouth;
      if (bump) {
        emit(vlab, h.row, h.col, vin, kEast);
        emit(wlab, h.row, h.col, kWest, vthrough);
      } else {
        emit(vlab, h.row, h.col, vin, vthrough);
        emit(wlab, h.row, h.col, kWest, kEast);
      }
      continue;
    }
    const unsigned outE = tile_edges(t) & ~h.in;
    emit(h.label, h.row, h.col, h.in, outE);
  }
  if (!waiting.empty()) throw InternalInconsistency("follow_pipes: unmatched X strand");

  std::vector<int> perm(exit_label.begin() + 1, exit_label.end());
  out.perm = Permutation(perm);
  return out;
}

}  // namespace bpd
