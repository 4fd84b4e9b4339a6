#include "bpd/moves.hpp"

#include <algorithm>
#include <optional>

#include "bpd/errors.hpp"
#include "bpd/trace.hpp"

namespace bpd {

namespace {

bool is_elbow(Tile t) { return t == Tile::SE || t == Tile::NW; }

enum class RectState { NoMatch, Active, Blocked };

RectState rect_state(const Diagram& d, const Rect& r, std::vector<std::pair<int, int>>* elbows) {
  const int n = d.size();
  if (!(1 <= r.top && r.top < r.bottom && r.bottom <= n && 1 <= r.left && r.left < r.right &&
        r.right <= n))
    return RectState::NoMatch;
  if (d.at(r.top, r.left) != Tile::SE) return RectState::NoMatch;
  if (d.at(r.bottom, r.right) != Tile::Blank) return RectState::NoMatch;
  const Tile tr = d.at(r.top, r.right);
  if (tr != Tile::H && tr != Tile::NW) return RectState::NoMatch;
  const Tile bl = d.at(r.bottom, r.left);
  if (bl != Tile::V && bl != Tile::NW) return RectState::NoMatch;
  bool blocked = false;
  for (int i = r.top; i <= r.bottom; ++i)
    for (int j = r.left; j <= r.right; ++j) {
      const bool corner = (i == r.top || i == r.bottom) && (j == r.left || j == r.right);
      if (corner || !is_elbow(d.at(i, j))) continue;
      blocked = true;
      if (elbows) elbows->push_back({i, j});
    }
  return blocked ? RectState::Blocked : RectState::Active;
}

// Segment add/remove used by both droop forms. Removing E-W: H -> Blank,
// X -> V; removing N-S: V -> Blank, X -> H; adding is the inverse.
Tile drop_ew(Tile t) {
  if (t == Tile::H) return Tile::Blank;
  if (t == Tile::X) return Tile::V;
  throw NotActive("cell on the vacated row is not H or X");
}
Tile drop_ns(Tile t) {
  if (t == Tile::V) return Tile::Blank;
  if (t == Tile::X) return Tile::H;
  throw NotActive("cell on the vacated column is not V or X");
}
Tile add_ew(Tile t) {
  if (t == Tile::Blank) return Tile::H;
  if (t == Tile::V) return Tile::X;
  throw NotActive("cell on the new row is not Blank or V");
}
Tile add_ns(Tile t) {
  if (t == Tile::Blank) return Tile::V;
  if (t == Tile::H) return Tile::X;
  throw NotActive("cell on the new column is not Blank or H");
}

}  // namespace

nlohmann::json DroopMove::to_json() const {
  const char* k = kind == MoveKind::Plain ? "plain" : kind == MoveKind::KForm1 ? "kform1" : "kform2";
  nlohmann::json j = {{"kind", k}, {"rect", {rect.top, rect.bottom, rect.left, rect.right}}};
  if (kind != MoveKind::Plain) j["param"] = param;
  return j;
}

DroopMove DroopMove::from_json(const nlohmann::json& j) {
  DroopMove m;
  const std::string k = j.at("kind").get<std::string>();
  if (k == "plain") m.kind = MoveKind::Plain;
  else if (k == "kform1") m.kind = MoveKind::KForm1;
  else if (k == "kform2") m.kind = MoveKind::KForm2;
  else throw InvalidInput("unknown move kind '" + k + "'");
  const auto& r = j.at("rect");
  if (r.size() != 4) throw InvalidInput("rect must be [top,bottom,left,right]");
  m.rect = {r[0].get<int>(), r[1].get<int>(), r[2].get<int>(), r[3].get<int>()};
  if (m.kind != MoveKind::Plain) m.param = j.at("param").get<int>();
  return m;
}

std::vector<Rect> find_active_regions(const Diagram& d) {
  std::vector<Rect> out;
  const int n = d.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int e = c + 1; e <= n; ++e) {
          const Rect r{a, b, c, e};
          if (rect_state(d, r, nullptr) == RectState::Active) out.push_back(r);
        }
  return out;
}

Diagram apply_droop(const Diagram& d, const Rect& r) {
  if (rect_state(d, r, nullptr) != RectState::Active)
    throw NotActive("rect [" + std::to_string(r.top) + ".." + std::to_string(r.bottom) + "]x[" +
                    std::to_string(r.left) + ".." + std::to_string(r.right) + "] is not active");
  Diagram out = d;
  out.set(r.top, r.left, Tile::Blank);
  out.set(r.bottom, r.right, Tile::NW);
  out.set(r.top, r.right, d.at(r.top, r.right) == Tile::H ? Tile::SE : Tile::V);
  out.set(r.bottom, r.left, d.at(r.bottom, r.left) == Tile::V ? Tile::SE : Tile::H);
  for (int j = r.left + 1; j < r.right; ++j) {
    out.set(r.top, j, drop_ew(d.at(r.top, j)));
    out.set(r.bottom, j, add_ew(d.at(r.bottom, j)));
  }
  for (int i = r.top + 1; i < r.bottom; ++i) {
    out.set(i, r.left, drop_ns(d.at(i, r.left)));
    out.set(i, r.right, add_ns(d.at(i, r.right)));
  }
  return out;
}

std::vector<BlockedRegion> find_blocked_regions(const Diagram& d) {
  std::vector<BlockedRegion> out;
  const int n = d.size();
  std::optional<PipePaths> paths;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int e = c + 1; e <= n; ++e) {
          BlockedRegion reg{{a, b, c, e}, {}, {}};
          if (rect_state(d, reg.rect, &reg.blocking_elbows) != RectState::Blocked) continue;
          if (!paths) paths = follow_pipes(d);
          for (const auto& [i, j] : reg.blocking_elbows) {
            const int lab = paths->label_at(i, j, kNorth | kEast | kSouth | kWest);
            if (lab) reg.blocking_pipes.push_back(lab);
          }
          std::sort(reg.blocking_pipes.begin(), reg.blocking_pipes.end());
          reg.blocking_pipes.erase(
              std::unique(reg.blocking_pipes.begin(), reg.blocking_pipes.end()),
              reg.blocking_pipes.end());
          out.push_back(std::move(reg));
        }
  return out;
}

namespace {

bool in(Tile t, Tile a, Tile b) { return t == a || t == b; }

// Before-pattern of the first pictured K-droop form, elongated, X overlays on
// non-elbow cells: drooping pipe turns at (top,left) and crosses at (top,right);
// the other pipe's SE sits at (bottom, e) with its NW at (bottom, right).
bool match_k1(const Diagram& d, const Rect& r, int e) {
  if (!(r.left < e && e < r.right)) return false;
  if (d.at(r.top, r.left) != Tile::SE) return false;
  if (d.at(r.top, r.right) != Tile::X) return false;
  if (d.at(r.bottom, r.right) != Tile::NW) return false;
  if (d.at(r.bottom, r.left) != Tile::V) return false;
  if (d.at(r.top, e) != Tile::H) return false;
  if (d.at(r.bottom, e) != Tile::SE) return false;
  for (int j = r.left + 1; j < r.right; ++j)
    if (j != e && !in(d.at(r.top, j), Tile::H, Tile::X)) return false;
  for (int j = r.left + 1; j < e; ++j)
    if (!in(d.at(r.bottom, j), Tile::Blank, Tile::V)) return false;
  for (int j = e + 1; j < r.right; ++j)
    if (!in(d.at(r.bottom, j), Tile::H, Tile::X)) return false;
  for (int i = r.top + 1; i < r.bottom; ++i) {
    if (!in(d.at(i, r.left), Tile::V, Tile::X)) return false;
    if (!in(d.at(i, e), Tile::Blank, Tile::H)) return false;
    if (!in(d.at(i, r.right), Tile::V, Tile::X)) return false;
  }
  for (int i = r.top + 1; i < r.bottom; ++i)
    for (int j = r.left + 1; j < r.right; ++j)
      if (j != e && is_elbow(d.at(i, j))) return false;
  return true;
}

Diagram rewrite_k1(const Diagram& d, const Rect& r, int e) {
  Diagram out = d;
  out.set(r.top, r.left, Tile::Blank);
  for (int j = r.left + 1; j < e; ++j) out.set(r.top, j, drop_ew(d.at(r.top, j)));
  out.set(r.top, e, Tile::SE);
  for (int i = r.top + 1; i < r.bottom; ++i) out.set(i, r.left, drop_ns(d.at(i, r.left)));
  out.set(r.bottom, r.left, Tile::SE);
  for (int j = r.left + 1; j < e; ++j) out.set(r.bottom, j, add_ew(d.at(r.bottom, j)));
  out.set(r.bottom, e, Tile::X);
  for (int i = r.top + 1; i < r.bottom; ++i) out.set(i, e, add_ns(d.at(i, e)));
  return out;
}

// Second pictured form: drooping pipe turns at (top,left) and runs east to
// (top,right); the crossing pipe enters at (bottom,left) as an X, runs along
// the bottom row, and climbs to its SE at (f, right).
bool match_k2(const Diagram& d, const Rect& r, int f) {
  if (!(r.top < f && f < r.bottom)) return false;
  if (d.at(r.top, r.left) != Tile::SE) return false;
  if (d.at(r.top, r.right) != Tile::H) return false;
  if (d.at(r.bottom, r.left) != Tile::X) return false;
  if (d.at(r.bottom, r.right) != Tile::NW) return false;
  if (d.at(f, r.left) != Tile::V) return false;
  if (d.at(f, r.right) != Tile::SE) return false;
  for (int j = r.left + 1; j < r.right; ++j)
    if (!in(d.at(r.top, j), Tile::H, Tile::X)) return false;
  for (int i = r.top + 1; i < r.bottom; ++i)
    if (i != f && !in(d.at(i, r.left), Tile::V, Tile::X)) return false;
  for (int j = r.left + 1; j < r.right; ++j)
    if (!in(d.at(f, j), Tile::Blank, Tile::V)) return false;
  for (int i = r.top + 1; i < f; ++i)
    if (!in(d.at(i, r.right), Tile::Blank, Tile::H)) return false;
  for (int i = f + 1; i < r.bottom; ++i)
    if (!in(d.at(i, r.right), Tile::V, Tile::X)) return false;
  for (int j = r.left + 1; j < r.right; ++j)
    if (!in(d.at(r.bottom, j), Tile::H, Tile::X)) return false;
  for (int i = r.top + 1; i < r.bottom; ++i)
    for (int j = r.left + 1; j < r.right; ++j)
      if (i != f && is_elbow(d.at(i, j))) return false;
  return true;
}

Diagram rewrite_k2(const Diagram& d, const Rect& r, int f) {
  Diagram out = d;
  out.set(r.top, r.left, Tile::Blank);
  for (int j = r.left + 1; j < r.right; ++j) out.set(r.top, j, drop_ew(d.at(r.top, j)));
  out.set(r.top, r.right, Tile::SE);
  for (int i = r.top + 1; i < f; ++i) out.set(i, r.left, drop_ns(d.at(i, r.left)));
  out.set(f, r.left, Tile::SE);
  for (int j = r.left + 1; j < r.right; ++j) out.set(f, j, add_ew(d.at(f, j)));
  out.set(f, r.right, Tile::X);
  for (int i = r.top + 1; i < f; ++i) out.set(i, r.right, add_ns(d.at(i, r.right)));
  return out;
}

// The figures implicitly show the two pictured pipes crossing for the first
// time; a structural match alone can pair pipes that already crossed
// elsewhere. Keep a candidate only when the rewrite has the K-droop's
// defining effect.
bool k_semantics_ok(const Diagram& before, const Diagram& after) {
  if (!after.is_valid()) return false;
  const TraceResult t0 = trace(before), t1 = trace(after);
  if (t1.perm != t0.perm) return false;
  if (t1.blank_rows.size() != t0.blank_rows.size() + 1) return false;
  if (t1.reduced) return false;
  int changed = 0;
  bool one_to_two = false;
  auto keys = t0.crossings;
  for (const auto& [k, v] : t1.crossings) keys.try_emplace(k, 0);
  for (const auto& [k, v0] : keys) {
    const auto it0 = t0.crossings.find(k);
    const auto it1 = t1.crossings.find(k);
    const int c0 = it0 == t0.crossings.end() ? 0 : it0->second;
    const int c1 = it1 == t1.crossings.end() ? 0 : it1->second;
    if (c0 != c1) {
      ++changed;
      one_to_two = (c0 == 1 && c1 == 2);
    }
  }
  return changed == 1 && one_to_two;
}

Diagram apply_k_unchecked(const Diagram& d, const DroopMove& m) {
  return m.kind == MoveKind::KForm1 ? rewrite_k1(d, m.rect, m.param)
                                    : rewrite_k2(d, m.rect, m.param);
}

bool k_matches(const Diagram& d, const DroopMove& m) {
  const int n = d.size();
  const Rect& r = m.rect;
  if (!(1 <= r.top && r.top < r.bottom && r.bottom <= n && 1 <= r.left && r.left < r.right &&
        r.right <= n))
    return false;
  return m.kind == MoveKind::KForm1 ? match_k1(d, r, m.param) : match_k2(d, r, m.param);
}

}  // namespace

std::vector<DroopMove> find_k_droops(const Diagram& d) {
  std::vector<DroopMove> out;
  const int n = d.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int e = c + 1; e <= n; ++e) {
          const Rect r{a, b, c, e};
          for (int p = c + 1; p < e; ++p) {
            const DroopMove m{MoveKind::KForm1, r, p};
            if (match_k1(d, r, p) && k_semantics_ok(d, apply_k_unchecked(d, m))) out.push_back(m);
          }
          for (int p = a + 1; p < b; ++p) {
            const DroopMove m{MoveKind::KForm2, r, p};
            if (match_k2(d, r, p) && k_semantics_ok(d, apply_k_unchecked(d, m))) out.push_back(m);
          }
        }
  std::sort(out.begin(), out.end());
  return out;
}

Diagram apply_k_droop(const Diagram& d, const DroopMove& m) {
  if (m.kind == MoveKind::Plain) throw NotApplicable("apply_k_droop given a plain droop");
  if (!k_matches(d, m)) throw NotApplicable("no pictured K-droop form matches the move");
  Diagram out = apply_k_unchecked(d, m);
  if (!k_semantics_ok(d, out))
    throw NotApplicable("rewrite does not have the K-droop effect at this site");
  return out;
}

}  // namespace bpd
