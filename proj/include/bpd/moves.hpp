#pragma once

#include <vector>

#include <json.hpp>

#include "bpd/diagram.hpp"

namespace bpd {

/// Rows [top..bottom], cols [left..right], 1-indexed, top < bottom, left < right.
struct Rect {
  int top, bottom, left, right;
  auto operator<=>(const Rect&) const = default;
};

enum class MoveKind { Plain, KForm1, KForm2 };

struct DroopMove {
  MoveKind kind = MoveKind::Plain;
  Rect rect{};
  /// KForm1: the inner column carrying the crossing pipe's bottom SE elbow.
  /// KForm2: the inner row carrying its right SE elbow. Unused for Plain.
  int param = 0;
  auto operator<=>(const DroopMove&) const = default;
  nlohmann::json to_json() const;
  static DroopMove from_json(const nlohmann::json& j);
};

struct BlockedRegion {
  Rect rect;
  std::vector<std::pair<int, int>> blocking_elbows;  // non-corner elbow cells
  std::vector<int> blocking_pipes;                   // traced labels, sorted, deduped
};

/// Rects with SE at top-left, Blank at bottom-right, top-right in {H, NW},
/// bottom-left in {V, NW}, and no other elbow anywhere in the rect.
std::vector<Rect> find_active_regions(const Diagram& d);

/// Throws NotActive unless the rect is active in d.
Diagram apply_droop(const Diagram& d, const Rect& rect);

/// Rects meeting every active condition except that non-corner elbows exist.
std::vector<BlockedRegion> find_blocked_regions(const Diagram& d);

/// K-theoretic droops: matches of the two pictured forms (elongated runs,
/// passing-pipe X overlays allowed on non-elbow cells), kept only when the
/// rewrite preserves the traced permutation, adds exactly one blank, and
/// sends exactly one pair's crossing count from 1 to 2.
std::vector<DroopMove> find_k_droops(const Diagram& d);

/// Throws NotApplicable unless m is one of find_k_droops(d).
Diagram apply_k_droop(const Diagram& d, const DroopMove& m);

}  // namespace bpd
