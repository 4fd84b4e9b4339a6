#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpd/config.hpp"
#include "bpd/enumerate.hpp"
#include "bpd/moves.hpp"

namespace bpd {

/// A droop-move sequence on the Rothe BPD of a pattern.
struct DroopPlan {
  Permutation source_pattern;
  std::vector<Rect> moves;
};

/// The fixed droop table producing a non-reduced co-BPD for each of the seven
/// patterns. Throws UnknownPattern outside Pi.
DroopPlan witness_plan(const Permutation& pi);

struct BlockingInfo {
  int pipe;  // label in w
  int x, y;  // pattern pipes above / to the left
};

struct EmbedResult {
  std::vector<Rect> translated;            // all moves, translated
  std::optional<Diagram> diagram;          // end state when every move applied
  int blocked_move = -1;                   // index of the first failing move
  std::vector<BlockingInfo> blocking;      // its blocking pipes, when identifiable
  bool blocked() const { return !diagram.has_value(); }
  nlohmann::json to_json() const;
};

/// Translate witness_plan(pi) through an occurrence of pi in w (rows shift by
/// non-pattern pipes exiting above, columns by non-pattern pipes entering
/// left) and execute it on rothe_bpd(w). Throws InvalidOccurrence.
EmbedResult embed_plan(const Permutation& w, const Permutation& pi,
                       const std::vector<int>& occurrence);

/// True iff co(B) is reduced for every B in BPD(w).
bool all_co_reduced(const Permutation& w, const EnumerateOptions& opts = {});

/// A BPD of w with non-reduced co-BPD, or nullopt iff w avoids Pi.
/// Tries embedded witness plans over all occurrences, then the constructive
/// blocked-case algorithm for 1423, then exhaustive search.
std::optional<Diagram> witness(const Permutation& w, const EnumerateOptions& opts = {});

/// How nonreduced_bpd_witness produced its diagram.
enum class WitnessRoute { None, Constructive, Search };

/// A non-reduced BPD of w built by the droop/K-droop construction on a
/// maximal 2143 occurrence; nullopt iff w is vexillary. On construction
/// failure falls back to search and reports it through `route`.
std::optional<Diagram> nonreduced_bpd_witness(const Permutation& w,
                                              const EnumerateOptions& opts = {},
                                              WitnessRoute* route = nullptr);

struct TheoremReport {
  int n = 0;
  struct Row {
    Permutation w;
    bool avoids_pi, all_co_reduced;
    int bpd_count, nonreduced_co_count;
    bool agree() const { return avoids_pi == all_co_reduced; }
  };
  std::vector<Row> rows;  // sorted by w
  int disagreements = 0;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// For every w in S_n, compare all_co_reduced(w) with avoids_all(w, Pi).
TheoremReport verify_main_theorem(int n, const EnumerateOptions& opts = {});

struct ReverseReport {
  int n = 0;
  int nonreduced_checked = 0;
  std::vector<Diagram> violations;  // non-reduced B whose co-trace avoids Pi^r
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Corollary check: the co-trace of every non-reduced diagram of size n
/// contains a member of Pi^r.
ReverseReport co_reverse_pattern_check(int n, const EnumerateOptions& opts = {});

}  // namespace bpd
