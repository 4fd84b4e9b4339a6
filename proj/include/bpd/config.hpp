#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "bpd/diagram.hpp"
#include "bpd/trace.hpp"

namespace bpd {

/// One instance of the flat/elbow-chain configuration whose presence is
/// equivalent to the co-BPD being non-reduced.
struct ConfigInstance {
  std::pair<int, int> top_flat;     // H; its closest elbow right is jay_chain[0],
                                    // its closest elbow below is are_chain[0]
  std::pair<int, int> bottom_flat;  // H; its closest elbow left is are_chain.back(),
                                    // its closest elbow above is jay_chain.back()
  std::vector<std::pair<int, int>> are_chain;  // SE cells of the are-side walk
  std::vector<std::pair<int, int>> jay_chain;  // NW cells of the jay-side walk
  int p = 0, q = 0;  // witness pipe labels (top-flat pipe and bottom-elbow pipe), p < q

  auto operator<=>(const ConfigInstance&) const = default;
  nlohmann::json to_json() const;
};

/// All (top flat, bottom flat) pairs joined by alternating nearest-elbow
/// chains on both the are side and the jay side.
std::vector<ConfigInstance> find_configurations(const Diagram& d);

/// not is_reduced(co(d)); asserted equal to find_configurations(d) being
/// nonempty (throws InternalInconsistency on disagreement).
bool co_nonreduced(const Diagram& d);

enum class ConfigCase { NoDroopAfter, CrossBefore, DroopAfter };
const char* config_case_name(ConfigCase c);

/// CrossBefore when the witness pipes cross (first meeting) strictly before
/// each one's witness cell in its own arc order; otherwise DroopAfter when q
/// makes a NW elbow after witnessing; otherwise NoDroopAfter.
ConfigCase classify_case(const Diagram& d, const ConfigInstance& inst);

/// Instance serialization including its classified case.
nlohmann::json config_instance_json(const Diagram& d, const ConfigInstance& inst);

/// Hypothesis shapes of the structural lemmas: a NW elbow anywhere, or
/// exactly [H,NW] / [H,H,NW] / [H,NW,V] between consecutive SE elbows.
enum class PipeShape { JayElbow, OneFlat, TwoFlats, DoubleFlat };
const char* pipe_shape_name(PipeShape s);

struct LemmaReport {
  struct Entry {
    PipeShape shape;
    int pipe;
    bool pass;
  };
  std::vector<Entry> entries;
  bool all_pass() const;
  nlohmann::json to_json() const;
};

/// Checks, for every pipe matching one of the hypothesis shapes, the shape's
/// predicted consequence on the traced permutation: an exit-order triple for
/// JayElbow, and a pattern occurrence with the pipe as the minimum otherwise.
LemmaReport lemma_predicates(const Diagram& d);

}  // namespace bpd
