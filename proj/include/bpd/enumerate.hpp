#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "bpd/diagram.hpp"
#include "bpd/perm.hpp"

namespace bpd {

struct EnumerateOptions {
  int max_n = 7;
  int jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
};

/// Every valid BPD-mode diagram of size n, exactly once, in a fixed
/// generation order. The scan runs rows bottom-to-top, columns left-to-right;
/// at each cell the legal tiles are forced by (south-in, west-in).
std::vector<Diagram> all_diagrams(int n, const EnumerateOptions& opts = {});

/// Sequential streaming variant of all_diagrams.
void for_each_diagram(int n, const std::function<void(const Diagram&)>& fn,
                      const EnumerateOptions& opts = {});

struct BpdSet {
  Permutation w;
  std::vector<Diagram> all;      // lexicographic on tile text
  std::vector<Diagram> reduced;  // the is_reduced sublist
};

/// BPD(w) and bpd(w) by filtering all_diagrams(|w|). Results are memoized per
/// process; with a cache directory they persist as JSON arrays keyed by
/// (n, w, library version).
BpdSet bpds_of(const Permutation& w, const EnumerateOptions& opts = {});

/// Breadth-first closure of {rothe_bpd(w)} under droops (and K-droops when
/// use_k), deduplicated by tile text, sorted.
std::vector<Diagram> closure_of(const Permutation& w, bool use_k,
                                const EnumerateOptions& opts = {});

inline constexpr const char* kLibraryVersion = "1";

}  // namespace bpd
