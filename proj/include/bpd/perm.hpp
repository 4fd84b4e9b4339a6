#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bpd {

/// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> entries);
  static Permutation identity(int n);
  /// Accepts compact digits ("25143", n <= 9) or comma-separated ("2,5,1,4,3").
  static Permutation parse(std::string_view s);

  int size() const { return static_cast<int>(entries_.size()); }
  /// 1-indexed position access.
  int operator()(int i) const { return entries_[i - 1]; }
  const std::vector<int>& entries() const { return entries_; }

  Permutation inverse() const;
  Permutation reversed() const;
  int length() const;
  std::vector<int> lehmer_code() const;

  /// Compact digits when n <= 9, comma-separated otherwise.
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Pattern containment. The witness, when requested and found, is the
/// lexicographically first strictly increasing index set (1-based) whose
/// values are order-isomorphic to p.
bool contains(const Permutation& w, const Permutation& p,
              std::vector<int>* witness = nullptr);

/// All occurrences of p in w as 1-based index sets, lexicographic order.
std::vector<std::vector<int>> occurrences(const Permutation& w, const Permutation& p);

struct PatternSet {
  std::vector<Permutation> patterns;
  PatternSet reversed() const;
  /// The seven patterns {1423, 12543, 13254, 25143, 215643, 216543, 241653}.
  static const PatternSet& pi();
};

bool avoids_all(const Permutation& w, const PatternSet& s);

/// D(w) = {(i,j) : j < w_i and i < w^{-1}(j)}, 1-indexed (row, col).
std::set<std::pair<int, int>> rothe_diagram(const Permutation& w);

}  // namespace bpd
