#include "bpd/perm.hpp"

#include <algorithm>
#include <charconv>

#include "bpd/errors.hpp"

namespace bpd {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[v])
      throw InvalidInput("not a permutation of 1.." + std::to_string(n));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view s) {
  std::vector<int> e;
  if (s.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t next = s.find(',', pos);
      std::string_view tok = s.substr(pos, next == std::string_view::npos ? next : next - pos);
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw InvalidInput("bad permutation entry '" + std::string(tok) + "'");
      e.push_back(v);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw InvalidInput("bad permutation character '" + std::string(1, c) + "'");
      e.push_back(c - '0');
    }
  }
  if (e.empty()) throw InvalidInput("empty permutation");
  return Permutation(std::move(e));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(size());
  for (int i = 1; i <= size(); ++i) inv[entries_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::reversed() const {
  std::vector<int> r(entries_.rbegin(), entries_.rend());
  return Permutation(std::move(r));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (entries_[i] > entries_[j]) ++inv;
  return inv;
}

std::vector<int> Permutation::lehmer_code() const {
  std::vector<int> code(size());
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (entries_[j] < entries_[i]) ++code[i];
  return code;
}

std::string Permutation::str() const {
  std::string out;
  const bool compact = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (i && !compact) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  do {
    out.push_back(Permutation(e));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

namespace {

// Depth-first subsequence extension with prefix order-isomorphism pruning:
// a candidate position must relate to every earlier pick as the pattern dictates.
bool prefix_ok(const std::vector<int>& w, const std::vector<int>& p,
               const std::vector<int>& idx, size_t k, int i) {
  for (size_t j = 0; j < k; ++j)
    if ((p[j] < p[k]) != (w[idx[j] - 1] < w[i - 1])) return false;
  return true;
}

bool search_first(const std::vector<int>& w, const std::vector<int>& p, size_t k, int start,
                  std::vector<int>& idx) {
  if (k == p.size()) return true;
  const int last = static_cast<int>(w.size() - (p.size() - k)) + 1;
  for (int i = start; i <= last; ++i) {
    if (!prefix_ok(w, p, idx, k, i)) continue;
    idx.push_back(i);
    if (search_first(w, p, k + 1, i + 1, idx)) return true;
    idx.pop_back();
  }
  return false;
}

void search_all(const std::vector<int>& w, const std::vector<int>& p, size_t k, int start,
                std::vector<int>& idx, std::vector<std::vector<int>>& out) {
  if (k == p.size()) {
    out.push_back(idx);
    return;
  }
  const int last = static_cast<int>(w.size() - (p.size() - k)) + 1;
  for (int i = start; i <= last; ++i) {
    if (!prefix_ok(w, p, idx, k, i)) continue;
    idx.push_back(i);
    search_all(w, p, k + 1, i + 1, idx, out);
    idx.pop_back();
  }
}

}  // namespace

bool contains(const Permutation& w, const Permutation& p, std::vector<int>* witness) {
  if (p.size() > w.size()) return false;
  std::vector<int> idx;
  if (!search_first(w.entries(), p.entries(), 0, 1, idx)) return false;
  if (witness) *witness = idx;
  return true;
}

std::vector<std::vector<int>> occurrences(const Permutation& w, const Permutation& p) {
  std::vector<std::vector<int>> out;
  if (p.size() > w.size()) return out;
  std::vector<int> idx;
  search_all(w.entries(), p.entries(), 0, 1, idx, out);  // DFS yields lex order
  return out;
}

PatternSet PatternSet::reversed() const {
  PatternSet r;
  for (const auto& p : patterns) r.patterns.push_back(p.reversed());
  return r;
}

const PatternSet& PatternSet::pi() {
  static const PatternSet s{{Permutation::parse("1423"), Permutation::parse("12543"),
                             Permutation::parse("13254"), Permutation::parse("25143"),
                             Permutation::parse("215643"), Permutation::parse("216543"),
                             Permutation::parse("241653")}};
  return s;
}

bool avoids_all(const Permutation& w, const PatternSet& s) {
  for (const auto& p : s.patterns)
    if (contains(w, p)) return false;
  return true;
}

std::set<std::pair<int, int>> rothe_diagram(const Permutation& w) {
  std::set<std::pair<int, int>> d;
  const Permutation inv = w.inverse();
  for (int i = 1; i <= w.size(); ++i)
    for (int j = 1; j <= w.size(); ++j)
      if (j < w(i) && i < inv(j)) d.insert({i, j});
  return d;
}

}  // namespace bpd
