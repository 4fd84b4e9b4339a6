#include "bpd/poly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>

#include "bpd/errors.hpp"
#include "bpd/trace.hpp"

namespace bpd {

namespace {

int degree_of(const std::vector<int>& exp) {
  return std::accumulate(exp.begin(), exp.end(), 0);
}

// Serialization order: total degree first, then x_1-heavy exponent vectors.
bool term_order(const std::pair<std::vector<int>, Int>& a,
                const std::pair<std::vector<int>, Int>& b) {
  const int da = degree_of(a.first), db = degree_of(b.first);
  if (da != db) return da < db;
  return a.first > b.first;
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw InvalidInput("polynomial needs at least one variable");
}

MultiPoly MultiPoly::constant(int nvars, Int c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = std::move(c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw InvalidInput("variable index out of range");
  std::vector<int> e(nvars, 0);
  e[i - 1] = 1;
  return monomial(nvars, std::move(e), 1);
}

MultiPoly MultiPoly::monomial(int nvars, std::vector<int> exp, Int c) {
  if (static_cast<int>(exp.size()) != nvars) throw InvalidInput("exponent vector size mismatch");
  MultiPoly p(nvars);
  if (c != 0) p.terms_[std::move(exp)] = std::move(c);
  return p;
}

void MultiPoly::add_term(const std::vector<int>& exp, const Int& c) {
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(exp, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

int MultiPoly::min_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    const int de = degree_of(e);
    if (d < 0 || de < d) d = de;
  }
  return d;
}

bool MultiPoly::is_homogeneous() const {
  return is_zero() || total_degree() == min_degree();
}

MultiPoly MultiPoly::homogeneous_component(int degree) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (degree_of(e) == degree) out.terms_.emplace(e, c);
  return out;
}

Int MultiPoly::coefficient(const std::vector<int>& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw InvalidInput("variable count mismatch");
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw InvalidInput("variable count mismatch");
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw InvalidInput("variable count mismatch");
  MultiPoly out(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::operator*(const Int& c) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

MultiPoly MultiPoly::swap_vars(int i) const {
  if (i < 1 || i >= nvars_) throw InvalidInput("swap index out of range");
  MultiPoly out(nvars_);
  for (const auto& [exp, c] : terms_) {
    std::vector<int> e = exp;
    std::swap(e[i - 1], e[i]);
    out.add_term(e, c);
  }
  return out;
}

MultiPoly MultiPoly::divided_difference(int i) const {
  MultiPoly g = *this - swap_vars(i);
  MultiPoly q(nvars_);
  // Divide by x_i - x_{i+1}: repeatedly cancel a term of maximal x_i-degree.
  // Each step lowers the total x_i-degree mass, so this terminates.
  while (!g.terms_.empty()) {
    auto best = g.terms_.begin();
    for (auto it = g.terms_.begin(); it != g.terms_.end(); ++it)
      if (it->first[i - 1] > best->first[i - 1]) best = it;
    if (best->first[i - 1] == 0)
      throw InternalInconsistency("divided difference left a remainder");
    std::vector<int> e = best->first;
    const Int c = best->second;
    e[i - 1] -= 1;
    q.add_term(e, c);
    // g -= c * x^e * (x_i - x_{i+1})
    std::vector<int> hi = e, lo = e;
    hi[i - 1] += 1;
    lo[i] += 1;
    g.add_term(hi, -c);
    g.add_term(lo, c);
  }
  return q;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::vector<int>, Int>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), term_order);
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += mag.str();
    else if (mag == 1) out += mono;
    else out += mag.str() + "*" + mono;
  }
  return out;
}

nlohmann::json MultiPoly::to_json() const {
  std::vector<std::pair<std::vector<int>, Int>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), term_order);
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, c] : ordered) {
    nlohmann::json t = {{"exp", e}};
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      t["coef"] = static_cast<long long>(c);
    else
      t["coef"] = c.str();
    j.push_back(std::move(t));
  }
  return j;
}

MultiPoly schubert(const Permutation& w, const EnumerateOptions& opts) {
  const int n = w.size();
  MultiPoly sum(n);
  for (const Diagram& d : bpds_of(w, opts).reduced) {
    std::vector<int> exp(n, 0);
    for (int r : trace(d).blank_rows) ++exp[r - 1];
    sum = sum + MultiPoly::monomial(n, std::move(exp), 1);
  }
  return sum;
}

MultiPoly grothendieck(const Permutation& w, const EnumerateOptions& opts) {
  const int n = w.size();
  const int len = w.length();
  MultiPoly sum(n);
  for (const Diagram& d : bpds_of(w, opts).all) {
    const TraceResult t = trace(d);
    std::vector<int> exp(n, 0);
    for (int r : t.blank_rows) ++exp[r - 1];
    const int sign = (static_cast<int>(t.blank_rows.size()) - len) % 2 == 0 ? 1 : -1;
    MultiPoly term = MultiPoly::monomial(n, std::move(exp), sign);
    for (int r : t.jay_rows)
      term = term * (MultiPoly::constant(n, 1) - MultiPoly::variable(n, r));
    sum = sum + term;
  }
  return sum;
}

namespace {

// Both oracle families memoized per permutation, filled top-down from the
// longest element along ascents.
const MultiPoly& oracle(const Permutation& w, bool groth) {
  static std::mutex mu;
  static std::map<std::pair<bool, Permutation>, MultiPoly> memo;
  std::lock_guard lock(mu);
  std::function<const MultiPoly&(const Permutation&)> get =
      [&](const Permutation& v) -> const MultiPoly& {
    auto it = memo.find({groth, v});
    if (it != memo.end()) return it->second;
    const int n = v.size();
    MultiPoly result(n);
    bool longest = true;
    for (int i = 1; i <= n && longest; ++i) longest = v(i) == n + 1 - i;
    if (longest) {
      std::vector<int> exp(n);
      for (int i = 0; i < n; ++i) exp[i] = n - 1 - i;
      result = MultiPoly::monomial(n, std::move(exp), 1);
    } else {
      int i = 0;
      for (int k = 1; k < n; ++k)
        if (v(k) < v(k + 1)) { i = k; break; }
      std::vector<int> up = v.entries();
      std::swap(up[i - 1], up[i]);
      const MultiPoly& higher = get(Permutation(up));
      result = groth
          ? ((MultiPoly::constant(n, 1) - MultiPoly::variable(n, i + 1)) * higher)
                .divided_difference(i)
          : higher.divided_difference(i);
    }
    return memo.emplace(std::make_pair(groth, v), std::move(result)).first->second;
  };
  return get(w);
}

}  // namespace

MultiPoly schubert_oracle(const Permutation& w) { return oracle(w, false); }
MultiPoly grothendieck_oracle(const Permutation& w) { return oracle(w, true); }

ExpansionTable a_table(const Permutation& w, const EnumerateOptions& opts) {
  ExpansionTable table{w, {}};
  for (const Diagram& d : bpds_of(w, opts).all) {
    const TraceResult t = trace(co(d));
    if (t.reduced) table.entries[t.perm] += 1;
  }
  return table;
}

nlohmann::json ExpansionTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [v, a] : entries)
    rows.push_back({{"v", v.entries()}, {"a", static_cast<long long>(a)}});
  return {{"w", w.entries()}, {"entries", rows}};
}

std::string ExpansionTable::to_csv() const {
  std::string out = "w,v,a\n";
  for (const auto& [v, a] : entries)
    out += w.str() + "," + v.str() + "," + a.str() + "\n";
  return out;
}

bool verify_g_to_s(const Permutation& w, const EnumerateOptions& opts) {
  const int n = w.size();
  const MultiPoly lhs = grothendieck(w, opts);
  MultiPoly rhs(n);
  const int lw = w.length();
  for (const auto& [v, a] : a_table(w, opts).entries) {
    const int sign = (v.length() - lw) % 2 == 0 ? 1 : -1;
    rhs = rhs + schubert(v, opts) * (a * sign);
  }
  return lhs == rhs;
}

namespace {

// Lehmer code -> permutation; nullopt when the exponent vector is not a code.
std::optional<Permutation> perm_from_code(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size());
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> w;
  for (int i = 0; i < n; ++i) {
    if (code[i] < 0 || code[i] >= static_cast<int>(avail.size())) return std::nullopt;
    w.push_back(avail[code[i]]);
    avail.erase(avail.begin() + code[i]);
  }
  return Permutation(std::move(w));
}

}  // namespace

std::map<Permutation, Int> schubert_expand(const MultiPoly& f, int n,
                                            const EnumerateOptions& opts) {
  if (f.nvars() != n) throw InvalidInput("schubert_expand: variable count mismatch");
  std::map<Permutation, Int> out;
  MultiPoly residual = f;
  // Peel from the bottom degree. Within a degree the lex-smallest monomial of
  // a span member is a Schubert code monomial (x^code(v) is the lex-minimum
  // of S_v), so subtracting c*S_v only introduces lex-larger terms there.
  size_t guard = 0;
  while (!residual.is_zero()) {
    if (++guard > 100000) throw NotInSpan("peeling did not converge");
    const int d = residual.min_degree();
    std::vector<int> exp;
    for (const auto& [e, c] : residual.terms()) {
      if (degree_of(e) != d) continue;
      if (exp.empty() || e < exp) exp = e;
    }
    const auto v = perm_from_code(exp);
    if (!v || v->length() != d)
      throw NotInSpan("minimal monomial " + MultiPoly::monomial(n, exp, 1).str() +
                      " is not a Lehmer code monomial");
    const Int c = residual.coefficient(exp);
    out[*v] += c;
    residual = residual - schubert(*v, opts) * c;
  }
  // Correctness is enforced by reconstruction, not assumed triangularity.
  MultiPoly check(n);
  for (const auto& [v, c] : out) check = check + schubert(v, opts) * c;
  if (!(check == f)) throw NotInSpan("re-summation failed to reproduce the input");
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace bpd
