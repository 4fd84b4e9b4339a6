#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "bpd/enumerate.hpp"
#include "bpd/perm.hpp"

namespace bpd {

using Int = boost::multiprecision::cpp_int;

/// Sparse exact-integer polynomial in x_1..x_n. No zero coefficients are
/// stored; serialization orders terms by total degree, then lexicographically
/// with x_1 heaviest.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars);
  static MultiPoly constant(int nvars, Int c);
  static MultiPoly variable(int nvars, int i);  // x_i, 1-indexed
  static MultiPoly monomial(int nvars, std::vector<int> exp, Int c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;     // -1 for the zero polynomial
  int min_degree() const;       // -1 for the zero polynomial
  bool is_homogeneous() const;
  MultiPoly homogeneous_component(int degree) const;
  Int coefficient(const std::vector<int>& exp) const;
  size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Int& c) const;
  bool operator==(const MultiPoly& o) const = default;

  MultiPoly swap_vars(int i) const;  // x_i <-> x_{i+1}
  /// (f - f|swap) / (x_i - x_{i+1}); throws InternalInconsistency if the
  /// exact division leaves a remainder.
  MultiPoly divided_difference(int i) const;

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  void add_term(const std::vector<int>& exp, const Int& c);
  int nvars_;
  std::map<std::vector<int>, Int> terms_;
};

/// Sum over reduced BPDs of x^{blank rows}; homogeneous of degree length(w).
MultiPoly schubert(const Permutation& w, const EnumerateOptions& opts = {});

/// Sum over all BPDs of (-1)^{blanks - length} x^{blank rows} (1-x)^{jay rows}.
MultiPoly grothendieck(const Permutation& w, const EnumerateOptions& opts = {});

/// Divided-difference recursions from x_1^{n-1}...x_{n-1}, independent of the
/// BPD formulas.
MultiPoly schubert_oracle(const Permutation& w);
MultiPoly grothendieck_oracle(const Permutation& w);

struct ExpansionTable {
  Permutation w;
  std::map<Permutation, Int> entries;  // v -> a_{w,v} > 0
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// a_{w,v} = #{B in BPD(w) : co(B) reduced and traces v}.
ExpansionTable a_table(const Permutation& w, const EnumerateOptions& opts = {});

/// Exact check of G_w = sum_v (-1)^{l(v)-l(w)} a_{w,v} S_v with the two sides
/// computed along independent code paths.
bool verify_g_to_s(const Permutation& w, const EnumerateOptions& opts = {});

/// Coefficients c_v with sum c_v S_v = f, verified by re-summation.
/// Throws NotInSpan when peeling strands or the residual fails to clear.
std::map<Permutation, Int> schubert_expand(const MultiPoly& f, int n,
                                           const EnumerateOptions& opts = {});

}  // namespace bpd
