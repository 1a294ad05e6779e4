#pragma once

// Triangular interlacing patterns attached to crystal-grid states: the
// state<->pattern bijection, per-row reflection involutions, the shift
// between weakly and mixed-strictly interlacing patterns, the long
// reflection composition, and enumeration helpers.
//
// A pattern has rows indexed 0..r-1 top-down; row i holds the r-i entries
// a_{i,i}..a_{i,r-1}, strictly decreasing left to right.  Between adjacent
// rows the entries interlace, and a row-pair type tightens one side:
// an R pair forces a_{i-1,j-1} > a_{i,j} >= a_{i-1,j} (left-strict), an
// L pair forces a_{i-1,j-1} >= a_{i,j} > a_{i-1,j} (right-strict).  Pair
// type lists may carry r-1 or r entries; the extra last entry is ignored.

#include <string>
#include <vector>

#include <json.hpp>

#include "icebox/lattice.hpp"
#include "icebox/weights.hpp"

namespace icebox {

struct GTPattern {
  std::vector<std::vector<int>> rows;

  int size() const { return static_cast<int>(rows.size()); }
  // Entry a_{i,j} in the double-index convention, j in [i, r-1].
  int entry(int i, int j) const { return rows.at(i).at(j - i); }
  bool operator==(const GTPattern&) const = default;

  std::string to_text() const; // one row per line, entries space-separated
  nlohmann::json to_json() const;
  static GTPattern from_text(const std::string& text);
  static GTPattern from_json(const nlohmann::json& j);
};

// Shape, monotonicity and nonnegativity of the triangular array.
bool triangular_shape_ok(const GTPattern& p);

// Plain interlacing a_{i-1,j-1} >= a_{i,j} >= a_{i-1,j} (shape included).
bool weakly_interlaced(const GTPattern& p);

// Interlacing with the per-pair strict side required by `theta`.
bool strictness_ok(const GTPattern& p, const std::vector<RowType>& theta);

// Row i of the pattern lists the column numbers (counted from the right,
// 0-based) of the occupied vertical edges below grid row i; row 0 reads the
// top boundary.  Throws std::domain_error if the state's occupancies do not
// interlace with the strictness demanded by `theta`.
GTPattern gt_from_state(const State& s, const std::vector<RowType>& theta);

// Inverse of gt_from_state: rebuilds the unique uncolored layout whose
// vertical occupancies realize the pattern (paths travel right in R rows and
// left in L rows), then colors it deterministically from the spec's top
// colors.  spec must describe a fused grid whose mu equals the pattern's top
// row; spec.sigma is ignored.  Throws std::domain_error on mismatched data
// or strictness failure.
State state_from_gt(const GTPattern& p, const SystemSpec& spec);

// (d_{r-1}, d_{r-2}-d_{r-1}, ..., d_0-d_1) where d_i is the sum of row i.
std::vector<int> gt_weight(const GTPattern& p);

// Reflects row i (1 <= i <= r-1) inside its admissible intervals:
//   a'_{i,j} = min(a_{i-1,j-1}, a_{i+1,j}) + max(a_{i-1,j}, a_{i+1,j+1}) - a_{i,j},
// where terms from row i+1 are dropped when that entry does not exist.
// Turns a left-strict pair above row i into a right-strict one and vice
// versa; all other rows are untouched.  This is the reflection usually
// written t_{r-i}.
GTPattern bk_involution(const GTPattern& p, int row);

// The reflection t_k by its own index: bk_involution on row r-k.
GTPattern bk_t(const GTPattern& p, int k);

// Minimal nonnegative pattern with the given strictness profile: row 0 is
// (r-1, ..., 1, 0); each later row copies the one above minus its leftmost
// entry for an R pair and minus its rightmost entry for an L pair.
GTPattern rho_shift(const std::vector<RowType>& theta, int r);

// Entrywise sum with rho_shift: a bijection from weakly interlacing
// patterns with top row lambda onto theta-strict patterns with top row
// lambda + (r-1, ..., 1, 0).
GTPattern sh(const GTPattern& weak, const std::vector<RowType>& theta);

// Inverse of sh.  Throws std::domain_error if the input is not theta-strict
// or the difference is not weakly interlacing.
GTPattern unsh(const GTPattern& strict, const std::vector<RowType>& theta);

// The composition q_{r-1} = q_{r-2} t_{r-1} ... t_2 t_1 (q_0 = 1) with the
// rightmost factor applied first; an involution reversing the weight.
GTPattern schutzenberger(const GTPattern& p);

// All weakly interlacing patterns with the given strictly decreasing top
// row, resp. all theta-strict ones.
std::vector<GTPattern> enumerate_weak(const std::vector<int>& top);
std::vector<GTPattern> enumerate_strict(const std::vector<int>& top,
                                        const std::vector<RowType>& theta);

} // namespace icebox
