#pragma once

// The idempotent sorting monoid on r strands, its action on color flags, the
// flag sweep along a lattice state, highlight decorations of pattern row
// pairs, and the rewriting that turns a right-moving decoration into the
// left-moving decoration of the reflected pattern while preserving the
// folded product at every step.
//
// Words are generator index lists read left to right; the rightmost letter
// acts first.  Folding a word (absorbing letters that would shorten the
// permutation) gives the canonical form, so equality of folded products is
// equality in the monoid.

#include <utility>
#include <vector>

#include "icebox/gt_patterns.hpp"
#include "icebox/lattice.hpp"

namespace icebox {

// Monoid element in canonical form: the one-line permutation its word folds
// to.  m_k m_k = m_k, adjacent generators braid, distant ones commute.
struct MonoidElement {
  std::vector<int> perm; // one-line notation, values 1..r

  static MonoidElement identity(int r);
  int rank() const { return static_cast<int>(perm.size()); }
  int length() const; // inversion count
  // Folded right multiplication: append s_k when it lengthens, absorb it
  // otherwise.  Throws std::out_of_range unless 1 <= k <= rank()-1.
  MonoidElement times_gen(int k) const;
  bool operator==(const MonoidElement&) const = default;
};

MonoidElement demazure_product(int r, const std::vector<int>& word);

// Flags are color lists; m_k orders positions k, k+1 ascendingly.
using Flag = std::vector<int>;
Flag monoid_act(int k, Flag f);
Flag monoid_act(const MonoidElement& e, Flag f);
Flag word_act(const std::vector<int>& word, Flag f);

// Flags swept along a state: flags[i][j] lists the path colors crossing the
// boundary of the region holding the first i rows plus the first j vertices
// of row i+1, counted from that row's input side.  Reading order: exit
// colors of the left-moving rows above (top to bottom), then the row-(i+1)
// section from the input side (crossed bottom edges, the advancing
// horizontal edge, uncrossed top edges), then exit colors of the
// right-moving rows above (bottom to top).
struct FlagSweep {
  std::vector<std::vector<Flag>> flags; // rows x (cols+1)
  Flag initial() const { return flags.front().front(); }
  Flag exit() const { return flags.back().back(); }
};
FlagSweep state_flags(const SystemSpec& spec, const State& s);

// Generators contributed by pattern row pair `pair` (1-based: pattern rows
// pair-1 and pair), written left to right with the rightmost acting first.
// Slot j of the pair carries m_{l+j+1} where l counts the L pairs above; it
// is highlighted (included) when the lower entry equals its upper-right
// neighbour for an R pair resp. its upper-left neighbour for an L pair.
std::vector<int> pair_word(const GTPattern& p, const std::vector<RowType>& theta, int pair);

// Concatenation of the pair words, deepest pair leftmost; its fold carries
// the entry flag of the matching state to the exit flag.
std::vector<int> pattern_word(const GTPattern& p, const std::vector<RowType>& theta);
MonoidElement pattern_monoid_element(const GTPattern& p, const std::vector<RowType>& theta);

// One column of a decorated two-row diagram; both slots carry the same
// generator index and only highlighted slots contribute to the word.
struct DiagramColumn {
  bool top_present = true;
  bool top_hl = false;
  bool bottom_present = true;
  bool bottom_hl = false;
  bool operator==(const DiagramColumn&) const = default;
};

// Decoration of three consecutive pattern rows whose two pairs have opposite
// types; `upper` is the type of the upper pair.  Column b stands for the
// generator m_{first+b}.  When the upper pair is L the word reads the bottom
// row right to left and then the top row left to right; for an R upper pair
// it reads the bottom row left to right and then the top row right to left.
struct HighlightPattern {
  RowType upper = RowType::L;
  int first = 1;
  std::vector<DiagramColumn> cols;

  std::vector<int> word() const;
  bool operator==(const HighlightPattern&) const = default;
};

// Decorates rows (x, y, z) of a short pattern with the slot rules above; the
// lower pair's generators are shifted one column right for an L upper pair
// and cut off one column early for an R upper pair.  Accepts the two-row
// pattern with row lengths (2, 1) as the single-column case.  `offset` is
// the number of L pairs above the upper pair.
HighlightPattern decorate_short(const GTPattern& p, RowType upper, int offset = 0);

// Maximal runs of columns carrying at least one highlight, as inclusive
// 0-based column ranges; highlight-free columns separate them.
std::vector<std::pair<int, int>> decoration_blocks(const HighlightPattern& d);

// Word-product-preserving normal form: the block-leftmost column of an
// L-upper decoration (block-rightmost for R-upper) becomes top-highlighted
// only, with its bottom slot removed.
HighlightPattern normalize_decoration(const HighlightPattern& d);

// Rewrites a normalized L-upper decoration into the normalized R-upper
// decoration of the reflected short pattern, sweeping a both-arrow center
// slot across the columns.  Every intermediate word folds to the same
// monoid element; `trace` receives those words (first entry the input word,
// last the output word).  Throws std::domain_error if the input is not a
// normalized L-upper decoration.
HighlightPattern dg_to_gd(const HighlightPattern& d);
HighlightPattern dg_to_gd(const HighlightPattern& d, std::vector<std::vector<int>>& trace);

} // namespace icebox
