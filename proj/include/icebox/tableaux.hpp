#pragma once

// Semistandard tableaux as an independent check layer for the triangular
// patterns: the rows-as-shapes bijection, the classical entry-swap
// involutions and evacuation computed by rotation plus jeu de taquin
// rectification.

#include <string>
#include <vector>

#include <json.hpp>

#include "icebox/gt_patterns.hpp"

namespace icebox {

struct SSYT {
  std::vector<std::vector<int>> rows;

  std::vector<int> shape() const;
  std::vector<int> content(int n) const; // multiplicities of 1..n
  bool operator==(const SSYT&) const = default;

  std::string to_text() const; // one row per line, entries space-separated
  nlohmann::json to_json() const;
  static SSYT from_json(const nlohmann::json& j);
};

// Rows weakly increase, columns strictly increase, entries lie in 1..n and
// row lengths weakly decrease with no empty rows.
bool ssyt_ok(const SSYT& t, int n);

// Pattern row i is the shape of the entries at most r-i, zero-padded to r-i
// parts; the inverse fills the skew layers between consecutive rows.  Both
// throw std::domain_error when the input is not weakly interlacing resp. not
// semistandard with entries at most r.
SSYT ssyt_from_gt(const GTPattern& p);
GTPattern gt_from_ssyt(const SSYT& t, int r);

// Classical involution swapping the multiplicities of i and i+1: in each row
// the i's without an i+1 directly below and the (i+1)'s without an i directly
// above trade places.
SSYT bender_knuth(const SSYT& t, int i);

// Complements entries (x -> n+1-x), rotates the tableau by a half turn inside
// its bounding box and rectifies the resulting skew shape with jeu de taquin
// slides (the hole takes the smaller of its right and lower neighbours, ties
// from below).  Preserves the shape and reverses the content.
SSYT evacuation(const SSYT& t, int n);

// All semistandard tableaux of the given shape with entries at most n, filled
// directly cell by cell.
std::vector<SSYT> enumerate_ssyt(const std::vector<int>& shape, int n);

} // namespace icebox
