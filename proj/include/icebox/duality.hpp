#pragma once

// Exact partition-function identities between mixed-row systems: swapping two
// adjacent rows of opposite families, flipping the family of the bottom row,
// and the full reversal identity relating the all-right and all-left systems.
// Every check enumerates the systems involved and compares Laurent
// polynomials exactly; nothing is proved by formula.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "icebox/lattice.hpp"
#include "icebox/laurent.hpp"
#include "icebox/symbols.hpp"

namespace icebox {

struct DualityReport {
  std::string id;
  std::string transform;  // "row-swap" | "last-row" | "full-reversal" | "replay"
  bool pass = false;
  LaurentPoly lhs, rhs;
  std::size_t lhs_states = 0, rhs_states = 0;
  nlohmann::json details;
  nlohmann::json to_json() const;
};

// All checks treat exit colors that cannot be a rearrangement of the
// entering top colors as an empty system with partition function zero, so
// such boundaries compare as 0 = 0 instead of being rejected.

// Z of `spec` equals Z of the spec with rows i and i+1 swapped (families and
// exit colors both move), with z_i and z_{i+1} exchanged afterwards.  i is
// 1-based; the two rows must have opposite families, else
// std::invalid_argument.
DualityReport check_row_swap(const Symbols& sym, const SystemSpec& spec, int i);

// Z with the bottom row right-moving equals z_r^N times Z with the bottom row
// left-moving.  Both variants are rebuilt from `spec` regardless of its own
// bottom-row family.  Besides the aggregate identity the check walks the
// underlying state bijection: complementing the occupancy of the bottom
// horizontal row maps each state of one system onto a state of the other with
// exactly the factor z_r^N.
DualityReport check_last_row(const Symbols& sym, const SystemSpec& spec);

// Full reversal: the all-right system with exit colors sigma equals
// (z_1...z_r)^N times the all-left system with reversed exit colors and
// reversed row parameters.  Both sides are enumerated independently; the two
// state sets are unrelated and their sizes are recorded in the report.
DualityReport check_left_right_duality(const Symbols& sym, const std::vector<int>& mu,
                                       const std::vector<int>& sigma, int blocks, int m,
                                       int r, const WeightRegime& regime);

// Replays the reversal one elementary move at a time: flip the bottom row's
// family, bubble the new left-moving row upward by adjacent swaps, repeat for
// each row.  After every move the accumulated monomial factor times the
// transformed partition function is compared against the all-right side; the
// per-step log lands in details.
DualityReport replay_left_right_duality(const Symbols& sym, const std::vector<int>& mu,
                                        const std::vector<int>& sigma, int blocks, int m,
                                        int r, const WeightRegime& regime);

}  // namespace icebox
