#pragma once

// Colored-path lattice systems on rectangular grids: boundary data, admissible
// state enumeration, Boltzmann weights, partition functions, block fusion and
// the deterministic coloring of uncolored layouts.
//
// Two grid flavours share one State type.  Expanded grids have N*m columns
// whose colors cycle through the palette (column x carries color (x mod m)+1,
// so the column numbered n from the right carries c_{m - (n mod m)}); vertical
// edges there are only ever occupied by their own column color.  Fused crystal
// grids have N columns and vertical edges carry arbitrary palette colors.
// Rows are indexed 0..r-1 top-down and row i uses the parameter z_{i+1}.
// Horizontal spins live at (row, p) for p in 0..cols (p=0 is the left
// boundary edge); vertical spins at (boundary b, x) for b in 0..rows.

#include <optional>
#include <vector>

#include <json.hpp>

#include "icebox/laurent.hpp"
#include "icebox/symbols.hpp"
#include "icebox/weights.hpp"

namespace icebox {

struct SystemSpec {
  int rows = 0;                          // r
  int palette = 1;                       // m
  std::vector<RowType> row_types;        // length r; R rows exit right, L rows exit left
  std::vector<int> mu;                   // strictly decreasing column numbers, length r
  std::optional<std::vector<int>> sigma; // exit color of each row; omitted = sum over exits
  int blocks = 1;                        // N
  WeightRegime regime;
  bool fused = false;                    // fused crystal grid: `blocks` columns, mu in fused numbering
  std::vector<int> top_colors;           // fused grids: colors of the top paths, left to right

  int width() const { return fused ? blocks : blocks * palette; }
  int column_color(int x) const { return fused ? 0 : (x % palette) + 1; }
  int column_position(int n) const { return width() - 1 - n; }

  // Color of the top boundary path at x-position x, 0 if unoccupied.
  int top_color_at(int x) const;

  void validate() const; // throws std::domain_error on malformed boundary data
};

struct State {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> horizontal; // rows x (cols+1)
  std::vector<std::vector<int>> vertical;   // (rows+1) x cols
  bool operator==(const State&) const = default;
};

// Color leaving row `row` through its exit edge (right for R rows, left
// for L rows).
int exit_color(const SystemSpec& spec, const State& s, int row);

// All admissible (nonzero-weight) states with the spec's boundary conditions,
// in a deterministic order: rows are filled top-down and scanned from the row
// family's input side, branching in increasing edge-label order.
std::vector<State> enumerate_states(const Symbols& sym, const SystemSpec& spec);

LaurentPoly state_weight(const Symbols& sym, const SystemSpec& spec, const State& s);

LaurentPoly partition_function(const Symbols& sym, const SystemSpec& spec);

// One fused vertex with subset-valued vertical edges.  Colors in `top` and
// `bottom` are strictly increasing; an expanded block hosts a color only on
// the matching column.
struct FusedTConfig {
  int left = 0;
  std::vector<int> top;
  int right = 0;
  std::vector<int> bottom;
  int z_row = 1;
};

// Weight of the unique expanded one-row block realizing the fused
// configuration, or zero when no admissible completion exists.  R blocks are
// scanned left to right from the `left` edge, L blocks right to left.
LaurentPoly fuse_block(const Symbols& sym, RowType family, const FusedTConfig& cfg,
                       const WeightRegime& regime);

// Per-column weights of the expanded block, empty when inadmissible.
std::vector<LaurentPoly> fuse_block_trace(const Symbols& sym, RowType family,
                                          const FusedTConfig& cfg, const WeightRegime& regime);

// Unique admissible coloring of an uncolored fused-crystal layout (a State
// over the one-color palette).  Colors are filled row by row starting from
// each row's input side.  Throws std::logic_error if the layout admits no
// coloring and std::domain_error if it is not a valid one-color layout.
State color_completion(const SystemSpec& spec, const State& gray);

nlohmann::json state_to_json(const Symbols& sym, const SystemSpec& spec, const State& s);
State state_from_json(const nlohmann::json& j);

} // namespace icebox
