// Boltzmann weight tables for the left- and right-moving vertex families.
//
// Covers the generic T-vertex tables, their metaplectic, Iwahori and crystal
// specializations, the fused crystal T-tables, the four R-vertex tables and
// their crystal limits, and the twist transformation that rescales the
// color-pair parameters X_{i,j} and Phi without changing admissibility.
//
// Conventions. Horizontal spins are 0 (empty) or a color 1..m. Unfused
// vertical edges carry at most one path whose color always equals the column
// color, so they are stored as occupancy bits. Right-moving (R) rows take
// inputs on the left and top and outputs on the right and bottom; paths exit
// to the right. Left-moving (L) rows mirror this and exit left. In crystal
// mode R plays the role of Gamma and L of Delta. R-vertex configurations are
// read as the four corner spins (lt, lb, rt, rb); the strand from lb to rt
// carries the first row parameter, the strand from lt to rb the second.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "icebox/symbols.hpp"

namespace icebox {

enum class RowType { R, L };
constexpr RowType Gamma = RowType::R;
constexpr RowType Delta = RowType::L;

enum class RegimeTag { Generic, Metaplectic, Iwahori, Crystal };

struct TwistData {
  // phi[i][j] for colors 1..m (index 0 unused); phi[i][i] = 1 and
  // phi[i][j] * phi[j][i] = 1.
  std::vector<std::vector<Rat>> phi;
  Rat phi_scale = 1;
};

TwistData identity_twist(int m);
// Seeded random twist with small rational entries, for invariance tests.
TwistData random_twist(int m, std::mt19937_64& rng);

struct WeightRegime {
  RegimeTag tag = RegimeTag::Generic;
  int m = 1;
  bool twisted = false;
  TwistData twist;
};

WeightRegime make_regime(RegimeTag tag, int m);
// Composes a twist onto a generic regime; validates the reciprocal condition.
WeightRegime apply_twist(const WeightRegime& regime, const TwistData& tw);

// Unfused T-vertex: horizontal spins plus vertical occupancy bits and the
// color of the column the vertex sits in.
struct TVertexConfig {
  int left = 0;
  bool top = false;
  int right = 0;
  bool bottom = false;
  int column_color = 1;
};

enum class TClass { A1, A2, B1, B2, C1, C2, Inadmissible };
TClass classify_t(RowType family, const TVertexConfig& cfg);

// Table weight for one unfused T-vertex, with z taken from row zrow.
LaurentPoly t_weight(const Symbols& sym, RowType family, const TVertexConfig& cfg,
                     int zrow, const WeightRegime& regime);

// Fused crystal T-vertex: all four edges carry at most one color.
struct CrystalTConfig {
  int left = 0;
  int top = 0;
  int right = 0;
  int bottom = 0;
};

// Fused crystal tables; the Delta table includes its uniform factor of z,
// which makes partition functions independent of the number of columns.
LaurentPoly crystal_t_weight(const Symbols& sym, RowType family,
                             const CrystalTConfig& cfg, int zrow);

// R-vertex corner spins plus the vertex color k.
struct RVertexConfig {
  int lt = 0;
  int lb = 0;
  int rt = 0;
  int rb = 0;
  int k = 1;
};

// Weight of the R-vertex swapping a row of type X (parameter z_{z1row}, the
// lb-to-rt strand) over a row of type Y (parameter z_{z2row}). The palette
// size enters the (R, L) table through explicit q^2 powers.
LaurentPoly r_weight(const Symbols& sym, RowType X, RowType Y, const RVertexConfig& cfg,
                     int z1row, int z2row, const WeightRegime& regime);

// Crystal R-tables, rows interpreted as Gamma (R) and Delta (L).
LaurentPoly crystal_r_weight(const Symbols& sym, RowType X, RowType Y,
                             const RVertexConfig& cfg, int z1row, int z2row);

// Residues mod m with values in [0, m-1] and [1, m] respectively.
int res_lo(int x, int m);
int res_hi(int x, int m);

// True when the colors (i, j, k) are in one of the cyclic orders
// i<j<k, j<k<=i, k<=i<j. For i != j exactly one of cyclic_first and
// cyclic_second holds.
bool cyclic_first(int i, int j, int k);
bool cyclic_second(int i, int j, int k);

// Checks X_{i,i} = -q^2 and X_{i,j} X_{j,i} = q^2 for distinct color pairs
// under the regime's primitives (after the quadratic Gauss normalization
// when needed).
bool x_condition_holds(const Symbols& sym, const WeightRegime& regime);

// Table dumps for golden-file diffing, keyed by configuration descriptor.
nlohmann::json dump_t_table(const Symbols& sym, RowType family, int zrow,
                            const WeightRegime& regime);
nlohmann::json dump_crystal_t_table(const Symbols& sym, RowType family, int zrow);
nlohmann::json dump_r_table(const Symbols& sym, RowType X, RowType Y, int z1row,
                            int z2row, const WeightRegime& regime);
nlohmann::json dump_crystal_r_table(const Symbols& sym, RowType X, RowType Y,
                                    int z1row, int z2row);

}  // namespace icebox
