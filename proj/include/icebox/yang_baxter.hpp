#pragma once

// Exact linear operators for the six-edge train-track diagrams and their
// equalities: both sides of the RTT and RRR diagrams, single R-vertex pair
// maps, the two-vertex mixed composite, and entrywise checks that report a
// counterexample on failure.
//
// Diagrams are contracted positionally: every vertex weight is the table
// value of its four adjacent edge spins in geometric position (left, top,
// right, bottom for T-vertices; the four corners for R-vertices), and
// internal edges are summed while boundary edges stay fixed.  Boundary
// tuples are (a, b, c) -> (d, e, f) where a, d lie on the first strand
// (parameter z_zx), b, e on the second and c, f on the third.

#include <string>
#include <vector>

#include <json.hpp>

#include "icebox/symbols.hpp"
#include "icebox/weights.hpp"

namespace icebox {

struct LinearMap {
  std::vector<std::vector<int>> domain;   // ordered spin tuples
  std::vector<std::vector<int>> codomain; // ordered spin tuples
  std::map<std::pair<int, int>, LaurentPoly> entries; // (codomain idx, domain idx)

  // Accumulates into one entry, never storing zeros.
  void add(int out, int in, const LaurentPoly& w);
  const LaurentPoly* find(int out, int in) const;
};

LinearMap lm_identity(const Symbols& sym, const std::vector<std::vector<int>>& basis);
LinearMap lm_tensor(const LinearMap& a, const LinearMap& b);
// after o before; the inner bases must agree.
LinearMap lm_compose(const LinearMap& after, const LinearMap& before);
LinearMap lm_scale(const LinearMap& m, const LaurentPoly& c);
bool lm_equal(const LinearMap& a, const LinearMap& b);
// Human-readable first difference, empty when equal.
std::string lm_diff(const LinearMap& a, const LinearMap& b);

enum class DiagramSide { Left, Right };

// Colors found on admissible diagram fillings; when the diagram contains no
// (R, L)-type R-vertex, every internal color must already sit on the
// boundary.  The audit records the first violation of that subset property.
struct DiagramAudit {
  bool applicable = false;
  bool color_subset_ok = true;
  nlohmann::json violation;
};

// One side of the RTT diagram for rows of types X (parameter z_zx) and Y
// (z_zy) with vertex color k; on the right-hand side the R-vertex carries
// color k+1 (cyclically) in unfused regimes.  In the crystal regime the
// vertical strand carries colors, the fused T- and R-tables are used and k
// must be 1.
LinearMap build_rtt(const Symbols& sym, RowType X, RowType Y, int k,
                    const WeightRegime& regime, DiagramSide side, int zx = 1, int zy = 2,
                    DiagramAudit* audit = nullptr);

// One side of the RRR diagram for rows X (z_zx), Y (z_zy), Z (z_zz); all
// three R-vertices carry color k.
LinearMap build_rrr(const Symbols& sym, RowType X, RowType Y, RowType Z, int k,
                    const WeightRegime& regime, DiagramSide side, int zx = 1, int zy = 2,
                    int zz = 3, DiagramAudit* audit = nullptr);

// Single R-vertex as a map on ordered pairs: domain (x, y) feeds the corners
// (lb, lt), codomain (y', x') reads (rb, rt), so that the first strand
// carries z_z1row through the vertex.
LinearMap r_vertex_map(const Symbols& sym, RowType X, RowType Y, int k,
                       const WeightRegime& regime, int z1row, int z2row);

// Two mixed R-vertices of color k wired left to right, as a map
// (a, b) -> (c, d) with a = lb, b = lt on the first vertex and c = rt,
// d = rb on the second.  The default order puts the (L, R) vertex with
// arguments (z2, z1) first and the (R, L) vertex with (z1, z2) second;
// `reversed` swaps the two vertex positions keeping each one's arguments.
// Either order equals rl_inverse_constant times the swap (c, d) = (b, a).
LinearMap rl_composite(const Symbols& sym, const WeightRegime& regime, bool reversed, int k = 1);
LaurentPoly rl_inverse_constant(const Symbols& sym, const WeightRegime& regime);

struct YbeReport {
  std::string id;
  bool pass = true;
  nlohmann::json details; // counterexample or audit violation, null when passing
  nlohmann::json to_json() const;
};

YbeReport check_rtt(const Symbols& sym, RowType X, RowType Y, int k, const WeightRegime& regime);
YbeReport check_rrr(const Symbols& sym, RowType X, RowType Y, RowType Z, int k,
                    const WeightRegime& regime);
// Both composition orders against the inverse constant, all boundary pairs.
YbeReport check_rl_inverse(const Symbols& sym, const WeightRegime& regime);

// Every check applicable to the regime: RTT over all row-type pairs, RRR
// over all triples, each vertex color, plus the inverse identity.
std::vector<YbeReport> run_ybe_suite(const Symbols& sym, const WeightRegime& regime);

} // namespace icebox
