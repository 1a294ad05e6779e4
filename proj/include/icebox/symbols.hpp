// Standard indeterminate layout shared by all weight tables and checks.
//
// A Symbols instance registers, in a fixed order, the row parameters z1..zr,
// the deformation parameters q2 (standing for the square q^2), Phi and v, the
// color-pair parameters X_i_j for colors i < j, and the metaplectic symbols
// g_1..g_{m-1}. Only X_i_j with i < j are ever registered; the diagonal is
// rewritten to -q2 and the reversed pairs to q2 * X_i_j^-1, so the defining
// relation X_{i,j} X_{j,i} = q^2 is baked into every constructed weight.

#pragma once

#include <vector>

#include "icebox/laurent.hpp"

namespace icebox {

struct Symbols {
  IndetRegistry reg;
  int r = 0;  // number of rows (z parameters)
  int m = 0;  // palette size (colors 1..m)

  int q2 = -1, Phi = -1, v = -1;
  std::vector<int> z;                 // z[i-1] is the index of z_i
  std::vector<std::vector<int>> X;    // X[i][j] for 1 <= i < j <= m (1-based)
  std::vector<int> g;                 // g[d] for 1 <= d <= m-1 (1-based)

  using P = LaurentPoly;

  P zero() const { return P(&reg); }
  P one() const { return P::constant(&reg, 1); }
  P num(long n) const { return P::constant(&reg, n); }
  P num(const Rat& x) const { return P::constant(&reg, x); }

  P zvar(int i, int e = 1) const;   // z_i^e, i in 1..r
  P q2pow(int e) const;             // q2^e (that is, q^{2e})
  P phipow(int e) const;
  P vpow(int e) const;
  P one_minus_q2() const;           // 1 - q2

  // Canonical color-pair parameter: i == j gives -q2, i < j gives X_i_j,
  // i > j gives q2 * X_j_i^-1.
  P Xpar(int i, int j) const;

  // Gauss-sum symbol with argument taken mod m: g(0) = -v, canonical
  // representatives d <= m/2 stay as g_d, larger ones become v * g_{m-d}^-1.
  // For even m the symbol g_{m/2} squares to v; see gauss_normalize.
  P gauss(int a) const;

  // Reduces every exponent of g_{m/2} (even m only) to 0 or 1 using
  // g_{m/2}^2 = v, the one relation a canonical rewrite cannot remove.
  P gauss_normalize(const P& p) const;
};

// Registers the layout above for r rows and m colors.
Symbols make_symbols(int r, int m);

}  // namespace icebox
