#include "icebox/symbols.hpp"

#include <string>

namespace icebox {

Symbols make_symbols(int r, int m) {
  if (r < 0 || m < 0) throw std::invalid_argument("make_symbols: negative size");
  Symbols s;
  s.r = r;
  s.m = m;
  for (int i = 1; i <= r; ++i) s.z.push_back(s.reg.add("z" + std::to_string(i)));
  s.q2 = s.reg.add("q2");
  s.Phi = s.reg.add("Phi");
  s.v = s.reg.add("v");
  s.X.assign(m + 1, std::vector<int>(m + 1, -1));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      s.X[i][j] = s.reg.add("X_" + std::to_string(i) + "_" + std::to_string(j));
  s.g.assign(m, -1);
  for (int d = 1; d <= m - 1; ++d) s.g[d] = s.reg.add("g_" + std::to_string(d));
  return s;
}

LaurentPoly Symbols::zvar(int i, int e) const {
  if (i < 1 || i > r) throw std::invalid_argument("zvar: row out of range");
  return P::var(&reg, z[i - 1], e);
}

LaurentPoly Symbols::q2pow(int e) const { return P::var(&reg, q2, e); }
LaurentPoly Symbols::phipow(int e) const { return P::var(&reg, Phi, e); }
LaurentPoly Symbols::vpow(int e) const { return P::var(&reg, v, e); }

LaurentPoly Symbols::one_minus_q2() const { return one() - q2pow(1); }

LaurentPoly Symbols::Xpar(int i, int j) const {
  if (i < 1 || i > m || j < 1 || j > m)
    throw std::invalid_argument("Xpar: color out of range");
  if (i == j) return -q2pow(1);
  if (i < j) return P::var(&reg, X[i][j]);
  return P::monomial(&reg, Rat(1), {{q2, 1}, {X[j][i], -1}});
}

LaurentPoly Symbols::gauss(int a) const {
  if (m < 1) throw std::invalid_argument("gauss: needs a palette");
  int d = ((a % m) + m) % m;
  if (d == 0) return -vpow(1);
  if (2 * d < m) return P::var(&reg, g[d]);
  if (2 * d == m) return P::var(&reg, g[d]);
  return P::monomial(&reg, Rat(1), {{v, 1}, {g[m - d], -1}});
}

LaurentPoly Symbols::gauss_normalize(const P& p) const {
  if (m < 2 || m % 2 != 0) return p;
  const int gh = g[m / 2];
  P out(&reg);
  for (const auto& [e, c] : p.terms()) {
    int ex = gh < static_cast<int>(e.size()) ? e[gh] : 0;
    // Write ex = 2k + res with res in {0, 1} and fold g^2k into v^k.
    int res = ((ex % 2) + 2) % 2;
    int k = (ex - res) / 2;
    std::vector<int> ne(e);
    if (gh >= static_cast<int>(ne.size())) ne.resize(gh + 1, 0);
    ne[gh] = res;
    if (v >= static_cast<int>(ne.size())) ne.resize(v + 1, 0);
    ne[v] += k;
    out.add_term(std::move(ne), c);
  }
  return out;
}

}  // namespace icebox
