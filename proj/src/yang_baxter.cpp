// Contraction of train-track diagrams into exact linear maps and the
// entrywise equality checks built on them.  Vertices are evaluated through
// dense per-diagram weight tables so each table entry is computed once, and
// the contraction loops skip zero weights, which also restricts the color
// audit to admissible fillings.

#include "icebox/yang_baxter.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace icebox {

namespace {

using json = nlohmann::json;

std::string row_letter(RowType t) { return t == RowType::R ? "R" : "L"; }

std::string regime_label(const WeightRegime& regime) {
  std::string s;
  switch (regime.tag) {
    case RegimeTag::Generic: s = "generic"; break;
    case RegimeTag::Metaplectic: s = "metaplectic"; break;
    case RegimeTag::Iwahori: s = "iwahori"; break;
    case RegimeTag::Crystal: s = "crystal"; break;
  }
  if (regime.twisted) s += "-twisted";
  return s;
}

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

// Dense T-vertex table indexed (left, top, right, bottom); vertical edges
// run over 0..1 unfused and 0..m fused.
struct TTable {
  int m = 0, vmax = 0;
  std::vector<LaurentPoly> w;
  int idx(int left, int top, int right, int bottom) const {
    return ((left * (vmax + 1) + top) * (m + 1) + right) * (vmax + 1) + bottom;
  }
  const LaurentPoly& at(int left, int top, int right, int bottom) const {
    return w[idx(left, top, right, bottom)];
  }
};

TTable make_t_table(const Symbols& sym, RowType family, int k, const WeightRegime& regime,
                    int zrow) {
  TTable t;
  t.m = regime.m;
  const bool fused = regime.tag == RegimeTag::Crystal;
  t.vmax = fused ? regime.m : 1;
  t.w.assign(static_cast<std::size_t>(t.m + 1) * (t.vmax + 1) * (t.m + 1) * (t.vmax + 1),
             sym.zero());
  for (int l = 0; l <= t.m; ++l)
    for (int top = 0; top <= t.vmax; ++top)
      for (int r = 0; r <= t.m; ++r)
        for (int b = 0; b <= t.vmax; ++b) {
          if (fused) {
            t.w[t.idx(l, top, r, b)] =
                crystal_t_weight(sym, family, CrystalTConfig{l, top, r, b}, zrow);
          } else {
            TVertexConfig cfg{l, top != 0, r, b != 0, k};
            t.w[t.idx(l, top, r, b)] = t_weight(sym, family, cfg, zrow, regime);
          }
        }
  return t;
}

// Dense R-vertex table indexed by the four corners (lt, lb, rt, rb).
struct RTable {
  int m = 0;
  std::vector<LaurentPoly> w;
  int idx(int lt, int lb, int rt, int rb) const {
    return ((lt * (m + 1) + lb) * (m + 1) + rt) * (m + 1) + rb;
  }
  const LaurentPoly& at(int lt, int lb, int rt, int rb) const { return w[idx(lt, lb, rt, rb)]; }
};

RTable make_r_table(const Symbols& sym, RowType X, RowType Y, int k, const WeightRegime& regime,
                    int z1row, int z2row) {
  RTable t;
  t.m = regime.m;
  const bool crystal = regime.tag == RegimeTag::Crystal;
  t.w.assign(static_cast<std::size_t>(t.m + 1) * (t.m + 1) * (t.m + 1) * (t.m + 1), sym.zero());
  for (int lt = 0; lt <= t.m; ++lt)
    for (int lb = 0; lb <= t.m; ++lb)
      for (int rt = 0; rt <= t.m; ++rt)
        for (int rb = 0; rb <= t.m; ++rb) {
          RVertexConfig cfg{lt, lb, rt, rb, k};
          t.w[t.idx(lt, lb, rt, rb)] = crystal
                                           ? crystal_r_weight(sym, X, Y, cfg, z1row, z2row)
                                           : r_weight(sym, X, Y, cfg, z1row, z2row, regime);
        }
  return t;
}

// Tuples (a, b, c): two horizontal spins 0..m, one vertical spin 0..vmax.
std::vector<std::vector<int>> rtt_basis(int m, int vmax) {
  std::vector<std::vector<int>> basis;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b)
      for (int c = 0; c <= vmax; ++c) basis.push_back({a, b, c});
  return basis;
}

std::vector<std::vector<int>> rrr_basis(int m) {
  std::vector<std::vector<int>> basis;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b)
      for (int c = 0; c <= m; ++c) basis.push_back({a, b, c});
  return basis;
}

// Records the first admissible filling whose internal colors are not all
// boundary colors.  Unfused vertical edges carry the column color when
// occupied; fused vertical edges and all horizontal edges carry their own
// value.
struct AuditScope {
  DiagramAudit* audit = nullptr;
  bool fused = false;
  int column_color = 0;
  const char* side = "";

  void term(const std::vector<int>& boundary_h, const std::vector<int>& boundary_v,
            const std::vector<int>& internal_h, const std::vector<int>& internal_v) const {
    if (!audit || !audit->applicable || !audit->color_subset_ok) return;
    std::set<int> bset, iset;
    for (int h : boundary_h)
      if (h > 0) bset.insert(h);
    for (int v : boundary_v)
      if (v > 0) bset.insert(fused ? v : column_color);
    for (int h : internal_h)
      if (h > 0) iset.insert(h);
    for (int v : internal_v)
      if (v > 0) iset.insert(fused ? v : column_color);
    std::vector<int> extra;
    for (int c : iset)
      if (!bset.count(c)) extra.push_back(c);
    if (extra.empty()) return;
    audit->color_subset_ok = false;
    audit->violation = {{"side", side},
                        {"horizontal_boundary", boundary_h},
                        {"vertical_boundary", boundary_v},
                        {"horizontal_internal", internal_h},
                        {"vertical_internal", internal_v},
                        {"extra_colors", extra}};
  }
};

void reset_audit(DiagramAudit* audit, bool applicable) {
  if (!audit) return;
  audit->applicable = applicable;
  audit->color_subset_ok = true;
  audit->violation = nullptr;
}

}  // namespace

void LinearMap::add(int out, int in, const LaurentPoly& w) {
  if (w.is_zero()) return;
  auto key = std::make_pair(out, in);
  auto it = entries.find(key);
  if (it == entries.end()) {
    entries.emplace(key, w);
  } else {
    it->second += w;
    if (it->second.is_zero()) entries.erase(it);
  }
}

const LaurentPoly* LinearMap::find(int out, int in) const {
  auto it = entries.find({out, in});
  return it == entries.end() ? nullptr : &it->second;
}

LinearMap lm_identity(const Symbols& sym, const std::vector<std::vector<int>>& basis) {
  LinearMap out;
  out.domain = basis;
  out.codomain = basis;
  const LaurentPoly one = sym.one();
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) out.add(i, i, one);
  return out;
}

LinearMap lm_tensor(const LinearMap& a, const LinearMap& b) {
  LinearMap out;
  auto merge = [](const std::vector<std::vector<int>>& xs, const std::vector<std::vector<int>>& ys) {
    std::vector<std::vector<int>> r;
    r.reserve(xs.size() * ys.size());
    for (const auto& x : xs)
      for (const auto& y : ys) {
        std::vector<int> t = x;
        t.insert(t.end(), y.begin(), y.end());
        r.push_back(std::move(t));
      }
    return r;
  };
  out.domain = merge(a.domain, b.domain);
  out.codomain = merge(a.codomain, b.codomain);
  const int bdom = static_cast<int>(b.domain.size());
  const int bcod = static_cast<int>(b.codomain.size());
  for (const auto& [ka, wa] : a.entries)
    for (const auto& [kb, wb] : b.entries)
      out.add(ka.first * bcod + kb.first, ka.second * bdom + kb.second, wa * wb);
  return out;
}

LinearMap lm_compose(const LinearMap& after, const LinearMap& before) {
  if (before.codomain != after.domain)
    throw std::invalid_argument("lm_compose: inner bases do not match");
  LinearMap out;
  out.domain = before.domain;
  out.codomain = after.codomain;
  // Bucket the second factor by its domain index for the sparse join.
  std::map<int, std::vector<std::pair<int, const LaurentPoly*>>> by_mid;
  for (const auto& [k, w] : after.entries) by_mid[k.second].push_back({k.first, &w});
  for (const auto& [k, w] : before.entries) {
    auto it = by_mid.find(k.first);
    if (it == by_mid.end()) continue;
    for (const auto& [outIdx, w2] : it->second) out.add(outIdx, k.second, w * (*w2));
  }
  return out;
}

LinearMap lm_scale(const LinearMap& m, const LaurentPoly& c) {
  LinearMap out;
  out.domain = m.domain;
  out.codomain = m.codomain;
  for (const auto& [k, w] : m.entries) out.add(k.first, k.second, w * c);
  return out;
}

bool lm_equal(const LinearMap& a, const LinearMap& b) {
  return a.domain == b.domain && a.codomain == b.codomain && a.entries == b.entries;
}

std::string lm_diff(const LinearMap& a, const LinearMap& b) {
  if (a.domain != b.domain || a.codomain != b.codomain) return "basis mismatch";
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  auto report = [&](const std::pair<int, int>& key, const std::string& lhs,
                    const std::string& rhs) {
    return tuple_str(a.codomain[key.first]) + " <- " + tuple_str(a.domain[key.second]) +
           ": lhs = " + lhs + ", rhs = " + rhs;
  };
  while (ia != a.entries.end() || ib != b.entries.end()) {
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
      return report(ia->first, ia->second.to_string(), "0");
    }
    if (ia == a.entries.end() || ib->first < ia->first) {
      return report(ib->first, "0", ib->second.to_string());
    }
    if (!(ia->second == ib->second)) {
      return report(ia->first, ia->second.to_string(), ib->second.to_string());
    }
    ++ia;
    ++ib;
  }
  return "";
}

LinearMap build_rtt(const Symbols& sym, RowType X, RowType Y, int k, const WeightRegime& regime,
                    DiagramSide side, int zx, int zy, DiagramAudit* audit) {
  const int m = regime.m;
  const bool fused = regime.tag == RegimeTag::Crystal;
  if (k < 1 || k > m) throw std::invalid_argument("build_rtt: vertex color out of range");
  if (fused && k != 1)
    throw std::invalid_argument("build_rtt: fused diagrams fix the vertex color to 1");
  const int vmax = fused ? m : 1;

  LinearMap out;
  out.domain = rtt_basis(m, vmax);
  out.codomain = out.domain;
  auto index = [&](int a, int b, int c) { return (a * (m + 1) + b) * (vmax + 1) + c; };

  // Passing the R-vertex through the column advances its color on the
  // right-hand side of the unfused relation.
  const int rk = (side == DiagramSide::Right && !fused) ? k % m + 1 : k;
  const RTable R = make_r_table(sym, X, Y, rk, regime, zx, zy);
  const TTable TX = make_t_table(sym, X, k, regime, zx);
  const TTable TY = make_t_table(sym, Y, k, regime, zy);

  reset_audit(audit, !(X == RowType::R && Y == RowType::L));
  const AuditScope scope{audit, fused, k, side == DiagramSide::Left ? "left" : "right"};

  if (side == DiagramSide::Left) {
    // Strand X enters the R-vertex at lb = a and meets the column first.
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b)
        for (int i = 0; i <= m; ++i)
          for (int j = 0; j <= m; ++j) {
            const LaurentPoly& rw = R.at(b, a, i, j);
            if (rw.is_zero()) continue;
            for (int c = 0; c <= vmax; ++c)
              for (int d = 0; d <= m; ++d)
                for (int t = 0; t <= vmax; ++t) {
                  const LaurentPoly& wx = TX.at(i, c, d, t);
                  if (wx.is_zero()) continue;
                  const LaurentPoly partial = rw * wx;
                  for (int e = 0; e <= m; ++e)
                    for (int f = 0; f <= vmax; ++f) {
                      const LaurentPoly& wy = TY.at(j, t, e, f);
                      if (wy.is_zero()) continue;
                      out.add(index(d, e, f), index(a, b, c), partial * wy);
                      scope.term({a, b, d, e}, {c, f}, {i, j}, {t});
                    }
                }
          }
  } else {
    // Strand Y meets the column first; the R-vertex sits on the right.
    for (int b = 0; b <= m; ++b)
      for (int c = 0; c <= vmax; ++c)
        for (int l = 0; l <= m; ++l)
          for (int n = 0; n <= vmax; ++n) {
            const LaurentPoly& wy = TY.at(b, c, l, n);
            if (wy.is_zero()) continue;
            for (int a = 0; a <= m; ++a)
              for (int mm = 0; mm <= m; ++mm)
                for (int f = 0; f <= vmax; ++f) {
                  const LaurentPoly& wx = TX.at(a, n, mm, f);
                  if (wx.is_zero()) continue;
                  const LaurentPoly partial = wy * wx;
                  for (int d = 0; d <= m; ++d)
                    for (int e = 0; e <= m; ++e) {
                      const LaurentPoly& rw = R.at(l, mm, d, e);
                      if (rw.is_zero()) continue;
                      out.add(index(d, e, f), index(a, b, c), partial * rw);
                      scope.term({a, b, d, e}, {c, f}, {l, mm}, {n});
                    }
                }
          }
  }
  return out;
}

LinearMap build_rrr(const Symbols& sym, RowType X, RowType Y, RowType Z, int k,
                    const WeightRegime& regime, DiagramSide side, int zx, int zy, int zz,
                    DiagramAudit* audit) {
  const int m = regime.m;
  const bool fused = regime.tag == RegimeTag::Crystal;
  if (k < 1 || k > m) throw std::invalid_argument("build_rrr: vertex color out of range");
  if (fused && k != 1)
    throw std::invalid_argument("build_rrr: fused diagrams fix the vertex color to 1");

  LinearMap out;
  out.domain = rrr_basis(m);
  out.codomain = out.domain;
  auto index = [&](int a, int b, int c) { return (a * (m + 1) + b) * (m + 1) + c; };

  const RTable RXY = make_r_table(sym, X, Y, k, regime, zx, zy);
  const RTable RXZ = make_r_table(sym, X, Z, k, regime, zx, zz);
  const RTable RYZ = make_r_table(sym, Y, Z, k, regime, zy, zz);

  const bool has_rl = (X == RowType::R && Y == RowType::L) ||
                      (X == RowType::R && Z == RowType::L) ||
                      (Y == RowType::R && Z == RowType::L);
  reset_audit(audit, !has_rl);
  const AuditScope scope{audit, fused, k, side == DiagramSide::Left ? "left" : "right"};

  if (side == DiagramSide::Left) {
    // X over Y first, then X over Z, then Y over Z.
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b)
        for (int i = 0; i <= m; ++i)
          for (int j = 0; j <= m; ++j) {
            const LaurentPoly& w1 = RXY.at(b, a, i, j);
            if (w1.is_zero()) continue;
            for (int c = 0; c <= m; ++c)
              for (int d = 0; d <= m; ++d)
                for (int t = 0; t <= m; ++t) {
                  const LaurentPoly& w2 = RXZ.at(c, i, d, t);
                  if (w2.is_zero()) continue;
                  const LaurentPoly partial = w1 * w2;
                  for (int e = 0; e <= m; ++e)
                    for (int f = 0; f <= m; ++f) {
                      const LaurentPoly& w3 = RYZ.at(t, j, e, f);
                      if (w3.is_zero()) continue;
                      out.add(index(d, e, f), index(a, b, c), partial * w3);
                      scope.term({a, b, c, d, e, f}, {}, {i, j, t}, {});
                    }
                }
          }
  } else {
    // Y over Z first, then X over Z, then X over Y.
    for (int b = 0; b <= m; ++b)
      for (int c = 0; c <= m; ++c)
        for (int l = 0; l <= m; ++l)
          for (int n = 0; n <= m; ++n) {
            const LaurentPoly& w1 = RYZ.at(c, b, l, n);
            if (w1.is_zero()) continue;
            for (int a = 0; a <= m; ++a)
              for (int mm = 0; mm <= m; ++mm)
                for (int f = 0; f <= m; ++f) {
                  const LaurentPoly& w2 = RXZ.at(n, a, mm, f);
                  if (w2.is_zero()) continue;
                  const LaurentPoly partial = w1 * w2;
                  for (int d = 0; d <= m; ++d)
                    for (int e = 0; e <= m; ++e) {
                      const LaurentPoly& w3 = RXY.at(l, mm, d, e);
                      if (w3.is_zero()) continue;
                      out.add(index(d, e, f), index(a, b, c), partial * w3);
                      scope.term({a, b, c, d, e, f}, {}, {l, mm, n}, {});
                    }
                }
          }
  }
  return out;
}

LinearMap r_vertex_map(const Symbols& sym, RowType X, RowType Y, int k,
                       const WeightRegime& regime, int z1row, int z2row) {
  const int m = regime.m;
  LinearMap out;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b) out.domain.push_back({a, b});
  out.codomain = out.domain;
  const RTable R = make_r_table(sym, X, Y, k, regime, z1row, z2row);
  auto index = [&](int a, int b) { return a * (m + 1) + b; };
  for (int in1 = 0; in1 <= m; ++in1)
    for (int in2 = 0; in2 <= m; ++in2)
      for (int out1 = 0; out1 <= m; ++out1)
        for (int out2 = 0; out2 <= m; ++out2)
          out.add(index(out1, out2), index(in1, in2), R.at(in2, in1, out2, out1));
  return out;
}

LinearMap rl_composite(const Symbols& sym, const WeightRegime& regime, bool reversed, int k) {
  if (regime.tag == RegimeTag::Crystal)
    throw std::invalid_argument("rl_composite: mixed inverse is an unfused relation");
  const int m = regime.m;
  if (k < 1 || k > m) throw std::invalid_argument("rl_composite: vertex color out of range");
  LinearMap out;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b) out.domain.push_back({a, b});
  out.codomain = out.domain;
  const RTable lr = make_r_table(sym, RowType::L, RowType::R, k, regime, 2, 1);
  const RTable rl = make_r_table(sym, RowType::R, RowType::L, k, regime, 1, 2);
  const RTable& first = reversed ? rl : lr;
  const RTable& second = reversed ? lr : rl;
  auto index = [&](int a, int b) { return a * (m + 1) + b; };
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b)
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) {
          const LaurentPoly& w1 = first.at(b, a, i, j);
          if (w1.is_zero()) continue;
          for (int c = 0; c <= m; ++c)
            for (int d = 0; d <= m; ++d) {
              const LaurentPoly& w2 = second.at(i, j, c, d);
              if (w2.is_zero()) continue;
              out.add(index(c, d), index(a, b), w1 * w2);
            }
        }
  return out;
}

LaurentPoly rl_inverse_constant(const Symbols& sym, const WeightRegime& regime) {
  const LaurentPoly z1 = sym.zvar(1);
  const LaurentPoly z2 = sym.zvar(2);
  return (z2 - sym.q2pow(1) * z1) * (z2 - sym.q2pow(regime.m) * z1);
}

nlohmann::json YbeReport::to_json() const {
  return {{"id", id}, {"pass", pass}, {"details", details}};
}

namespace {

bool fold_audits(YbeReport& rep, const DiagramAudit& la, const DiagramAudit& ra) {
  for (const DiagramAudit* a : {&la, &ra}) {
    if (a->applicable && !a->color_subset_ok) {
      rep.pass = false;
      rep.details = {{"type", "internal color outside boundary"}, {"violation", a->violation}};
      return false;
    }
  }
  return true;
}

}  // namespace

YbeReport check_rtt(const Symbols& sym, RowType X, RowType Y, int k, const WeightRegime& regime) {
  YbeReport rep;
  rep.id = "rtt-" + regime_label(regime) + "-" + row_letter(X) + row_letter(Y) + "-k" +
           std::to_string(k);
  DiagramAudit la, ra;
  const LinearMap lhs = build_rtt(sym, X, Y, k, regime, DiagramSide::Left, 1, 2, &la);
  const LinearMap rhs = build_rtt(sym, X, Y, k, regime, DiagramSide::Right, 1, 2, &ra);
  if (!lm_equal(lhs, rhs)) {
    rep.pass = false;
    rep.details = {{"type", "entry mismatch"}, {"first_difference", lm_diff(lhs, rhs)}};
    return rep;
  }
  fold_audits(rep, la, ra);
  return rep;
}

YbeReport check_rrr(const Symbols& sym, RowType X, RowType Y, RowType Z, int k,
                    const WeightRegime& regime) {
  YbeReport rep;
  rep.id = "rrr-" + regime_label(regime) + "-" + row_letter(X) + row_letter(Y) + row_letter(Z) +
           "-k" + std::to_string(k);
  DiagramAudit la, ra;
  const LinearMap lhs = build_rrr(sym, X, Y, Z, k, regime, DiagramSide::Left, 1, 2, 3, &la);
  const LinearMap rhs = build_rrr(sym, X, Y, Z, k, regime, DiagramSide::Right, 1, 2, 3, &ra);
  if (!lm_equal(lhs, rhs)) {
    rep.pass = false;
    rep.details = {{"type", "entry mismatch"}, {"first_difference", lm_diff(lhs, rhs)}};
    return rep;
  }
  fold_audits(rep, la, ra);
  return rep;
}

YbeReport check_rl_inverse(const Symbols& sym, const WeightRegime& regime) {
  YbeReport rep;
  rep.id = "rl-inverse-" + regime_label(regime);
  const LaurentPoly c = rl_inverse_constant(sym, regime);
  const int m = regime.m;
  auto index = [&](int a, int b) { return a * (m + 1) + b; };
  for (int k = 1; k <= m; ++k)
    for (bool reversed : {false, true}) {
      const LinearMap got = rl_composite(sym, regime, reversed, k);
      LinearMap want;
      want.domain = got.domain;
      want.codomain = got.codomain;
      for (int a = 0; a <= m; ++a)
        for (int b = 0; b <= m; ++b) want.add(index(b, a), index(a, b), c);
      if (!lm_equal(got, want)) {
        rep.pass = false;
        rep.details = {{"type", "composite differs from constant times strand exchange"},
                       {"order", reversed ? "reversed" : "direct"},
                       {"vertex_color", k},
                       {"first_difference", lm_diff(got, want)}};
        return rep;
      }
    }
  return rep;
}

std::vector<YbeReport> run_ybe_suite(const Symbols& sym, const WeightRegime& regime) {
  std::vector<YbeReport> out;
  const bool crystal = regime.tag == RegimeTag::Crystal;
  const int kmax = crystal ? 1 : regime.m;
  const RowType types[2] = {RowType::R, RowType::L};
  for (int k = 1; k <= kmax; ++k) {
    for (RowType X : types)
      for (RowType Y : types) out.push_back(check_rtt(sym, X, Y, k, regime));
    for (RowType X : types)
      for (RowType Y : types)
        for (RowType Z : types) out.push_back(check_rrr(sym, X, Y, Z, k, regime));
  }
  if (!crystal) out.push_back(check_rl_inverse(sym, regime));
  return out;
}

}  // namespace icebox
