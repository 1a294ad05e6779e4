#include "icebox/weights.hpp"

#include <stdexcept>

namespace icebox {

namespace {

Rat rat_pow(const Rat& x, int e) {
  Rat out(1);
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= x;
  if (e < 0) out = Rat(1) / out;
  return out;
}

// Regime-aware primitives for q^2, Phi and the color-pair parameter, so the
// same table code serves the generic family and its specializations.
struct Prims {
  const Symbols& sym;
  const WeightRegime& rg;
  using P = LaurentPoly;

  P q2(int e) const {
    switch (rg.tag) {
      case RegimeTag::Generic: return sym.q2pow(e);
      case RegimeTag::Metaplectic: return sym.vpow(e);
      case RegimeTag::Iwahori: return sym.vpow(-e);
      case RegimeTag::Crystal: break;
    }
    throw std::logic_error("q2 primitive undefined in crystal regime");
  }

  P phi(int e) const {
    switch (rg.tag) {
      case RegimeTag::Generic: {
        P out = sym.phipow(e);
        if (rg.twisted) out = out.scaled(rat_pow(rg.twist.phi_scale, e));
        return out;
      }
      case RegimeTag::Metaplectic: return sym.one();
      case RegimeTag::Iwahori: {
        P out = sym.vpow(e);
        return (e % 2 != 0) ? out.scaled(Rat(-1)) : out;
      }
      case RegimeTag::Crystal: break;
    }
    throw std::logic_error("Phi primitive undefined in crystal regime");
  }

  P X(int i, int j) const {
    if (i < 1 || i > sym.m || j < 1 || j > sym.m)
      throw std::invalid_argument("color-pair parameter out of range");
    switch (rg.tag) {
      case RegimeTag::Generic: {
        P out = sym.Xpar(i, j);
        if (rg.twisted && i != j) out = out.scaled(rg.twist.phi[i][j]);
        return out;
      }
      case RegimeTag::Metaplectic: return sym.gauss(j - i);
      case RegimeTag::Iwahori:
        return (i < j) ? sym.num(-1) : sym.vpow(-1).scaled(Rat(-1));
      case RegimeTag::Crystal: break;
    }
    throw std::logic_error("X primitive undefined in crystal regime");
  }

  P one_minus_q2() const { return sym.one() - q2(1); }

  // Metaplectic results may contain the square of the half-palette Gauss
  // symbol; fold it back into v before handing the weight out.
  P finish(const P& p) const {
    return rg.tag == RegimeTag::Metaplectic ? sym.gauss_normalize(p) : p;
  }
};

void check_color(int c, int m, const char* what) {
  if (c < 0 || c > m) throw std::invalid_argument(std::string(what) + ": spin out of range");
}

}  // namespace

int res_lo(int x, int m) { return ((x % m) + m) % m; }

int res_hi(int x, int m) {
  int r0 = res_lo(x, m);
  return r0 == 0 ? m : r0;
}

bool cyclic_first(int i, int j, int k) {
  return (i < j && j < k) || (j < k && k <= i) || (k <= i && i < j);
}

bool cyclic_second(int i, int j, int k) {
  return (j < i && i < k) || (i < k && k <= j) || (k <= j && j < i);
}

TwistData identity_twist(int m) {
  TwistData tw;
  tw.phi.assign(m + 1, std::vector<Rat>(m + 1, Rat(1)));
  tw.phi_scale = 1;
  return tw;
}

TwistData random_twist(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  TwistData tw = identity_twist(m);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      Rat val(num(rng), num(rng));
      val.canonicalize();
      if (sign(rng)) val = -val;
      tw.phi[i][j] = val;
      tw.phi[j][i] = Rat(1) / val;
    }
  }
  Rat s(num(rng), num(rng));
  s.canonicalize();
  if (sign(rng)) s = -s;
  tw.phi_scale = s;
  return tw;
}

WeightRegime make_regime(RegimeTag tag, int m) {
  WeightRegime rg;
  rg.tag = tag;
  rg.m = m;
  return rg;
}

WeightRegime apply_twist(const WeightRegime& regime, const TwistData& tw) {
  if (regime.tag != RegimeTag::Generic)
    throw std::domain_error("apply_twist: only the generic family is twistable");
  const int m = regime.m;
  if (static_cast<int>(tw.phi.size()) != m + 1)
    throw std::domain_error("apply_twist: twist palette size mismatch");
  if (tw.phi_scale == 0) throw std::domain_error("apply_twist: zero Phi scale");
  for (int i = 1; i <= m; ++i) {
    if (static_cast<int>(tw.phi[i].size()) != m + 1)
      throw std::domain_error("apply_twist: twist palette size mismatch");
    if (tw.phi[i][i] != 1) throw std::domain_error("apply_twist: phi(c,c) must be 1");
    for (int j = 1; j <= m; ++j) {
      if (tw.phi[i][j] == 0) throw std::domain_error("apply_twist: zero phi entry");
      if (tw.phi[i][j] * tw.phi[j][i] != 1)
        throw std::domain_error("apply_twist: phi(c,d) phi(d,c) must be 1");
    }
  }
  WeightRegime out = regime;
  if (!out.twisted) out.twist = identity_twist(m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) out.twist.phi[i][j] *= tw.phi[i][j];
  out.twist.phi_scale *= tw.phi_scale;
  out.twisted = true;
  return out;
}

TClass classify_t(RowType family, const TVertexConfig& cfg) {
  const int L = cfg.left, R = cfg.right, col = cfg.column_color;
  const bool T = cfg.top, B = cfg.bottom;
  if (L == R && T == B) {
    if (L == 0) return T ? TClass::B1 : TClass::A1;
    return T ? TClass::A2 : TClass::B2;
  }
  if (family == RowType::R) {
    if (L == col && !T && R == 0 && B) return TClass::C1;
    if (L == 0 && T && R == col && !B) return TClass::C2;
  } else {
    if (L == 0 && !T && R == col && B) return TClass::C1;
    if (L == col && T && R == 0 && !B) return TClass::C2;
  }
  return TClass::Inadmissible;
}

LaurentPoly t_weight(const Symbols& sym, RowType family, const TVertexConfig& cfg,
                     int zrow, const WeightRegime& regime) {
  check_color(cfg.left, sym.m, "t_weight left");
  check_color(cfg.right, sym.m, "t_weight right");
  if (cfg.column_color < 1 || cfg.column_color > sym.m)
    throw std::invalid_argument("t_weight: column color out of range");
  if (regime.tag == RegimeTag::Crystal && regime.m != sym.m)
    throw std::invalid_argument("t_weight: regime palette mismatch");

  const TClass cls = classify_t(family, cfg);
  if (cls == TClass::Inadmissible) return sym.zero();

  const bool right_moving = family == RowType::R;
  const int i = cfg.left != 0 ? cfg.left : cfg.right;  // path color, 0 for a1/b1
  const int j = cfg.column_color;
  // Horizontal passes pick up z on right-moving rows, z^{-1} on left-moving.
  const LaurentPoly zp = sym.zvar(zrow, right_moving ? 1 : -1);
  const LaurentPoly z = sym.zvar(zrow, 1);
  const LaurentPoly zi = sym.zvar(zrow, -1);

  if (regime.tag == RegimeTag::Crystal) {
    switch (cls) {
      case TClass::A1: return sym.one();
      case TClass::A2:
        if (i == j) return zp;
        if (right_moving) return i < j ? sym.zero() : sym.one();
        return i < j ? sym.one() : sym.zero();
      case TClass::B1: return sym.zero();
      case TClass::B2: return i == j ? zp : sym.one();
      case TClass::C1: return right_moving ? z : sym.one();
      case TClass::C2: return right_moving ? sym.one() : zi;
      case TClass::Inadmissible: break;
    }
    return sym.zero();
  }

  if (regime.tag == RegimeTag::Iwahori) {
    switch (cls) {
      case TClass::A1: return sym.one();
      case TClass::A2:
        if (i == j) return zp;
        if (right_moving) return i < j ? sym.vpow(1) : sym.one();
        return i < j ? sym.one() : sym.vpow(1);
      case TClass::B1: return -sym.vpow(1);
      case TClass::B2: return i == j ? zp : sym.one();
      case TClass::C1: {
        LaurentPoly w = sym.one() - sym.vpow(1);
        return right_moving ? w * z : w;
      }
      case TClass::C2: return right_moving ? sym.one() : zi;
      case TClass::Inadmissible: break;
    }
    return sym.zero();
  }

  if (regime.tag == RegimeTag::Metaplectic) {
    switch (cls) {
      case TClass::A1: return sym.one();
      case TClass::A2: {
        LaurentPoly w = right_moving ? sym.gauss(j - i) : sym.gauss(i - j);
        if (i == j) w = w * zp;
        return sym.gauss_normalize(w);
      }
      case TClass::B1: return sym.one();
      case TClass::B2: return i == j ? zp : sym.one();
      case TClass::C1: {
        LaurentPoly w = sym.one() - sym.vpow(1);
        return right_moving ? w * z : w;
      }
      case TClass::C2: return right_moving ? sym.one() : zi;
      case TClass::Inadmissible: break;
    }
    return sym.zero();
  }

  // Generic family.
  Prims pr{sym, regime};
  switch (cls) {
    case TClass::A1: return sym.one();
    case TClass::A2: {
      LaurentPoly w = pr.phi(1) * (right_moving ? pr.X(i, j) : pr.X(j, i));
      if (i == j) w = w * zp;
      return w;
    }
    case TClass::B1: return pr.phi(1);
    case TClass::B2: return i == j ? zp : sym.one();
    case TClass::C1: {
      LaurentPoly w = pr.phi(1) * pr.one_minus_q2();
      return right_moving ? w * z : w;
    }
    case TClass::C2: return right_moving ? sym.one() : zi;
    case TClass::Inadmissible: break;
  }
  return sym.zero();
}

LaurentPoly crystal_t_weight(const Symbols& sym, RowType family,
                             const CrystalTConfig& cfg, int zrow) {
  check_color(cfg.left, sym.m, "crystal_t_weight left");
  check_color(cfg.top, sym.m, "crystal_t_weight top");
  check_color(cfg.right, sym.m, "crystal_t_weight right");
  check_color(cfg.bottom, sym.m, "crystal_t_weight bottom");
  const int L = cfg.left, T = cfg.top, R = cfg.right, B = cfg.bottom;
  const LaurentPoly z = sym.zvar(zrow, 1);

  if (family == RowType::R) {
    // Fused Gamma table.
    if (!L && !T && !R && !B) return sym.one();                       // a1
    if (L && L == R && T && T == B) return L < T ? sym.zero() : z;    // a2
    if (L && T && L != T && R == T && B == L)
      return L < T ? z : sym.zero();                                  // a2'
    if (!L && !R && T && T == B) return sym.zero();                   // b1
    if (L && L == R && !T && !B) return z;                            // b2
    if (L && !T && !R && B == L) return z;                            // c1
    if (!L && T && R == T && !B) return sym.one();                    // c2
    return sym.zero();
  }

  // Fused Delta table, including its uniform factor of z.
  if (!L && !T && !R && !B) return z;                                 // a1
  if (L && L == R && T && T == B) return L <= T ? sym.one() : sym.zero();  // a2
  if (L && R && L != R && T == L && B == R)
    return R > L ? sym.one() : sym.zero();                            // a2'
  if (!L && !R && T && T == B) return sym.zero();                     // b1
  if (L && L == R && !T && !B) return sym.one();                      // b2
  if (!L && !T && R && B == R) return z;                              // c1
  if (L && T == L && !R && !B) return sym.one();                      // c2
  return sym.zero();
}

namespace {

enum class RClass {
  Empty,
  SlashColored,
  BackslashColored,
  AllSame,
  DistinctCross,
  TopBounce,
  BottomBounce,
  TwoColorBounce,
  RightU,
  LeftU,
  TwoColorU,
  Inadmissible
};

RClass classify_r(const RVertexConfig& c) {
  const int lt = c.lt, lb = c.lb, rt = c.rt, rb = c.rb;
  if (!lt && !lb && !rt && !rb) return RClass::Empty;
  if (lt && lt == lb && lt == rt && lt == rb) return RClass::AllSame;
  if (lb && lb == rt && !lt && !rb) return RClass::SlashColored;
  if (lt && lt == rb && !lb && !rt) return RClass::BackslashColored;
  if (lb && lb == rt && lt && lt == rb && lb != lt) return RClass::DistinctCross;
  if (lt && lt == rt && !lb && !rb) return RClass::TopBounce;
  if (lb && lb == rb && !lt && !rt) return RClass::BottomBounce;
  if (lt && lt == rt && lb && lb == rb && lt != lb) return RClass::TwoColorBounce;
  if (rt && rt == rb && !lt && !lb) return RClass::RightU;
  if (lt && lt == lb && !rt && !rb) return RClass::LeftU;
  if (lt && lt == lb && rt && rt == rb && lt != rt) return RClass::TwoColorU;
  return RClass::Inadmissible;
}

}  // namespace

LaurentPoly r_weight(const Symbols& sym, RowType X, RowType Y, const RVertexConfig& cfg,
                     int z1row, int z2row, const WeightRegime& regime) {
  check_color(cfg.lt, sym.m, "r_weight lt");
  check_color(cfg.lb, sym.m, "r_weight lb");
  check_color(cfg.rt, sym.m, "r_weight rt");
  check_color(cfg.rb, sym.m, "r_weight rb");
  if (cfg.k < 1 || cfg.k > sym.m)
    throw std::invalid_argument("r_weight: vertex color out of range");
  if (regime.tag == RegimeTag::Crystal)
    throw std::invalid_argument("r_weight: use crystal_r_weight in crystal mode");

  Prims pr{sym, regime};
  const LaurentPoly z1 = sym.zvar(z1row, 1);
  const LaurentPoly z2 = sym.zvar(z2row, 1);
  const int k = cfg.k;
  const int m = sym.m;
  const RClass cls = classify_r(cfg);
  if (cls == RClass::Inadmissible) return sym.zero();

  const bool crossing_table = X == Y;  // same-type rows never make U-turns
  if (crossing_table &&
      (cls == RClass::RightU || cls == RClass::LeftU || cls == RClass::TwoColorU))
    return sym.zero();
  if (!crossing_table && (cls == RClass::TopBounce || cls == RClass::BottomBounce ||
                          cls == RClass::TwoColorBounce))
    return sym.zero();

  if (X == RowType::L && Y == RowType::L) {
    switch (cls) {
      case RClass::Empty: return pr.finish(z1 - pr.q2(1) * z2);
      case RClass::SlashColored: return pr.finish(pr.q2(1) * pr.phi(1) * (z1 - z2));
      case RClass::BackslashColored: return pr.finish(pr.phi(-1) * (z1 - z2));
      case RClass::AllSame: return pr.finish(z2 - pr.q2(1) * z1);
      case RClass::DistinctCross:
        return pr.finish(pr.X(cfg.lb, cfg.lt) * (z1 - z2));
      case RClass::TopBounce: return pr.finish(pr.one_minus_q2() * z1);
      case RClass::BottomBounce: return pr.finish(pr.one_minus_q2() * z2);
      case RClass::TwoColorBounce:
        return pr.finish(pr.one_minus_q2() *
                         (cyclic_first(cfg.lb, cfg.lt, k) ? z2 : z1));
      default: break;
    }
  } else if (X == RowType::R && Y == RowType::R) {
    switch (cls) {
      case RClass::Empty: return pr.finish(z1 - pr.q2(1) * z2);
      case RClass::SlashColored: return pr.finish(pr.phi(-1) * (z1 - z2));
      case RClass::BackslashColored: return pr.finish(pr.q2(1) * pr.phi(1) * (z1 - z2));
      case RClass::AllSame: return pr.finish(z2 - pr.q2(1) * z1);
      case RClass::DistinctCross:
        return pr.finish(pr.X(cfg.lb, cfg.lt) * (z1 - z2));
      case RClass::TopBounce: return pr.finish(pr.one_minus_q2() * z2);
      case RClass::BottomBounce: return pr.finish(pr.one_minus_q2() * z1);
      case RClass::TwoColorBounce:
        return pr.finish(pr.one_minus_q2() *
                         (cyclic_first(cfg.lb, cfg.lt, k) ? z1 : z2));
      default: break;
    }
  } else if (X == RowType::L && Y == RowType::R) {
    switch (cls) {
      case RClass::Empty: return pr.finish(z1 - z2);
      case RClass::SlashColored:
      case RClass::BackslashColored:
        return pr.finish(pr.phi(1) * (z1 - pr.q2(1) * z2));
      case RClass::AllSame: return pr.finish(pr.phi(2) * (pr.q2(2) * z2 - z1));
      case RClass::DistinctCross:
        return pr.finish(pr.phi(2) * pr.X(cfg.lt, cfg.lb) * (z1 - pr.q2(1) * z2));
      case RClass::RightU: return pr.finish(pr.phi(1) * pr.one_minus_q2() * z1);
      case RClass::LeftU: return pr.finish(pr.phi(1) * pr.one_minus_q2() * z2);
      case RClass::TwoColorU: {
        LaurentPoly pick = cyclic_first(cfg.lt, cfg.rt, k) ? pr.q2(1) * z2 : z1;
        return pr.finish(-(pr.phi(2) * pr.one_minus_q2() * pick));
      }
      default: break;
    }
  } else {
    // X = R over Y = L; the only table with explicit palette-size powers.
    switch (cls) {
      case RClass::Empty: return pr.finish(z2 - pr.q2(m + 1) * z1);
      case RClass::SlashColored:
      case RClass::BackslashColored:
        return pr.finish(pr.phi(-1) * (z2 - pr.q2(m) * z1));
      case RClass::AllSame: return pr.finish(pr.phi(-2) * (pr.q2(m - 1) * z1 - z2));
      case RClass::DistinctCross:
        return pr.finish(pr.X(cfg.lt, cfg.lb) * pr.q2(-1) * pr.phi(-2) *
                         (z2 - pr.q2(m) * z1));
      case RClass::RightU:
        return pr.finish(pr.phi(-1) * pr.q2(res_hi(k - cfg.rt, m) - 1) *
                         pr.one_minus_q2() * z2);
      case RClass::LeftU:
        return pr.finish(pr.phi(-1) * pr.q2(res_lo(cfg.lt - k, m)) *
                         pr.one_minus_q2() * z1);
      case RClass::TwoColorU: {
        LaurentPoly pick = cyclic_first(cfg.lt, cfg.rt, k) ? z1 : z2;
        return pr.finish(pr.phi(-2) * pr.q2(res_lo(cfg.lt - cfg.rt, m) - 1) *
                         pr.one_minus_q2() * pick);
      }
      default: break;
    }
  }
  return sym.zero();
}

LaurentPoly crystal_r_weight(const Symbols& sym, RowType X, RowType Y,
                             const RVertexConfig& cfg, int z1row, int z2row) {
  check_color(cfg.lt, sym.m, "crystal_r_weight lt");
  check_color(cfg.lb, sym.m, "crystal_r_weight lb");
  check_color(cfg.rt, sym.m, "crystal_r_weight rt");
  check_color(cfg.rb, sym.m, "crystal_r_weight rb");
  if (cfg.k < 1 || cfg.k > sym.m)
    throw std::invalid_argument("crystal_r_weight: vertex color out of range");

  const LaurentPoly z1 = sym.zvar(z1row, 1);
  const LaurentPoly z2 = sym.zvar(z2row, 1);
  const int k = cfg.k;
  const RClass cls = classify_r(cfg);
  const bool crossing_table = X == Y;
  if (cls == RClass::Inadmissible) return sym.zero();
  if (crossing_table &&
      (cls == RClass::RightU || cls == RClass::LeftU || cls == RClass::TwoColorU))
    return sym.zero();
  if (!crossing_table && (cls == RClass::TopBounce || cls == RClass::BottomBounce ||
                          cls == RClass::TwoColorBounce))
    return sym.zero();

  if (X == RowType::L && Y == RowType::L) {
    // Delta over Delta.
    switch (cls) {
      case RClass::Empty: return z2;
      case RClass::SlashColored: return sym.zero();
      case RClass::BackslashColored: return z1 - z2;
      case RClass::AllSame: return z1;
      case RClass::DistinctCross: return cfg.lb > cfg.lt ? z1 - z2 : sym.zero();
      case RClass::TopBounce: return z1;
      case RClass::BottomBounce: return z2;
      case RClass::TwoColorBounce:
        return cyclic_first(cfg.lb, cfg.lt, k) ? z2 : z1;
      default: break;
    }
  } else if (X == RowType::R && Y == RowType::R) {
    // Gamma over Gamma.
    switch (cls) {
      case RClass::Empty: return z2;
      case RClass::SlashColored: return z1 - z2;
      case RClass::BackslashColored: return sym.zero();
      case RClass::AllSame: return z1;
      case RClass::DistinctCross: return cfg.lb > cfg.lt ? z1 - z2 : sym.zero();
      case RClass::TopBounce: return z2;
      case RClass::BottomBounce: return z1;
      case RClass::TwoColorBounce:
        return cyclic_first(cfg.lb, cfg.lt, k) ? z1 : z2;
      default: break;
    }
  } else if (X == RowType::L && Y == RowType::R) {
    // Delta over Gamma.
    switch (cls) {
      case RClass::Empty: return z1 - z2;
      case RClass::SlashColored:
      case RClass::BackslashColored:
      case RClass::AllSame: return z2;
      case RClass::DistinctCross: return cfg.lt > cfg.lb ? z2 : sym.zero();
      case RClass::RightU: return z1;
      case RClass::LeftU: return z2;
      case RClass::TwoColorU:
        return cyclic_first(cfg.lt, cfg.rt, k) ? z2 : sym.zero();
      default: break;
    }
  } else {
    // Gamma over Delta: a single admissible configuration.
    if (cls == RClass::DistinctCross && cfg.lt > cfg.lb) return z1;
    return sym.zero();
  }
  return sym.zero();
}

bool x_condition_holds(const Symbols& sym, const WeightRegime& regime) {
  Prims pr{sym, regime};
  const LaurentPoly q2 = pr.finish(pr.q2(1));
  for (int i = 1; i <= sym.m; ++i) {
    if (pr.finish(pr.X(i, i)) != q2.scaled(Rat(-1))) return false;
    for (int j = i + 1; j <= sym.m; ++j)
      if (pr.finish(pr.X(i, j) * pr.X(j, i)) != q2) return false;
  }
  return true;
}

nlohmann::json dump_t_table(const Symbols& sym, RowType family, int zrow,
                            const WeightRegime& regime) {
  nlohmann::json out = nlohmann::json::array();
  for (int col = 1; col <= sym.m; ++col)
    for (int left = 0; left <= sym.m; ++left)
      for (int right = 0; right <= sym.m; ++right)
        for (int top = 0; top <= 1; ++top)
          for (int bottom = 0; bottom <= 1; ++bottom) {
            TVertexConfig cfg{left, top != 0, right, bottom != 0, col};
            LaurentPoly w = t_weight(sym, family, cfg, zrow, regime);
            if (w.is_zero()) continue;
            out.push_back({{"left", left},
                           {"top", top},
                           {"right", right},
                           {"bottom", bottom},
                           {"column_color", col},
                           {"weight", w.to_string()}});
          }
  return out;
}

nlohmann::json dump_crystal_t_table(const Symbols& sym, RowType family, int zrow) {
  nlohmann::json out = nlohmann::json::array();
  for (int left = 0; left <= sym.m; ++left)
    for (int top = 0; top <= sym.m; ++top)
      for (int right = 0; right <= sym.m; ++right)
        for (int bottom = 0; bottom <= sym.m; ++bottom) {
          CrystalTConfig cfg{left, top, right, bottom};
          LaurentPoly w = crystal_t_weight(sym, family, cfg, zrow);
          if (w.is_zero()) continue;
          out.push_back({{"left", left},
                         {"top", top},
                         {"right", right},
                         {"bottom", bottom},
                         {"weight", w.to_string()}});
        }
  return out;
}

nlohmann::json dump_r_table(const Symbols& sym, RowType X, RowType Y, int z1row,
                            int z2row, const WeightRegime& regime) {
  nlohmann::json out = nlohmann::json::array();
  for (int k = 1; k <= sym.m; ++k)
    for (int lt = 0; lt <= sym.m; ++lt)
      for (int lb = 0; lb <= sym.m; ++lb)
        for (int rt = 0; rt <= sym.m; ++rt)
          for (int rb = 0; rb <= sym.m; ++rb) {
            RVertexConfig cfg{lt, lb, rt, rb, k};
            LaurentPoly w = r_weight(sym, X, Y, cfg, z1row, z2row, regime);
            if (w.is_zero()) continue;
            out.push_back({{"lt", lt},
                           {"lb", lb},
                           {"rt", rt},
                           {"rb", rb},
                           {"k", k},
                           {"weight", w.to_string()}});
          }
  return out;
}

nlohmann::json dump_crystal_r_table(const Symbols& sym, RowType X, RowType Y,
                                    int z1row, int z2row) {
  nlohmann::json out = nlohmann::json::array();
  for (int k = 1; k <= sym.m; ++k)
    for (int lt = 0; lt <= sym.m; ++lt)
      for (int lb = 0; lb <= sym.m; ++lb)
        for (int rt = 0; rt <= sym.m; ++rt)
          for (int rb = 0; rb <= sym.m; ++rb) {
            RVertexConfig cfg{lt, lb, rt, rb, k};
            LaurentPoly w = crystal_r_weight(sym, X, Y, cfg, z1row, z2row);
            if (w.is_zero()) continue;
            out.push_back({{"lt", lt},
                           {"lb", lb},
                           {"rt", rt},
                           {"rb", rb},
                           {"k", k},
                           {"weight", w.to_string()}});
          }
  return out;
}

}  // namespace icebox
