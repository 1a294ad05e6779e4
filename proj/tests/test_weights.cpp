// Weight-table foundations: the symbol layout and its baked-in relations,
// residue and cyclic-order helpers, twist composition and validation, vertex
// classification, zero patterns, color conservation, the color-pair
// condition in every specialization, and the table dumps.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "icebox/weights.hpp"

using namespace icebox;

namespace {

// Colors on the four corners, zeros dropped, as a sorted list.
std::vector<int> corner_colors(int a, int b) {
  std::vector<int> out;
  if (a) out.push_back(a);
  if (b) out.push_back(b);
  if (out.size() == 2 && out[0] > out[1]) std::swap(out[0], out[1]);
  return out;
}

} // namespace

TEST_CASE("symbols register the standard layout and relations") {
  Symbols sym = make_symbols(2, 3);
  CHECK(sym.reg.names() ==
        (std::vector<std::string>{"z1", "z2", "q2", "Phi", "v", "X_1_2", "X_1_3", "X_2_3",
                                  "g_1", "g_2"}));
  CHECK(sym.r == 2);
  CHECK(sym.m == 3);

  CHECK(sym.zvar(1, 2) * sym.zvar(1, -2) == sym.one());
  CHECK(sym.q2pow(2) == sym.q2pow(1) * sym.q2pow(1));
  CHECK(sym.one_minus_q2() == sym.one() - sym.q2pow(1));
  CHECK(sym.vpow(-1) * sym.vpow(1) == sym.one());
  CHECK(sym.phipow(2) * sym.phipow(-2) == sym.one());
  CHECK(sym.num(Rat(3, 4)).constant_value() == Rat(3, 4));

  // the diagonal and the reversed pairs are rewritten, never stored
  for (int i = 1; i <= 3; ++i) CHECK(sym.Xpar(i, i) == -sym.q2pow(1));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(sym.Xpar(i, j) * sym.Xpar(j, i) == sym.q2pow(i == j ? 2 : 1));
  CHECK_THROWS_AS((void)sym.Xpar(0, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)sym.Xpar(1, 4), std::invalid_argument);

  // Gauss symbols: canonical representatives and the reflection relation
  CHECK(sym.gauss(0) == -sym.vpow(1));
  CHECK(sym.gauss(3) == sym.gauss(0));
  CHECK(sym.gauss(-1) == sym.gauss(2));
  CHECK(sym.gauss(1) * sym.gauss(2) == sym.vpow(1));

  Symbols sym4 = make_symbols(1, 4);
  LaurentPoly mid = sym4.gauss(2);
  CHECK(sym4.gauss_normalize(mid * mid) == sym4.vpow(1));
  CHECK(sym4.gauss_normalize(mid.pow(3)) == sym4.vpow(1) * mid);
  CHECK(sym4.gauss_normalize(sym4.gauss(1) * sym4.gauss(3)) == sym4.vpow(1));
  LaurentPoly plain = sym4.zvar(1, 2) + sym4.q2pow(1);
  CHECK(sym4.gauss_normalize(plain) == plain);
}

TEST_CASE("residues and cyclic orders") {
  CHECK(res_lo(-1, 3) == 2);
  CHECK(res_lo(6, 3) == 0);
  CHECK(res_lo(1, 3) == 1);
  CHECK(res_hi(6, 3) == 3);
  CHECK(res_hi(-1, 3) == 2);
  CHECK(res_hi(1, 3) == 1);
  CHECK(res_hi(0, 4) == 4);

  CHECK(cyclic_first(1, 2, 3));
  CHECK(cyclic_first(3, 1, 2)); // j < k <= i
  CHECK(cyclic_first(2, 3, 1)); // k <= i < j
  CHECK(cyclic_second(2, 1, 3));
  CHECK(cyclic_second(1, 3, 2));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) {
        if (i == j) {
          CHECK(!cyclic_first(i, j, k));
          CHECK(!cyclic_second(i, j, k));
        } else {
          CHECK(cyclic_first(i, j, k) != cyclic_second(i, j, k));
          // swapping the pair flips the order
          CHECK(cyclic_first(i, j, k) == cyclic_second(j, i, k));
        }
      }
}

TEST_CASE("twists compose and validate") {
  WeightRegime generic = make_regime(RegimeTag::Generic, 3);
  CHECK(!generic.twisted);

  WeightRegime idt = apply_twist(generic, identity_twist(3));
  CHECK(idt.twisted);
  Symbols sym = make_symbols(2, 3);
  for (int col = 1; col <= 3; ++col)
    for (int l = 0; l <= 3; ++l)
      for (int r = 0; r <= 3; ++r)
        for (int t = 0; t <= 1; ++t)
          for (int b = 0; b <= 1; ++b) {
            TVertexConfig cfg{l, t != 0, r, b != 0, col};
            CHECK(t_weight(sym, RowType::R, cfg, 1, idt) ==
                  t_weight(sym, RowType::R, cfg, 1, generic));
          }

  std::mt19937_64 rng(7);
  TwistData t1 = random_twist(3, rng);
  TwistData t2 = random_twist(3, rng);
  for (int i = 1; i <= 3; ++i) {
    CHECK(t1.phi[i][i] == 1);
    for (int j = 1; j <= 3; ++j) CHECK(t1.phi[i][j] * t1.phi[j][i] == 1);
  }
  WeightRegime once = apply_twist(generic, t1);
  WeightRegime twice = apply_twist(once, t2);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(twice.twist.phi[i][j] == t1.phi[i][j] * t2.phi[i][j]);
  CHECK(twice.twist.phi_scale == t1.phi_scale * t2.phi_scale);

  // twisting never changes which configurations are admissible
  for (int col = 1; col <= 3; ++col)
    for (int l = 0; l <= 3; ++l)
      for (int r = 0; r <= 3; ++r)
        for (int t = 0; t <= 1; ++t)
          for (int b = 0; b <= 1; ++b) {
            TVertexConfig cfg{l, t != 0, r, b != 0, col};
            for (RowType fam : {RowType::R, RowType::L})
              CHECK(t_weight(sym, fam, cfg, 1, twice).is_zero() ==
                    t_weight(sym, fam, cfg, 1, generic).is_zero());
          }

  CHECK_THROWS_AS((void)apply_twist(make_regime(RegimeTag::Crystal, 3), t1), std::domain_error);
  CHECK_THROWS_AS((void)apply_twist(generic, identity_twist(2)), std::domain_error);
  TwistData bad = identity_twist(3);
  bad.phi_scale = 0;
  CHECK_THROWS_AS((void)apply_twist(generic, bad), std::domain_error);
  bad = identity_twist(3);
  bad.phi[1][1] = 2;
  CHECK_THROWS_AS((void)apply_twist(generic, bad), std::domain_error);
  bad = identity_twist(3);
  bad.phi[1][2] = 2; // reciprocal left at 1
  CHECK_THROWS_AS((void)apply_twist(generic, bad), std::domain_error);
}

TEST_CASE("vertex classification matches the six patterns") {
  using C = TVertexConfig;
  for (RowType fam : {RowType::R, RowType::L}) {
    CHECK(classify_t(fam, C{0, false, 0, false, 1}) == TClass::A1);
    CHECK(classify_t(fam, C{0, true, 0, true, 1}) == TClass::B1);
    CHECK(classify_t(fam, C{2, true, 2, true, 2}) == TClass::A2);
    CHECK(classify_t(fam, C{2, false, 2, false, 2}) == TClass::B2);
    CHECK(classify_t(fam, C{1, true, 2, false, 1}) == TClass::Inadmissible);
  }
  // entering and leaving vertical strands point with the travel direction
  CHECK(classify_t(RowType::R, C{1, false, 0, true, 1}) == TClass::C1);
  CHECK(classify_t(RowType::R, C{0, true, 1, false, 1}) == TClass::C2);
  CHECK(classify_t(RowType::L, C{0, false, 1, true, 1}) == TClass::C1);
  CHECK(classify_t(RowType::L, C{1, true, 0, false, 1}) == TClass::C2);
  // the mirrored versions are inadmissible for the other family
  CHECK(classify_t(RowType::L, C{1, false, 0, true, 1}) == TClass::Inadmissible);
  CHECK(classify_t(RowType::R, C{0, false, 1, true, 1}) == TClass::Inadmissible);
  // a path may only turn in its own column
  CHECK(classify_t(RowType::R, C{2, false, 0, true, 1}) == TClass::Inadmissible);
  // crossings keep their color on A2 regardless of the column
  CHECK(classify_t(RowType::R, C{2, true, 2, true, 1}) == TClass::A2);
}

TEST_CASE("the zero pattern of each table is the admissibility pattern") {
  Symbols sym = make_symbols(2, 2);
  for (RegimeTag tag : {RegimeTag::Generic, RegimeTag::Metaplectic, RegimeTag::Iwahori}) {
    WeightRegime rg = make_regime(tag, 2);
    for (RowType fam : {RowType::R, RowType::L})
      for (int col = 1; col <= 2; ++col)
        for (int l = 0; l <= 2; ++l)
          for (int r = 0; r <= 2; ++r)
            for (int t = 0; t <= 1; ++t)
              for (int b = 0; b <= 1; ++b) {
                TVertexConfig cfg{l, t != 0, r, b != 0, col};
                CHECK(t_weight(sym, fam, cfg, 1, rg).is_zero() ==
                      (classify_t(fam, cfg) == TClass::Inadmissible));
              }
  }
  // the crystal limit only ever adds zeros
  WeightRegime crystal = make_regime(RegimeTag::Crystal, 2);
  for (RowType fam : {RowType::R, RowType::L})
    for (int col = 1; col <= 2; ++col)
      for (int l = 0; l <= 2; ++l)
        for (int r = 0; r <= 2; ++r)
          for (int t = 0; t <= 1; ++t)
            for (int b = 0; b <= 1; ++b) {
              TVertexConfig cfg{l, t != 0, r, b != 0, col};
              if (!t_weight(sym, fam, cfg, 1, crystal).is_zero())
                CHECK(classify_t(fam, cfg) != TClass::Inadmissible);
            }

  CHECK_THROWS_AS((void)t_weight(sym, RowType::R, TVertexConfig{3, false, 0, false, 1}, 1,
                                 make_regime(RegimeTag::Generic, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)t_weight(sym, RowType::R, TVertexConfig{0, false, 0, false, 3}, 1,
                                 make_regime(RegimeTag::Generic, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)t_weight(sym, RowType::R, TVertexConfig{0, false, 0, false, 1}, 1,
                                 make_regime(RegimeTag::Crystal, 3)),
                  std::invalid_argument);
}

TEST_CASE("every R table conserves the corner colors") {
  Symbols sym = make_symbols(2, 2);
  WeightRegime generic = make_regime(RegimeTag::Generic, 2);
  std::mt19937_64 rng(11);
  WeightRegime twisted = apply_twist(generic, random_twist(2, rng));
  for (RowType X : {RowType::R, RowType::L})
    for (RowType Y : {RowType::R, RowType::L})
      for (int k = 1; k <= 2; ++k)
        for (int lt = 0; lt <= 2; ++lt)
          for (int lb = 0; lb <= 2; ++lb)
            for (int rt = 0; rt <= 2; ++rt)
              for (int rb = 0; rb <= 2; ++rb) {
                RVertexConfig cfg{lt, lb, rt, rb, k};
                // the lb-to-rt strand enters where its family does, same for
                // the lt-to-rb strand; entering colors must leave
                std::vector<int> in =
                    corner_colors(X == RowType::R ? lb : rt, Y == RowType::R ? lt : rb);
                std::vector<int> out =
                    corner_colors(X == RowType::R ? rt : lb, Y == RowType::R ? rb : lt);
                LaurentPoly w = r_weight(sym, X, Y, cfg, 1, 2, generic);
                if (!w.is_zero()) CHECK(in == out);
                // twisting rescales but never creates or kills an entry
                CHECK(r_weight(sym, X, Y, cfg, 1, 2, twisted).is_zero() == w.is_zero());
                if (!crystal_r_weight(sym, X, Y, cfg, 1, 2).is_zero()) CHECK(in == out);
              }

  CHECK_THROWS_AS((void)r_weight(sym, RowType::R, RowType::R, RVertexConfig{0, 0, 0, 0, 3}, 1, 2,
                                 generic),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)r_weight(sym, RowType::R, RowType::R, RVertexConfig{0, 0, 0, 0, 1}, 1, 2,
                                 make_regime(RegimeTag::Crystal, 2)),
                  std::invalid_argument);
}

TEST_CASE("the color-pair condition holds in every specialization") {
  for (int m = 1; m <= 4; ++m) {
    Symbols sym = make_symbols(2, m);
    CHECK(x_condition_holds(sym, make_regime(RegimeTag::Generic, m)));
    CHECK(x_condition_holds(sym, make_regime(RegimeTag::Metaplectic, m)));
    CHECK(x_condition_holds(sym, make_regime(RegimeTag::Iwahori, m)));
    std::mt19937_64 rng(100 + m);
    for (int trial = 0; trial < 3; ++trial) {
      WeightRegime tw = apply_twist(make_regime(RegimeTag::Generic, m), random_twist(m, rng));
      CHECK(x_condition_holds(sym, tw));
    }
    // the crystal limit has no q2 primitive to compare against
    CHECK_THROWS_AS((void)x_condition_holds(sym, make_regime(RegimeTag::Crystal, m)),
                    std::logic_error);
  }
}

TEST_CASE("fused crystal tables carry the column-free weights") {
  Symbols sym = make_symbols(2, 3);
  using C = CrystalTConfig;
  LaurentPoly z = sym.zvar(1, 1);

  CHECK(crystal_t_weight(sym, RowType::R, C{0, 0, 0, 0}, 1) == sym.one());
  CHECK(crystal_t_weight(sym, RowType::L, C{0, 0, 0, 0}, 1) == z); // uniform factor
  // crossings respect the color order, in mirrored ways
  CHECK(crystal_t_weight(sym, RowType::R, C{2, 1, 2, 1}, 1) == z);
  CHECK(crystal_t_weight(sym, RowType::R, C{1, 2, 1, 2}, 1).is_zero());
  CHECK(crystal_t_weight(sym, RowType::R, C{1, 2, 2, 1}, 1) == z);
  CHECK(crystal_t_weight(sym, RowType::R, C{2, 1, 1, 2}, 1).is_zero());
  CHECK(crystal_t_weight(sym, RowType::L, C{1, 2, 1, 2}, 1) == sym.one());
  CHECK(crystal_t_weight(sym, RowType::L, C{2, 1, 2, 1}, 1).is_zero());
  CHECK(crystal_t_weight(sym, RowType::L, C{1, 1, 2, 2}, 1) == sym.one());
  CHECK(crystal_t_weight(sym, RowType::L, C{2, 2, 1, 1}, 1).is_zero());
  // turns and straight passes
  CHECK(crystal_t_weight(sym, RowType::R, C{1, 0, 0, 1}, 1) == z);
  CHECK(crystal_t_weight(sym, RowType::R, C{0, 1, 1, 0}, 1) == sym.one());
  CHECK(crystal_t_weight(sym, RowType::L, C{0, 0, 1, 1}, 1) == z);
  CHECK(crystal_t_weight(sym, RowType::L, C{1, 1, 0, 0}, 1) == sym.one());
  CHECK(crystal_t_weight(sym, RowType::R, C{1, 0, 1, 0}, 1) == z);
  CHECK(crystal_t_weight(sym, RowType::L, C{1, 0, 1, 0}, 1) == sym.one());
  CHECK(crystal_t_weight(sym, RowType::R, C{0, 1, 0, 1}, 1).is_zero());
  CHECK(crystal_t_weight(sym, RowType::L, C{0, 1, 0, 1}, 1).is_zero());

  // right-moving rows read inputs on the left and top, left-moving rows on
  // the right and top; entering colors must leave
  for (int l = 0; l <= 3; ++l)
    for (int t = 0; t <= 3; ++t)
      for (int r = 0; r <= 3; ++r)
        for (int b = 0; b <= 3; ++b)
          for (RowType fam : {RowType::R, RowType::L})
            if (!crystal_t_weight(sym, fam, C{l, t, r, b}, 1).is_zero()) {
              if (fam == RowType::R)
                CHECK(corner_colors(l, t) == corner_colors(r, b));
              else
                CHECK(corner_colors(r, t) == corner_colors(l, b));
            }

  CHECK_THROWS_AS((void)crystal_t_weight(sym, RowType::R, C{4, 0, 0, 0}, 1),
                  std::invalid_argument);
}

TEST_CASE("table dumps list exactly the nonzero weights") {
  Symbols sym = make_symbols(2, 2);
  WeightRegime generic = make_regime(RegimeTag::Generic, 2);

  nlohmann::json t1 = dump_t_table(sym, RowType::R, 1, generic);
  CHECK(t1 == dump_t_table(sym, RowType::R, 1, generic)); // deterministic
  int nonzero = 0;
  for (int col = 1; col <= 2; ++col)
    for (int l = 0; l <= 2; ++l)
      for (int r = 0; r <= 2; ++r)
        for (int t = 0; t <= 1; ++t)
          for (int b = 0; b <= 1; ++b)
            if (!t_weight(sym, RowType::R, TVertexConfig{l, t != 0, r, b != 0, col}, 1, generic)
                     .is_zero())
              ++nonzero;
  CHECK(static_cast<int>(t1.size()) == nonzero);
  for (const auto& e : t1) {
    TVertexConfig cfg{e["left"], e["top"] != 0, e["right"], e["bottom"] != 0,
                      e["column_color"]};
    CHECK(e["weight"] == t_weight(sym, RowType::R, cfg, 1, generic).to_string());
  }

  nlohmann::json r1 = dump_r_table(sym, RowType::R, RowType::L, 1, 2, generic);
  CHECK(!r1.empty());
  CHECK(r1 == dump_r_table(sym, RowType::R, RowType::L, 1, 2, generic));

  nlohmann::json c1 = dump_crystal_t_table(sym, RowType::L, 1);
  CHECK(!c1.empty());
  for (const auto& e : c1) {
    CrystalTConfig cfg{e["left"], e["top"], e["right"], e["bottom"]};
    CHECK(e["weight"] == crystal_t_weight(sym, RowType::L, cfg, 1).to_string());
  }
  CHECK(!dump_crystal_r_table(sym, RowType::R, RowType::L, 1, 2).empty());
}
