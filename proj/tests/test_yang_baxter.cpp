// Tests for diagram contraction and the exchange relations: linear-map
// algebra, the RTT and RRR equalities in the generic and crystal regimes,
// the mixed-vertex inverse, and the color-subset audit.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "icebox/yang_baxter.hpp"

using namespace icebox;

namespace {

WeightRegime generic_regime(int m) { return make_regime(RegimeTag::Generic, m); }
WeightRegime crystal_regime(int m) { return make_regime(RegimeTag::Crystal, m); }

const RowType kTypes[2] = {RowType::R, RowType::L};

// (z_b - q^2 z_a)(z_b - q^{2m} z_a), the scalar produced by collapsing a
// mixed vertex pair whose strands carry z_a and z_b.
LaurentPoly inv_const(const Symbols& sym, int m, int za, int zb) {
  return (sym.zvar(zb) - sym.q2pow(1) * sym.zvar(za)) *
         (sym.zvar(zb) - sym.q2pow(m) * sym.zvar(za));
}

// Applies the pair map pm to slots (a, b) of every basis tuple, identity on
// the rest: pm's first domain slot reads tuple[a], the second reads
// tuple[b], and outputs are written back in the same slot order.
LinearMap apply_on_slots(const LinearMap& pm, const std::vector<std::vector<int>>& basis, int a,
                         int b) {
  LinearMap out;
  out.domain = basis;
  out.codomain = basis;
  std::map<std::vector<int>, int> pos;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) pos[basis[i]] = i;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    const std::vector<int>& t = basis[i];
    for (const auto& [key, w] : pm.entries) {
      const std::vector<int>& in = pm.domain[key.second];
      if (t[a] != in[0] || t[b] != in[1]) continue;
      std::vector<int> u = t;
      const std::vector<int>& o = pm.codomain[key.first];
      u[a] = o[0];
      u[b] = o[1];
      out.add(pos.at(u), i, w);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("linear map algebra on small bases") {
  Symbols sym = make_symbols(2, 1);
  std::vector<std::vector<int>> basis = {{0}, {1}};
  LinearMap id = lm_identity(sym, basis);
  CHECK(id.entries.size() == 2);
  CHECK(*id.find(0, 0) == sym.one());
  CHECK(id.find(1, 0) == nullptr);

  // A 2x2 map with one offdiagonal entry composes and tensors as expected.
  LinearMap f;
  f.domain = basis;
  f.codomain = basis;
  f.add(0, 1, sym.zvar(1));
  f.add(1, 1, sym.one());

  LinearMap ff = lm_compose(f, f);
  CHECK(ff.find(0, 0) == nullptr);
  CHECK(*ff.find(0, 1) == sym.zvar(1));
  CHECK(*ff.find(1, 1) == sym.one());

  LinearMap fid = lm_compose(f, id);
  CHECK(lm_equal(fid, f));
  CHECK(lm_diff(fid, f).empty());

  LinearMap t = lm_tensor(f, id);
  CHECK(t.domain.size() == 4);
  CHECK(t.domain[1] == std::vector<int>{0, 1});
  // Entry (0,1)x(1,1) lands at out index 0*2+1, in index 1*2+1.
  CHECK(*t.find(1, 3) == sym.zvar(1));

  LinearMap s = lm_scale(f, sym.zvar(2));
  CHECK(*s.find(0, 1) == sym.zvar(1) * sym.zvar(2));
  CHECK(!lm_equal(s, f));
  CHECK(!lm_diff(s, f).empty());

  // Cancellation keeps the entry map minimal.
  LinearMap g = f;
  g.add(0, 1, -sym.zvar(1));
  CHECK(g.find(0, 1) == nullptr);
}

TEST_CASE("unfused exchange relations at small palette") {
  for (int m : {1, 2}) {
    CAPTURE(m);
    Symbols sym = make_symbols(3, m);
    WeightRegime reg = generic_regime(m);
    for (int k = 1; k <= m; ++k) {
      for (RowType X : kTypes)
        for (RowType Y : kTypes) {
          YbeReport rep = check_rtt(sym, X, Y, k, reg);
          INFO(rep.id << " " << rep.details.dump());
          CHECK(rep.pass);
        }
      for (RowType X : kTypes)
        for (RowType Y : kTypes)
          for (RowType Z : kTypes) {
            YbeReport rep = check_rrr(sym, X, Y, Z, k, reg);
            INFO(rep.id << " " << rep.details.dump());
            CHECK(rep.pass);
          }
    }
  }
}

TEST_CASE("mixed composite equals inverse constant times strand exchange") {
  for (int m : {1, 2}) {
    CAPTURE(m);
    Symbols sym = make_symbols(2, m);
    WeightRegime reg = generic_regime(m);
    YbeReport rep = check_rl_inverse(sym, reg);
    INFO(rep.id << " " << rep.details.dump());
    CHECK(rep.pass);
  }
}

TEST_CASE("mixed vertex maps are mutually inverse up to the constant") {
  for (int m : {1, 2, 3}) {
    CAPTURE(m);
    Symbols sym = make_symbols(2, m);
    WeightRegime reg = generic_regime(m);
    LaurentPoly c = rl_inverse_constant(sym, reg);
    for (int k = 1; k <= m; ++k) {
      LinearMap lr = r_vertex_map(sym, RowType::L, RowType::R, k, reg, 2, 1);
      LinearMap rl = r_vertex_map(sym, RowType::R, RowType::L, k, reg, 1, 2);
      LinearMap id = lm_identity(sym, lr.domain);
      CHECK(lm_equal(lm_compose(rl, lr), lm_scale(id, c)));
      CHECK(lm_equal(lm_compose(lr, rl), lm_scale(id, c)));
    }
  }
}

TEST_CASE("mixed inverse color loop telescopes") {
  for (int m : {1, 2, 3, 4}) {
    CAPTURE(m);
    Symbols sym = make_symbols(2, m);
    WeightRegime reg = generic_regime(m);
    LaurentPoly expected =
        sym.zvar(1) * sym.zvar(2) * sym.one_minus_q2() * (sym.one() - sym.q2pow(m));
    for (int k = 1; k <= m; ++k) {
      LaurentPoly sum = sym.zero();
      for (int c = 1; c <= m; ++c) {
        RVertexConfig u{0, 0, c, c, k};
        RVertexConfig v{c, c, 0, 0, k};
        sum += r_weight(sym, RowType::L, RowType::R, u, 2, 1, reg) *
               r_weight(sym, RowType::R, RowType::L, v, 1, 2, reg);
      }
      CHECK(sum == expected);
    }
  }
}

// Conjugating one side of a relation by the opposite mixed vertex collapses
// an adjacent vertex pair to the inverse constant and leaves the other side
// of the relation with the two row types exchanged.
TEST_CASE("mixed vertex conjugation exchanges relation sides") {
  for (int m : {1, 2}) {
    Symbols sym = make_symbols(3, m);
    WeightRegime reg = generic_regime(m);
    for (RowType X : kTypes) {
      RowType Y = X == RowType::R ? RowType::L : RowType::R;
      const bool xr = X == RowType::R;
      for (int k = 1; k <= m; ++k) {
        CAPTURE(m);
        CAPTURE(k);
        CAPTURE(xr);
        const int kp1 = k % m + 1;
        {
          // Two-strand relation; the right-hand picture advances the vertex
          // color, so the exit-side conjugator does too.
          LinearMap pl = build_rtt(sym, X, Y, k, reg, DiagramSide::Left, 1, 2);
          LinearMap pr = build_rtt(sym, X, Y, k, reg, DiagramSide::Right, 1, 2);
          LinearMap tl = build_rtt(sym, Y, X, k, reg, DiagramSide::Left, 2, 1);
          LinearMap tr = build_rtt(sym, Y, X, k, reg, DiagramSide::Right, 2, 1);
          const auto& basis = pl.domain;
          LinearMap d = apply_on_slots(r_vertex_map(sym, Y, X, k, reg, 2, 1), basis, 0, 1);
          LinearMap e = apply_on_slots(r_vertex_map(sym, Y, X, kp1, reg, 2, 1), basis, 1, 0);
          LaurentPoly c12 = xr ? inv_const(sym, m, 1, 2) : inv_const(sym, m, 2, 1);
          CHECK(lm_equal(lm_compose(e, lm_compose(pl, d)), lm_scale(tr, c12)));
          CHECK(lm_equal(lm_compose(e, lm_compose(pr, d)), lm_scale(tl, c12)));
        }
        {
          // Three-strand relations with a repeated opposite type: conjugate
          // strands one and two, then strands two and three.
          LinearMap al = build_rrr(sym, X, Y, Y, k, reg, DiagramSide::Left, 1, 2, 3);
          LinearMap ar = build_rrr(sym, X, Y, Y, k, reg, DiagramSide::Right, 1, 2, 3);
          LinearMap bl = build_rrr(sym, Y, X, Y, k, reg, DiagramSide::Left, 2, 1, 3);
          LinearMap br = build_rrr(sym, Y, X, Y, k, reg, DiagramSide::Right, 2, 1, 3);
          LinearMap cl = build_rrr(sym, Y, Y, X, k, reg, DiagramSide::Left, 2, 3, 1);
          LinearMap cr = build_rrr(sym, Y, Y, X, k, reg, DiagramSide::Right, 2, 3, 1);
          const auto& basis = al.domain;
          LinearMap pm2 = r_vertex_map(sym, Y, X, k, reg, 2, 1);
          LinearMap d2 = apply_on_slots(pm2, basis, 0, 1);
          LinearMap e2 = apply_on_slots(pm2, basis, 1, 0);
          LaurentPoly c2 = xr ? inv_const(sym, m, 1, 2) : inv_const(sym, m, 2, 1);
          CHECK(lm_equal(lm_compose(e2, lm_compose(al, d2)), lm_scale(br, c2)));
          CHECK(lm_equal(lm_compose(e2, lm_compose(ar, d2)), lm_scale(bl, c2)));

          LinearMap pm3 = r_vertex_map(sym, Y, X, k, reg, 3, 1);
          LinearMap d3 = apply_on_slots(pm3, basis, 1, 2);
          LinearMap e3 = apply_on_slots(pm3, basis, 2, 1);
          LaurentPoly c3 = xr ? inv_const(sym, m, 1, 3) : inv_const(sym, m, 3, 1);
          CHECK(lm_equal(lm_compose(e3, lm_compose(bl, d3)), lm_scale(cr, c3)));
          CHECK(lm_equal(lm_compose(e3, lm_compose(br, d3)), lm_scale(cl, c3)));
        }
      }
    }
  }
}

TEST_CASE("mixed relation supports internal color loops") {
  Symbols sym = make_symbols(2, 2);
  WeightRegime reg = generic_regime(2);
  DiagramAudit audit;
  LinearMap pl = build_rtt(sym, RowType::R, RowType::L, 1, reg, DiagramSide::Left, 1, 2, &audit);
  CHECK(!audit.applicable);
  // With every boundary edge empty, a loop of the column color circulates
  // through all three vertices on top of the all-empty filling.
  const LaurentPoly* entry = pl.find(0, 0);
  REQUIRE(entry != nullptr);
  LaurentPoly empty_product = sym.zvar(2) - sym.q2pow(3) * sym.zvar(1);
  LaurentPoly loop = sym.q2pow(1) * sym.one_minus_q2() * sym.one_minus_q2() * sym.zvar(1);
  CHECK(*entry == empty_product + loop);
  CHECK(*entry != empty_product);
}

TEST_CASE("color subset audits") {
  Symbols sym = make_symbols(3, 2);
  WeightRegime reg = generic_regime(2);
  DiagramAudit audit;
  build_rtt(sym, RowType::L, RowType::R, 1, reg, DiagramSide::Left, 1, 2, &audit);
  CHECK(audit.applicable);
  CHECK(audit.color_subset_ok);
  CHECK(audit.violation.is_null());
  build_rtt(sym, RowType::R, RowType::L, 1, reg, DiagramSide::Right, 1, 2, &audit);
  CHECK(!audit.applicable);

  const RowType R = RowType::R, L = RowType::L;
  const struct {
    RowType x, y, z;
    bool applicable;
  } combos[] = {{R, R, R, true},  {L, L, L, true},  {L, R, R, true},  {L, L, R, true},
                {R, L, R, false}, {R, L, L, false}, {R, R, L, false}, {L, R, L, false}};
  for (const auto& cb : combos) {
    build_rrr(sym, cb.x, cb.y, cb.z, 1, reg, DiagramSide::Left, 1, 2, 3, &audit);
    CHECK(audit.applicable == cb.applicable);
    if (cb.applicable) {
      CHECK(audit.color_subset_ok);
      CHECK(audit.violation.is_null());
    }
  }
}

TEST_CASE("random twists preserve the relations") {
  Symbols sym = make_symbols(3, 2);
  for (unsigned seed : {11u, 23u, 58u}) {
    CAPTURE(seed);
    std::mt19937_64 rng(seed);
    WeightRegime reg = apply_twist(generic_regime(2), random_twist(2, rng));
    CHECK(x_condition_holds(sym, reg));
    for (int k = 1; k <= 2; ++k)
      for (RowType X : kTypes)
        for (RowType Y : kTypes) {
          YbeReport rep = check_rtt(sym, X, Y, k, reg);
          INFO(rep.id << " " << rep.details.dump());
          CHECK(rep.pass);
        }
    for (RowType X : kTypes)
      for (RowType Y : kTypes)
        for (RowType Z : kTypes) {
          YbeReport rep = check_rrr(sym, X, Y, Z, 1, reg);
          INFO(rep.id << " " << rep.details.dump());
          CHECK(rep.pass);
        }
    YbeReport inv = check_rl_inverse(sym, reg);
    INFO(inv.details.dump());
    CHECK(inv.pass);
  }
}

TEST_CASE("diagram argument validation") {
  Symbols sym = make_symbols(3, 2);
  WeightRegime gen = generic_regime(2);
  WeightRegime cry = crystal_regime(2);
  CHECK_THROWS_AS(build_rtt(sym, RowType::R, RowType::R, 0, gen, DiagramSide::Left),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_rtt(sym, RowType::R, RowType::R, 3, gen, DiagramSide::Left),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_rtt(sym, RowType::R, RowType::R, 2, cry, DiagramSide::Left),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_rrr(sym, RowType::R, RowType::R, RowType::R, 2, cry, DiagramSide::Left),
                  std::invalid_argument);
  CHECK_THROWS_AS(rl_composite(sym, cry, false), std::invalid_argument);
  LinearMap a = lm_identity(sym, {{0}});
  LinearMap b = lm_identity(sym, {{1}});
  CHECK_THROWS_AS(lm_compose(a, b), std::invalid_argument);
}

TEST_CASE("suite covers all applicable checks") {
  Symbols sym = make_symbols(3, 1);
  auto reports = run_ybe_suite(sym, generic_regime(1));
  CHECK(reports.size() == 13);
  std::set<std::string> ids;
  for (const auto& rep : reports) {
    INFO(rep.id << " " << rep.details.dump());
    CHECK(rep.pass);
    CHECK(rep.to_json()["pass"] == true);
    ids.insert(rep.id);
  }
  CHECK(ids.size() == reports.size());
  auto creports = run_ybe_suite(sym, crystal_regime(1));
  CHECK(creports.size() == 12);
  for (const auto& rep : creports) CHECK(rep.pass);
}

TEST_CASE("crystal exchange relations at small palette") {
  for (int m : {1, 2}) {
    CAPTURE(m);
    Symbols sym = make_symbols(3, m);
    WeightRegime reg = crystal_regime(m);
    for (RowType X : kTypes)
      for (RowType Y : kTypes) {
        YbeReport rep = check_rtt(sym, X, Y, 1, reg);
        INFO(rep.id << " " << rep.details.dump());
        CHECK(rep.pass);
      }
    for (RowType X : kTypes)
      for (RowType Y : kTypes)
        for (RowType Z : kTypes) {
          YbeReport rep = check_rrr(sym, X, Y, Z, 1, reg);
          INFO(rep.id << " " << rep.details.dump());
          CHECK(rep.pass);
        }
  }
}
