#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "icebox/duality.hpp"
#include "icebox/lattice.hpp"
#include "icebox/symbols.hpp"
#include "icebox/weights.hpp"

using namespace icebox;

namespace {

SystemSpec mixed(int r, int m, std::vector<RowType> types, std::vector<int> mu,
                 std::vector<int> sigma, int blocks) {
  SystemSpec spec;
  spec.rows = r;
  spec.palette = m;
  spec.row_types = std::move(types);
  spec.mu = std::move(mu);
  spec.sigma = std::move(sigma);
  spec.blocks = blocks;
  spec.regime = make_regime(RegimeTag::Generic, m);
  return spec;
}

constexpr RowType R = RowType::R;
constexpr RowType L = RowType::L;

}  // namespace

TEST_CASE("adjacent opposite rows swap with their parameters") {
  Symbols sym = make_symbols(2, 2);
  // mu = (2, 0) puts both entering paths on color-2 columns, so (2, 2) is the
  // only feasible exit list; the rest compare as empty systems.
  for (int s1 = 1; s1 <= 2; ++s1)
    for (int s2 = 1; s2 <= 2; ++s2) {
      DualityReport rep = check_row_swap(sym, mixed(2, 2, {L, R}, {2, 0}, {s1, s2}, 2), 1);
      CHECK(rep.pass);
      CHECK(rep.lhs.is_zero() == (s1 != 2 || s2 != 2));
      if (s1 == 2 && s2 == 2) {
        CHECK(rep.lhs_states == 2);
        CHECK(rep.rhs_states == 2);
      }
    }
}

TEST_CASE("three-row swaps pass at both admissible positions") {
  Symbols sym = make_symbols(3, 2);
  const std::vector<std::vector<int>> sigmas = {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
  for (const auto& sig : sigmas)
    for (int i = 1; i <= 2; ++i) {
      DualityReport rep =
          check_row_swap(sym, mixed(3, 2, {R, L, R}, {3, 1, 0}, sig, 2), i);
      CHECK(rep.pass);
      CHECK_FALSE(rep.lhs.is_zero());
    }
}

TEST_CASE("swap identity can relate state sets of different size") {
  Symbols sym = make_symbols(3, 2);
  DualityReport rep =
      check_row_swap(sym, mixed(3, 2, {R, L, R}, {3, 1, 0}, {2, 1, 1}, 2), 1);
  CHECK(rep.pass);
  CHECK(rep.lhs_states == 2);
  CHECK(rep.rhs_states == 4);
}

TEST_CASE("paths stacked on the leftmost block give monomial single-state systems") {
  Symbols sym = make_symbols(2, 2);
  for (const auto& sig : std::vector<std::vector<int>>{{1, 2}, {2, 1}}) {
    DualityReport rep = check_row_swap(sym, mixed(2, 2, {L, R}, {3, 2}, sig, 2), 1);
    CHECK(rep.pass);
    CHECK(rep.lhs_states == 1);
    CHECK(rep.rhs_states == 1);
    CHECK(rep.lhs.is_monomial());
    CHECK(rep.rhs.is_monomial());
  }
}

TEST_CASE("row swap rejects equal families and bad indices") {
  Symbols sym = make_symbols(2, 2);
  SystemSpec spec = mixed(2, 2, {R, R}, {3, 0}, {1, 2}, 2);
  CHECK_THROWS_AS(check_row_swap(sym, spec, 1), std::invalid_argument);
  SystemSpec ok = mixed(2, 2, {L, R}, {3, 0}, {1, 2}, 2);
  CHECK_THROWS_AS(check_row_swap(sym, ok, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_row_swap(sym, ok, 2), std::invalid_argument);
}

TEST_CASE("bottom row family flips for the cost of its parameter") {
  Symbols sym = make_symbols(3, 2);

  SUBCASE("one-row system") {
    Symbols s1 = make_symbols(1, 2);
    DualityReport rep = check_last_row(s1, mixed(1, 2, {R}, {2}, {2}, 2));
    CHECK(rep.pass);
    CHECK(rep.lhs_states == 1);
    CHECK(rep.rhs_states == 1);
    CHECK(rep.lhs == s1.zvar(1));
  }

  SUBCASE("two rows, all exit lists") {
    Symbols s2 = make_symbols(2, 2);
    for (int s1 = 1; s1 <= 2; ++s1)
      for (int s2c = 1; s2c <= 2; ++s2c) {
        DualityReport rep = check_last_row(s2, mixed(2, 2, {R, R}, {3, 0}, {s1, s2c}, 2));
        CHECK(rep.pass);
        CHECK(rep.details["bijection"] == true);
        CHECK(rep.lhs_states == rep.rhs_states);
      }
  }

  SUBCASE("mixed prefix above the flipped row") {
    DualityReport rep = check_last_row(sym, mixed(3, 2, {L, R, R}, {3, 1, 0}, {1, 1, 2}, 2));
    CHECK(rep.pass);
    CHECK(rep.lhs_states == 3);
    CHECK(rep.details["states_matched"] == 3);
  }
}

TEST_CASE("bottom row only passes columns or turns at the entry point") {
  Symbols sym = make_symbols(2, 2);
  for (RowType last : {R, L}) {
    SystemSpec spec = mixed(2, 2, {R, last}, {3, 0}, {1, 2}, 2);
    std::set<TClass> seen;
    for (const State& s : enumerate_states(sym, spec)) {
      int r = spec.rows;
      for (int j = 0; j < s.cols; ++j) {
        TVertexConfig cfg{s.horizontal[r - 1][j], s.vertical[r - 1][j] != 0,
                          s.horizontal[r - 1][j + 1], s.vertical[r][j] != 0,
                          spec.column_color(j)};
        seen.insert(classify_t(last, cfg));
      }
    }
    CHECK_FALSE(seen.empty());
    for (TClass cls : seen)
      CHECK((cls == TClass::A1 || cls == TClass::C2 || cls == TClass::B2));
  }
}

TEST_CASE("full reversal equals the reversed left system") {
  SUBCASE("two rows, one color") {
    Symbols sym = make_symbols(2, 1);
    WeightRegime reg = make_regime(RegimeTag::Generic, 1);
    DualityReport rep = check_left_right_duality(sym, {1, 0}, {1, 1}, 2, 1, 2, reg);
    CHECK(rep.pass);
    CHECK(rep.lhs_states == 2);
    CHECK(rep.rhs_states == 2);
  }

  SUBCASE("two rows, two colors, all exit lists") {
    Symbols sym = make_symbols(2, 2);
    WeightRegime reg = make_regime(RegimeTag::Generic, 2);
    for (int s1 = 1; s1 <= 2; ++s1)
      for (int s2 = 1; s2 <= 2; ++s2) {
        DualityReport rep = check_left_right_duality(sym, {3, 0}, {s1, s2}, 2, 2, 2, reg);
        CHECK(rep.pass);
        CHECK(rep.lhs.is_zero() == (s1 == s2));
      }
  }

  SUBCASE("three rows, three colors, figure boundary data") {
    Symbols sym = make_symbols(3, 3);
    WeightRegime reg = make_regime(RegimeTag::Generic, 3);
    DualityReport rep = check_left_right_duality(sym, {5, 4, 0}, {3, 2, 1}, 2, 3, 3, reg);
    CHECK(rep.pass);
    CHECK(rep.lhs_states == 4);
    CHECK(rep.rhs_states == 3);
    CHECK_FALSE(rep.lhs.is_zero());
  }

  SUBCASE("infeasible exit colors compare as empty systems") {
    Symbols sym = make_symbols(3, 2);
    WeightRegime reg = make_regime(RegimeTag::Generic, 2);
    DualityReport rep = check_left_right_duality(sym, {4, 2, 0}, {1, 2, 1}, 3, 2, 3, reg);
    CHECK(rep.pass);
    CHECK(rep.lhs.is_zero());
    CHECK(rep.rhs.is_zero());
    CHECK(rep.lhs_states == 0);
    CHECK(rep.rhs_states == 0);
  }
}

TEST_CASE("stepwise replay retraces the full reversal") {
  SUBCASE("two rows") {
    Symbols sym = make_symbols(2, 2);
    WeightRegime reg = make_regime(RegimeTag::Generic, 2);
    DualityReport rep = replay_left_right_duality(sym, {3, 0}, {1, 2}, 2, 2, 2, reg);
    CHECK(rep.pass);
    CHECK(rep.details["steps"].size() == 3);
    for (const auto& step : rep.details["steps"]) CHECK(step["ok"] == true);
  }

  SUBCASE("three rows tracks colors and parameters through six steps") {
    Symbols sym = make_symbols(3, 2);
    WeightRegime reg = make_regime(RegimeTag::Generic, 2);
    DualityReport rep = replay_left_right_duality(sym, {4, 2, 0}, {2, 2, 2}, 3, 2, 3, reg);
    CHECK(rep.pass);
    const auto& steps = rep.details["steps"];
    REQUIRE(steps.size() == 6);
    CHECK(steps[0]["rows"] == "RRL");
    CHECK(steps[2]["rows"] == "LRR");
    CHECK(steps[5]["rows"] == "LLL");
    CHECK(steps[5]["row_parameters"] == "3,2,1");
  }

  SUBCASE("replay agrees with the direct check") {
    Symbols sym = make_symbols(3, 3);
    WeightRegime reg = make_regime(RegimeTag::Generic, 3);
    DualityReport direct = check_left_right_duality(sym, {5, 4, 0}, {3, 2, 1}, 2, 3, 3, reg);
    DualityReport replay = replay_left_right_duality(sym, {5, 4, 0}, {3, 2, 1}, 2, 3, 3, reg);
    CHECK(direct.pass);
    CHECK(replay.pass);
    CHECK(direct.lhs == replay.lhs);
    CHECK(replay.rhs == direct.lhs);
  }
}

TEST_CASE("reports serialize with both sides and state counts") {
  Symbols sym = make_symbols(2, 2);
  WeightRegime reg = make_regime(RegimeTag::Generic, 2);
  DualityReport rep = check_left_right_duality(sym, {3, 0}, {2, 1}, 2, 2, 2, reg);
  nlohmann::json j = rep.to_json();
  CHECK(j["pass"] == true);
  CHECK(j["transform"] == "full-reversal");
  CHECK(j["lhs"] == rep.lhs.to_string());
  CHECK(j["lhs_states"] == 2);
  CHECK(j["rhs_states"] == 2);
}
