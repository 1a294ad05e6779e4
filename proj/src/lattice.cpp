// Lattice systems: boundary validation, admissible-state enumeration by a
// row-by-row depth-first scan, exact weights, block fusion and the coloring
// of uncolored fused layouts.

#include "icebox/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace icebox {

namespace {

bool right_moving(RowType t) { return t == RowType::R; }

// Strictly increasing colors within 1..m.
bool color_subset_ok(const std::vector<int>& v, int m) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > m) return false;
    if (i > 0 && v[i] <= v[i - 1]) return false;
  }
  return true;
}

bool subset_has(const std::vector<int>& v, int c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

// Candidate (outgoing horizontal, bottom) pairs for one vertex with incoming
// horizontal h and top color t, in increasing lexicographic order. Expanded
// grids pass the column color as `col`; fused grids pass col = 0 and allow
// any palette color on vertical edges. Shapes that the weight tables rule
// out (a zero entry) are filtered by the caller through the weight itself.
std::vector<std::pair<int, int>> vertex_options(int col, int h, int t) {
  std::vector<std::pair<int, int>> out;
  if (col > 0) {
    if (t == 0) {
      if (h == col)
        out = {{0, col}, {h, 0}};
      else if (h != 0)
        out = {{h, 0}};
      else
        out = {{0, 0}};
    } else {
      if (h == 0)
        out = {{0, col}, {col, 0}};
      else
        out = {{h, col}};
    }
  } else {
    if (t == 0) {
      if (h == 0)
        out = {{0, 0}};
      else
        out = {{0, h}, {h, 0}};
    } else {
      if (h == 0)
        out = {{0, t}, {t, 0}};
      else if (h == t)
        out = {{h, t}};
      else
        out = {{h, t}, {t, h}};
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly vertex_weight(const Symbols& sym, const SystemSpec& spec, int row, int x,
                          int left, int top, int right, int bottom) {
  if (spec.fused) {
    CrystalTConfig cfg{left, top, right, bottom};
    return crystal_t_weight(sym, spec.row_types[row], cfg, row + 1);
  }
  TVertexConfig cfg{left, top != 0, right, bottom != 0, spec.column_color(x)};
  return t_weight(sym, spec.row_types[row], cfg, row + 1, spec.regime);
}

struct RowFill {
  std::vector<int> horiz;  // cols + 1 spins
  std::vector<int> bottom; // cols spins
};

// All admissible fillings of one row below the given top colors, scanned
// from the row family's input side. require_exit = 0 accepts any color.
std::vector<RowFill> scan_row(const Symbols& sym, const SystemSpec& spec, int row,
                              const std::vector<int>& top, int require_exit) {
  const int W = spec.width();
  const bool fwd = right_moving(spec.row_types[row]);
  std::vector<RowFill> out;
  RowFill cur;
  cur.horiz.assign(W + 1, 0);
  cur.bottom.assign(W, 0);

  std::function<void(int, int)> step = [&](int s, int h) {
    if (s == W) {
      if (h != 0 && (require_exit == 0 || h == require_exit)) out.push_back(cur);
      return;
    }
    const int x = fwd ? s : W - 1 - s;
    const int col = spec.fused ? 0 : spec.column_color(x);
    for (auto [h2, b] : vertex_options(col, h, top[x])) {
      const int left = fwd ? h : h2;
      const int right = fwd ? h2 : h;
      if (vertex_weight(sym, spec, row, x, left, top[x], right, b).is_zero()) continue;
      cur.horiz[fwd ? x + 1 : x] = h2;
      cur.bottom[x] = b;
      step(s + 1, h2);
      cur.horiz[fwd ? x + 1 : x] = 0;
      cur.bottom[x] = 0;
    }
  };
  step(0, 0);
  return out;
}

} // namespace

int SystemSpec::top_color_at(int x) const {
  for (size_t i = 0; i < mu.size(); ++i)
    if (column_position(mu[i]) == x) return fused ? top_colors[i] : column_color(x);
  return 0;
}

void SystemSpec::validate() const {
  if (rows < 1) throw std::domain_error("system needs at least one row");
  if (palette < 1) throw std::domain_error("palette size must be positive");
  if (blocks < 1) throw std::domain_error("block count must be positive");
  if (static_cast<int>(row_types.size()) != rows)
    throw std::domain_error("row type list must have one entry per row");
  if (static_cast<int>(mu.size()) != rows)
    throw std::domain_error("top column list must have one entry per row");
  for (int i = 0; i < rows; ++i) {
    if (mu[i] < 0) throw std::domain_error("top column numbers must be nonnegative");
    if (i > 0 && mu[i] >= mu[i - 1])
      throw std::domain_error("top column numbers must be strictly decreasing");
  }
  if (mu[0] > width() - 1)
    throw std::domain_error("grid too narrow for the leftmost top column");
  if (fused) {
    if (regime.tag != RegimeTag::Crystal)
      throw std::domain_error("fused grids are defined in the crystal regime");
    if (static_cast<int>(top_colors.size()) != rows)
      throw std::domain_error("fused grids need one top color per row");
    for (int c : top_colors)
      if (c < 1 || c > palette) throw std::domain_error("top color outside the palette");
  }
  if (sigma) {
    if (static_cast<int>(sigma->size()) != rows)
      throw std::domain_error("exit color list must have one entry per row");
    std::vector<int> want;
    for (int i = 0; i < rows; ++i)
      want.push_back(fused ? top_colors[i] : column_color(column_position(mu[i])));
    std::vector<int> got = *sigma;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got)
      throw std::domain_error("exit colors must be a rearrangement of the entering colors");
  }
}

int exit_color(const SystemSpec& spec, const State& s, int row) {
  return right_moving(spec.row_types.at(row)) ? s.horizontal.at(row).at(s.cols)
                                              : s.horizontal.at(row).at(0);
}

std::vector<State> enumerate_states(const Symbols& sym, const SystemSpec& spec) {
  spec.validate();
  const int W = spec.width();
  State base;
  base.rows = spec.rows;
  base.cols = W;
  base.horizontal.assign(spec.rows, std::vector<int>(W + 1, 0));
  base.vertical.assign(spec.rows + 1, std::vector<int>(W, 0));
  for (int x = 0; x < W; ++x) base.vertical[0][x] = spec.top_color_at(x);

  std::vector<State> out;
  std::function<void(State&, int)> fill = [&](State& s, int row) {
    if (row == spec.rows) {
      out.push_back(s);
      return;
    }
    const int want = spec.sigma ? (*spec.sigma)[row] : 0;
    for (const RowFill& f : scan_row(sym, spec, row, s.vertical[row], want)) {
      s.horizontal[row] = f.horiz;
      s.vertical[row + 1] = f.bottom;
      fill(s, row + 1);
    }
    s.horizontal[row].assign(W + 1, 0);
    s.vertical[row + 1].assign(W, 0);
  };
  fill(base, 0);
  return out;
}

LaurentPoly state_weight(const Symbols& sym, const SystemSpec& spec, const State& s) {
  spec.validate();
  const int W = spec.width();
  if (s.rows != spec.rows || s.cols != W)
    throw std::domain_error("state dimensions do not match the system");
  if (static_cast<int>(s.horizontal.size()) != s.rows ||
      static_cast<int>(s.vertical.size()) != s.rows + 1)
    throw std::domain_error("state edge arrays have the wrong shape");
  for (const auto& row : s.horizontal)
    if (static_cast<int>(row.size()) != W + 1)
      throw std::domain_error("state edge arrays have the wrong shape");
  for (const auto& row : s.vertical)
    if (static_cast<int>(row.size()) != W)
      throw std::domain_error("state edge arrays have the wrong shape");
  for (int x = 0; x < W; ++x) {
    if (s.vertical[0][x] != spec.top_color_at(x))
      throw std::domain_error("state top boundary does not match the system");
    if (s.vertical[spec.rows][x] != 0)
      throw std::domain_error("state bottom boundary must be empty");
  }
  if (!spec.fused)
    for (const auto& row : s.vertical)
      for (int x = 0; x < W; ++x)
        if (row[x] != 0 && row[x] != spec.column_color(x))
          throw std::domain_error("vertical edge color must match its column");
  for (int i = 0; i < spec.rows; ++i) {
    const bool fwd = right_moving(spec.row_types[i]);
    if (s.horizontal[i][fwd ? 0 : W] != 0)
      throw std::domain_error("row entry edge must be empty");
    const int ex = exit_color(spec, s, i);
    if (ex == 0) throw std::domain_error("every row must exit one path");
    if (spec.sigma && ex != (*spec.sigma)[i])
      throw std::domain_error("state exit colors do not match the system");
  }

  LaurentPoly w = sym.one();
  for (int i = 0; i < spec.rows; ++i)
    for (int x = 0; x < W; ++x)
      w *= vertex_weight(sym, spec, i, x, s.horizontal[i][x], s.vertical[i][x],
                         s.horizontal[i][x + 1], s.vertical[i + 1][x]);
  return w;
}

LaurentPoly partition_function(const Symbols& sym, const SystemSpec& spec) {
  LaurentPoly z = sym.zero();
  for (const State& s : enumerate_states(sym, spec)) z += state_weight(sym, spec, s);
  return z;
}

std::vector<LaurentPoly> fuse_block_trace(const Symbols& sym, RowType family,
                                          const FusedTConfig& cfg, const WeightRegime& regime) {
  const int m = regime.m;
  if (sym.m < m) throw std::domain_error("symbol table too small for the regime palette");
  if (cfg.left < 0 || cfg.left > m || cfg.right < 0 || cfg.right > m)
    throw std::domain_error("horizontal spin outside the palette");
  if (!color_subset_ok(cfg.top, m) || !color_subset_ok(cfg.bottom, m))
    throw std::domain_error("vertical colors must be strictly increasing palette colors");
  if (cfg.z_row < 1 || cfg.z_row > sym.r) throw std::domain_error("row parameter out of range");

  // Walk the expanded block from the family's input side. Occupancy of both
  // vertical edges is prescribed per column, so each vertex is forced.
  const bool fwd = right_moving(family);
  int h = fwd ? cfg.left : cfg.right;
  std::vector<LaurentPoly> trace;
  for (int s = 0; s < m; ++s) {
    const int col = fwd ? s + 1 : m - s;
    const bool t = subset_has(cfg.top, col);
    const bool b = subset_has(cfg.bottom, col);
    int h2;
    if (t && b) {
      h2 = h; // a path passes down; the horizontal rides through or is absent
    } else if (t && !b) {
      if (h != 0) return {};
      h2 = col;
    } else if (!t && b) {
      if (h != col) return {};
      h2 = 0;
    } else {
      h2 = h;
    }
    TVertexConfig tc{fwd ? h : h2, t, fwd ? h2 : h, b, col};
    trace.push_back(t_weight(sym, family, tc, cfg.z_row, regime));
    h = h2;
  }
  if (h != (fwd ? cfg.right : cfg.left)) return {};
  if (!fwd) std::reverse(trace.begin(), trace.end());
  return trace;
}

LaurentPoly fuse_block(const Symbols& sym, RowType family, const FusedTConfig& cfg,
                       const WeightRegime& regime) {
  LaurentPoly w = sym.one();
  std::vector<LaurentPoly> trace = fuse_block_trace(sym, family, cfg, regime);
  if (trace.empty()) return sym.zero();
  for (const LaurentPoly& t : trace) w *= t;
  return w;
}

State color_completion(const SystemSpec& spec, const State& gray) {
  spec.validate();
  if (!spec.fused) throw std::domain_error("color completion applies to fused grids");
  const int W = spec.width();
  if (gray.rows != spec.rows || gray.cols != W)
    throw std::domain_error("layout dimensions do not match the system");
  if (static_cast<int>(gray.horizontal.size()) != gray.rows ||
      static_cast<int>(gray.vertical.size()) != gray.rows + 1)
    throw std::domain_error("layout edge arrays have the wrong shape");
  for (const auto& row : gray.horizontal)
    for (int v : row)
      if (v != 0 && v != 1) throw std::domain_error("layout spins must be 0 or 1");
  for (const auto& row : gray.vertical)
    for (int v : row)
      if (v != 0 && v != 1) throw std::domain_error("layout spins must be 0 or 1");
  for (int x = 0; x < W; ++x) {
    if ((gray.vertical[0][x] != 0) != (spec.top_color_at(x) != 0))
      throw std::domain_error("layout top boundary does not match the system");
    if (gray.vertical[spec.rows][x] != 0)
      throw std::domain_error("layout bottom boundary must be empty");
  }

  State s = gray;
  for (int x = 0; x < W; ++x) s.vertical[0][x] = spec.top_color_at(x);
  for (int i = 0; i < spec.rows; ++i) {
    const bool fwd = right_moving(spec.row_types[i]);
    if (gray.horizontal[i][fwd ? 0 : W] != 0)
      throw std::domain_error("layout row entry edge must be empty");
    int h = 0;
    for (int sidx = 0; sidx < W; ++sidx) {
      const int x = fwd ? sidx : W - 1 - sidx;
      const int t = s.vertical[i][x];
      const bool r_occ = gray.horizontal[i][fwd ? x + 1 : x] != 0;
      const bool b_occ = gray.vertical[i + 1][x] != 0;
      int h2 = 0, b = 0;
      if (h == 0 && t == 0) {
        if (r_occ || b_occ) throw std::logic_error("layout creates a path from nothing");
      } else if (h != 0 && t == 0) {
        if (r_occ && !b_occ)
          h2 = h;
        else if (!r_occ && b_occ)
          b = h;
        else
          throw std::logic_error("layout breaks path conservation");
      } else if (h == 0 && t != 0) {
        if (r_occ && !b_occ)
          h2 = t;
        else
          throw std::logic_error("layout admits no nonzero coloring");
      } else {
        if (!r_occ || !b_occ) throw std::logic_error("layout breaks path conservation");
        // Exactly one of pass and swap survives in the crystal tables.
        const bool pass = fwd ? h >= t : h <= t;
        h2 = pass ? h : t;
        b = pass ? t : h;
      }
      s.horizontal[i][fwd ? x + 1 : x] = h2;
      s.vertical[i + 1][x] = b;
      h = h2;
    }
    if (h == 0) throw std::logic_error("layout row exits no path");
    if (spec.sigma && h != (*spec.sigma)[i])
      throw std::logic_error("layout exit colors contradict the system");
  }
  return s;
}

nlohmann::json state_to_json(const Symbols& sym, const SystemSpec& spec, const State& s) {
  nlohmann::json j;
  j["rows"] = s.rows;
  j["cols"] = s.cols;
  j["horizontal"] = s.horizontal;
  nlohmann::json vert = nlohmann::json::array();
  for (const auto& row : s.vertical) {
    nlohmann::json jr = nlohmann::json::array();
    for (int v : row) {
      nlohmann::json cell = nlohmann::json::array();
      if (v != 0) cell.push_back(v);
      jr.push_back(cell);
    }
    vert.push_back(jr);
  }
  j["vertical"] = vert;
  j["weight"] = state_weight(sym, spec, s).to_json();
  return j;
}

State state_from_json(const nlohmann::json& j) {
  State s;
  s.rows = j.at("rows").get<int>();
  s.cols = j.at("cols").get<int>();
  s.horizontal = j.at("horizontal").get<std::vector<std::vector<int>>>();
  for (const auto& jr : j.at("vertical")) {
    std::vector<int> row;
    for (const auto& cell : jr) {
      if (cell.size() > 1)
        throw std::domain_error("vertical edges of a state carry at most one color");
      row.push_back(cell.empty() ? 0 : cell.at(0).get<int>());
    }
    s.vertical.push_back(row);
  }
  return s;
}

} // namespace icebox
