// Semistandard tableaux: shape chains, entry-swap involutions and evacuation
// by rotation plus jeu de taquin rectification.

#include "icebox/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace icebox {

std::vector<int> SSYT::shape() const {
  std::vector<int> lam;
  for (const auto& row : rows) lam.push_back(static_cast<int>(row.size()));
  return lam;
}

std::vector<int> SSYT::content(int n) const {
  std::vector<int> c(n, 0);
  for (const auto& row : rows)
    for (int v : row)
      if (1 <= v && v <= n) ++c[v - 1];
  return c;
}

std::string SSYT::to_text() const {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
    os << '\n';
  }
  return os.str();
}

nlohmann::json SSYT::to_json() const { return nlohmann::json(rows); }

SSYT SSYT::from_json(const nlohmann::json& j) {
  SSYT t;
  try {
    t.rows = j.get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw std::domain_error("tableau json must be an array of integer rows");
  }
  return t;
}

bool ssyt_ok(const SSYT& t, int n) {
  for (size_t a = 0; a < t.rows.size(); ++a) {
    const auto& row = t.rows[a];
    if (row.empty()) return false;
    if (a > 0 && row.size() > t.rows[a - 1].size()) return false;
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > n) return false;
      if (c + 1 < row.size() && row[c] > row[c + 1]) return false;
      if (a > 0 && t.rows[a - 1][c] >= row[c]) return false;
    }
  }
  return true;
}

SSYT ssyt_from_gt(const GTPattern& p) {
  if (!weakly_interlaced(p)) throw std::domain_error("not a weakly interlacing pattern");
  const int r = p.size();
  const auto& full = p.rows[0];
  int nrows = 0;
  while (nrows < r && full[nrows] > 0) ++nrows;
  SSYT t;
  t.rows.assign(nrows, {});
  for (int a = 0; a < nrows; ++a) t.rows[a].assign(full[a], 0);
  for (int k = 1; k <= r; ++k) {
    const auto& lam = p.rows[r - k];
    for (int a = 0; a < k && a < nrows; ++a) {
      const int prev = a < k - 1 ? p.rows[r - k + 1][a] : 0;
      for (int c = prev; c < lam[a]; ++c) t.rows[a][c] = k;
    }
  }
  return t;
}

GTPattern gt_from_ssyt(const SSYT& t, int r) {
  if (r < 1 || !ssyt_ok(t, r))
    throw std::domain_error("not a semistandard tableau with entries at most r");
  GTPattern p;
  p.rows.assign(r, {});
  for (int i = 0; i < r; ++i) {
    const int k = r - i;
    std::vector<int> row(k, 0);
    for (size_t a = 0; a < t.rows.size() && a < static_cast<size_t>(k); ++a) {
      int len = 0;
      while (len < static_cast<int>(t.rows[a].size()) && t.rows[a][len] <= k) ++len;
      row[a] = len;
    }
    p.rows[i] = std::move(row);
  }
  return p;
}

SSYT bender_knuth(const SSYT& t, int i) {
  if (i < 1) throw std::domain_error("entry index must be positive");
  if (!ssyt_ok(t, std::numeric_limits<int>::max()))
    throw std::domain_error("not a semistandard tableau");
  SSYT out = t;
  for (size_t a = 0; a < t.rows.size(); ++a) {
    const auto& row = t.rows[a];
    std::vector<size_t> free_cols;
    int low = 0, high = 0;
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] == i) {
        const bool blocked =
            a + 1 < t.rows.size() && c < t.rows[a + 1].size() && t.rows[a + 1][c] == i + 1;
        if (!blocked) {
          free_cols.push_back(c);
          ++low;
        }
      } else if (row[c] == i + 1) {
        const bool blocked = a > 0 && t.rows[a - 1][c] == i;
        if (!blocked) {
          free_cols.push_back(c);
          ++high;
        }
      }
    }
    // The free entries sit in consecutive columns; swap the two multiplicities.
    for (size_t idx = 0; idx < free_cols.size(); ++idx)
      out.rows[a][free_cols[idx]] = idx < static_cast<size_t>(high) ? i : i + 1;
  }
  return out;
}

SSYT evacuation(const SSYT& t, int n) {
  if (!ssyt_ok(t, n)) throw std::domain_error("not a semistandard tableau with entries at most n");
  if (t.rows.empty()) return t;
  const int R = static_cast<int>(t.rows.size());
  const int C = static_cast<int>(t.rows[0].size());

  // Complemented half-turn image: a skew tableau inside the R x C box whose
  // row a occupies columns [in_[a], C).
  std::vector<std::vector<int>> g(R, std::vector<int>(C, 0));
  std::vector<int> in_(R), out_(R, C);
  for (int a = 0; a < R; ++a) {
    const auto& src = t.rows[R - 1 - a];
    in_[a] = C - static_cast<int>(src.size());
    for (int c = in_[a]; c < C; ++c) g[a][c] = n + 1 - src[C - 1 - c];
  }

  while (true) {
    int corner = -1;
    for (int a = R - 1; a >= 0; --a)
      if (in_[a] > 0 && (a == R - 1 || in_[a] > in_[a + 1])) {
        corner = a;
        break;
      }
    if (corner < 0) break;
    int a = corner;
    int c = in_[a] - 1;
    while (true) {
      const bool has_right = c + 1 < out_[a];
      const bool has_below = a + 1 < R && c < out_[a + 1];
      if (!has_right && !has_below) break;
      const bool move_below = !has_right || (has_below && g[a + 1][c] <= g[a][c + 1]);
      if (move_below) {
        g[a][c] = g[a + 1][c];
        ++a;
      } else {
        g[a][c] = g[a][c + 1];
        ++c;
      }
    }
    g[a][c] = 0;
    out_[a] = c;
    in_[corner] -= 1;
  }

  SSYT out;
  for (int a = 0; a < R && out_[a] > 0; ++a)
    out.rows.emplace_back(g[a].begin(), g[a].begin() + out_[a]);
  return out;
}

std::vector<SSYT> enumerate_ssyt(const std::vector<int>& shape, int n) {
  std::vector<int> lam = shape;
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  for (size_t a = 0; a + 1 < lam.size(); ++a)
    if (lam[a] < lam[a + 1]) throw std::domain_error("shape must be a partition");
  if (!lam.empty() && lam.back() < 0) throw std::domain_error("shape must be a partition");

  SSYT t;
  t.rows.assign(lam.size(), {});
  for (size_t a = 0; a < lam.size(); ++a) t.rows[a].assign(lam[a], 0);
  std::vector<SSYT> out;
  std::function<void(size_t, size_t)> fill = [&](size_t a, size_t c) {
    if (a == t.rows.size()) {
      out.push_back(t);
      return;
    }
    if (c == t.rows[a].size()) {
      fill(a + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t.rows[a][c - 1]);
    if (a > 0) lo = std::max(lo, t.rows[a - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t.rows[a][c] = v;
      fill(a, c + 1);
    }
  };
  fill(0, 0);
  return out;
}

} // namespace icebox
