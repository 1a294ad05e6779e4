// Triangular interlacing patterns: the state<->pattern bijection, per-row
// reflections, the strictness shift and the long reflection composition.

#include "icebox/gt_patterns.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace icebox {

namespace {

// Pair (i-1, i) reads theta[i-1]; a trailing r-th entry is tolerated.
void check_theta(const std::vector<RowType>& theta, int r) {
  const int n = static_cast<int>(theta.size());
  if (n != r - 1 && n != r)
    throw std::domain_error("need one row type per adjacent row pair");
}

} // namespace

std::string GTPattern::to_text() const {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
    os << '\n';
  }
  return os.str();
}

nlohmann::json GTPattern::to_json() const { return nlohmann::json(rows); }

GTPattern GTPattern::from_text(const std::string& text) {
  GTPattern p;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    int v = 0;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw std::domain_error("pattern rows must contain integers only");
    if (!row.empty()) p.rows.push_back(std::move(row));
  }
  if (!triangular_shape_ok(p)) throw std::domain_error("not a triangular pattern");
  return p;
}

GTPattern GTPattern::from_json(const nlohmann::json& j) {
  GTPattern p;
  try {
    p.rows = j.get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw std::domain_error("pattern json must be an array of integer rows");
  }
  if (!triangular_shape_ok(p)) throw std::domain_error("not a triangular pattern");
  return p;
}

bool triangular_shape_ok(const GTPattern& p) {
  const int r = p.size();
  if (r == 0) return false;
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(p.rows[i].size()) != r - i) return false;
    for (int v : p.rows[i])
      if (v < 0) return false;
  }
  return true;
}

bool weakly_interlaced(const GTPattern& p) {
  if (!triangular_shape_ok(p)) return false;
  const int r = p.size();
  for (const auto& row : p.rows)
    for (size_t k = 0; k + 1 < row.size(); ++k)
      if (row[k] < row[k + 1]) return false;
  for (int i = 1; i < r; ++i)
    for (int j = i; j < r; ++j)
      if (p.entry(i - 1, j - 1) < p.entry(i, j) || p.entry(i, j) < p.entry(i - 1, j))
        return false;
  return true;
}

bool strictness_ok(const GTPattern& p, const std::vector<RowType>& theta) {
  if (!weakly_interlaced(p)) return false;
  const int r = p.size();
  check_theta(theta, r);
  for (const auto& row : p.rows)
    for (size_t k = 0; k + 1 < row.size(); ++k)
      if (row[k] == row[k + 1]) return false;
  for (int i = 1; i < r; ++i) {
    const bool left_strict = theta[i - 1] == RowType::R;
    for (int j = i; j < r; ++j) {
      if (left_strict && p.entry(i - 1, j - 1) == p.entry(i, j)) return false;
      if (!left_strict && p.entry(i, j) == p.entry(i - 1, j)) return false;
    }
  }
  return true;
}

GTPattern gt_from_state(const State& s, const std::vector<RowType>& theta) {
  GTPattern p;
  for (int i = 0; i < s.rows; ++i) {
    std::vector<int> row;
    for (int x = 0; x < s.cols; ++x)
      if (s.vertical[i][x] != 0) row.push_back(s.cols - 1 - x);
    std::sort(row.rbegin(), row.rend());
    p.rows.push_back(std::move(row));
  }
  if (!strictness_ok(p, theta))
    throw std::domain_error("vertical occupancies do not interlace as required");
  return p;
}

State state_from_gt(const GTPattern& p, const SystemSpec& spec) {
  const int r = p.size();
  if (!spec.fused) throw std::domain_error("pattern states live on fused grids");
  if (spec.rows != r) throw std::domain_error("pattern and grid row counts differ");
  if (!strictness_ok(p, spec.row_types))
    throw std::domain_error("pattern violates the row-pair strictness");
  if (p.rows[0] != spec.mu) throw std::domain_error("pattern top row must equal mu");
  const int N = spec.width();
  if (p.rows[0][0] >= N) throw std::domain_error("pattern entries exceed the grid width");

  State gray;
  gray.rows = r;
  gray.cols = N;
  gray.horizontal.assign(r, std::vector<int>(N + 1, 0));
  gray.vertical.assign(r + 1, std::vector<int>(N, 0));
  for (int i = 0; i < r; ++i)
    for (int v : p.rows[i]) gray.vertical[i][N - 1 - v] = 1;

  // A horizontal edge is occupied when more paths have descended into the row
  // than have left it on the scanned side of the edge.
  for (int i = 0; i < r; ++i) {
    int run = 0;
    if (spec.row_types[i] == RowType::R) {
      for (int x = 0; x < N; ++x) {
        run += gray.vertical[i][x] - gray.vertical[i + 1][x];
        gray.horizontal[i][x + 1] = run > 0;
      }
    } else {
      for (int x = N - 1; x >= 0; --x) {
        run += gray.vertical[i][x] - gray.vertical[i + 1][x];
        gray.horizontal[i][x] = run > 0;
      }
    }
  }
  return color_completion(spec, gray);
}

std::vector<int> gt_weight(const GTPattern& p) {
  const int r = p.size();
  std::vector<int> d(r + 1, 0);
  for (int i = 0; i < r; ++i)
    d[i] = std::accumulate(p.rows[i].begin(), p.rows[i].end(), 0);
  std::vector<int> w(r);
  for (int k = 0; k < r; ++k) w[k] = d[r - 1 - k] - d[r - k];
  return w;
}

GTPattern bk_involution(const GTPattern& p, int row) {
  const int r = p.size();
  if (row < 1 || row >= r) throw std::domain_error("reflected row must be interior");
  const int i = row;
  const bool below = i + 1 < r;
  GTPattern q = p;
  for (int j = i; j < r; ++j) {
    int first = p.entry(i - 1, j - 1);
    if (below && j >= i + 1) first = std::min(first, p.entry(i + 1, j));
    int second = p.entry(i - 1, j);
    if (below && j + 1 < r) second = std::max(second, p.entry(i + 1, j + 1));
    q.rows[i][j - i] = first + second - p.entry(i, j);
  }
  return q;
}

GTPattern bk_t(const GTPattern& p, int k) { return bk_involution(p, p.size() - k); }

GTPattern rho_shift(const std::vector<RowType>& theta, int r) {
  if (r < 1) throw std::domain_error("need at least one row");
  check_theta(theta, r);
  GTPattern p;
  std::vector<int> row(r);
  for (int k = 0; k < r; ++k) row[k] = r - 1 - k;
  p.rows.push_back(std::move(row));
  for (int i = 1; i < r; ++i) {
    std::vector<int> next = p.rows[i - 1];
    if (theta[i - 1] == RowType::R)
      next.erase(next.begin());
    else
      next.pop_back();
    p.rows.push_back(std::move(next));
  }
  return p;
}

GTPattern sh(const GTPattern& weak, const std::vector<RowType>& theta) {
  if (!weakly_interlaced(weak)) throw std::domain_error("not a weakly interlacing pattern");
  GTPattern rho = rho_shift(theta, weak.size());
  GTPattern out = weak;
  for (int i = 0; i < out.size(); ++i)
    for (size_t k = 0; k < out.rows[i].size(); ++k) out.rows[i][k] += rho.rows[i][k];
  return out;
}

GTPattern unsh(const GTPattern& strict, const std::vector<RowType>& theta) {
  if (!strictness_ok(strict, theta))
    throw std::domain_error("pattern violates the row-pair strictness");
  GTPattern rho = rho_shift(theta, strict.size());
  GTPattern out = strict;
  for (int i = 0; i < out.size(); ++i)
    for (size_t k = 0; k < out.rows[i].size(); ++k) out.rows[i][k] -= rho.rows[i][k];
  if (!weakly_interlaced(out))
    throw std::domain_error("pattern does not lie in the shifted image");
  return out;
}

GTPattern schutzenberger(const GTPattern& p) {
  GTPattern q = p;
  for (int len = p.size() - 1; len >= 1; --len)
    for (int k = 1; k <= len; ++k) q = bk_t(q, k);
  return q;
}

namespace {

// Extends the last row repeatedly; `range` maps the pair index i and the list
// position k of the new entry to its inclusive bounds given the row above.
void extend_rows(GTPattern& cur, int r,
                 const std::function<std::pair<int, int>(int, const std::vector<int>&, int)>& range,
                 std::vector<GTPattern>& out) {
  if (cur.size() == r) {
    out.push_back(cur);
    return;
  }
  const std::vector<int> prev = cur.rows.back();
  const int i = cur.size();
  std::vector<int> next(prev.size() - 1);
  std::function<void(size_t)> fill = [&](size_t k) {
    if (k == next.size()) {
      cur.rows.push_back(next);
      extend_rows(cur, r, range, out);
      cur.rows.pop_back();
      return;
    }
    auto [lo, hi] = range(i, prev, static_cast<int>(k));
    for (int v = lo; v <= hi; ++v) {
      next[k] = v;
      fill(k + 1);
    }
  };
  fill(0);
}

} // namespace

std::vector<GTPattern> enumerate_weak(const std::vector<int>& top) {
  if (top.empty()) throw std::domain_error("need a nonempty top row");
  for (size_t k = 0; k + 1 < top.size(); ++k)
    if (top[k] < top[k + 1]) throw std::domain_error("top row must be weakly decreasing");
  if (top.back() < 0) throw std::domain_error("top row must be nonnegative");
  GTPattern cur;
  cur.rows.push_back(top);
  std::vector<GTPattern> out;
  extend_rows(
      cur, static_cast<int>(top.size()),
      [](int, const std::vector<int>& prev, int k) { return std::pair{prev[k + 1], prev[k]}; },
      out);
  return out;
}

std::vector<GTPattern> enumerate_strict(const std::vector<int>& top,
                                        const std::vector<RowType>& theta) {
  if (top.empty()) throw std::domain_error("need a nonempty top row");
  for (size_t k = 0; k + 1 < top.size(); ++k)
    if (top[k] <= top[k + 1]) throw std::domain_error("top row must be strictly decreasing");
  if (top.back() < 0) throw std::domain_error("top row must be nonnegative");
  check_theta(theta, static_cast<int>(top.size()));
  GTPattern cur;
  cur.rows.push_back(top);
  std::vector<GTPattern> out;
  extend_rows(cur, static_cast<int>(top.size()),
              [&theta](int i, const std::vector<int>& prev, int k) {
                return theta[i - 1] == RowType::R ? std::pair{prev[k + 1], prev[k] - 1}
                                                  : std::pair{prev[k + 1] + 1, prev[k]};
              },
              out);
  return out;
}

} // namespace icebox
