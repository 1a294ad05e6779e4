// Sorting monoid, flag sweeps, pattern decorations and the decoration
// rewriting with per-step product preservation.

#include "icebox/coxeter_flags.hpp"

#include <algorithm>
#include <stdexcept>

namespace icebox {

MonoidElement MonoidElement::identity(int r) {
  MonoidElement e;
  e.perm.resize(r);
  for (int i = 0; i < r; ++i) e.perm[i] = i + 1;
  return e;
}

int MonoidElement::length() const {
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions;
}

MonoidElement MonoidElement::times_gen(int k) const {
  if (k < 1 || k >= rank()) throw std::out_of_range("generator index out of range");
  MonoidElement e = *this;
  if (e.perm[k - 1] < e.perm[k]) std::swap(e.perm[k - 1], e.perm[k]);
  return e;
}

MonoidElement demazure_product(int r, const std::vector<int>& word) {
  MonoidElement e = MonoidElement::identity(r);
  for (int k : word) e = e.times_gen(k);
  return e;
}

Flag monoid_act(int k, Flag f) {
  if (k < 1 || k >= static_cast<int>(f.size()))
    throw std::out_of_range("generator index out of range");
  if (f[k - 1] > f[k]) std::swap(f[k - 1], f[k]);
  return f;
}

Flag monoid_act(const MonoidElement& e, Flag f) {
  // Strip descents from the right of the one-line form; each stripped letter
  // is the next generator to act on the flag.
  std::vector<int> perm = e.perm;
  bool found = true;
  while (found) {
    found = false;
    for (size_t k = 1; k < perm.size(); ++k)
      if (perm[k - 1] > perm[k]) {
        std::swap(perm[k - 1], perm[k]);
        f = monoid_act(static_cast<int>(k), std::move(f));
        found = true;
        break;
      }
  }
  return f;
}

Flag word_act(const std::vector<int>& word, Flag f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = monoid_act(*it, std::move(f));
  return f;
}

FlagSweep state_flags(const SystemSpec& spec, const State& s) {
  const int r = s.rows;
  const int N = s.cols;
  if (static_cast<int>(spec.row_types.size()) != r)
    throw std::domain_error("row types and state disagree");

  std::vector<int> exits(r);
  for (int a = 0; a < r; ++a) exits[a] = exit_color(spec, s, a);

  FlagSweep sweep;
  sweep.flags.assign(r, std::vector<Flag>(N + 1));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j <= N; ++j) {
      Flag f;
      for (int a = 0; a < i; ++a)
        if (spec.row_types[a] == RowType::L) f.push_back(exits[a]);
      if (spec.row_types[i] == RowType::R) {
        for (int x = 0; x < j; ++x)
          if (s.vertical[i + 1][x]) f.push_back(s.vertical[i + 1][x]);
        if (j >= 1 && s.horizontal[i][j]) f.push_back(s.horizontal[i][j]);
        for (int x = j; x < N; ++x)
          if (s.vertical[i][x]) f.push_back(s.vertical[i][x]);
      } else {
        for (int x = 0; x < N - j; ++x)
          if (s.vertical[i][x]) f.push_back(s.vertical[i][x]);
        if (j >= 1 && s.horizontal[i][N - j]) f.push_back(s.horizontal[i][N - j]);
        for (int x = N - j; x < N; ++x)
          if (s.vertical[i + 1][x]) f.push_back(s.vertical[i + 1][x]);
      }
      for (int a = i - 1; a >= 0; --a)
        if (spec.row_types[a] == RowType::R) f.push_back(exits[a]);
      sweep.flags[i][j] = std::move(f);
    }
  return sweep;
}

std::vector<int> pair_word(const GTPattern& p, const std::vector<RowType>& theta, int pair) {
  const int r = p.size();
  if (pair < 1 || pair >= r) throw std::domain_error("pair index out of range");
  const int nt = static_cast<int>(theta.size());
  if (nt != r - 1 && nt != r) throw std::domain_error("need one row type per adjacent row pair");

  int l = 0;
  for (int a = 0; a + 1 < pair; ++a)
    if (theta[a] == RowType::L) ++l;
  const auto& x = p.rows[pair - 1];
  const auto& y = p.rows[pair];
  const int slots = static_cast<int>(y.size());
  std::vector<int> w;
  if (theta[pair - 1] == RowType::R) {
    for (int j = slots - 1; j >= 0; --j)
      if (y[j] == x[j + 1]) w.push_back(l + j + 1);
  } else {
    for (int j = 0; j < slots; ++j)
      if (x[j] == y[j]) w.push_back(l + j + 1);
  }
  return w;
}

std::vector<int> pattern_word(const GTPattern& p, const std::vector<RowType>& theta) {
  std::vector<int> w;
  for (int pair = p.size() - 1; pair >= 1; --pair) {
    std::vector<int> pw = pair_word(p, theta, pair);
    w.insert(w.end(), pw.begin(), pw.end());
  }
  return w;
}

MonoidElement pattern_monoid_element(const GTPattern& p, const std::vector<RowType>& theta) {
  return demazure_product(p.size(), pattern_word(p, theta));
}

std::vector<int> HighlightPattern::word() const {
  std::vector<int> w;
  const int n = static_cast<int>(cols.size());
  auto push_bottom = [&](int b) {
    if (cols[b].bottom_present && cols[b].bottom_hl) w.push_back(first + b);
  };
  auto push_top = [&](int b) {
    if (cols[b].top_present && cols[b].top_hl) w.push_back(first + b);
  };
  if (upper == RowType::L) {
    for (int b = n - 1; b >= 0; --b) push_bottom(b);
    for (int b = 0; b < n; ++b) push_top(b);
  } else {
    for (int b = 0; b < n; ++b) push_bottom(b);
    for (int b = n - 1; b >= 0; --b) push_top(b);
  }
  return w;
}

namespace {

// One interlacing pair with the sharp side chosen by the row type.
bool short_pair_ok(const std::vector<int>& x, const std::vector<int>& y, bool left_strict) {
  if (x.size() != y.size() + 1) return false;
  for (size_t j = 0; j < y.size(); ++j) {
    if (left_strict) {
      if (x[j] <= y[j] || y[j] < x[j + 1]) return false;
    } else {
      if (x[j] < y[j] || y[j] <= x[j + 1]) return false;
    }
  }
  return true;
}

} // namespace

HighlightPattern decorate_short(const GTPattern& p, RowType upper, int offset) {
  const RowType lower = upper == RowType::R ? RowType::L : RowType::R;
  HighlightPattern d;
  d.upper = upper;
  d.first = offset + 1;
  if (p.size() == 2) {
    if (p.rows[0].size() != 2 || p.rows[1].size() != 1)
      throw std::domain_error("two-row decorations need row lengths (2, 1)");
    if (!short_pair_ok(p.rows[0], p.rows[1], upper == RowType::R))
      throw std::domain_error("pattern violates the row-pair strictness");
    DiagramColumn c;
    c.bottom_present = false;
    c.top_hl = upper == RowType::R ? p.rows[1][0] == p.rows[0][1] : p.rows[0][0] == p.rows[1][0];
    d.cols.push_back(c);
    return d;
  }
  if (p.size() != 3) throw std::domain_error("short decorations need two or three rows");

  const auto& x = p.rows[0];
  const auto& y = p.rows[1];
  const auto& z = p.rows[2];
  const int n = static_cast<int>(y.size());
  if (n < 1 || static_cast<int>(x.size()) != n + 1 || static_cast<int>(z.size()) != n - 1)
    throw std::domain_error("short decorations need staircase row lengths");
  if (!short_pair_ok(x, y, upper == RowType::R) || !short_pair_ok(y, z, lower == RowType::R))
    throw std::domain_error("pattern violates the row-pair strictness");

  d.cols.assign(n, {});
  for (int b = 0; b < n; ++b) {
    DiagramColumn& c = d.cols[b];
    if (upper == RowType::L) {
      c.top_hl = x[b] == y[b];
      c.bottom_present = b >= 1;
      if (c.bottom_present) c.bottom_hl = z[b - 1] == y[b];
    } else {
      c.top_hl = y[b] == x[b + 1];
      c.bottom_present = b + 1 < n;
      if (c.bottom_present) c.bottom_hl = y[b] == z[b];
    }
  }
  return d;
}

std::vector<std::pair<int, int>> decoration_blocks(const HighlightPattern& d) {
  std::vector<std::pair<int, int>> blocks;
  const int n = static_cast<int>(d.cols.size());
  int start = -1;
  for (int b = 0; b < n; ++b) {
    const DiagramColumn& c = d.cols[b];
    const bool hl = (c.top_present && c.top_hl) || (c.bottom_present && c.bottom_hl);
    if (hl && start < 0) start = b;
    if (!hl && start >= 0) {
      blocks.emplace_back(start, b - 1);
      start = -1;
    }
  }
  if (start >= 0) blocks.emplace_back(start, n - 1);
  return blocks;
}

HighlightPattern normalize_decoration(const HighlightPattern& d) {
  HighlightPattern out = d;
  for (auto [lo, hi] : decoration_blocks(d)) {
    DiagramColumn& c = out.cols[out.upper == RowType::L ? lo : hi];
    if (!c.bottom_present) continue;
    c.top_hl = true;
    c.bottom_present = false;
    c.bottom_hl = false;
  }
  return out;
}

namespace {

// Word of the two-row form with a both-arrow center slot at column `center`:
// emitted bottoms left to right, unconsumed bottoms right to left, the
// center, emitted tops right to left, unconsumed tops left to right.
std::vector<int> intermediate_word(const std::vector<DiagramColumn>& emitted,
                                   const HighlightPattern& in, int center, bool center_hl) {
  std::vector<int> w;
  for (int b = 0; b < static_cast<int>(emitted.size()); ++b)
    if (emitted[b].bottom_present && emitted[b].bottom_hl) w.push_back(in.first + b);
  for (int b = static_cast<int>(in.cols.size()) - 1; b > center; --b)
    if (in.cols[b].bottom_present && in.cols[b].bottom_hl) w.push_back(in.first + b);
  if (center_hl) w.push_back(in.first + center);
  for (int b = static_cast<int>(emitted.size()) - 1; b >= 0; --b)
    if (emitted[b].top_present && emitted[b].top_hl) w.push_back(in.first + b);
  for (int b = center + 1; b < static_cast<int>(in.cols.size()); ++b)
    if (in.cols[b].top_present && in.cols[b].top_hl) w.push_back(in.first + b);
  return w;
}

} // namespace

HighlightPattern dg_to_gd(const HighlightPattern& d, std::vector<std::vector<int>>& trace) {
  if (d.upper != RowType::L) throw std::domain_error("input must be an L-upper decoration");
  const int n = static_cast<int>(d.cols.size());
  for (int b = 0; b < n; ++b) {
    const DiagramColumn& c = d.cols[b];
    if (!c.top_present) throw std::domain_error("top slots must all be present");
    if (!c.bottom_present && c.bottom_hl)
      throw std::domain_error("absent slots cannot be highlighted");
    if (b == 0) {
      if (c.bottom_present) throw std::domain_error("the leftmost column cannot carry a bottom slot");
    } else {
      const DiagramColumn& prev = d.cols[b - 1];
      const bool prev_hl = prev.top_hl || (prev.bottom_present && prev.bottom_hl);
      if (!c.bottom_present) {
        if (!c.top_hl || c.bottom_hl || prev_hl)
          throw std::domain_error("a removed bottom slot must head a block as a top-only highlight");
      } else if (!prev_hl && (c.top_hl || c.bottom_hl)) {
        throw std::domain_error("a block must open with a top-only column");
      }
    }
  }

  trace.clear();
  HighlightPattern out;
  out.upper = RowType::R;
  out.first = d.first;
  if (n == 0) {
    trace.push_back({});
    return out;
  }

  bool center_hl = d.cols[0].top_hl;
  trace.push_back(intermediate_word(out.cols, d, 0, center_hl));
  for (int i = 1; i < n; ++i) {
    const DiagramColumn& c = d.cols[i];
    DiagramColumn e;
    if (center_hl) {
      if (c.bottom_present && c.top_hl && c.bottom_hl) {
        e.top_hl = e.bottom_hl = true; // braid across the center
      } else if (c.bottom_present && c.top_hl && !c.bottom_hl) {
        e.bottom_hl = true; // center letter passes below
      } else if (c.bottom_present && !c.top_hl && c.bottom_hl) {
        e.top_hl = true; // center letter passes above
      } else if (c.bottom_present && !c.top_hl && !c.bottom_hl) {
        e.top_hl = true; // block ends: the center letter parks above
        e.bottom_present = false;
        center_hl = false;
      } else {
        throw std::logic_error("adjacent blocks without a separating column");
      }
    } else {
      if (c.bottom_present && !c.top_hl && !c.bottom_hl) {
        // plain column between blocks passes through unchanged
      } else if (!c.bottom_present && c.top_hl) {
        center_hl = true; // a block starts: its head letter becomes the center
      } else {
        throw std::logic_error("a block interior reached an idle center");
      }
    }
    out.cols.push_back(e);
    trace.push_back(intermediate_word(out.cols, d, i, center_hl));
  }
  DiagramColumn last;
  last.bottom_present = false;
  last.top_hl = center_hl;
  out.cols.push_back(last);

  // Every intermediate word must fold to the same element.
  const int rank = d.first + n + 1;
  const MonoidElement ref = demazure_product(rank, trace.front());
  for (const auto& w : trace)
    if (demazure_product(rank, w) != ref)
      throw std::logic_error("rewriting changed the folded product");
  if (trace.back() != out.word()) throw std::logic_error("final form does not match the output");
  return out;
}

HighlightPattern dg_to_gd(const HighlightPattern& d) {
  std::vector<std::vector<int>> trace;
  return dg_to_gd(d, trace);
}

} // namespace icebox
