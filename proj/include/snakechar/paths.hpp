#ifndef SNAKECHAR_PATHS_HPP
#define SNAKECHAR_PATHS_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "qchar.hpp"
#include "snake.hpp"

namespace snakechar {

/// Height value u + e*eps with infinitesimal eps, e in {-1,0,+1}.
struct PlaneY {
  int u;
  int e;

  friend bool operator==(const PlaneY&, const PlaneY&) = default;
};

inline bool plane_less(PlaneY a, PlaneY b) { return a.u != b.u ? a.u < b.u : a.e < b.e; }

struct PathPoint {
  int x;
  PlaneY y;

  friend bool operator==(const PathPoint&, const PathPoint&) = default;
};

struct Path {
  std::vector<PathPoint> q;

  friend bool operator==(const Path&, const Path&) = default;
};

namespace detail {

inline void enum_paths_A(const CartanData& cd, int i, int k, std::vector<Path>& out) {
  const int len = cd.n + 1;
  const int y_end = cd.n + 1 - i + k;
  Path cur;
  cur.q.push_back({0, {i + k, 0}});
  auto rec = [&](auto&& self, int x, int y) -> void {
    if (x == len) {
      if (y == y_end) out.push_back(cur);
      return;
    }
    int remain = len - x;
    for (int step : {-1, +1}) {
      int ny = y + step;
      if (std::abs(y_end - ny) > remain - 1) continue;
      cur.q.push_back({x + 1, {ny, 0}});
      self(self, x + 1, ny);
      cur.q.pop_back();
    }
  };
  rec(rec, 0, i + k);
}

/// Single type-B path family bound to one side of the folded strip:
/// x runs 0,2,...,2n-2,2n-1 when l == 2 mod 4 and 4n-2,...,2n,2n-1 when l == 0.
inline void enum_paths_B_single(const CartanData& cd, int l, std::vector<Path>& out) {
  const int n = cd.n;
  if (((l % 4) + 4) % 4 != 0 && ((l % 4) + 4) % 4 != 2)
    throw std::invalid_argument("enum_paths_B_single: parameter must be even");
  const bool left = ((l % 4) + 4) % 4 == 2;
  std::vector<int> xs;
  for (int r = 0; r < n; ++r) xs.push_back(left ? 2 * r : 4 * n - 2 - 2 * r);
  xs.push_back(2 * n - 1);
  Path cur;
  cur.q.push_back({xs[0], {l + 2 * n - 1, 0}});
  auto rec = [&](auto&& self, int idx, int y) -> void {
    if (idx == n) {
      out.push_back(cur);
      return;
    }
    const bool last = idx == n - 1;
    for (int sign : {-1, +1}) {
      PlaneY ny = last ? PlaneY{y + sign, sign} : PlaneY{y + 2 * sign, 0};
      cur.q.push_back({xs[idx + 1], ny});
      self(self, idx + 1, ny.u);
      cur.q.pop_back();
    }
  };
  rec(rec, 0, l + 2 * n - 1);
}

}  // namespace detail

/// All paths of the single point (i,k), in a fixed deterministic order.
inline std::vector<Path> enumerate_paths(const CartanData& cd, int i, int k) {
  if (!in_lattice(cd, {i, k})) throw std::invalid_argument("enumerate_paths: point not in lattice");
  std::vector<Path> out;
  if (cd.type == LieType::A) {
    detail::enum_paths_A(cd, i, k, out);
    return out;
  }
  const int n = cd.n;
  if (i == n) {
    detail::enum_paths_B_single(cd, k, out);
    return out;
  }
  const int off = 2 * n - 2 * i - 1;
  std::vector<Path> first, second;
  detail::enum_paths_B_single(cd, k - off, first);
  detail::enum_paths_B_single(cd, k + off, second);
  for (const auto& a : first)
    for (const auto& b : second) {
      if (!plane_less(b.q.back().y, a.q.back().y)) continue;
      Path glued = a;
      glued.q.insert(glued.q.end(), b.q.rbegin(), b.q.rend());
      out.push_back(std::move(glued));
    }
  return out;
}

struct CornerSets {
  std::vector<SnakePoint> upper;
  std::vector<SnakePoint> lower;
};

/// Upper corners give positive Y factors, lower corners inverse ones. In type
/// B the fold line x = 2n-1 contributes the node-n corners through the eps
/// points, and the boundary columns x = 0, 4n-2 never contribute.
inline CornerSets corners(const CartanData& cd, const Path& p) {
  CornerSets cs;
  if (cd.type == LieType::A) {
    for (size_t r = 1; r + 1 < p.q.size(); ++r) {
      int ym = p.q[r - 1].y.u, y = p.q[r].y.u, yp = p.q[r + 1].y.u;
      if (ym == y + 1 && yp == y + 1) cs.upper.push_back({(int)r, y});
      if (ym == y - 1 && yp == y - 1) cs.lower.push_back({(int)r, y});
    }
    return cs;
  }
  const int n = cd.n;
  for (size_t r = 1; r + 1 < p.q.size(); ++r) {
    const int x = p.q[r].x;
    if (x == 0 || x == 2 * n - 1 || x == 4 * n - 2) continue;
    const PlaneY y = p.q[r].y;
    const bool min = plane_less(y, p.q[r - 1].y) && plane_less(y, p.q[r + 1].y);
    const bool max = plane_less(p.q[r - 1].y, y) && plane_less(p.q[r + 1].y, y);
    if (!min && !max) continue;
    const int node = x <= 2 * n - 2 ? x / 2 : (4 * n - 2 - x) / 2;
    if (min) cs.upper.push_back({node, y.u});
    if (max) cs.lower.push_back({node, y.u});
  }
  std::vector<PlaneY> fold;
  for (const auto& pt : p.q)
    if (pt.x == 2 * n - 1) fold.push_back(pt.y);
  auto has = [&](int u, int e) {
    for (const auto& y : fold)
      if (y.u == u && y.e == e) return true;
    return false;
  };
  for (const auto& y : fold) {
    if (y.e == -1 && !has(y.u, +1)) cs.upper.push_back({n, y.u});
    if (y.e == +1 && !has(y.u, -1)) cs.lower.push_back({n, y.u});
  }
  return cs;
}

inline YMonomial path_monomial(const CartanData& cd, const Path& p) {
  CornerSets cs = corners(cd, p);
  YMonomial m;
  for (const auto& c : cs.upper) m = m * YMonomial::var(c.i, c.k);
  for (const auto& c : cs.lower) m = m * YMonomial::var(c.i, c.k, -1);
  return m;
}

/// p lies strictly above pp when at every shared x-coordinate every height of
/// p is smaller than every height of pp.
inline bool strictly_above(const Path& p, const Path& pp) {
  for (const auto& a : p.q)
    for (const auto& b : pp.q)
      if (a.x == b.x && !plane_less(a.y, b.y)) return false;
  return true;
}

namespace detail {

struct BitMat {
  size_t cols = 0, words = 0;
  std::vector<uint64_t> bits;

  void init(size_t rows, size_t cols_) {
    cols = cols_;
    words = (cols + 63) / 64;
    bits.assign(rows * words, 0);
  }
  void set(size_t r, size_t c) { bits[r * words + c / 64] |= 1ull << (c % 64); }
  const uint64_t* row(size_t r) const { return bits.data() + r * words; }
};

}  // namespace detail

/// Sum over non-overlapping path tuples of the product of path monomials.
/// Paths whose monomial reaches under cutoff are discarded up front; corner
/// sets of non-overlapping tuples are disjoint, so this is exactly the
/// truncation of the full character.
inline QCharacter snake_qchar(const CartanData& cd, const std::vector<SnakePoint>& pts,
                              int cutoff = kNoCutoff) {
  if (!is_snake(cd, pts)) throw std::invalid_argument("snake_qchar: not a snake");
  const size_t T = pts.size();
  if (T == 0) return QCharacter::unit();

  std::vector<std::vector<Path>> paths(T);
  std::vector<std::vector<YMonomial>> mono(T);
  for (size_t t = 0; t < T; ++t) {
    for (auto& p : enumerate_paths(cd, pts[t].i, pts[t].k)) {
      YMonomial m = path_monomial(cd, p);
      if (cutoff != kNoCutoff && !m.is_unit() && m.min_param() < cutoff) continue;
      paths[t].push_back(std::move(p));
      mono[t].push_back(std::move(m));
    }
    if (paths[t].empty()) return {};
  }

  std::vector<std::vector<detail::BitMat>> above(T);
  for (size_t s = 0; s < T; ++s) {
    above[s].resize(T);
    for (size_t t = s + 1; t < T; ++t) {
      above[s][t].init(paths[s].size(), paths[t].size());
      for (size_t a = 0; a < paths[s].size(); ++a)
        for (size_t b = 0; b < paths[t].size(); ++b)
          if (strictly_above(paths[s][a], paths[t][b])) above[s][t].set(a, b);
    }
  }

  QCharacter out;
  std::vector<std::vector<uint64_t>> feas(T);
  for (size_t t = 0; t < T; ++t) {
    feas[t].assign((paths[t].size() + 63) / 64, ~0ull);
    size_t tail = paths[t].size() % 64;
    if (tail) feas[t].back() = (1ull << tail) - 1;
  }

  std::vector<std::vector<std::vector<uint64_t>>> saved(T + 1);
  saved[0] = feas;
  YMonomial acc;
  auto rec = [&](auto&& self, size_t lvl, const YMonomial& prod) -> void {
    const auto& cur = saved[lvl][lvl];
    for (size_t w = 0; w < cur.size(); ++w) {
      uint64_t word = cur[w];
      while (word) {
        size_t a = w * 64 + (size_t)std::countr_zero(word);
        word &= word - 1;
        YMonomial next = prod * mono[lvl][a];
        if (lvl + 1 == T) {
          out.add_term(next, 1);
          continue;
        }
        saved[lvl + 1] = saved[lvl];
        bool ok = true;
        for (size_t t = lvl + 1; t < T && ok; ++t) {
          auto& f = saved[lvl + 1][t];
          const uint64_t* r = above[lvl][t].row(a);
          uint64_t any = 0;
          for (size_t ww = 0; ww < f.size(); ++ww) any |= f[ww] &= r[ww];
          ok = any != 0;
        }
        if (ok) self(self, lvl + 1, next);
      }
    }
  };
  rec(rec, 0, acc);
  return out;
}

}  // namespace snakechar

#endif
