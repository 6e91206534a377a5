#ifndef SNAKECHAR_SNAKE_HPP
#define SNAKECHAR_SNAKE_HPP

#include <string>
#include <utility>
#include <vector>

#include "textio.hpp"

namespace snakechar {

struct SnakePoint {
  int i;
  int k;

  friend bool operator==(const SnakePoint&, const SnakePoint&) = default;
};

/// Lattice membership. Type A accepts every node at every parameter (snake
/// conditions pin relative parity); type B requires k even at node n and k odd
/// below it.
inline bool in_lattice(const CartanData& cd, SnakePoint p) {
  if (!cd.valid_node(p.i)) return false;
  if (cd.type == LieType::A) return true;
  int r = ((p.k % 2) + 2) % 2;
  return p.i == cd.n ? r == 0 : r == 1;
}

/// Type-B points fold onto one path lattice of width 4n-2; type A is the identity.
inline std::pair<int, int> iota(const CartanData& cd, SnakePoint p) {
  if (!in_lattice(cd, p)) throw std::invalid_argument("iota: point not in lattice");
  if (cd.type == LieType::A) return {p.i, p.k};
  if (p.i == cd.n) return {2 * cd.n - 1, p.k};
  int r = (((2 * cd.n + p.k - 2 * p.i) % 4) + 4) % 4;
  if (r == 1) return {2 * p.i, p.k};
  if (r == 3) return {4 * cd.n - 2 - 2 * p.i, p.k};
  throw std::logic_error("iota: impossible residue");
}

struct PairPosition {
  bool snake = false;
  bool minimal = false;
  bool prime = false;
};

/// Relative position of p' over p.
inline PairPosition position_class(const CartanData& cd, SnakePoint p, SnakePoint pp) {
  if (!in_lattice(cd, p) || !in_lattice(cd, pp))
    throw std::invalid_argument("position_class: point not in lattice");
  PairPosition r;
  const int dk = pp.k - p.k;
  const int di = std::abs(pp.i - p.i);
  if (cd.type == LieType::A) {
    r.snake = dk >= di + 2 && (dk - di) % 2 == 0;
    r.minimal = r.snake && dk == di + 2;
    r.prime = r.snake && dk <= std::min(2 * cd.n + 2 - p.i - pp.i, p.i + pp.i);
    return r;
  }
  const int n = cd.n;
  int lower, mod4, upper;
  if (p.i == n && pp.i == n) {
    lower = 2, mod4 = 2, upper = 4 * n - 2;
  } else if (p.i == n || pp.i == n) {
    lower = 2 * di + 3, mod4 = 2 * di - 1, upper = 2 * p.i + 2 * pp.i - 1;
  } else {
    lower = 2 * di + 4, mod4 = 2 * di, upper = 2 * p.i + 2 * pp.i;
  }
  r.snake = dk >= lower && ((dk - mod4) % 4 + 4) % 4 == 0;
  r.minimal = r.snake && dk == lower;
  r.prime = r.snake && dk <= upper;
  return r;
}

struct Snake {
  std::vector<SnakePoint> p;

  bool empty() const { return p.empty(); }
  friend bool operator==(const Snake&, const Snake&) = default;
};

inline bool is_snake(const CartanData& cd, const std::vector<SnakePoint>& pts) {
  for (const auto& q : pts)
    if (!in_lattice(cd, q)) return false;
  for (size_t k = 0; k + 1 < pts.size(); ++k)
    if (!position_class(cd, pts[k], pts[k + 1]).snake) return false;
  return true;
}

inline Snake make_snake(const CartanData& cd, std::vector<SnakePoint> pts) {
  if (!is_snake(cd, pts)) throw std::invalid_argument("make_snake: not a snake");
  return Snake{std::move(pts)};
}

inline bool is_prime_snake(const CartanData& cd, const Snake& s) {
  for (size_t k = 0; k + 1 < s.p.size(); ++k)
    if (!position_class(cd, s.p[k], s.p[k + 1]).prime) return false;
  return true;
}

inline bool is_minimal_snake(const CartanData& cd, const Snake& s) {
  for (size_t k = 0; k + 1 < s.p.size(); ++k)
    if (!position_class(cd, s.p[k], s.p[k + 1]).minimal) return false;
  return true;
}

/// Splits at each consecutive pair that is not prime; every factor is prime.
inline std::vector<Snake> prime_factorize(const CartanData& cd, const Snake& s) {
  std::vector<Snake> out;
  Snake cur;
  for (size_t k = 0; k < s.p.size(); ++k) {
    if (!cur.p.empty() && !position_class(cd, cur.p.back(), s.p[k]).prime) {
      out.push_back(std::move(cur));
      cur = Snake{};
    }
    cur.p.push_back(s.p[k]);
  }
  if (!cur.p.empty()) out.push_back(std::move(cur));
  return out;
}

/// Segment of k points at node i stepping by 2 d_i, followed by a jump
/// recorded through j >= 0.
struct SnakeSegment {
  int k;
  int i;
  int j;

  friend bool operator==(const SnakeSegment&, const SnakeSegment&) = default;
};

struct SnakeSpec {
  int t = 0;
  std::vector<SnakeSegment> seg;

  friend bool operator==(const SnakeSpec&, const SnakeSpec&) = default;
};

/// Parameter advance from the start of a segment to the start of the next.
inline int n_offset(const CartanData& cd, const SnakeSegment& s, int i_next) {
  const int di = std::abs(i_next - s.i);
  if (cd.type == LieType::A) return 2 * s.k + di + 2 * s.j;
  const int d = cd.d[s.i];
  int eps = -(s.i == cd.n ? 1 : 0) - (i_next == cd.n ? 1 : 0);
  return 2 * d * s.k + 2 * di + 4 - 2 * d + 4 * s.j + eps;
}

inline std::vector<SnakePoint> spec_to_points(const CartanData& cd, const SnakeSpec& spec) {
  std::vector<SnakePoint> pts;
  int t = spec.t;
  for (size_t l = 0; l < spec.seg.size(); ++l) {
    const auto& sg = spec.seg[l];
    if (sg.k < 0 || sg.j < 0 || !cd.valid_node(sg.i))
      throw std::invalid_argument("spec_to_points: bad segment");
    for (int r = 0; r < sg.k; ++r) pts.push_back({sg.i, t + 2 * cd.d[sg.i] * r});
    if (l + 1 < spec.seg.size()) t += n_offset(cd, sg, spec.seg[l + 1].i);
  }
  return pts;
}

inline Snake spec_to_snake(const CartanData& cd, const SnakeSpec& spec) {
  return make_snake(cd, spec_to_points(cd, spec));
}

/// Canonical spec of a nonempty snake: maximal runs, j solved from the gap.
inline SnakeSpec snake_to_spec(const CartanData& cd, const Snake& s) {
  if (s.p.empty()) throw std::invalid_argument("snake_to_spec: empty snake");
  if (!is_snake(cd, s.p)) throw std::invalid_argument("snake_to_spec: not a snake");
  SnakeSpec spec;
  spec.t = s.p.front().k;
  size_t a = 0;
  while (a < s.p.size()) {
    size_t b = a + 1;
    const int i = s.p[a].i;
    while (b < s.p.size() && s.p[b].i == i && s.p[b].k - s.p[b - 1].k == 2 * cd.d[i]) ++b;
    SnakeSegment sg{(int)(b - a), i, 0};
    if (b < s.p.size()) {
      const int gap = s.p[b].k - s.p[a].k;
      const int base = n_offset(cd, sg, s.p[b].i);
      const int denom = cd.type == LieType::A ? 2 : 4;
      if ((gap - base) % denom != 0 || gap < base)
        throw std::logic_error("snake_to_spec: gap not representable");
      sg.j = (gap - base) / denom;
    }
    spec.seg.push_back(sg);
    a = b;
  }
  return spec;
}

/// The two neighboring-point sequences (X, Y) of a prime pair.
inline std::pair<std::vector<SnakePoint>, std::vector<SnakePoint>> neighboring_points(
    const CartanData& cd, SnakePoint p, SnakePoint pp) {
  auto pos = position_class(cd, p, pp);
  if (!pos.prime) throw std::invalid_argument("neighboring_points: pair not prime");
  std::vector<SnakePoint> X, Y;
  const int i = p.i, k = p.k, ip = pp.i, kp = pp.k;
  if (cd.type == LieType::A) {
    if (k + i > kp - ip) X.push_back({(i + k + ip - kp) / 2, (i + k - ip + kp) / 2});
    if (k + cd.n + 1 - i > kp - cd.n - 1 + ip)
      Y.push_back({(ip + kp + i - k) / 2, (ip + kp - i + k) / 2});
    return {X, Y};
  }

  const int n = cd.n;
  auto blist = [&]() {
    std::vector<SnakePoint> r;
    if (i < n && ip < n) {
      if (kp - k < 2 * i + 2 * ip) r.push_back({(2 * i + k + 2 * ip - kp) / 4, (2 * i + k - 2 * ip + kp) / 2});
    } else if (i < n && ip == n) {
      if (kp - k < 2 * i + 2 * n - 1) r.push_back({(2 * i + k + 2 * n - 1 - kp) / 4, (2 * i + k - 2 * n + 1 + kp) / 2});
    } else if (i == n && ip < n) {
      r.push_back({n, kp - 2 * n + 1 + 2 * ip});
    }
    return r;
  };
  auto flist = [&]() {
    std::vector<SnakePoint> r;
    if (i < n && ip < n) {
      if (kp - k <= 4 * n - 4 - 2 * i - 2 * ip)
        r.push_back({(2 * ip + kp + 2 * i - k) / 4, (2 * ip + kp - 2 * i + k) / 2});
      else if (kp - k >= 4 * n - 2 * i - 2 * ip) {
        r.push_back({n, k + 2 * n - 1 - 2 * i});
        r.push_back({n, kp - 2 * n + 1 + 2 * ip});
      } else {
        throw std::logic_error("neighboring_points: gap in case analysis");
      }
    } else if (i < n && ip == n) {
      r.push_back({n, k + 2 * n - 1 - 2 * i});
    } else if (i == n && ip < n) {
      if (kp - k < 2 * n + 2 * ip - 1)
        r.push_back({(2 * n - 1 + k + 2 * ip - kp) / 4, (2 * n - 1 + k - 2 * ip + kp) / 2});
    } else {
      if (kp - k < 4 * n - 2) r.push_back({(4 * n - 2 + k - kp) / 4, (k + kp) / 2});
    }
    return r;
  };

  bool first_class;
  if (i < n) {
    int r4 = (((2 * n + k - 2 * i) % 4) + 4) % 4;
    first_class = r4 == 1;
  } else {
    first_class = ((k % 4) + 4) % 4 == 0;
  }
  if (first_class) {
    X = blist();
    Y = flist();
  } else {
    X = flist();
    Y = blist();
  }
  for (const auto& q : X)
    if (!in_lattice(cd, q)) throw std::logic_error("neighboring_points: X point off lattice");
  for (const auto& q : Y)
    if (!in_lattice(cd, q)) throw std::logic_error("neighboring_points: Y point off lattice");
  return {X, Y};
}

inline YMonomial snake_top_monomial(const Snake& s) {
  YMonomial m;
  for (const auto& q : s.p) m = m * YMonomial::var(q.i, q.k);
  return m;
}

/// Snake text form: the point product as a monomial, parameters ascending.
inline std::string format_snake(const Snake& s) { return format_monomial(snake_top_monomial(s)); }

inline Snake parse_snake(const CartanData& cd, const std::string& text) {
  YMonomial m = parse_monomial(text);
  std::vector<SnakePoint> pts;
  for (const auto& x : m.v) {
    if (x.e != 1) throw std::invalid_argument("parse_snake: repeated or inverted point");
    pts.push_back({x.i, x.s});
  }
  std::sort(pts.begin(), pts.end(), [](SnakePoint a, SnakePoint b) { return a.k < b.k; });
  return make_snake(cd, pts);
}

inline njson spec_to_json(const SnakeSpec& spec) {
  njson segs = njson::array();
  for (const auto& sg : spec.seg) segs.push_back({sg.k, sg.i, sg.j});
  njson r;
  r["t"] = spec.t;
  r["segments"] = std::move(segs);
  return r;
}

inline SnakeSpec spec_from_json(const njson& j) {
  SnakeSpec spec;
  spec.t = j.at("t").get<int>();
  for (const auto& sg : j.at("segments")) {
    if (!sg.is_array() || sg.size() != 3) throw std::invalid_argument("bad segment in JSON");
    spec.seg.push_back({sg[0].get<int>(), sg[1].get<int>(), sg[2].get<int>()});
  }
  return spec;
}

}  // namespace snakechar

#endif
