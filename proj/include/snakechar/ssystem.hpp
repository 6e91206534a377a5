#ifndef SNAKECHAR_SSYSTEM_HPP
#define SNAKECHAR_SSYSTEM_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "snakechar/errors.hpp"
#include "snakechar/paths.hpp"
#include "snakechar/qchar.hpp"
#include "snakechar/snake.hpp"
#include "snakechar/textio.hpp"

namespace snakechar {

/// One equation of the S-system: [S1][S2] = [S3][S4] + [S5][S6]. S5/S6 may be
/// empty snakes (unit character). spec2 is the originating spec of S2; spec1
/// the derived spec of S1; row records which table row produced spec1 (0 when
/// the tuple was assembled directly from six snakes rather than constructed).
struct SixTuple {
  SnakeSpec spec2;
  SnakeSpec spec1;
  int row = 0;
  bool case_one = true;
  Snake s1, s2, s3, s4, s5, s6;
};

namespace detail {

inline int sgn(int x) { return (x > 0) - (x < 0); }

inline void require_canonical_spec(const CartanData& cd, const SnakeSpec& spec) {
  const int m = static_cast<int>(spec.seg.size());
  if (m < 1) throw std::invalid_argument("spec: empty");
  for (int l = 0; l < m; ++l) {
    const auto& sg = spec.seg[l];
    if (!cd.valid_node(sg.i)) throw std::invalid_argument("spec: node out of range");
    if (sg.k < 1) throw std::invalid_argument("spec: segment multiplicity must be >= 1");
    if (sg.j < 0) throw std::invalid_argument("spec: negative gap index");
    if (l + 1 < m && sg.j == 0 && sg.i == spec.seg[l + 1].i)
      throw std::invalid_argument("spec: j=0 segment repeats the next node");
    if (l + 1 == m && sg.j != 0) throw std::invalid_argument("spec: last segment must have j=0");
  }
}

/// Row of the S1 lookup table: a guard plus a spec transformer. build_S1
/// scans every row so an overlap in the guards surfaces as AmbiguousRows
/// instead of being masked by first-match order.
struct S1Row {
  int id;
  bool (*guard)(const CartanData&, const SnakeSpec&);
  SnakeSpec (*apply)(const CartanData&, const SnakeSpec&);
};

inline int seg_i(const SnakeSpec& s, int l) { return s.seg[l - 1].i; }
inline int seg_k(const SnakeSpec& s, int l) { return s.seg[l - 1].k; }
inline int seg_j(const SnakeSpec& s, int l) { return s.seg[l - 1].j; }
inline int turn(const SnakeSpec& s) {
  return (seg_i(s, 2) - seg_i(s, 1)) * (seg_i(s, 3) - seg_i(s, 2));
}

/// Copy with the head replaced; tail segments are kept verbatim.
inline SnakeSpec rewrite(const SnakeSpec& s, int dt, std::vector<SnakeSegment> head, int keep_from) {
  SnakeSpec r;
  r.t = s.t + dt;
  r.seg = std::move(head);
  for (size_t l = keep_from; l < s.seg.size(); ++l) r.seg.push_back(s.seg[l]);
  return r;
}

inline const std::vector<S1Row>& s1_table_A() {
  static const std::vector<S1Row> rows = {
      {1, [](const CartanData&, const SnakeSpec& s) { return s.seg.size() == 1; },
       [](const CartanData&, const SnakeSpec& s) {
         return rewrite(s, 2, {{seg_k(s, 1), seg_i(s, 1), 0}}, 1);
       }},
      {2,
       [](const CartanData&, const SnakeSpec& s) {
         return s.seg.size() == 2 && seg_j(s, 1) == 0 && seg_i(s, 2) % 2 == 1;
       },
       [](const CartanData&, const SnakeSpec& s) {
         int i2 = seg_i(s, 2) + sgn(seg_i(s, 1) - seg_i(s, 2));
         return rewrite(s, 2, {{seg_k(s, 1), seg_i(s, 1), 0}, {seg_k(s, 2), i2, 0}}, 2);
       }},
      {3,
       [](const CartanData&, const SnakeSpec& s) {
         return s.seg.size() == 2 && seg_j(s, 1) == 0 && seg_i(s, 2) % 2 == 0;
       },
       [](const CartanData&, const SnakeSpec& s) {
         int i2 = seg_i(s, 2) + sgn(seg_i(s, 1) - seg_i(s, 2));
         return rewrite(s, 2, {{seg_k(s, 1), seg_i(s, 1), 0}, {seg_k(s, 2) - 1, i2, 0}}, 2);
       }},
      {4,
       [](const CartanData&, const SnakeSpec& s) {
         return s.seg.size() >= 3 && seg_j(s, 1) == 0 && seg_j(s, 2) == 0 && turn(s) > 0;
       },
       [](const CartanData&, const SnakeSpec& s) {
         return rewrite(s, 2, {s.seg[0], {seg_k(s, 2) - 1, seg_i(s, 2), 0}}, 2);
       }},
      {5,
       [](const CartanData&, const SnakeSpec& s) {
         return s.seg.size() >= 3 && seg_j(s, 1) == 0 && seg_j(s, 2) >= 1 && turn(s) >= 0;
       },
       [](const CartanData&, const SnakeSpec& s) {
         int i2 = seg_i(s, 2) + sgn(seg_i(s, 1) - seg_i(s, 2));
         return rewrite(s, 2, {s.seg[0], {seg_k(s, 2), i2, seg_j(s, 2) - 1}}, 2);
       }},
      {6,
       [](const CartanData&, const SnakeSpec& s) {
         return s.seg.size() >= 3 && seg_j(s, 1) == 0 && turn(s) < 0;
       },
       [](const CartanData&, const SnakeSpec& s) {
         int i2 = seg_i(s, 2) + sgn(seg_i(s, 1) - seg_i(s, 2));
         return rewrite(s, 2, {s.seg[0], {seg_k(s, 2), i2, seg_j(s, 2)}}, 2);
       }},
      {7,
       [](const CartanData&, const SnakeSpec& s) {
         return s.seg.size() >= 2 && seg_j(s, 1) >= 1;
       },
       [](const CartanData&, const SnakeSpec& s) {
         return rewrite(s, 2, {{seg_k(s, 1), seg_i(s, 1), seg_j(s, 1) - 1}}, 1);
       }},
  };
  return rows;
}

/// d_i / d_{i+1}; the quotient is 1 away from the short node and 2 at it.
inline int dratio(const CartanData& cd, int i) { return cd.sym(i) / cd.sym(i + 1); }

inline const std::vector<S1Row>& s1_table_B() {
  static const std::vector<S1Row> rows = {
      {1, [](const CartanData&, const SnakeSpec& s) { return s.seg.size() == 1; },
       [](const CartanData& cd, const SnakeSpec& s) {
         return rewrite(s, 2 * cd.sym(seg_i(s, 1)), {{seg_k(s, 1), seg_i(s, 1), 0}}, 1);
       }},
      {2,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() == 2 && seg_j(s, 1) == 0 && seg_i(s, 1) != cd.n &&
                seg_i(s, 2) == cd.n && seg_k(s, 2) % 2 == 1;
       },
       [](const CartanData& cd, const SnakeSpec& s) {
         return rewrite(s, 4, {s.seg[0], {(seg_k(s, 2) - 1) / 2, cd.n - 1, 0}}, 2);
       }},
      {3,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() == 2 && seg_j(s, 1) == 0 && seg_i(s, 1) != cd.n &&
                seg_i(s, 2) == cd.n && seg_k(s, 2) % 2 == 0;
       },
       [](const CartanData& cd, const SnakeSpec& s) {
         return rewrite(s, 4, {s.seg[0], {(seg_k(s, 2) - 2) / 2, cd.n - 1, 0}}, 2);
       }},
      {4,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() == 2 && seg_j(s, 1) == 0 && seg_i(s, 1) != cd.n &&
                seg_i(s, 2) != cd.n;
       },
       [](const CartanData&, const SnakeSpec& s) {
         int i2 = seg_i(s, 2) + sgn(seg_i(s, 1) - seg_i(s, 2));
         return rewrite(s, 4, {s.seg[0], {seg_k(s, 2), i2, 0}}, 2);
       }},
      {5,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() >= 3 && seg_j(s, 1) == 0 && seg_i(s, 1) != cd.n &&
                seg_i(s, 2) != cd.n && seg_j(s, 2) == 0 && turn(s) > 0;
       },
       [](const CartanData&, const SnakeSpec& s) {
         return rewrite(s, 4, {s.seg[0], {seg_k(s, 2) - 1, seg_i(s, 2), 0}}, 2);
       }},
      {6,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() >= 3 && seg_j(s, 1) == 0 && seg_i(s, 1) != cd.n &&
                seg_i(s, 2) != cd.n && seg_j(s, 2) >= 1 && turn(s) >= 0;
       },
       [](const CartanData&, const SnakeSpec& s) {
         int i2 = seg_i(s, 2) + sgn(seg_i(s, 1) - seg_i(s, 2));
         return rewrite(s, 4, {s.seg[0], {seg_k(s, 2), i2, seg_j(s, 2) - 1}}, 2);
       }},
      {7,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() >= 3 && seg_j(s, 1) == 0 && seg_i(s, 1) != cd.n &&
                seg_i(s, 2) != cd.n && turn(s) < 0;
       },
       [](const CartanData&, const SnakeSpec& s) {
         int i2 = seg_i(s, 2) + sgn(seg_i(s, 1) - seg_i(s, 2));
         return rewrite(s, 4, {s.seg[0], {seg_k(s, 2), i2, seg_j(s, 2)}}, 2);
       }},
      {8,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() >= 2 && seg_j(s, 1) >= 1 && seg_i(s, 1) != cd.n;
       },
       [](const CartanData&, const SnakeSpec& s) {
         return rewrite(s, 4, {{seg_k(s, 1), seg_i(s, 1), seg_j(s, 1) - 1}}, 1);
       }},
      {9,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() == 2 && seg_j(s, 1) == 0 && seg_i(s, 1) == cd.n;
       },
       [](const CartanData& cd, const SnakeSpec& s) {
         int i2 = seg_i(s, 2);
         return rewrite(s, 2,
                        {{seg_k(s, 1) + 1, cd.n, 0}, {dratio(cd, i2) * seg_k(s, 2), i2 + 1, 0}}, 2);
       }},
      {10,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() >= 3 && seg_j(s, 1) == 0 && seg_i(s, 1) == cd.n &&
                seg_j(s, 2) == 0 && seg_i(s, 2) > seg_i(s, 3);
       },
       [](const CartanData& cd, const SnakeSpec& s) {
         return rewrite(s, 2, {{seg_k(s, 1) + 1, cd.n, 0}, {seg_k(s, 2) - 1, seg_i(s, 2), 0}}, 2);
       }},
      {11,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() >= 3 && seg_j(s, 1) == 0 && seg_i(s, 1) == cd.n &&
                seg_j(s, 2) >= 1 && seg_i(s, 2) >= seg_i(s, 3);
       },
       [](const CartanData& cd, const SnakeSpec& s) {
         int i2 = seg_i(s, 2);
         return rewrite(s, 2,
                        {{seg_k(s, 1) + 1, cd.n, 0},
                         {dratio(cd, i2) * seg_k(s, 2), i2 + 1, seg_j(s, 2) - 1}},
                        2);
       }},
      {12,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() >= 3 && seg_j(s, 1) == 0 && seg_i(s, 1) == cd.n &&
                seg_i(s, 2) < seg_i(s, 3);
       },
       [](const CartanData& cd, const SnakeSpec& s) {
         int i2 = seg_i(s, 2);
         return rewrite(s, 2,
                        {{seg_k(s, 1) + 1, cd.n, 0},
                         {dratio(cd, i2) * seg_k(s, 2), i2 + 1, seg_j(s, 2)}},
                        2);
       }},
      {13,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() == 3 && seg_j(s, 1) == 0 && seg_i(s, 2) == cd.n &&
                seg_j(s, 2) == 0 && seg_k(s, 2) % 2 == 1;
       },
       [](const CartanData& cd, const SnakeSpec& s) {
         int i3 = seg_i(s, 3);
         return rewrite(s, 4,
                        {s.seg[0],
                         {(seg_k(s, 2) - 1) / 2, cd.n - 1, 0},
                         {1, cd.n, 0},
                         {dratio(cd, i3) * seg_k(s, 3), i3 + 1, 0}},
                        3);
       }},
      {14,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() >= 4 && seg_j(s, 1) == 0 && seg_i(s, 2) == cd.n &&
                seg_j(s, 2) == 0 && seg_k(s, 2) % 2 == 1 && seg_i(s, 3) <= seg_i(s, 4);
       },
       [](const CartanData& cd, const SnakeSpec& s) {
         int i3 = seg_i(s, 3);
         int dj = seg_i(s, 3) == seg_i(s, 4) ? 1 : 0;
         return rewrite(s, 4,
                        {s.seg[0],
                         {(seg_k(s, 2) - 1) / 2, cd.n - 1, 0},
                         {1, cd.n, 0},
                         {dratio(cd, i3) * seg_k(s, 3), i3 + 1, seg_j(s, 3) - dj}},
                        3);
       }},
      {15,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() >= 4 && seg_j(s, 1) == 0 && seg_i(s, 2) == cd.n &&
                seg_j(s, 2) == 0 && seg_k(s, 2) % 2 == 1 && seg_i(s, 3) > seg_i(s, 4);
       },
       [](const CartanData& cd, const SnakeSpec& s) {
         return rewrite(s, 4,
                        {s.seg[0],
                         {(seg_k(s, 2) - 1) / 2, cd.n - 1, 0},
                         {1, cd.n, 0},
                         {seg_k(s, 3) - 1, seg_i(s, 3), seg_j(s, 3)}},
                        3);
       }},
      {16,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() >= 3 && seg_j(s, 1) == 0 && seg_i(s, 2) == cd.n &&
                seg_j(s, 2) >= 1 && seg_k(s, 2) % 2 == 1;
       },
       [](const CartanData& cd, const SnakeSpec& s) {
         return rewrite(s, 4,
                        {s.seg[0], {(seg_k(s, 2) - 1) / 2, cd.n - 1, 0}, {1, cd.n, seg_j(s, 2) - 1}},
                        2);
       }},
      {17,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() >= 3 && seg_j(s, 1) == 0 && seg_i(s, 2) == cd.n &&
                seg_k(s, 2) % 2 == 0;
       },
       [](const CartanData& cd, const SnakeSpec& s) {
         int dj = seg_i(s, 3) == cd.n ? 1 : 0;
         return rewrite(s, 4, {s.seg[0], {seg_k(s, 2) / 2, cd.n - 1, seg_j(s, 2) - dj}}, 2);
       }},
      {18,
       [](const CartanData& cd, const SnakeSpec& s) {
         return s.seg.size() >= 2 && seg_j(s, 1) >= 1 && seg_i(s, 1) == cd.n;
       },
       [](const CartanData& cd, const SnakeSpec& s) {
         return rewrite(s, 2, {{seg_k(s, 1) + 1, cd.n, seg_j(s, 1) - 1}}, 1);
       }},
  };
  return rows;
}

inline std::pair<SnakeSpec, int> build_S1_traced(const CartanData& cd, const SnakeSpec& spec) {
  require_canonical_spec(cd, spec);
  const auto& table = cd.type == LieType::A ? s1_table_A() : s1_table_B();
  const S1Row* hit = nullptr;
  int hits = 0;
  for (const auto& row : table)
    if (row.guard(cd, spec)) {
      ++hits;
      hit = &row;
    }
  std::ostringstream os;
  os << "spec " << spec_to_json(spec).dump();
  if (hits == 0) throw NoRowMatches(os.str());
  if (hits > 1) throw AmbiguousRows(os.str());
  return {hit->apply(cd, spec), hit->id};
}

inline Snake snake_from_unordered(const CartanData& cd, std::vector<SnakePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](SnakePoint a, SnakePoint b) {
    return a.k != b.k ? a.k < b.k : a.i < b.i;
  });
  return make_snake(cd, std::move(pts));
}

/// Case split for the m >= 2 assembly of S5/S6: true selects (X, Y), false
/// (Y, X). In type A the split is on the first two nodes; in type B on the
/// horizontal positions of the folded images of the first point of each of
/// the first two segments, with same-node ties broken by the mod-4 class at
/// the spin node.
inline bool case_one(const CartanData& cd, const SnakeSpec& spec) {
  int i1 = seg_i(spec, 1), i2 = seg_i(spec, 2);
  if (cd.type == LieType::A) return i1 <= i2;
  int n1 = n_offset(cd, spec.seg[0], i2);
  if (i1 == i2) {
    if (i1 != cd.n) return true;
    int r = ((spec.t + n1) % 4 + 4) % 4;
    if (r == 2) return true;
    if (r == 0) return false;
    throw std::logic_error("case_one: odd parameter at the spin node");
  }
  int a = iota(cd, {i1, spec.t}).first;
  int b = iota(cd, {i2, spec.t + n1}).first;
  if (a == b) throw std::logic_error("case_one: tied fold positions at distinct nodes");
  return a < b;
}

inline void qc_mul_acc(QCharacter& acc, const QCharacter& a, const QCharacter& b, int sign) {
  for (const auto& [ma, ca] : a.t)
    for (const auto& [mb, cb] : b.t) {
      BigInt c = ca * cb;
      acc.add_term(ma * mb, sign < 0 ? BigInt(-c) : c);
    }
}

}  // namespace detail

/// Unique matching row of the S1 table applied to spec. The tables are stated
/// for canonical prime specs; a spec matching no row or several rows throws.
inline SnakeSpec build_S1(const CartanData& cd, const SnakeSpec& spec) {
  return detail::build_S1_traced(cd, spec).first;
}

/// S3 prepends the anchor point (i1, t) to S1; S4 removes it from S2.
inline std::pair<Snake, Snake> build_S3_S4(const CartanData& cd, const SnakeSpec& spec,
                                           const SnakeSpec& s1spec) {
  detail::require_canonical_spec(cd, spec);
  std::vector<SnakePoint> p3{{spec.seg[0].i, spec.t}};
  for (auto p : spec_to_points(cd, s1spec)) p3.push_back(p);
  auto pts2 = spec_to_points(cd, spec);
  std::vector<SnakePoint> p4(pts2.begin() + 1, pts2.end());
  return {make_snake(cd, std::move(p3)), make_snake(cd, std::move(p4))};
}

/// Neighboring-point letters over the first segment of S2, each pair one
/// rung apart, merged with the tails of S1/S2 past that segment. m = 1 keeps
/// the bare letters; either result may be empty.
inline std::pair<Snake, Snake> build_S5_S6(const CartanData& cd, const SnakeSpec& spec,
                                           const SnakeSpec& s1spec) {
  detail::require_canonical_spec(cd, spec);
  const int i1 = spec.seg[0].i, k1 = spec.seg[0].k, d1 = cd.sym(i1);
  std::vector<SnakePoint> xs, ys;
  for (int j = 0; j < k1; ++j) {
    SnakePoint p{i1, spec.t + 2 * d1 * j};
    auto [xl, yl] = neighboring_points(cd, p, {i1, p.k + 2 * d1});
    xs.insert(xs.end(), xl.begin(), xl.end());
    ys.insert(ys.end(), yl.begin(), yl.end());
  }
  if (spec.seg.size() == 1)
    return {detail::snake_from_unordered(cd, std::move(xs)),
            detail::snake_from_unordered(cd, std::move(ys))};

  auto pts1 = spec_to_points(cd, s1spec);
  auto pts2 = spec_to_points(cd, spec);
  if (static_cast<int>(pts1.size()) < k1 || static_cast<int>(pts2.size()) < k1)
    throw std::logic_error("build_S5_S6: spec shorter than its first segment");
  std::vector<SnakePoint> tail1(pts1.begin() + k1, pts1.end());
  std::vector<SnakePoint> tail2(pts2.begin() + k1, pts2.end());

  bool c1 = detail::case_one(cd, spec);
  std::vector<SnakePoint> p5 = c1 ? xs : ys;
  std::vector<SnakePoint> p6 = c1 ? ys : xs;
  p5.insert(p5.end(), tail1.begin(), tail1.end());
  p6.insert(p6.end(), tail2.begin(), tail2.end());
  return {detail::snake_from_unordered(cd, std::move(p5)),
          detail::snake_from_unordered(cd, std::move(p6))};
}

inline SixTuple s_system_equation(const CartanData& cd, const SnakeSpec& spec) {
  detail::require_canonical_spec(cd, spec);
  SixTuple eq;
  eq.spec2 = spec;
  eq.s2 = spec_to_snake(cd, spec);
  if (!is_prime_snake(cd, eq.s2))
    throw std::invalid_argument("s_system_equation: spec is not a prime snake");
  auto [s1spec, row] = detail::build_S1_traced(cd, spec);
  eq.spec1 = s1spec;
  eq.row = row;
  eq.s1 = spec_to_snake(cd, s1spec);
  std::tie(eq.s3, eq.s4) = build_S3_S4(cd, spec, s1spec);
  std::tie(eq.s5, eq.s6) = build_S5_S6(cd, spec, s1spec);
  eq.case_one = spec.seg.size() >= 2 ? detail::case_one(cd, spec) : true;
  return eq;
}

/// Assemble a tuple from six explicit snakes (as printed in an equation
/// fixture); the S2 spec is recovered so dominant classification still works.
inline SixTuple six_tuple_from_snakes(const CartanData& cd, std::array<Snake, 6> s) {
  SixTuple eq;
  eq.spec2 = snake_to_spec(cd, s[1]);
  eq.spec1 = snake_to_spec(cd, s[0]);
  eq.row = 0;
  eq.s1 = std::move(s[0]);
  eq.s2 = std::move(s[1]);
  eq.s3 = std::move(s[2]);
  eq.s4 = std::move(s[3]);
  eq.s5 = std::move(s[4]);
  eq.s6 = std::move(s[5]);
  return eq;
}

struct VerifyReport {
  bool ok = false;
  std::array<std::size_t, 6> factor_terms{};
  std::size_t lhs_terms = 0;
  std::size_t diff_terms = 0;
  double seconds = 0.0;
};

/// Exact identity check chi(S1) chi(S2) = chi(S3) chi(S4) + chi(S5) chi(S6).
/// The three products accumulate into a single signed map so the failure
/// residue is exactly the symmetric difference of the two sides.
inline VerifyReport verify_equation(const CartanData& cd, const SixTuple& eq,
                                    bool throw_on_mismatch = true) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  const Snake* ss[6] = {&eq.s1, &eq.s2, &eq.s3, &eq.s4, &eq.s5, &eq.s6};
  std::array<QCharacter, 6> c;
  for (int k = 0; k < 6; ++k) {
    c[k] = snake_qchar(cd, ss[k]->p);
    rep.factor_terms[k] = c[k].size();
  }
  QCharacter acc = qc_mul(c[0], c[1]);
  rep.lhs_terms = acc.size();
  detail::qc_mul_acc(acc, c[2], c[3], -1);
  detail::qc_mul_acc(acc, c[4], c[5], -1);
  rep.diff_terms = acc.size();
  rep.ok = acc.is_zero();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!rep.ok && throw_on_mismatch) {
    std::ostringstream os;
    os << "equation [" << format_snake(eq.s1) << "][" << format_snake(eq.s2)
       << "] differs from its right-hand side in " << rep.diff_terms << " terms:";
    int shown = 0;
    for (const auto& [m, x] : acc.sorted_terms()) {
      if (++shown > 4) {
        os << " ...";
        break;
      }
      os << ' ' << x.str() << '*' << format_monomial(m);
    }
    throw Mismatch(os.str());
  }
  return rep;
}

/// Same identity after forgetting spectral parameters.
inline VerifyReport verify_classical(const CartanData& cd, const SixTuple& eq) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  const Snake* ss[6] = {&eq.s1, &eq.s2, &eq.s3, &eq.s4, &eq.s5, &eq.s6};
  std::array<ClassicalCharacter, 6> c;
  for (int k = 0; k < 6; ++k) {
    QCharacter q = snake_qchar(cd, ss[k]->p);
    rep.factor_terms[k] = q.size();
    c[k] = restrict_classical(q, cd.n);
  }
  ClassicalCharacter lhs = classical_mul(c[0], c[1]);
  rep.lhs_terms = lhs.t.size();
  ClassicalCharacter rhs = classical_add(classical_mul(c[2], c[3]), classical_mul(c[4], c[5]));
  std::size_t diff = 0;
  for (const auto& [m, x] : lhs.t) {
    auto it = rhs.t.find(m);
    if (it == rhs.t.end() || it->second != x) ++diff;
  }
  for (const auto& [m, x] : rhs.t)
    if (!lhs.t.count(m)) ++diff;
  rep.diff_terms = diff;
  rep.ok = lhs == rhs;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

struct DominantReport {
  bool ok = false;
  bool ok_12 = false, ok_34 = false, ok_56 = false;
  std::vector<YMonomial> expected_12, actual_12;
  std::vector<YMonomial> expected_34, actual_34;
  std::vector<YMonomial> expected_56, actual_56;
};

namespace detail {

inline std::vector<YMonomial> dominant_set(const QCharacter& prod) {
  std::vector<YMonomial> r;
  for (const auto& [m, x] : dominant_terms(prod)) r.push_back(m);
  std::sort(r.begin(), r.end(), CmpDivLess{});
  return r;
}

inline std::vector<YMonomial> ladder(const CartanData& cd, const YMonomial& top, int i1, int t,
                                     int k1, int rmax) {
  std::vector<YMonomial> r;
  const int d1 = cd.sym(i1);
  YMonomial m = top;
  r.push_back(m);
  for (int j = 0; j <= rmax; ++j) {
    m = m * a_monomial(cd, i1, t + 2 * d1 * k1 - 2 * d1 * j - d1).inverse();
    r.push_back(m);
  }
  std::sort(r.begin(), r.end(), CmpDivLess{});
  return r;
}

}  // namespace detail

/// Brute-force dominant monomials of the three products against the closed
/// ladder: the left side carries k1+1 dominants, the first summand k1, the
/// second exactly its top monomial.
inline DominantReport classify_product_dominants(const CartanData& cd, const SixTuple& eq) {
  DominantReport rep;
  const int i1 = eq.spec2.seg.at(0).i, k1 = eq.spec2.seg.at(0).k, t = eq.spec2.t;
  QCharacter c1 = snake_qchar(cd, eq.s1.p), c2 = snake_qchar(cd, eq.s2.p);
  QCharacter c3 = snake_qchar(cd, eq.s3.p), c4 = snake_qchar(cd, eq.s4.p);
  QCharacter c5 = snake_qchar(cd, eq.s5.p), c6 = snake_qchar(cd, eq.s6.p);

  rep.actual_12 = detail::dominant_set(qc_mul(c1, c2));
  rep.actual_34 = detail::dominant_set(qc_mul(c3, c4));
  rep.actual_56 = detail::dominant_set(qc_mul(c5, c6));

  YMonomial top12 = snake_top_monomial(eq.s1) * snake_top_monomial(eq.s2);
  YMonomial top34 = snake_top_monomial(eq.s3) * snake_top_monomial(eq.s4);
  rep.expected_12 = detail::ladder(cd, top12, i1, t, k1, k1 - 1);
  rep.expected_34 = detail::ladder(cd, top34, i1, t, k1, k1 - 2);
  rep.expected_56 = {snake_top_monomial(eq.s5) * snake_top_monomial(eq.s6)};

  rep.ok_12 = rep.actual_12 == rep.expected_12;
  rep.ok_34 = rep.actual_34 == rep.expected_34;
  rep.ok_56 = rep.actual_56 == rep.expected_56;
  rep.ok = rep.ok_12 && rep.ok_34 && rep.ok_56;
  return rep;
}

namespace detail {

inline bool spec_pair_verifies(const CartanData& cd, const SnakeSpec& spec,
                               const SnakeSpec& s1spec) {
  try {
    SixTuple eq;
    eq.spec2 = spec;
    eq.spec1 = s1spec;
    eq.s2 = spec_to_snake(cd, spec);
    eq.s1 = spec_to_snake(cd, s1spec);
    std::tie(eq.s3, eq.s4) = build_S3_S4(cd, spec, s1spec);
    std::tie(eq.s5, eq.s6) = build_S5_S6(cd, spec, s1spec);
    if (!verify_classical(cd, eq).ok) return false;
    return verify_equation(cd, eq, false).ok;
  } catch (const std::exception&) {
    return false;
  }
}

inline std::optional<SnakeSpec> canonical_or_none(const CartanData& cd, const SnakeSpec& cand) {
  try {
    auto pts = spec_to_points(cd, cand);
    if (pts.empty() || !is_snake(cd, pts)) return std::nullopt;
    return snake_to_spec(cd, make_snake(cd, pts));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// Tries single edits of one segment field of `base` (node, multiplicity or
/// gap by one), then pairs of such edits. Returns the unique verifying
/// candidate at the first depth that has exactly one, else nothing.
inline std::optional<SnakeSpec> bounded_search(const CartanData& cd, const SnakeSpec& spec,
                                               const SnakeSpec& base) {
  auto edits_of = [&](const SnakeSpec& s) {
    std::vector<SnakeSpec> out;
    for (size_t l = 0; l < s.seg.size(); ++l)
      for (int f = 0; f < 3; ++f)
        for (int dv : {-1, +1}) {
          SnakeSpec e = s;
          if (f == 0) e.seg[l].i += dv;
          if (f == 1) e.seg[l].k += dv;
          if (f == 2) e.seg[l].j += dv;
          if (e.seg[l].i < 1 || e.seg[l].i > cd.n || e.seg[l].k < 0 || e.seg[l].j < 0) continue;
          if (f == 2 && l + 1 == s.seg.size()) continue;
          out.push_back(std::move(e));
        }
    return out;
  };

  auto survivors_in = [&](const std::vector<SnakeSpec>& cands) {
    std::vector<SnakeSpec> found;
    std::set<std::string> seen;
    for (const auto& cand : cands) {
      auto canon = detail::canonical_or_none(cd, cand);
      if (!canon) continue;
      if (!seen.insert(spec_to_json(*canon).dump()).second) continue;
      if (detail::spec_pair_verifies(cd, spec, *canon)) found.push_back(*canon);
    }
    return found;
  };

  std::vector<SnakeSpec> singles = edits_of(base);
  auto hit = survivors_in(singles);
  if (hit.size() == 1) return hit[0];
  if (hit.size() > 1) return std::nullopt;

  std::vector<SnakeSpec> pairs;
  for (const auto& s : singles) {
    auto more = edits_of(s);
    pairs.insert(pairs.end(), more.begin(), more.end());
  }
  hit = survivors_in(pairs);
  if (hit.size() == 1) return hit[0];
  return std::nullopt;
}

}  // namespace detail

/// Searches for the S1 spec that makes the equation verify. The verbatim
/// table row is preferred; if it fails, bounded edits of it are tried.
inline std::optional<SnakeSpec> solve_S1(const CartanData& cd, const SnakeSpec& spec) {
  try {
    detail::require_canonical_spec(cd, spec);
    if (!is_prime_snake(cd, spec_to_snake(cd, spec))) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }

  SnakeSpec base;
  try {
    base = detail::build_S1_traced(cd, spec).first;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (detail::spec_pair_verifies(cd, spec, base)) return base;
  return detail::bounded_search(cd, spec, base);
}

/// One printed equation: factor monomial texts separated by '*', sides by
/// '=', summands by '+'. A bare "1" denotes an empty snake.
struct FixtureEquation {
  std::array<Snake, 6> s;
};

inline FixtureEquation parse_fixture_line(const CartanData& cd, const std::string& line) {
  auto eqpos = line.find('=');
  if (eqpos == std::string::npos) throw std::invalid_argument("fixture line: missing '='");
  std::string lhs = line.substr(0, eqpos);
  std::string rhs = line.substr(eqpos + 1);
  auto pluspos = rhs.find('+');
  if (pluspos == std::string::npos) throw std::invalid_argument("fixture line: missing '+'");
  std::string first = rhs.substr(0, pluspos);
  std::string second = rhs.substr(pluspos + 1);
  auto split2 = [&](const std::string& part) {
    auto star = part.find('*');
    if (star == std::string::npos) throw std::invalid_argument("fixture line: missing '*'");
    return std::pair<std::string, std::string>(part.substr(0, star), part.substr(star + 1));
  };
  auto [a, b] = split2(lhs);
  auto [c, d] = split2(first);
  auto [e, f] = split2(second);
  FixtureEquation fx;
  fx.s = {parse_snake(cd, a), parse_snake(cd, b), parse_snake(cd, c),
          parse_snake(cd, d), parse_snake(cd, e), parse_snake(cd, f)};
  return fx;
}

inline std::vector<FixtureEquation> load_fixtures(const CartanData& cd, std::istream& in) {
  std::vector<FixtureEquation> r;
  std::string line;
  while (std::getline(in, line)) {
    auto ns = line.find_first_not_of(" \t\r");
    if (ns == std::string::npos || line[ns] == '#') continue;
    r.push_back(parse_fixture_line(cd, line));
  }
  return r;
}

inline std::string format_fixture_line(const FixtureEquation& fx) {
  auto one = [](const Snake& s) { return s.p.empty() ? std::string("1") : format_snake(s); };
  std::ostringstream os;
  os << one(fx.s[0]) << " * " << one(fx.s[1]) << " = " << one(fx.s[2]) << " * " << one(fx.s[3])
     << " + " << one(fx.s[4]) << " * " << one(fx.s[5]);
  return os.str();
}

}  // namespace snakechar

#endif
