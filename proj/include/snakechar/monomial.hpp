#ifndef SNAKECHAR_MONOMIAL_HPP
#define SNAKECHAR_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cartan.hpp"

namespace snakechar {

/// One variable Y_{i,s} raised to exponent e (e != 0 when stored).
struct VarEntry {
  int32_t i;
  int32_t s;
  int32_t e;

  friend bool operator==(const VarEntry&, const VarEntry&) = default;
};

/// Position order used both for storage and, read backwards, as the variable
/// order of the division monomial order: primary key s, secondary key i.
inline bool pos_less(int32_t i1, int32_t s1, int32_t i2, int32_t s2) {
  return s1 != s2 ? s1 < s2 : i1 < i2;
}

/// Laurent monomial in the variables Y_{i,s}. Entries are sorted by (s, i)
/// and carry nonzero exponents; the empty vector is the unit monomial.
struct YMonomial {
  std::vector<VarEntry> v;

  static YMonomial unit() { return {}; }

  static YMonomial var(int i, int s, int e = 1) {
    YMonomial m;
    if (e != 0) m.v.push_back({(int32_t)i, (int32_t)s, (int32_t)e});
    return m;
  }

  bool is_unit() const { return v.empty(); }

  int exponent(int i, int s) const {
    for (const auto& x : v)
      if (x.i == i && x.s == s) return x.e;
    return 0;
  }

  int min_param() const {
    if (v.empty()) throw std::invalid_argument("min_param of unit monomial");
    return v.front().s;
  }

  int max_param() const {
    if (v.empty()) throw std::invalid_argument("max_param of unit monomial");
    return v.back().s;
  }

  YMonomial inverse() const {
    YMonomial r = *this;
    for (auto& x : r.v) x.e = -x.e;
    return r;
  }

  YMonomial pow(int k) const {
    if (k == 0) return unit();
    YMonomial r = *this;
    for (auto& x : r.v) x.e *= k;
    return r;
  }

  friend bool operator==(const YMonomial&, const YMonomial&) = default;
};

inline YMonomial operator*(const YMonomial& a, const YMonomial& b) {
  YMonomial r;
  r.v.reserve(a.v.size() + b.v.size());
  size_t ia = 0, ib = 0;
  while (ia < a.v.size() && ib < b.v.size()) {
    const auto& x = a.v[ia];
    const auto& y = b.v[ib];
    if (x.s == y.s && x.i == y.i) {
      int32_t e = x.e + y.e;
      if (e != 0) r.v.push_back({x.i, x.s, e});
      ++ia, ++ib;
    } else if (pos_less(x.i, x.s, y.i, y.s)) {
      r.v.push_back(x);
      ++ia;
    } else {
      r.v.push_back(y);
      ++ib;
    }
  }
  r.v.insert(r.v.end(), a.v.begin() + ia, a.v.end());
  r.v.insert(r.v.end(), b.v.begin() + ib, b.v.end());
  return r;
}

struct YMonomialHash {
  size_t operator()(const YMonomial& m) const {
    uint64_t h = 1469598103934665603ull;
    for (const auto& x : m.v) {
      uint64_t w = (uint64_t)(uint32_t)x.i;
      w = w << 21 ^ (uint64_t)(uint32_t)x.s;
      w = w << 21 ^ (uint64_t)(uint32_t)x.e;
      h = (h ^ w) * 1099511628211ull;
      h ^= h >> 29;
    }
    return (size_t)h;
  }
};

/// Division order: lexicographic comparison of exponent vectors scanning the
/// variables from the greatest (s, i) position downward. Translation invariant,
/// so leading terms are multiplicative. Returns -1, 0, 1.
inline int cmp_div(const YMonomial& a, const YMonomial& b) {
  auto ia = a.v.rbegin(), ib = b.v.rbegin();
  while (ia != a.v.rend() || ib != b.v.rend()) {
    if (ib == b.v.rend()) return ia->e > 0 ? 1 : -1;
    if (ia == a.v.rend()) return ib->e > 0 ? -1 : 1;
    if (ia->s == ib->s && ia->i == ib->i) {
      if (ia->e != ib->e) return ia->e > ib->e ? 1 : -1;
      ++ia, ++ib;
    } else if (pos_less(ib->i, ib->s, ia->i, ia->s)) {
      return ia->e > 0 ? 1 : -1;
    } else {
      return ib->e > 0 ? -1 : 1;
    }
  }
  return 0;
}

struct CmpDivLess {
  bool operator()(const YMonomial& a, const YMonomial& b) const { return cmp_div(a, b) < 0; }
};

enum class Dominance { Dominant, AntiDominant, Both, Neither };

inline Dominance classify(const YMonomial& m) {
  bool pos = false, neg = false;
  for (const auto& x : m.v) (x.e > 0 ? pos : neg) = true;
  if (!neg && !pos) return Dominance::Both;
  if (!neg) return Dominance::Dominant;
  if (!pos) return Dominance::AntiDominant;
  return Dominance::Neither;
}

inline bool is_dominant(const YMonomial& m) {
  auto c = classify(m);
  return c == Dominance::Dominant || c == Dominance::Both;
}

inline bool is_antidominant(const YMonomial& m) {
  auto c = classify(m);
  return c == Dominance::AntiDominant || c == Dominance::Both;
}

/// True when every variable at the greatest spectral parameter of m has a
/// negative exponent. The unit monomial is rejected.
inline bool is_right_negative(const YMonomial& m) {
  if (m.v.empty()) throw std::invalid_argument("is_right_negative of unit monomial");
  int32_t top = m.v.back().s;
  for (auto it = m.v.rbegin(); it != m.v.rend() && it->s == top; ++it)
    if (it->e > 0) return false;
  return true;
}

/// A_{i,s} expressed in the integer-parameter variables:
/// Y_{i,s+d_i} Y_{i,s-d_i} times Y_{j,s}^-1 over neighbors with C_ji = -1 and
/// Y_{j,s+1}^-1 Y_{j,s-1}^-1 over neighbors with C_ji = -2.
inline YMonomial a_monomial(const CartanData& cd, int i, int s) {
  if (!cd.valid_node(i)) throw std::invalid_argument("a_monomial: bad node");
  YMonomial r = YMonomial::var(i, s + cd.d[i]) * YMonomial::var(i, s - cd.d[i]);
  for (int j = 1; j <= cd.n; ++j) {
    if (j == i) continue;
    switch (cd.C[j][i]) {
      case 0:
        break;
      case -1:
        r = r * YMonomial::var(j, s, -1);
        break;
      case -2:
        r = r * YMonomial::var(j, s + 1, -1) * YMonomial::var(j, s - 1, -1);
        break;
      default:
        throw std::logic_error("a_monomial: unexpected Cartan entry");
    }
  }
  return r;
}

/// Nakajima order: m <= mp iff mp * m^-1 is a product of A_{i,s} with
/// nonnegative exponents. Decided by eliminating the top variable of the
/// ratio, which forces the generator A_{i,s-d_i}; a generator whose lower
/// Y_{i,s-2d_i} falls under the minimum parameter of the original ratio can
/// never occur in a valid decomposition.
inline bool leq(const CartanData& cd, const YMonomial& m, const YMonomial& mp) {
  YMonomial r = mp * m.inverse();
  if (r.is_unit()) return true;
  const int s_min = r.min_param();
  const int s_max = r.max_param();
  const long cap = (long)cd.n * (s_max - s_min + 3) + 8;
  for (long step = 0; step < cap; ++step) {
    if (r.is_unit()) return true;
    const VarEntry top = r.v.back();
    if (top.e < 0) return false;
    if (!cd.valid_node(top.i)) return false;
    if (top.s - 2 * cd.d[top.i] < s_min) return false;
    r = r * a_monomial(cd, top.i, top.s - cd.d[top.i]).pow(-top.e);
  }
  throw std::logic_error("leq: elimination did not terminate");
}

}  // namespace snakechar

#endif
