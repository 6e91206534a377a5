#ifndef SNAKECHAR_QCHAR_HPP
#define SNAKECHAR_QCHAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"

namespace snakechar {

using BigInt = boost::multiprecision::cpp_int;

constexpr int kNoCutoff = INT32_MIN / 2;

/// Exact integer linear combination of Laurent monomials.
struct QCharacter {
  std::unordered_map<YMonomial, BigInt, YMonomialHash> t;

  static QCharacter unit() {
    QCharacter c;
    c.t.emplace(YMonomial::unit(), 1);
    return c;
  }

  static QCharacter from(const YMonomial& m, BigInt c = 1) {
    QCharacter q;
    if (c != 0) q.t.emplace(m, std::move(c));
    return q;
  }

  bool is_zero() const { return t.empty(); }
  size_t size() const { return t.size(); }

  void add_term(const YMonomial& m, const BigInt& c) {
    if (c == 0) return;
    auto it = t.find(m);
    if (it == t.end()) {
      t.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

  BigInt coeff(const YMonomial& m) const {
    auto it = t.find(m);
    return it == t.end() ? BigInt(0) : it->second;
  }

  QCharacter& operator+=(const QCharacter& o) {
    for (const auto& [m, c] : o.t) add_term(m, c);
    return *this;
  }

  QCharacter& operator-=(const QCharacter& o) {
    for (const auto& [m, c] : o.t) add_term(m, -c);
    return *this;
  }

  /// Terms sorted ascending in the division order; deterministic output order.
  std::vector<std::pair<YMonomial, BigInt>> sorted_terms() const {
    std::vector<std::pair<YMonomial, BigInt>> r(t.begin(), t.end());
    std::sort(r.begin(), r.end(),
              [](const auto& a, const auto& b) { return cmp_div(a.first, b.first) < 0; });
    return r;
  }

  friend bool operator==(const QCharacter& a, const QCharacter& b) {
    if (a.t.size() != b.t.size()) return false;
    for (const auto& [m, c] : a.t) {
      auto it = b.t.find(m);
      if (it == b.t.end() || it->second != c) return false;
    }
    return true;
  }
};

/// Product. Monomials whose minimum spectral parameter falls below cutoff are
/// dropped; with the default cutoff nothing is dropped.
inline QCharacter qc_mul(const QCharacter& a, const QCharacter& b, int cutoff = kNoCutoff) {
  const QCharacter& outer = a.size() <= b.size() ? a : b;
  const QCharacter& inner = a.size() <= b.size() ? b : a;
  QCharacter r;
  r.t.reserve(outer.size() * inner.size() / 4 + 16);
  for (const auto& [ma, ca] : outer.t)
    for (const auto& [mb, cb] : inner.t) {
      YMonomial m = ma * mb;
      if (cutoff != kNoCutoff && !m.is_unit() && m.min_param() < cutoff) continue;
      r.add_term(m, ca * cb);
    }
  return r;
}

inline QCharacter qc_scale(const QCharacter& a, const BigInt& c) {
  QCharacter r;
  if (c == 0) return r;
  r.t.reserve(a.size());
  for (const auto& [m, x] : a.t) r.t.emplace(m, x * c);
  return r;
}

/// Exact division in the Laurent polynomial ring. Leading-term elimination in
/// the division order; throws InexactDivision when num is not a multiple of
/// den (caught by coefficient divisibility, by the quotient candidate falling
/// under trail(num)/trail(den), or by the step cap).
inline QCharacter qc_div_exact(const QCharacter& num, const QCharacter& den) {
  if (den.is_zero()) throw std::invalid_argument("qc_div_exact: zero divisor");
  QCharacter q;
  if (num.is_zero()) return q;

  std::map<YMonomial, BigInt, CmpDivLess> rem(num.t.begin(), num.t.end());
  auto den_lead = den.t.begin();
  auto den_trail = den.t.begin();
  for (auto it = den.t.begin(); it != den.t.end(); ++it) {
    if (cmp_div(it->first, den_lead->first) > 0) den_lead = it;
    if (cmp_div(it->first, den_trail->first) < 0) den_trail = it;
  }
  const YMonomial den_lead_inv = den_lead->first.inverse();
  const YMonomial trail_bound = rem.begin()->first * den_trail->first.inverse();

  const size_t cap = 4 * (num.size() / den.size() + 1) * (den.size() + 4) + num.size() + 64;
  for (size_t step = 0; !rem.empty(); ++step) {
    if (step > cap) throw InexactDivision("qc_div_exact: step cap exceeded");
    auto lead = std::prev(rem.end());
    BigInt c = lead->second / den_lead->second;
    if (c * den_lead->second != lead->second)
      throw InexactDivision("qc_div_exact: coefficient not divisible");
    YMonomial qm = lead->first * den_lead_inv;
    if (cmp_div(qm, trail_bound) < 0)
      throw InexactDivision("qc_div_exact: candidate below trail bound");
    q.t.emplace(qm, c);
    for (const auto& [dm, dc] : den.t) {
      YMonomial m = qm * dm;
      auto it = rem.find(m);
      BigInt add = c * dc;
      if (it == rem.end()) {
        rem.emplace(std::move(m), -add);
      } else {
        it->second -= add;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return q;
}

/// Dominant monomials with coefficients, sorted descending in the division order.
inline std::vector<std::pair<YMonomial, BigInt>> dominant_terms(const QCharacter& c) {
  std::vector<std::pair<YMonomial, BigInt>> r;
  for (const auto& [m, x] : c.t)
    if (is_dominant(m)) r.emplace_back(m, x);
  std::sort(r.begin(), r.end(),
            [](const auto& a, const auto& b) { return cmp_div(a.first, b.first) > 0; });
  return r;
}

/// Classical weight monomial: exponent of y_i at index i, 1-based, trailing rank fixed.
using ClassicalMonomial = std::vector<int>;

struct ClassicalCharacter {
  int n = 0;
  std::map<ClassicalMonomial, BigInt> t;

  friend bool operator==(const ClassicalCharacter&, const ClassicalCharacter&) = default;
};

/// Forgets spectral parameters: Y_{i,s} -> y_i.
inline ClassicalCharacter restrict_classical(const QCharacter& c, int n) {
  ClassicalCharacter r;
  r.n = n;
  for (const auto& [m, x] : c.t) {
    ClassicalMonomial w(n + 1, 0);
    for (const auto& e : m.v) {
      if (e.i < 1 || e.i > n) throw std::invalid_argument("restrict_classical: node out of range");
      w[e.i] += e.e;
    }
    auto [it, fresh] = r.t.emplace(std::move(w), x);
    if (!fresh) {
      it->second += x;
      if (it->second == 0) r.t.erase(it);
    }
  }
  return r;
}

inline ClassicalCharacter classical_mul(const ClassicalCharacter& a, const ClassicalCharacter& b) {
  if (a.n != b.n) throw std::invalid_argument("classical_mul: rank mismatch");
  ClassicalCharacter r;
  r.n = a.n;
  for (const auto& [ma, ca] : a.t)
    for (const auto& [mb, cb] : b.t) {
      ClassicalMonomial w(ma.size());
      for (size_t k = 0; k < w.size(); ++k) w[k] = ma[k] + mb[k];
      auto [it, fresh] = r.t.emplace(std::move(w), ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) r.t.erase(it);
      }
    }
  return r;
}

inline ClassicalCharacter classical_add(const ClassicalCharacter& a, const ClassicalCharacter& b) {
  if (a.n != b.n) throw std::invalid_argument("classical_add: rank mismatch");
  ClassicalCharacter r = a;
  for (const auto& [m, c] : b.t) {
    auto [it, fresh] = r.t.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) r.t.erase(it);
    }
  }
  return r;
}

struct TsaReport {
  bool thin = false;
  bool special = false;
  bool anti_special = false;
  size_t n_dominant = 0;
  size_t n_antidominant = 0;
  BigInt max_coeff = 0;
};

inline TsaReport tsa_report(const QCharacter& c) {
  TsaReport r;
  r.thin = true;
  for (const auto& [m, x] : c.t) {
    BigInt a = x < 0 ? BigInt(-x) : x;
    if (a > r.max_coeff) r.max_coeff = a;
    if (x != 1) r.thin = false;
    if (is_dominant(m)) ++r.n_dominant;
    if (is_antidominant(m)) ++r.n_antidominant;
  }
  r.special = r.n_dominant == 1;
  r.anti_special = r.n_antidominant == 1;
  return r;
}

}  // namespace snakechar

#endif
