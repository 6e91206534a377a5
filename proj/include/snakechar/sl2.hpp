#ifndef SNAKECHAR_SL2_HPP
#define SNAKECHAR_SL2_HPP

#include <vector>

#include "qchar.hpp"

namespace snakechar {

/// String of length k centered at s: parameters s-k+1, s-k+3, ..., s+k-1.
struct QString {
  int k;
  int s;

  int lo() const { return s - k + 1; }
  int hi() const { return s + k - 1; }

  friend bool operator==(const QString&, const QString&) = default;
};

/// chi_q of the sl2 Kirillov-Reshetikhin module W_k^{(s)}: k+1 terms,
/// term p = prod_{r<=p} Y_{s-k-1+2r} * prod_{r>p} Y_{s-k+1+2r}^-1.
inline QCharacter kr_qchar_sl2(int k, int s) {
  if (k < 0) throw std::invalid_argument("kr_qchar_sl2: negative length");
  QCharacter c;
  for (int p = 0; p <= k; ++p) {
    YMonomial m;
    for (int r = 1; r <= p; ++r) m = m * YMonomial::var(1, s - k - 1 + 2 * r);
    for (int r = p + 1; r <= k; ++r) m = m * YMonomial::var(1, s - k + 1 + 2 * r, -1);
    c.add_term(m, 1);
  }
  return c;
}

/// Two strings are in general position when their union is not a string or
/// one contains the other.
inline bool in_general_position(const QString& a, const QString& b) {
  if (a.k == 0 || b.k == 0) return true;
  if (((a.s + a.k) & 1) != ((b.s + b.k) & 1)) return true;
  const QString& lo = a.lo() <= b.lo() ? a : b;
  const QString& hi = a.lo() <= b.lo() ? b : a;
  if (hi.hi() <= lo.hi()) return true;
  return hi.lo() > lo.hi() + 2;
}

/// Unique factorization of a dominant sl2 monomial (node-1 variables, all
/// exponents positive) into strings pairwise in general position. Greedy from
/// the greatest parameter downward.
inline std::vector<QString> decompose_strings(const YMonomial& m) {
  std::map<int, int> mult;
  for (const auto& x : m.v) {
    if (x.i != 1) throw std::invalid_argument("decompose_strings: not an sl2 monomial");
    if (x.e < 0) throw std::invalid_argument("decompose_strings: not dominant");
    mult[x.s] = x.e;
  }
  std::vector<QString> out;
  while (!mult.empty()) {
    int hi = mult.rbegin()->first;
    int lo = hi;
    while (true) {
      auto it = mult.find(lo);
      if (it == mult.end()) break;
      if (--it->second == 0) mult.erase(it);
      lo -= 2;
    }
    lo += 2;
    out.push_back({(hi - lo) / 2 + 1, (hi + lo) / 2});
  }
  return out;
}

/// chi_q of the simple sl2 module with the given dominant highest monomial.
inline QCharacter sl2_qchar(const YMonomial& m) {
  QCharacter c = QCharacter::unit();
  for (const auto& str : decompose_strings(m)) c = qc_mul(c, kr_qchar_sl2(str.k, str.s));
  return c;
}

/// Keeps only node-j variables, renumbered to node 1, parameters unchanged.
inline YMonomial beta_project(const YMonomial& m, int j) {
  YMonomial r;
  for (const auto& x : m.v)
    if (x.i == j) r.v.push_back({1, x.s, x.e});
  return r;
}

/// Lift of the node-i sl2 character of m: m times the lift of each sl2 term,
/// with sl2 A-positions a mapped to a_monomial(cd, i, rho + a * d_i).
inline QCharacter phi(const CartanData& cd, int i, const YMonomial& m) {
  YMonomial mi = beta_project(m, i);
  for (const auto& x : mi.v)
    if (x.e < 0) throw std::invalid_argument("phi: monomial not i-dominant");
  if (mi.is_unit()) return QCharacter::from(m);

  const int d = cd.d[i];
  const int rho = ((mi.v.front().s % d) + d) % d;
  YMonomial scaled;
  for (const auto& x : mi.v) {
    if (((x.s % d) + d) % d != rho) throw std::invalid_argument("phi: mixed parameter residues");
    scaled.v.push_back({1, (x.s - rho) / d, x.e});
  }

  QCharacter acc = QCharacter::unit();
  for (const auto& str : decompose_strings(scaled)) {
    QCharacter factor;
    for (int p = 0; p <= str.k; ++p) {
      YMonomial f;
      for (int r = p + 1; r <= str.k; ++r)
        f = f * a_monomial(cd, i, rho + (str.s - str.k + 2 * r) * d).inverse();
      factor.add_term(f, 1);
    }
    acc = qc_mul(acc, factor);
  }

  QCharacter out;
  out.t.reserve(acc.size());
  for (const auto& [mm, c] : acc.t) out.t.emplace(m * mm, c);
  return out;
}

inline bool is_i_dominant(const YMonomial& m, int i) {
  for (const auto& x : m.v)
    if (x.i == i && x.e < 0) return false;
  return true;
}

/// Decomposition of a character as a nonnegative combination of phi-lifts of
/// its i-dominant monomials. Throws NegativeMultiplicity on a negative leading
/// coefficient and Mismatch when a non-i-dominant remainder survives.
inline std::vector<std::pair<YMonomial, BigInt>> i_decomposition(const CartanData& cd,
                                                                 const QCharacter& c, int i) {
  QCharacter rem = c;
  std::vector<std::pair<YMonomial, BigInt>> out;
  while (!rem.is_zero()) {
    const YMonomial* best = nullptr;
    for (const auto& [m, x] : rem.t)
      if (is_i_dominant(m, i) && (!best || cmp_div(m, *best) > 0)) best = &m;
    if (!best) throw Mismatch("i_decomposition: remainder has no i-dominant monomial");
    BigInt lambda = rem.t.at(*best);
    if (lambda < 0) throw NegativeMultiplicity("i_decomposition: negative multiplicity");
    YMonomial mono = *best;
    rem -= qc_scale(phi(cd, i, mono), lambda);
    out.emplace_back(std::move(mono), std::move(lambda));
  }
  return out;
}

}  // namespace snakechar

#endif
