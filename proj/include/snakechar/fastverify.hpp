#ifndef SNAKECHAR_FASTVERIFY_HPP
#define SNAKECHAR_FASTVERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "qchar.hpp"

namespace snakechar {

/// Exact zero test for signed sums of products of sparse Laurent polynomials,
/// tuned for factors with small coefficients. Monomial exponents are packed
/// into fixed bit fields sized from the actual supports, so a product monomial
/// is the plain integer sum of two packed keys and no per-pair allocation or
/// bignum work happens. Fields never straddle a 64-bit word boundary and every
/// word keeps at least one spare bit, so word sums never carry between words.
/// Work is partitioned by an additive slice id drawn from the leading fields;
/// every slice is accumulated in an open-addressing table that must cancel
/// identically. An id collision merely merges two slices into one table and
/// never conflates distinct monomials. The test is exact, not probabilistic.

namespace fvdetail {

constexpr uint64_t kHashMul[8] = {0x9e3779b97f4a7c15ull, 0xc2b2ae3d27d4eb4full,
                                  0x165667b19e3779f9ull, 0xd6e8feb86659fd93ull,
                                  0xa0761d6478bd642full, 0xe7037ed1a0b428dbull,
                                  0x8ebc6af09c88c6e3ull, 0x589965cc75374cc3ull};

/// Open-addressing accumulator with the key stored inline in the slot, W key
/// words plus the running count. The first stored key word is offset by one so
/// that zero marks an empty slot; packed words keep a spare bit, so the offset
/// never wraps. Counts use wrapping uint64 arithmetic, which agrees with int64
/// addition bit for bit; the caller guards against true overflow.
template <int W>
class PairTable {
 public:
  PairTable() { resize(10); }

  void clear() {
    const size_t prev = size_;
    if (logcap_ > 12 && (prev << 3) < cap()) {
      size_ = 0;
      slot_of_.clear();
      int want = 10;
      while ((1ull << want) < prev * 4) ++want;
      resize(want);
    } else {
      for (uint32_t s : slot_of_) slots_[(size_t)s * kStride] = 0;
      size_ = 0;
      slot_of_.clear();
    }
  }

  void prefetch(uint64_t h) const {
    __builtin_prefetch(slots_.data() + ((h * 0xff51afd7ed558ccdull) >> shift_) * kStride);
  }

  /// h must equal the sum over words of key[w] * kHashMul[w]; resize() relies
  /// on recomputing the identical value from the stored key.
  void add(const uint64_t* key, uint64_t h, int64_t c) {
    if ((size_ + 1) * 10 > cap() * 7) grow();
    size_t idx = (h * 0xff51afd7ed558ccdull) >> shift_;
    const uint64_t k0 = key[0] + 1;
    for (;;) {
      uint64_t* s = slots_.data() + idx * kStride;
      if (s[0] == k0 && std::equal(key + 1, key + W, s + 1)) {
        s[W] += (uint64_t)c;
        return;
      }
      if (s[0] == 0) {
        s[0] = k0;
        std::copy(key + 1, key + W, s + 1);
        s[W] = (uint64_t)c;
        ++size_;
        slot_of_.push_back((uint32_t)idx);
        return;
      }
      idx = (idx + 1) & (cap() - 1);
    }
  }

  bool all_zero() const {
    for (uint32_t s : slot_of_)
      if (slots_[(size_t)s * kStride + W] != 0) return false;
    return true;
  }

  size_t distinct() const { return size_; }

 private:
  static constexpr size_t kStride = W + 1;

  size_t cap() const { return 1ull << logcap_; }

  void resize(int logcap) {
    std::vector<uint64_t> old;
    old.reserve(size_ * kStride);
    for (uint32_t s : slot_of_)
      old.insert(old.end(), slots_.begin() + (size_t)s * kStride,
                 slots_.begin() + (size_t)s * kStride + kStride);
    logcap_ = logcap;
    shift_ = 64 - logcap;
    slots_.assign(cap() * kStride, 0);
    slot_of_.clear();
    size_ = 0;
    for (size_t e = 0; e < old.size(); e += kStride) {
      uint64_t key0 = old[e] - 1;
      uint64_t h = key0 * kHashMul[0];
      for (int w = 1; w < W; ++w) h += old[e + w] * kHashMul[w];
      size_t idx = (h * 0xff51afd7ed558ccdull) >> shift_;
      while (slots_[idx * kStride] != 0) idx = (idx + 1) & (cap() - 1);
      std::copy(old.begin() + e, old.begin() + e + kStride, slots_.begin() + idx * kStride);
      slot_of_.push_back((uint32_t)idx);
      ++size_;
    }
  }

  void grow() { resize(logcap_ + 1); }

  int logcap_ = 0;
  int shift_ = 0;
  size_t size_ = 0;
  std::vector<uint64_t> slots_;
  std::vector<uint32_t> slot_of_;
};

inline int64_t small_coeff(const BigInt& c) {
  if (c > 1000000 || c < -1000000)
    throw std::invalid_argument("fast_verify: factor coefficient too large");
  return c.convert_to<int64_t>();
}

}  // namespace fvdetail

struct FastVerifyStats {
  bool ok = false;
  uint64_t pairs = 0;
  uint64_t slices = 0;
  uint64_t peak_slice = 0;
  double seconds = 0.0;
};

/// Verifies sum over p of sign_p * (A_p * B_p) == 0, exactly. `group_limit`
/// bounds the slice-group count per packed factor; smaller values mean coarser
/// slicing (fewer, larger accumulation tables).
inline FastVerifyStats fast_verify_zero(
    const std::vector<std::tuple<const QCharacter*, const QCharacter*, int>>& prods_in,
    size_t group_limit = 6000) {
  using namespace fvdetail;
  const auto t_start = std::chrono::steady_clock::now();
  FastVerifyStats st;

  // Inner accumulation loops run over the second factor of each product, so
  // keep the larger factor there; swapping is sound since A*B == B*A.
  auto prods = prods_in;
  for (auto& [a, b, sign] : prods) {
    (void)sign;
    if (a->size() > b->size()) std::swap(a, b);
  }
  const size_t np = prods.size();

  std::vector<const QCharacter*> factors;
  for (const auto& [a, b, sign] : prods) {
    (void)sign;
    factors.push_back(a);
    factors.push_back(b);
  }

  uint64_t total_pairs = 0;
  for (size_t p = 0; p < np; ++p)
    total_pairs += (uint64_t)factors[2 * p]->size() * factors[2 * p + 1]->size();
  if (total_pairs == 0) {
    st.ok = true;
    st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return st;
  }

  // Global variable table, ids in (s, i) order.
  std::map<std::pair<int32_t, int32_t>, size_t> vindex;
  for (const QCharacter* f : factors)
    for (const auto& [m, c] : f->t)
      for (const auto& e : m.v) vindex.emplace(std::make_pair(e.s, e.i), vindex.size());
  const size_t nv = vindex.size();

  // Per-factor exponent ranges (0 participates whenever a term omits the
  // variable, which the initial 0 covers).
  std::vector<std::vector<int32_t>> fmin(factors.size()), fmax(factors.size());
  for (size_t fi = 0; fi < factors.size(); ++fi) {
    fmin[fi].assign(nv, 0);
    fmax[fi].assign(nv, 0);
    for (const auto& [m, c] : factors[fi]->t)
      for (const auto& e : m.v) {
        size_t v = vindex.at({e.s, e.i});
        fmin[fi][v] = std::min(fmin[fi][v], e.e);
        fmax[fi][v] = std::max(fmax[fi][v], e.e);
      }
  }

  // Global per-variable range over the product sums.
  std::vector<int32_t> glo(nv, INT32_MAX), ghi(nv, INT32_MIN);
  for (size_t p = 0; p < np; ++p)
    for (size_t v = 0; v < nv; ++v) {
      glo[v] = std::min(glo[v], fmin[2 * p][v] + fmin[2 * p + 1][v]);
      ghi[v] = std::max(ghi[v], fmax[2 * p][v] + fmax[2 * p + 1][v]);
    }

  // Field layout: widest ranges first, 63 usable bits per word so that the
  // stored-key offset never wraps.
  std::vector<size_t> order;
  for (size_t v = 0; v < nv; ++v)
    if (ghi[v] > glo[v]) order.push_back(v);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return ghi[a] - glo[a] > ghi[b] - glo[b]; });
  struct Field {
    size_t var;
    int word, shift, bits;
  };
  std::vector<Field> fields;
  int W = 1;
  {
    int word = 0, used = 0;
    for (size_t v : order) {
      int bits = 1;
      while ((int64_t(1) << bits) <= (int64_t)(ghi[v] - glo[v])) ++bits;
      if (used + bits > 63) {
        ++word;
        used = 0;
        if (word >= 8) throw std::invalid_argument("fast_verify: key exceeds 8 words");
      }
      fields.push_back({v, word, used, bits});
      used += bits;
    }
    W = word + 1;
  }

  // Coefficient magnitude guard: the largest absolute value any accumulated
  // count can reach must stay clear of int64 overflow.
  {
    double worst_abs = 0;
    for (size_t p = 0; p < np; ++p) {
      int64_t ca = 1, cb = 1;
      for (const auto& [m, c] : factors[2 * p]->t) ca = std::max(ca, std::abs(small_coeff(c)));
      for (const auto& [m, c] : factors[2 * p + 1]->t) cb = std::max(cb, std::abs(small_coeff(c)));
      worst_abs += 2.0 * (double)ca * (double)cb *
                   (double)((uint64_t)factors[2 * p]->size() * factors[2 * p + 1]->size());
    }
    if (worst_abs >= 9.0e18)
      throw std::invalid_argument("fast_verify: accumulated counts could overflow");
  }

  // Pack each side. The a side of product p absorbs the offset
  // (fmin_a + fmin_b - glo), so key_a + key_b packs (e_a + e_b - glo) field by
  // field with no carries.
  std::vector<std::vector<uint64_t>> raw_keys(factors.size());
  std::vector<std::vector<int64_t>> raw_coeff(factors.size());
  {
    std::vector<int32_t> ev(nv);
    for (size_t fi = 0; fi < factors.size(); ++fi) {
      const size_t partner = fi ^ 1;
      const bool first = (fi % 2) == 0;
      const QCharacter* f = factors[fi];
      const size_t n = f->size();
      raw_keys[fi].assign((size_t)n * W, 0);
      raw_coeff[fi].resize(n);
      size_t i = 0;
      for (const auto& [m, c] : f->t) {
        for (size_t v = 0; v < nv; ++v) ev[v] = 0;
        for (const auto& e : m.v) ev[vindex.at({e.s, e.i})] = e.e;
        uint64_t* k = raw_keys[fi].data() + i * W;
        for (const Field& fd : fields) {
          int64_t base = first ? (int64_t)fmin[partner][fd.var] - glo[fd.var]
                               : -(int64_t)fmin[fi][fd.var];
          k[fd.word] |= (uint64_t)(ev[fd.var] + base) << fd.shift;
        }
        raw_coeff[fi][i] = small_coeff(c);
        ++i;
      }
    }
  }

  // Slice id = sum over words of (key & mask) * odd multiplier, which is
  // additive because field sums never carry. The mask takes leading fields
  // while every side stays within `group_limit` distinct ids.
  std::vector<uint64_t> word_mask(W, 0);
  {
    std::vector<size_t> scan_order(factors.size());
    for (size_t fi = 0; fi < factors.size(); ++fi) scan_order[fi] = fi;
    std::sort(scan_order.begin(), scan_order.end(),
              [&](size_t a, size_t b) { return factors[a]->size() > factors[b]->size(); });
    std::vector<uint64_t> trial(W, 0), sids;
    for (size_t nf = 1; nf <= fields.size(); ++nf) {
      const Field& fd = fields[nf - 1];
      trial[fd.word] |= ((fd.bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << fd.bits) - 1))
                        << fd.shift;
      size_t worst = 0;
      for (size_t fi : scan_order) {
        const auto& keys = raw_keys[fi];
        const size_t n = raw_coeff[fi].size();
        sids.clear();
        sids.reserve(n);
        for (size_t i = 0; i < n; ++i) {
          uint64_t s = 0;
          for (int w = 0; w < W; ++w) s += (keys[i * W + w] & trial[w]) * kHashMul[w];
          sids.push_back(s);
        }
        std::sort(sids.begin(), sids.end());
        worst = std::max(worst, (size_t)(std::unique(sids.begin(), sids.end()) - sids.begin()));
        if (worst > group_limit) break;
      }
      if (nf == 1 || worst <= group_limit)
        word_mask = trial;
      else
        break;
    }
  }
  auto sid_of = [&](const uint64_t* k) {
    uint64_t s = 0;
    for (int w = 0; w < W; ++w) s += (k[w] & word_mask[w]) * kHashMul[w];
    return s;
  };

  // Sort each side by slice id and regroup; terms inside a group stay in key
  // order for determinism.
  struct Side {
    std::vector<uint64_t> keys;   // nterms * W
    std::vector<uint64_t> hash;   // linear in the key, so hashes add
    std::vector<int64_t> coeff;
    std::vector<uint64_t> slice;  // id per group
    std::vector<uint32_t> beg;    // group g spans [beg[g], beg[g+1])
  };
  std::vector<Side> sides(factors.size());
  for (size_t fi = 0; fi < factors.size(); ++fi) {
    const auto& keys = raw_keys[fi];
    const size_t n = raw_coeff[fi].size();
    struct Rank {
      uint64_t sid;
      uint32_t i;
    };
    std::vector<Rank> by_sid(n);
    for (uint32_t i = 0; i < n; ++i) by_sid[i] = {sid_of(keys.data() + (size_t)i * W), i};
    std::sort(by_sid.begin(), by_sid.end(), [&](const Rank& a, const Rank& b) {
      if (a.sid != b.sid) return a.sid < b.sid;
      const uint64_t* ka = keys.data() + (size_t)a.i * W;
      const uint64_t* kb = keys.data() + (size_t)b.i * W;
      for (int w = 0; w < W; ++w)
        if (ka[w] != kb[w]) return ka[w] < kb[w];
      return a.i < b.i;
    });
    Side& sd = sides[fi];
    sd.keys.resize((size_t)n * W);
    sd.hash.resize(n);
    sd.coeff.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
      const uint64_t* k = keys.data() + (size_t)by_sid[i].i * W;
      std::copy_n(k, W, sd.keys.begin() + (size_t)i * W);
      uint64_t h = 0;
      for (int w = 0; w < W; ++w) h += k[w] * kHashMul[w];
      sd.hash[i] = h;
      sd.coeff[i] = raw_coeff[fi][by_sid[i].i];
      if (sd.slice.empty() || sd.slice.back() != by_sid[i].sid) {
        sd.slice.push_back(by_sid[i].sid);
        sd.beg.push_back(i);
      }
    }
    sd.beg.push_back((uint32_t)n);
    raw_keys[fi].clear();
    raw_keys[fi].shrink_to_fit();
  }
  raw_coeff.clear();

  // One task per group pair; tasks sharing a slice-id sum land in one table
  // session.
  struct Task {
    uint64_t sid;
    uint32_t prod, ga, gb;
  };
  std::vector<Task> tasks;
  {
    size_t ntasks = 0;
    for (size_t p = 0; p < np; ++p)
      ntasks += sides[2 * p].slice.size() * sides[2 * p + 1].slice.size();
    tasks.reserve(ntasks);
  }
  for (size_t p = 0; p < np; ++p) {
    const Side& A = sides[2 * p];
    const Side& B = sides[2 * p + 1];
    for (uint32_t ga = 0; ga < A.slice.size(); ++ga)
      for (uint32_t gb = 0; gb < B.slice.size(); ++gb)
        tasks.push_back({A.slice[ga] + B.slice[gb], (uint32_t)p, ga, gb});
  }
  std::sort(tasks.begin(), tasks.end(),
            [](const Task& x, const Task& y) { return x.sid < y.sid; });

  std::vector<int64_t> signs;
  for (size_t p = 0; p < np; ++p) signs.push_back(std::get<2>(prods[p]));

  auto run = [&]<int WC>(std::integral_constant<int, WC>) {
    PairTable<WC> table;
    st.ok = true;
    for (size_t at = 0; at < tasks.size() && st.ok;) {
      size_t end = at;
      while (end < tasks.size() && tasks[end].sid == tasks[at].sid) ++end;
      for (size_t t = at; t < end; ++t) {
        const Task& tk = tasks[t];
        const Side& A = sides[2 * tk.prod];
        const Side& B = sides[2 * tk.prod + 1];
        const uint32_t b0 = B.beg[tk.gb], b1 = B.beg[tk.gb + 1];
        const int64_t sgn = signs[tk.prod];
        uint64_t key[WC];
        for (uint32_t ia = A.beg[tk.ga]; ia < A.beg[tk.ga + 1]; ++ia) {
          const uint64_t* ka = A.keys.data() + (size_t)ia * WC;
          const uint64_t ha = A.hash[ia];
          const int64_t ca = sgn * A.coeff[ia];
          st.pairs += b1 - b0;
          uint32_t ib = b0;
          const uint32_t bpf = b1 - b0 > 8 ? b1 - 8 : b0;
          for (; ib < bpf; ++ib) {
            table.prefetch(ha + B.hash[ib + 8]);
            const uint64_t* kb = B.keys.data() + (size_t)ib * WC;
            for (int w = 0; w < WC; ++w) key[w] = ka[w] + kb[w];
            table.add(key, ha + B.hash[ib], ca * B.coeff[ib]);
          }
          for (; ib < b1; ++ib) {
            const uint64_t* kb = B.keys.data() + (size_t)ib * WC;
            for (int w = 0; w < WC; ++w) key[w] = ka[w] + kb[w];
            table.add(key, ha + B.hash[ib], ca * B.coeff[ib]);
          }
        }
      }
      ++st.slices;
      st.peak_slice = std::max(st.peak_slice, (uint64_t)table.distinct());
      if (table.distinct() > 60000000)
        throw std::length_error("fast_verify: slice exceeds memory guard");
      st.ok = table.all_zero();
      table.clear();
      at = end;
    }
  };
  switch (W) {
    case 1: run(std::integral_constant<int, 1>{}); break;
    case 2: run(std::integral_constant<int, 2>{}); break;
    case 3: run(std::integral_constant<int, 3>{}); break;
    case 4: run(std::integral_constant<int, 4>{}); break;
    case 5: run(std::integral_constant<int, 5>{}); break;
    case 6: run(std::integral_constant<int, 6>{}); break;
    case 7: run(std::integral_constant<int, 7>{}); break;
    case 8: run(std::integral_constant<int, 8>{}); break;
    default: throw std::invalid_argument("fast_verify: key exceeds 8 words");
  }

  st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return st;
}

/// Verifies c1*c2 == c3*c4 + c5*c6 exactly.
inline FastVerifyStats fast_verify_products(const QCharacter& c1, const QCharacter& c2,
                                            const QCharacter& c3, const QCharacter& c4,
                                            const QCharacter& c5, const QCharacter& c6,
                                            size_t group_limit = 6000) {
  return fast_verify_zero({{&c1, &c2, +1}, {&c3, &c4, -1}, {&c5, &c6, -1}}, group_limit);
}

}  // namespace snakechar

#endif  // SNAKECHAR_FASTVERIFY_HPP
