#pragma once

// The Temperley-Lieb supercategory with odd cup and cap generators.
//
// Objects are nonnegative integers. A morphism m -> n is a linear
// combination of crossingless matchings of m bottom and n top points.
// Composition stacks diagrams and reduces the stack to caps-then-cups
// normal form, tracking the sign produced each time two odd generators
// slide past one another, the epsilon from the left zigzag, and one factor
// of the loop value delta per closed circle.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ratfunc.hpp"

namespace oddtl {

/// Crossingless matching with m bottom points (ids 0..m-1, left to right)
/// and n top points (ids m..m+n-1, left to right).
struct Matching {
  int m = 0, n = 0;
  std::vector<int> partner;  // partner[i] = the point matched with i

  auto operator<=>(const Matching&) const = default;

  static Matching identity(int k) {
    Matching d{k, k, std::vector<int>(2 * k)};
    for (int i = 0; i < k; ++i) {
      d.partner[i] = k + i;
      d.partner[k + i] = i;
    }
    return d;
  }
  static Matching cap() { return Matching{2, 0, {1, 0}}; }
  static Matching cup() { return Matching{0, 2, {1, 0}}; }

  int through_count() const {
    int t = 0;
    for (int i = 0; i < m; ++i)
      if (partner[i] >= m) ++t;
    return t;
  }
};

/// Parity of every diagram in Hom(m, n): each cap or cup contributes one
/// odd generator, and #caps + #cups = (m + n)/2 - t with t = m (mod 2).
inline int hom_parity(int m, int n) {
  if ((m + n) % 2 != 0) throw std::invalid_argument("Hom(m,n) is zero for m+n odd");
  return ((m + n) / 2 + m) % 2;
}

enum class Gen : uint8_t { Cap, Cup, Cross };

/// One elementary layer: the generator applied at strand position `pad`,
/// identity on all other strands.
struct Layer {
  int pad;
  Gen gen;
  friend bool operator==(const Layer&, const Layer&) = default;
};
using Word = std::vector<Layer>;

namespace detail {

// Remove pairs matched to an adjacent strand, leftmost first, until none
// remain. `mate` maps a strand label to its partner label (or -1).
template <typename MateFn>
inline void peel_adjacent_pairs(std::vector<int>& cur, MateFn mate, Word& out) {
  bool found = true;
  while (found) {
    found = false;
    for (size_t p = 0; p + 1 < cur.size(); ++p) {
      if (mate(cur[p]) == cur[p + 1]) {
        out.push_back({static_cast<int>(p), Gen::Cap});
        cur.erase(cur.begin() + static_cast<long>(p), cur.begin() + static_cast<long>(p) + 2);
        found = true;
        break;
      }
    }
  }
}

}  // namespace detail

/// Deterministic factorization of a matching into caps (applied bottom-up,
/// leftmost adjacent matched pair first) followed by cups (mirror rule on
/// the reflected diagram). Planarity guarantees the loop below consumes all
/// non-through pairs.
inline Word canonical_word(const Matching& d) {
  Word caps;
  std::vector<int> bot(static_cast<size_t>(d.m));
  std::iota(bot.begin(), bot.end(), 0);
  detail::peel_adjacent_pairs(
      bot, [&](int x) { return d.partner[x] < d.m ? d.partner[x] : -1; }, caps);

  Word top_caps;
  std::vector<int> top(static_cast<size_t>(d.n));
  std::iota(top.begin(), top.end(), 0);
  detail::peel_adjacent_pairs(
      top, [&](int j) { return d.partner[d.m + j] >= d.m ? d.partner[d.m + j] - d.m : -1; },
      top_caps);

  if (bot.size() != top.size())
    throw std::logic_error("canonical_word: matching is not planar");

  Word w = std::move(caps);
  for (auto it = top_caps.rbegin(); it != top_caps.rend(); ++it) w.push_back({it->pad, Gen::Cup});
  return w;
}

/// Result of normalizing a word: the underlying matching together with the
/// exponents of the three scalar factors (-1)^flips eps^eps_count
/// delta^loops.
struct NormOutcome {
  int flips = 0;
  int eps_count = 0;
  int loops = 0;
  Matching d;
};

namespace detail {

// Extract (pair list in word order, surviving strand labels) of a pure cap
// word acting on labels 0..k-1.
inline std::pair<std::vector<std::pair<int, int>>, std::vector<int>> cap_trace(int k, const Word& caps) {
  std::vector<int> cur(static_cast<size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<std::pair<int, int>> pairs;
  for (const Layer& l : caps) {
    size_t p = static_cast<size_t>(l.pad);
    if (p + 1 >= cur.size()) throw std::logic_error("cap_trace: pad out of range");
    pairs.emplace_back(std::min(cur[p], cur[p + 1]), std::max(cur[p], cur[p + 1]));
    cur.erase(cur.begin() + static_cast<long>(p), cur.begin() + static_cast<long>(p) + 2);
  }
  return {pairs, cur};
}

// Count inversions of the permutation taking `from` to `to` (both are
// orderings of the same distinct pairs).
inline int reorder_inversions(const std::vector<std::pair<int, int>>& from,
                              const std::vector<std::pair<int, int>>& to) {
  std::vector<int> perm;
  perm.reserve(to.size());
  for (const auto& pr : to) {
    auto it = std::find(from.begin(), from.end(), pr);
    if (it == from.end()) throw std::logic_error("reorder_inversions: pair lists differ");
    perm.push_back(static_cast<int>(it - from.begin()));
  }
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv;
}

}  // namespace detail

/// Reduce a cap/cup word starting at arity m to the canonical word of its
/// underlying matching, collecting all scalar exponents along the way.
/// `odd_gens` selects whether cap and cup are odd (sliding two of them past
/// each other costs a sign) or even (the classical category).
inline NormOutcome normalize(int m, Word w, bool odd_gens) {
  NormOutcome out;
  // Phase 1: push every cap below every cup. Each step removes a
  // cup-under-cap adjacency or cancels/merges the pair outright.
  size_t k = 0;
  while (true) {
    size_t i = w.size();
    for (size_t s = k; s + 1 < w.size(); ++s)
      if (w[s].gen == Gen::Cup && w[s + 1].gen == Gen::Cap) {
        i = s;
        break;
      }
    if (i == w.size()) {
      if (k == 0) break;
      k = 0;  // rescan from the start once before concluding
      continue;
    }
    int p = w[i].pad, q = w[i + 1].pad;
    if (q == p) {  // closed circle
      ++out.loops;
      w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
    } else if (q == p - 1) {  // right zigzag straightens to the identity
      w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
    } else if (q == p + 1) {  // left zigzag straightens up to epsilon
      ++out.eps_count;
      w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
    } else if (q <= p - 2) {  // disjoint: slide the cap below the cup
      w[i] = {q, Gen::Cap};
      w[i + 1] = {p - 2, Gen::Cup};
      if (odd_gens) ++out.flips;
    } else {  // q >= p + 2
      w[i] = {q - 2, Gen::Cap};
      w[i + 1] = {p, Gen::Cup};
      if (odd_gens) ++out.flips;
    }
    k = i > 0 ? i - 1 : 0;
  }

  // The word is now caps followed by cups. Recover the matching.
  Word caps, cups;
  for (const Layer& l : w) (l.gen == Gen::Cap ? caps : cups).push_back(l);
  auto [cap_pairs, through_bot] = detail::cap_trace(m, caps);
  int n = m - 2 * static_cast<int>(caps.size()) + 2 * static_cast<int>(cups.size());
  Word cups_reflected(cups.rbegin(), cups.rend());
  for (Layer& l : cups_reflected) l.gen = Gen::Cap;
  auto [cup_pairs, through_top] = detail::cap_trace(n, cups_reflected);
  if (through_bot.size() != through_top.size())
    throw std::logic_error("normalize: through-strand mismatch");

  Matching d{m, n, std::vector<int>(static_cast<size_t>(m + n), -1)};
  for (const auto& [x, y] : cap_pairs) {
    d.partner[x] = y;
    d.partner[y] = x;
  }
  for (const auto& [x, y] : cup_pairs) {
    d.partner[m + x] = m + y;
    d.partner[m + y] = m + x;
  }
  for (size_t t = 0; t < through_bot.size(); ++t) {
    d.partner[through_bot[t]] = m + through_top[t];
    d.partner[m + through_top[t]] = through_bot[t];
  }

  // Phase 2: reorder the cap layers (and independently the cup layers) into
  // canonical order; each transposition of two disjoint odd layers flips
  // the sign.
  if (odd_gens) {
    Word canon = canonical_word(d);
    Word canon_caps, canon_cups;
    for (const Layer& l : canon) (l.gen == Gen::Cap ? canon_caps : canon_cups).push_back(l);
    auto [canon_cap_pairs, unused1] = detail::cap_trace(m, canon_caps);
    Word canon_cups_reflected(canon_cups.rbegin(), canon_cups.rend());
    for (Layer& l : canon_cups_reflected) l.gen = Gen::Cap;
    auto [canon_cup_pairs, unused2] = detail::cap_trace(n, canon_cups_reflected);
    out.flips += detail::reorder_inversions(cap_pairs, canon_cap_pairs);
    out.flips += detail::reorder_inversions(cup_pairs, canon_cup_pairs);
  }
  out.d = std::move(d);
  return out;
}

/// All crossingless matchings of m bottom and n top points.
inline std::vector<Matching> enumerate_basis(int m, int n) {
  if ((m + n) % 2 != 0) return {};
  // Boundary order: bottom left-to-right, then top right-to-left. A diagram
  // is crossingless iff the matching is noncrossing in this order.
  int total = m + n;
  auto to_point = [&](int pos) { return pos < m ? pos : m + (n - 1 - (pos - m)); };
  // Recursive enumeration of noncrossing pairings of positions [lo, hi).
  std::function<std::vector<std::vector<std::pair<int, int>>>(int, int)> go =
      [&](int lo, int hi) -> std::vector<std::vector<std::pair<int, int>>> {
    if (lo >= hi) return {{}};
    std::vector<std::vector<std::pair<int, int>>> acc;
    for (int mid = lo + 1; mid < hi; mid += 2) {
      auto inner = go(lo + 1, mid);
      auto outer = go(mid + 1, hi);
      for (const auto& a : inner)
        for (const auto& b : outer) {
          std::vector<std::pair<int, int>> v;
          v.reserve(a.size() + b.size() + 1);
          v.emplace_back(lo, mid);
          v.insert(v.end(), a.begin(), a.end());
          v.insert(v.end(), b.begin(), b.end());
          acc.push_back(std::move(v));
        }
    }
    return acc;
  };
  std::vector<Matching> basis;
  for (const auto& pairing : go(0, total)) {
    Matching d{m, n, std::vector<int>(static_cast<size_t>(total))};
    for (const auto& [a, b] : pairing) {
      int x = to_point(a), y = to_point(b);
      d.partner[static_cast<size_t>(x)] = y;
      d.partner[static_cast<size_t>(y)] = x;
    }
    basis.push_back(std::move(d));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

inline Int catalan(int k) {
  Int c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

inline Int hom_dim(int m, int n) { return (m + n) % 2 == 0 ? catalan((m + n) / 2) : Int(0); }

/// Dyck word of a matching of k points to 0 (a "cap diagram"): +1 at the
/// left endpoint of each pair, -1 at the right endpoint.
inline std::vector<int> dyck_sequence(const Matching& d) {
  if (d.n != 0) throw std::invalid_argument("dyck_sequence wants a diagram with target 0");
  std::vector<int> s(static_cast<size_t>(d.m));
  for (int i = 0; i < d.m; ++i) s[static_cast<size_t>(i)] = d.partner[i] > i ? 1 : -1;
  return s;
}

/// s <= t in the Dyck order iff every prefix sum of s is <= that of t.
inline bool dyck_leq(const std::vector<int>& s, const std::vector<int>& t) {
  if (s.size() != t.size()) throw std::invalid_argument("dyck_leq: length mismatch");
  int ps = 0, pt = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    ps += s[i];
    pt += t[i];
    if (ps > pt) return false;
  }
  return true;
}

/// Morphism m -> n: linear combination of matchings. Every matching in
/// Hom(m, n) has the same parity, so nonzero morphisms are homogeneous.
struct TLMorphism {
  int m = 0, n = 0;
  std::map<Matching, RatFunc> terms;

  friend bool operator==(const TLMorphism&, const TLMorphism&) = default;
  bool is_zero() const { return terms.empty(); }
};

/// Category context: fixes epsilon and the generator parity, owns small
/// caches (loop-value powers). Not thread-safe.
class TLContext {
 public:
  explicit TLContext(Epsilon eps = kOdd, bool odd_gens = true) : eps_(eps), odd_gens_(odd_gens) {
    delta_pows_.push_back(LaurentPoly(1));
    delta_pows_.push_back(delta(eps));
  }

  Epsilon eps() const { return eps_; }
  bool odd_generators() const { return odd_gens_; }
  int parity_of(const TLMorphism& f) const { return odd_gens_ ? hom_parity(f.m, f.n) : 0; }

  TLMorphism identity(int k) const { return single(Matching::identity(k)); }
  TLMorphism cap() const { return single(Matching::cap()); }
  TLMorphism cup() const { return single(Matching::cup()); }
  TLMorphism zero(int m, int n) const { return TLMorphism{m, n, {}}; }
  TLMorphism scalar(const RatFunc& c) const {
    TLMorphism f{0, 0, {}};
    if (!c.is_zero()) f.terms[Matching{0, 0, {}}] = c;
    return f;
  }
  static TLMorphism single(const Matching& d, const RatFunc& c = 1) {
    TLMorphism f{d.m, d.n, {}};
    if (!c.is_zero()) f.terms[d] = c;
    return f;
  }

  TLMorphism add(const TLMorphism& f, const TLMorphism& g) const {
    if (f.m != g.m || f.n != g.n) throw std::invalid_argument("add: shape mismatch");
    TLMorphism r = f;
    for (const auto& [d, c] : g.terms) {
      auto it = r.terms.find(d);
      if (it == r.terms.end()) {
        r.terms[d] = c;
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
    return r;
  }
  TLMorphism scale(const RatFunc& c, const TLMorphism& f) const {
    TLMorphism r{f.m, f.n, {}};
    if (c.is_zero()) return r;
    for (const auto& [d, v] : f.terms) r.terms[d] = c * v;
    return r;
  }

  /// f after g.
  TLMorphism compose(const TLMorphism& f, const TLMorphism& g) const {
    if (g.n != f.m) throw std::invalid_argument("compose: shape mismatch");
    return combine(f, g, g.m, f.n, [&](const Matching& df, const Matching& dg) {
      Word w = word_of(dg);
      Word wf = word_of(df);
      w.insert(w.end(), wf.begin(), wf.end());
      return std::pair<Word, int>(std::move(w), g.m);
    });
  }

  /// Super tensor product, computed as (f (x) id) after (id (x) g).
  TLMorphism tensor(const TLMorphism& f, const TLMorphism& g) const {
    return combine(f, g, f.m + g.m, f.n + g.n, [&](const Matching& df, const Matching& dg) {
      Word w = word_of(dg);
      for (Layer& l : w) l.pad += f.m;
      Word wf = word_of(df);
      w.insert(w.end(), wf.begin(), wf.end());
      return std::pair<Word, int>(std::move(w), f.m + g.m);
    });
  }

  const LaurentPoly& delta_pow(int k) const {
    while (static_cast<int>(delta_pows_.size()) <= k)
      delta_pows_.push_back(delta_pows_.back() * delta_pows_[1]);
    return delta_pows_[static_cast<size_t>(k)];
  }

  const Word& word_of(const Matching& d) const {
    auto it = word_cache_.find(d);
    if (it != word_cache_.end()) return it->second;
    return word_cache_.emplace(d, canonical_word(d)).first->second;
  }

 private:
  // Shared engine for compose and tensor: rewrite each diagram pair's word,
  // accumulating numerators over the product of the two common
  // denominators. The per-pair word is supplied by `make_word`.
  template <typename WordFn>
  TLMorphism combine(const TLMorphism& f, const TLMorphism& g, int rm, int rn,
                     WordFn make_word) const {
    TLMorphism r{rm, rn, {}};
    if (f.is_zero() || g.is_zero()) return r;
    LaurentPoly df_den = common_den(f), dg_den = common_den(g);
    LaurentPoly den = df_den * dg_den;
    std::vector<std::pair<const Matching*, size_t>> fs, gs;
    std::vector<LaurentPoly> fvals, gvals;
    intern_numerators(f, df_den, fs, fvals);
    intern_numerators(g, dg_den, gs, gvals);
    // Coefficient values repeat heavily across terms; multiply each
    // distinct value pair only once.
    std::map<std::pair<size_t, size_t>, LaurentPoly> prod_memo;
    std::map<Matching, LaurentPoly> acc;
    for (size_t i = 0; i < fs.size(); ++i)
      for (size_t j = 0; j < gs.size(); ++j) {
        auto [w, arity] = make_word(*fs[i].first, *gs[j].first);
        NormOutcome o = normalize(arity, std::move(w), odd_gens_);
        auto [it, fresh] = prod_memo.try_emplace({fs[i].second, gs[j].second});
        if (fresh) it->second = fvals[fs[i].second] * gvals[gs[j].second];
        LaurentPoly term = it->second;
        if (o.loops > 0) term = term * delta_pow(o.loops);
        int sgn = ((o.flips % 2) ? -1 : 1) * eps_.pow(o.eps_count);
        if (sgn < 0) term = -term;
        auto [ait, afresh] = acc.try_emplace(o.d);
        ait->second = afresh ? std::move(term) : ait->second + term;
      }
    for (auto& [d, num] : acc) {
      if (num.is_zero()) continue;
      RatFunc c(std::move(num), den);
      if (!c.is_zero()) r.terms[d] = std::move(c);
    }
    return r;
  }

  static LaurentPoly common_den(const TLMorphism& f) {
    LaurentPoly l(1);
    for (const auto& [d, c] : f.terms) l = poly_lcm(l, c.den());
    return l;
  }
  static void intern_numerators(const TLMorphism& f, const LaurentPoly& den,
                                std::vector<std::pair<const Matching*, size_t>>& out,
                                std::vector<LaurentPoly>& values) {
    out.reserve(f.terms.size());
    std::map<LaurentPoly, size_t> ids;
    for (const auto& [d, c] : f.terms) {
      detail::DensePoly quot = detail::poly_div(detail::to_dense(den, 0), detail::to_dense(c.den(), 0));
      LaurentPoly num = c.num() * detail::from_dense(quot);
      auto [it, fresh] = ids.try_emplace(num, values.size());
      if (fresh) values.push_back(std::move(num));
      out.emplace_back(&d, it->second);
    }
  }
  static LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b) {
    detail::DensePoly da = detail::to_dense(a, 0), db = detail::to_dense(b, 0);
    detail::DensePoly g = detail::poly_gcd(da, db);
    LaurentPoly l = detail::from_dense(detail::poly_div(da, g)) * b;
    Rational low = l.coeffs().begin()->second;
    if (low != 1) l = l * LaurentPoly(Rational(1) / low);
    return l;
  }

  Epsilon eps_;
  bool odd_gens_;
  mutable std::vector<LaurentPoly> delta_pows_;
  mutable std::map<Matching, Word> word_cache_;
};

}  // namespace oddtl
