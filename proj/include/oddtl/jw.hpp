#pragma once

// Jones-Wenzl projectors and the odd-only second summand of f_{n-1} (x) f_1.
//
// f_0 = empty diagram, f_1 = id, and
//   f_{n+1} = (f_n (x) id) + ([n]/[n+1]) (f_n (x) id) (1 (x) cup) (1 (x) cap) (f_n (x) id)
// with 1 = id on n-1 strands. All coefficients live in the field of
// rational functions of q, where [n] is invertible.

#include <vector>

#include "tl.hpp"

namespace oddtl {

class JonesWenzl {
 public:
  explicit JonesWenzl(const TLContext& ctx) : ctx_(ctx) {}

  const TLContext& context() const { return ctx_; }

  RatFunc qint(int n) const { return RatFunc(quantum_int(n, ctx_.eps())); }

  const TLMorphism& jw(int n) {
    if (n < 0) throw std::invalid_argument("jw: negative strand count");
    while (static_cast<int>(cache_.size()) <= n) {
      int k = static_cast<int>(cache_.size());
      if (k == 0) {
        cache_.push_back(ctx_.identity(0));
        continue;
      }
      if (k == 1) {
        cache_.push_back(ctx_.identity(1));
        continue;
      }
      // k = m + 1 with m >= 1
      int m = k - 1;
      const TLMorphism& fm = cache_[static_cast<size_t>(m)];
      TLMorphism a = ctx_.tensor(fm, ctx_.identity(1));
      TLMorphism turnback = ctx_.compose(a, ctx_.compose(hook_up(m), ctx_.compose(hook_down(m), a)));
      cache_.push_back(ctx_.add(a, ctx_.scale(qint(m) / qint(m + 1), turnback)));
    }
    return cache_[static_cast<size_t>(n)];
  }

  /// Close the rightmost strand of f in End(n): (1 (x) cap) (f (x) id) (1 (x) cup).
  TLMorphism partial_closure(const TLMorphism& f) {
    if (f.m != f.n) throw std::invalid_argument("partial_closure wants an endomorphism");
    int n = f.m;
    if (n == 0) throw std::invalid_argument("partial_closure: no strand to close");
    TLMorphism mid = ctx_.tensor(f, ctx_.identity(1));
    return ctx_.compose(hook_down(n - 1), ctx_.compose(mid, hook_up(n - 1)));
  }

  /// u_n: n-2 -> n, odd. With v_n below, u_n v_n = g_n and v_n u_n = f_{n-2}.
  TLMorphism un(int n) {
    require_ge2(n, "un");
    TLMorphism f = ctx_.compose(ctx_.tensor(jw(n - 1), ctx_.identity(1)), hook_up(n - 2));
    return ctx_.scale(-(qint(n - 1) / qint(n)), f);
  }

  /// v_n: n -> n-2, odd.
  TLMorphism vn(int n) {
    require_ge2(n, "vn");
    return ctx_.compose(hook_down(n - 2), ctx_.tensor(jw(n - 1), ctx_.identity(1)));
  }

  /// g_n = u_n v_n in End(n); f_{n-1} (x) f_1 = f_n + g_n.
  TLMorphism gn(int n) {
    require_ge2(n, "gn");
    TLMorphism a = ctx_.tensor(jw(n - 1), ctx_.identity(1));
    TLMorphism f = ctx_.compose(a, ctx_.compose(hook_up(n - 2), ctx_.compose(hook_down(n - 2), a)));
    return ctx_.scale(-(qint(n - 1) / qint(n)), f);
  }

  /// True iff every cap kills f from above and every cup from below.
  bool cap_annihilates(const TLMorphism& f) {
    int n = f.n;
    for (int i = 0; i + 2 <= n; ++i) {
      TLMorphism cap_i =
          ctx_.tensor(ctx_.tensor(ctx_.identity(i), ctx_.cap()), ctx_.identity(n - 2 - i));
      if (!ctx_.compose(cap_i, f).is_zero()) return false;
    }
    int msrc = f.m;
    for (int i = 0; i + 2 <= msrc; ++i) {
      TLMorphism cup_i =
          ctx_.tensor(ctx_.tensor(ctx_.identity(i), ctx_.cup()), ctx_.identity(msrc - 2 - i));
      if (!ctx_.compose(f, cup_i).is_zero()) return false;
    }
    return true;
  }

 private:
  static void require_ge2(int n, const char* who) {
    if (n < 2) throw std::invalid_argument(std::string(who) + ": needs n >= 2");
  }
  // id^{k} (x) cup : k -> k+2 and id^{k} (x) cap : k+2 -> k
  TLMorphism hook_up(int k) { return ctx_.tensor(ctx_.identity(k), ctx_.cup()); }
  TLMorphism hook_down(int k) { return ctx_.tensor(ctx_.identity(k), ctx_.cap()); }

  const TLContext& ctx_;
  std::vector<TLMorphism> cache_;
};

}  // namespace oddtl
