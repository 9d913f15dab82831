#include <doctest.h>

#include <random>

#include "oddtl/tl.hpp"

using namespace oddtl;

namespace {

// Independent composition oracle for the classical category: glue two
// diagrams by chasing strands through the middle boundary and count the
// closed circles, with no signs anywhere.
std::pair<int, Matching> glue(const Matching& f, const Matching& g) {
  // g first (g: m -> k), then f (f: k -> n).
  REQUIRE(g.n == f.m);
  int m = g.m, k = g.n, n = f.n;
  // Node ids: bottom 0..m-1, middle m..m+k-1, top m+k..m+k+n-1.
  auto g_node = [&](int p) { return p < g.m ? p : m + (p - g.m); };
  auto f_node = [&](int p) { return p < f.m ? m + p : m + k + (p - f.m); };
  std::vector<std::pair<int, int>> edges;
  for (int p = 0; p < g.m + g.n; ++p)
    if (g.partner[static_cast<size_t>(p)] > p)
      edges.emplace_back(g_node(p), g_node(g.partner[static_cast<size_t>(p)]));
  for (int p = 0; p < f.m + f.n; ++p)
    if (f.partner[static_cast<size_t>(p)] > p)
      edges.emplace_back(f_node(p), f_node(f.partner[static_cast<size_t>(p)]));
  std::vector<std::vector<int>> inc(static_cast<size_t>(m + k + n));  // incident edge ids
  for (size_t e = 0; e < edges.size(); ++e) {
    inc[static_cast<size_t>(edges[e].first)].push_back(static_cast<int>(e));
    inc[static_cast<size_t>(edges[e].second)].push_back(static_cast<int>(e));
  }
  // Boundary nodes have degree 1, middle nodes degree 2. Walk edge by edge.
  std::vector<bool> used(edges.size(), false);
  Matching out{m, n, std::vector<int>(static_cast<size_t>(m + n), -1)};
  auto boundary_id = [&](int node) { return node < m ? node : m + (node - m - k); };
  auto is_middle = [&](int node) { return node >= m && node < m + k; };
  for (int start = 0; start < m + k + n; ++start) {
    if (is_middle(start) || inc[static_cast<size_t>(start)].empty()) continue;
    int e = inc[static_cast<size_t>(start)][0];
    if (used[static_cast<size_t>(e)]) continue;
    int cur = start;
    while (true) {
      used[static_cast<size_t>(e)] = true;
      cur = edges[static_cast<size_t>(e)].first == cur ? edges[static_cast<size_t>(e)].second
                                                       : edges[static_cast<size_t>(e)].first;
      if (!is_middle(cur)) break;
      const auto& ie = inc[static_cast<size_t>(cur)];
      e = ie[0] == e ? ie[1] : ie[0];
    }
    int a = boundary_id(start), b = boundary_id(cur);
    out.partner[static_cast<size_t>(a)] = b;
    out.partner[static_cast<size_t>(b)] = a;
  }
  int loops = 0;  // remaining unused edges form the closed circles
  for (size_t e0 = 0; e0 < edges.size(); ++e0) {
    if (used[e0]) continue;
    int e = static_cast<int>(e0), cur = edges[e0].first;
    while (!used[static_cast<size_t>(e)]) {
      used[static_cast<size_t>(e)] = true;
      cur = edges[static_cast<size_t>(e)].first == cur ? edges[static_cast<size_t>(e)].second
                                                       : edges[static_cast<size_t>(e)].first;
      const auto& ie = inc[static_cast<size_t>(cur)];
      e = ie[0] == e ? ie[1] : ie[0];
    }
    ++loops;
  }
  return {loops, out};
}

TLMorphism random_morphism(TLContext& ctx, int m, int n, std::mt19937& rng) {
  auto basis = enumerate_basis(m, n);
  TLMorphism f = ctx.zero(m, n);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const auto& d : basis) {
    int c = coeff(rng);
    if (c != 0) f = ctx.add(f, TLContext::single(d, RatFunc(c)));
  }
  return f;
}

}  // namespace

TEST_CASE("hom space dimensions are Catalan numbers") {
  CHECK(hom_dim(3, 3) == 5);
  CHECK(hom_dim(0, 6) == 5);
  CHECK(hom_dim(2, 4) == 5);
  CHECK(hom_dim(4, 4) == 14);
  CHECK(hom_dim(1, 2) == 0);
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n)
      CHECK(Int(enumerate_basis(m, n).size()) == hom_dim(m, n));
}

TEST_CASE("canonical word of nested caps") {
  Matching d{4, 0, {3, 2, 1, 0}};
  Word w = canonical_word(d);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == Layer{1, Gen::Cap});
  CHECK(w[1] == Layer{0, Gen::Cap});
}

TEST_CASE("canonical word round trips through normalize") {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n)
      for (const auto& d : enumerate_basis(m, n)) {
        NormOutcome o = normalize(m, canonical_word(d), true);
        CHECK(o.d == d);
        CHECK(o.flips == 0);
        CHECK(o.eps_count == 0);
        CHECK(o.loops == 0);
      }
}

TEST_CASE("defining relations") {
  TLContext ctx;  // odd, eps = -1
  TLMorphism cap = ctx.cap(), cup = ctx.cup(), id1 = ctx.identity(1);

  SUBCASE("bubble") {
    TLMorphism bubble = ctx.compose(cap, cup);
    CHECK(bubble == ctx.scalar(RatFunc(delta(kOdd))));
  }
  SUBCASE("right zigzag is the identity") {
    TLMorphism z = ctx.compose(ctx.tensor(cap, id1), ctx.tensor(id1, cup));
    CHECK(z == id1);
  }
  SUBCASE("left zigzag is eps times the identity") {
    TLMorphism z = ctx.compose(ctx.tensor(id1, cap), ctx.tensor(cup, id1));
    CHECK(z == ctx.scale(RatFunc(-1), id1));
  }
}

TEST_CASE("classical variant relations") {
  TLContext ctx(kClassical, false);
  TLMorphism cap = ctx.cap(), cup = ctx.cup(), id1 = ctx.identity(1);
  CHECK(ctx.compose(cap, cup) == ctx.scalar(RatFunc(delta(kClassical))));
  CHECK(ctx.compose(ctx.tensor(cap, id1), ctx.tensor(id1, cup)) == id1);
  CHECK(ctx.compose(ctx.tensor(id1, cap), ctx.tensor(cup, id1)) == id1);
}

TEST_CASE("super interchange on odd generators") {
  TLContext ctx;
  TLMorphism cap = ctx.cap(), cup = ctx.cup();
  // (cap (x) cap) o (cup (x) cup) = -(cap o cup) (x) (cap o cup) = -delta^2
  TLMorphism lhs = ctx.compose(ctx.tensor(cap, cap), ctx.tensor(cup, cup));
  LaurentPoly d = delta(kOdd);
  CHECK(lhs == ctx.scalar(RatFunc(-(d * d))));
}

TEST_CASE("classical composition agrees with the gluing oracle") {
  TLContext ctx(kClassical, false);
  LaurentPoly d = delta(kClassical);
  for (int k : {2, 3, 4}) {
    auto basis = enumerate_basis(k, k);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        auto [loops, dd] = glue(a, b);
        LaurentPoly coeff(1);
        for (int i = 0; i < loops; ++i) coeff = coeff * d;
        TLMorphism expect = TLContext::single(dd, RatFunc(coeff));
        CHECK(ctx.compose(TLContext::single(a), TLContext::single(b)) == expect);
      }
  }
}

TEST_CASE("odd composition squares to classical one up to sign structure") {
  // In the odd category the composite of two basis diagrams is a single
  // signed diagram times a power of delta; the diagram and loop count agree
  // with the gluing oracle.
  TLContext ctx;
  for (int k : {2, 3, 4}) {
    auto basis = enumerate_basis(k, k);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        auto [loops, dd] = glue(a, b);
        TLMorphism got = ctx.compose(TLContext::single(a), TLContext::single(b));
        REQUIRE(got.terms.size() == 1);
        const auto& [d_got, c_got] = *got.terms.begin();
        CHECK(d_got == dd);
        LaurentPoly dpow(1);
        for (int i = 0; i < loops; ++i) dpow = dpow * delta(kOdd);
        bool plus = c_got == RatFunc(dpow), minus = c_got == RatFunc(-dpow);
        CHECK((plus || minus));
      }
  }
}

TEST_CASE("identity laws and associativity") {
  TLContext ctx;
  std::mt19937 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    TLMorphism f = random_morphism(ctx, 3, 3, rng);
    CHECK(ctx.compose(ctx.identity(3), f) == f);
    CHECK(ctx.compose(f, ctx.identity(3)) == f);
    TLMorphism g = random_morphism(ctx, 3, 3, rng), h = random_morphism(ctx, 3, 3, rng);
    CHECK(ctx.compose(ctx.compose(f, g), h) == ctx.compose(f, ctx.compose(g, h)));
  }
}

TEST_CASE("tensor associativity and interchange on random morphisms") {
  TLContext ctx;
  std::mt19937 rng(43);
  TLMorphism f = random_morphism(ctx, 2, 2, rng), g = random_morphism(ctx, 1, 1, rng),
             h = random_morphism(ctx, 2, 0, rng);
  CHECK(ctx.tensor(ctx.tensor(f, g), h) == ctx.tensor(f, ctx.tensor(g, h)));

  // interchange with homogeneous parities: here |g2| and |h2| are both odd
  TLMorphism f2 = random_morphism(ctx, 2, 0, rng);  // odd
  TLMorphism g2 = random_morphism(ctx, 0, 2, rng);  // odd
  TLMorphism lhs = ctx.compose(ctx.tensor(f2, f2), ctx.tensor(g2, g2));
  TLMorphism rhs = ctx.scale(RatFunc(-1), ctx.tensor(ctx.compose(f2, g2), ctx.compose(f2, g2)));
  CHECK(lhs == rhs);
}

TEST_CASE("parity bookkeeping") {
  TLContext ctx;
  CHECK(ctx.parity_of(ctx.cap()) == 1);
  CHECK(ctx.parity_of(ctx.cup()) == 1);
  CHECK(ctx.parity_of(ctx.identity(4)) == 0);
  CHECK(hom_parity(3, 1) == 1);
  CHECK(hom_parity(3, 3) == 0);
  TLContext classical(kClassical, false);
  CHECK(classical.parity_of(classical.cap()) == 0);
}

TEST_CASE("dyck order") {
  auto caps = enumerate_basis(6, 0);
  REQUIRE(caps.size() == 5);
  for (const auto& s : caps) {
    auto seq = dyck_sequence(s);
    CHECK(dyck_leq(seq, seq));
    int sum = 0;
    for (int v : seq) {
      sum += v;
      CHECK(sum >= 0);
    }
    CHECK(sum == 0);
  }
  // fully nested dominates everything; the zigzag is the minimum
  std::vector<int> nested{1, 1, 1, -1, -1, -1}, zigzag{1, -1, 1, -1, 1, -1};
  for (const auto& s : caps) {
    CHECK(dyck_leq(dyck_sequence(s), nested));
    CHECK(dyck_leq(zigzag, dyck_sequence(s)));
  }
  CHECK(!dyck_leq(nested, zigzag));
}
