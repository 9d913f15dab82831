#include <doctest.h>

#include "oddtl/jw.hpp"

using namespace oddtl;

TEST_CASE("first projectors in closed form") {
  TLContext ctx;
  JonesWenzl J(ctx);
  CHECK(J.jw(0) == ctx.identity(0));
  CHECK(J.jw(1) == ctx.identity(1));

  // f_2 = id + (1/[2]) cup cap
  TLMorphism cupcap = ctx.compose(ctx.cup(), ctx.cap());
  TLMorphism expect = ctx.add(ctx.identity(2), ctx.scale(RatFunc(1) / J.qint(2), cupcap));
  CHECK(J.jw(2) == expect);

  // the identity diagram always has coefficient 1
  for (int n = 1; n <= 6; ++n) {
    auto it = J.jw(n).terms.find(Matching::identity(n));
    REQUIRE(it != J.jw(n).terms.end());
    CHECK(it->second == RatFunc(1));
    CHECK(Int(J.jw(n).terms.size()) == catalan(n));
  }
}

TEST_CASE("projectors are idempotent") {
  TLContext ctx;
  JonesWenzl J(ctx);
  for (int n = 0; n <= 6; ++n) CHECK(ctx.compose(J.jw(n), J.jw(n)) == J.jw(n));
}

TEST_CASE("caps annihilate the projector") {
  TLContext ctx;
  JonesWenzl J(ctx);
  for (int n = 2; n <= 6; ++n) CHECK(J.cap_annihilates(J.jw(n)));
}

TEST_CASE("partial closure eats a strand") {
  TLContext ctx;
  JonesWenzl J(ctx);
  for (int n = 1; n <= 6; ++n) {
    TLMorphism closed = J.partial_closure(J.jw(n));
    TLMorphism expect = ctx.scale(-(J.qint(n + 1) / J.qint(n)), J.jw(n - 1));
    CHECK(closed == expect);
  }
}

TEST_CASE("splitting of f_{n-1} (x) f_1") {
  TLContext ctx;
  JonesWenzl J(ctx);
  for (int n = 2; n <= 6; ++n) {
    TLMorphism gn = J.gn(n);
    CHECK(ctx.tensor(J.jw(n - 1), J.jw(1)) == ctx.add(J.jw(n), gn));
    CHECK(ctx.compose(gn, gn) == gn);
    CHECK(ctx.compose(J.jw(n), gn).is_zero());
    CHECK(ctx.compose(gn, J.jw(n)).is_zero());
  }
}

TEST_CASE("u and v contract correctly") {
  TLContext ctx;
  JonesWenzl J(ctx);
  for (int n = 2; n <= 6; ++n) {
    TLMorphism u = J.un(n), v = J.vn(n);
    CHECK(ctx.parity_of(u) == 1);
    CHECK(ctx.parity_of(v) == 1);
    CHECK(ctx.compose(u, v) == J.gn(n));
    CHECK(ctx.compose(v, u) == J.jw(n - 2));
  }
}

TEST_CASE("classical projectors satisfy the same contracts") {
  TLContext ctx(kClassical, false);
  JonesWenzl J(ctx);
  for (int n = 0; n <= 5; ++n) {
    CHECK(ctx.compose(J.jw(n), J.jw(n)) == J.jw(n));
    if (n >= 2) CHECK(J.cap_annihilates(J.jw(n)));
    if (n >= 1) {
      TLMorphism closed = J.partial_closure(J.jw(n));
      CHECK(closed == ctx.scale(-(J.qint(n + 1) / J.qint(n)), J.jw(n - 1)));
    }
  }
}
