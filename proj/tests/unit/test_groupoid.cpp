#include <doctest.h>

#include "core/errors.hpp"
#include "core/groupoid.hpp"
#include "helpers.hpp"

using namespace gring;
using testutil::el;
using testutil::make_group;

TEST_CASE("source and target of a morphism") {
  Group G = make_group("free:2");
  Morphism phi{el(G, "x*y"), el(G, "y")};
  CHECK(source(G, phi) == el(G, "y^-1*x*y"));
  CHECK(target(G, phi) == el(G, "x"));
}

TEST_CASE("identity morphisms") {
  Group G = make_group("free:2");
  GroupElement a = el(G, "x*y^-1");
  Morphism id = identity_at(G, a);
  CHECK(source(G, id) == a);
  CHECK(target(G, id) == a);
  CHECK(is_identity_morphism(G, id));
  CHECK(is_loop(G, id));
}

TEST_CASE("composition matches boundaries and satisfies groupoid laws") {
  Group G = make_group("free:2");
  Morphism phi{el(G, "x*y"), el(G, "y")};       // y^-1 x y -> x
  Morphism psi{el(G, "x*x"), el(G, "x")};       // x -> x ... conjugation by x fixes x
  CHECK(target(G, phi) == source(G, psi));
  Morphism chain = compose(G, psi, phi);
  CHECK(source(G, chain) == source(G, phi));
  CHECK(target(G, chain) == target(G, psi));
  // chain = (x * x*y, x*y)
  CHECK(chain.u == el(G, "x^2*y"));
  CHECK(chain.v == el(G, "x*y"));

  // left/right identity laws
  CHECK(compose(G, identity_at(G, target(G, phi)), phi) == phi);
  CHECK(compose(G, phi, identity_at(G, source(G, phi))) == phi);

  // inverse reverses the arrow and composes to identities
  Morphism inv = inverse(G, phi);
  CHECK(source(G, inv) == target(G, phi));
  CHECK(target(G, inv) == source(G, phi));
  CHECK(compose(G, inv, phi) == identity_at(G, source(G, phi)));
  CHECK(compose(G, phi, inv) == identity_at(G, target(G, phi)));
}

TEST_CASE("composition of non-adjacent morphisms is rejected with both boundary words") {
  Group G = make_group("free:2");
  Morphism phi{el(G, "x*y"), el(G, "y")};  // target x
  Morphism psi{el(G, "y*x"), el(G, "x")};  // source x^-1*y*x != x
  try {
    (void)compose(G, psi, phi);
    FAIL("expected ComposeError");
  } catch (const ComposeError& e) {
    std::string msg = e.what();
    CHECK(msg.find("x^-1*y*x") != std::string::npos);
    CHECK(msg.find("x") != std::string::npos);
  }
}

TEST_CASE("associativity of composition on sampled triples") {
  Group G = make_group("symmetric:3");
  Ball ball = G.enumerate_ball(2);
  std::vector<Morphism> all;
  for (const GroupElement& u : ball.elements)
    for (const GroupElement& v : ball.elements) all.push_back(Morphism{u, v});
  int checked = 0;
  for (const Morphism& f : all)
    for (const Morphism& g : all) {
      if (!(target(G, f) == source(G, g))) continue;
      for (const Morphism& h : all) {
        if (!(target(G, g) == source(G, h))) continue;
        REQUIRE(compose(G, compose(G, h, g), f) == compose(G, h, compose(G, g, f)));
        ++checked;
      }
    }
  CHECK(checked > 100);
}

TEST_CASE("loops are conjugation arrows with central conjugator at the base") {
  Group G = make_group("free:2");
  Morphism loop{el(G, "x*x"), el(G, "x")};  // base x, conjugator x
  CHECK(is_loop(G, loop));
  Morphism notloop{el(G, "x*y"), el(G, "y")};
  CHECK_FALSE(is_loop(G, notloop));
}

TEST_CASE("loop powers") {
  Group G = make_group("abelian:1");
  GroupElement x = el(G, "x");
  Morphism loop{G.mul(x, x), x};  // base x, conjugator x
  Morphism cube = loop_power(G, loop, 3);
  CHECK(cube.u == el(G, "x^4"));
  CHECK(cube.v == el(G, "x^3"));
  CHECK(loop_power(G, loop, 0) == identity_at(G, x));
  CHECK(loop_power(G, loop, 1) == loop);
  // powers agree with iterated composition
  Morphism it = loop;
  for (int n = 2; n <= 5; ++n) {
    it = compose(G, loop, it);
    CHECK(loop_power(G, loop, n) == it);
  }
  CHECK_THROWS_AS((void)loop_power(G, loop, -1), DomainError);
  // in an abelian group every morphism is a loop
  CHECK(is_loop(G, Morphism{el(G, "x^2"), el(G, "e")}));
}

TEST_CASE("loop power demands an actual loop") {
  Group G = make_group("free:2");
  Morphism notloop{el(G, "x*y"), el(G, "y")};
  CHECK_THROWS_AS((void)loop_power(G, notloop, 2), DomainError);
}

TEST_CASE("loop enumeration over Z at radius 1 yields nine loops") {
  Group G = make_group("abelian:1");
  // every pair (g, t) in Ball(1)^2 commutes, and all are loops
  std::vector<Loop> loops = enumerate_loops(G, 1);
  CHECK(loops.size() == 9);
  for (const Loop& l : loops) {
    CHECK(is_loop(G, l.phi));
    CHECK(G.mul(l.base, l.conjugator) == G.mul(l.conjugator, l.base));
    CHECK(l.phi.v == l.conjugator);
    CHECK(source(G, l.phi) == l.base);
  }
  // graded-lex: the first loop is (e, e)
  CHECK(loops.front().phi == identity_at(G, G.identity()));
}

TEST_CASE("loop enumeration on the free group keeps only commuting pairs") {
  Group G = make_group("free:2");
  std::vector<Loop> loops = enumerate_loops(G, 1);
  // Ball(1) = {e, x, x^-1, y, y^-1}; (g,t) commutes iff both powers of one letter
  // pairs: (e,*) 5, (g,e) 4, (x,x),(x,x^-1),(x^-1,x),(x^-1,x^-1) 4, same for y: 4
  CHECK(loops.size() == 17);
  Group S3 = make_group("symmetric:3");
  for (const Loop& l : enumerate_loops(S3, 3, 16)) {
    CHECK(l.conjugator_order.finite);
  }
}

TEST_CASE("connected components via conjugacy classes") {
  Group G = make_group("symmetric:3");
  ConjugacyPartition part = G.conjugacy_classes_in_ball(3, 3);
  GroupElement s1 = el(G, "s1");
  GroupElement s2 = el(G, "s2");
  // conjugation arrow between the two transpositions stays in one component
  Morphism phi{G.mul(s2, s1), s2};
  CHECK(component_of(G, part, phi) == part.label_of(s1));
}

TEST_CASE("component lookup fails politely when the partition is too small") {
  Group G = make_group("free:2");
  ConjugacyPartition part = G.conjugacy_classes_in_ball(1, 1);
  Morphism phi{el(G, "x*y*x"), el(G, "x*y")};  // boundaries have length 3
  CHECK_THROWS_AS((void)component_of(G, part, phi), OutOfRangeError);
}
