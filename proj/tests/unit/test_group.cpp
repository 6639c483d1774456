#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/errors.hpp"
#include "helpers.hpp"

using namespace gring;
using testutil::el;
using testutil::make_group;

TEST_CASE("free group ball sizes follow 2k(2k-1)^{n-1} spheres") {
  Group G = make_group("free:2");
  const long expected[] = {1, 5, 17, 53, 161, 485, 1457};
  for (int r = 0; r <= 6; ++r) {
    Ball ball = G.enumerate_ball(r);
    CHECK(static_cast<long>(ball.size()) == expected[r]);
    CHECK_FALSE(ball.saturated);
  }
}

TEST_CASE("free abelian rank-2 ball sizes are centered squares") {
  Group G = make_group("abelian:2");
  // |Ball(r)| in Z^2 under the L1 metric: 2r^2 + 2r + 1
  for (int r = 0; r <= 8; ++r) {
    CHECK(static_cast<long>(G.enumerate_ball(r).size()) == 2L * r * r + 2 * r + 1);
  }
}

TEST_CASE("heisenberg ball sizes and selected word lengths") {
  Group G = make_group("heisenberg");
  const long expected[] = {1, 5, 17, 53, 135, 299, 593, 1069, 1793};
  for (int r = 0; r <= 8; ++r)
    CHECK(static_cast<long>(G.enumerate_ball(r).size()) == expected[r]);

  CHECK(G.word_length(el(G, "z")) == 4);        // z = [x, y] = x*y*x^-1*y^-1
  CHECK(G.word_length(el(G, "z^-1")) == 4);
  CHECK(G.word_length(el(G, "y*x")) == 2);
  CHECK(G.word_length(el(G, "x*y")) == 2);
  CHECK(G.word_length(el(G, "z^2")) == 6);
  CHECK(G.word_length(el(G, "x^2*y")) == 3);
  CHECK(G.word_length(el(G, "z^4")) == 8);
}

TEST_CASE("heisenberg word length demands ball coverage first") {
  Group G = make_group("heisenberg");
  CHECK_THROWS_AS((void)G.word_length(el(G, "z^100")), OutOfRangeError);
  CHECK(G.word_length_at_most(el(G, "z^100"), 8) == false);
}

TEST_CASE("finite groups saturate") {
  Group S3 = make_group("symmetric:3");
  Ball ball = S3.enumerate_ball(4);
  CHECK(ball.size() == 6);
  CHECK(ball.saturated);
  CHECK(S3.group_order() == std::size_t{6});

  Group D4 = make_group("dihedral:4");
  CHECK(D4.enumerate_ball(10).size() == 8);
  CHECK(D4.finite());

  Group Z6 = make_group("cyclic:6");
  Ball b6 = Z6.enumerate_ball(3);
  CHECK(b6.size() == 6);
  CHECK(b6.saturated);
}

TEST_CASE("cyclic word length wraps") {
  Group G = make_group("cyclic:6");
  CHECK(G.word_length(el(G, "x^5")) == 1);  // x^5 = x^-1
  CHECK(G.word_length(el(G, "x^3")) == 3);
  CHECK(G.word_length(el(G, "x^4")) == 2);
}

TEST_CASE("parse/print round trips on every backend") {
  for (const char* spec : {"free:2", "abelian:3", "heisenberg", "cyclic:6", "dihedral:4",
                           "symmetric:4"}) {
    Group G = make_group(spec);
    Ball ball = G.enumerate_ball(3);
    for (const GroupElement& g : ball.elements) {
      CAPTURE(spec);
      CAPTURE(G.str(g));
      CHECK(G.parse(G.str(g)) == g);
    }
  }
}

TEST_CASE("free group words reduce") {
  Group G = make_group("free:2");
  CHECK(G.str(el(G, "x*y*y^-1*x")) == "x^2");
  CHECK(G.str(el(G, "x*x^-1")) == "e");
  CHECK(G.is_identity(el(G, "e")));
  CHECK(G.mul(el(G, "x*y"), el(G, "y^-1*x^-1")) == G.identity());
  CHECK(G.str(G.inv(el(G, "x*y^2"))) == "y^-2*x^-1");
}

TEST_CASE("associativity holds exhaustively on Ball(2)") {
  for (const char* spec : {"free:2", "abelian:2", "heisenberg", "cyclic:6", "dihedral:4",
                           "symmetric:3"}) {
    Group G = make_group(spec);
    Ball ball = G.enumerate_ball(2);
    for (const GroupElement& a : ball.elements)
      for (const GroupElement& b : ball.elements)
        for (const GroupElement& c : ball.elements)
          REQUIRE(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
  }
}

TEST_CASE("inverses and identity laws on Ball(3)") {
  for (const char* spec : {"free:2", "heisenberg", "dihedral:5", "symmetric:4"}) {
    Group G = make_group(spec);
    for (const GroupElement& a : G.enumerate_ball(3).elements) {
      REQUIRE(G.mul(a, G.inv(a)) == G.identity());
      REQUIRE(G.mul(G.inv(a), a) == G.identity());
      REQUIRE(G.mul(a, G.identity()) == a);
    }
  }
}

TEST_CASE("pow matches repeated multiplication, including negatives") {
  Group G = make_group("heisenberg");
  GroupElement g = el(G, "x*y");
  GroupElement acc = G.identity();
  for (int n = 0; n <= 6; ++n) {
    CHECK(G.pow(g, n) == acc);
    CHECK(G.pow(g, -n) == G.inv(acc));
    acc = G.mul(acc, g);
  }
  Group F = make_group("free:2");
  GroupElement w = el(F, "x*y*x^-1");  // conjugate: powers stay length-3-ish
  CHECK(F.str(F.pow(w, 3)) == "x*y^3*x^-1");
  CHECK(F.str(F.pow(w, -2)) == "x*y^-2*x^-1");
}

TEST_CASE("element orders") {
  Group S4 = make_group("symmetric:4");
  CHECK(S4.element_order(el(S4, "s1")).str() == "finite(2)");
  CHECK(S4.element_order(S4.mul(el(S4, "s1"), el(S4, "s2"))).str() == "finite(3)");
  // s1*s2*s3 is a 4-cycle
  GroupElement c4 = S4.mul(S4.mul(el(S4, "s1"), el(S4, "s2")), el(S4, "s3"));
  CHECK(S4.element_order(c4).order == 4);

  Group Z6 = make_group("cyclic:6");
  CHECK(Z6.element_order(el(Z6, "x^2")).order == 3);
  CHECK(Z6.element_order(el(Z6, "x")).order == 6);

  Group D4 = make_group("dihedral:4");
  CHECK(D4.element_order(el(D4, "s")).order == 2);
  CHECK(D4.element_order(el(D4, "r")).order == 4);
  CHECK(D4.element_order(el(D4, "r*s")).order == 2);

  // Torsion-free backends never prove infinite order, they report a bound.
  Group F = make_group("free:2");
  OrderResult r = F.element_order(el(F, "x"), 64);
  CHECK_FALSE(r.finite);
  CHECK(r.str() == "exceeds-bound(64)");
  Group H = make_group("heisenberg");
  CHECK_FALSE(H.element_order(el(H, "z"), 16).finite);
  CHECK(H.element_order(H.identity()).order == 1);
}

TEST_CASE("ball budget is enforced") {
  Group G(GroupSpec::parse("free:3"), /*ball_budget=*/500);
  CHECK_THROWS_AS((void)G.enumerate_ball(5), ResourceError);
}

TEST_CASE("conjugacy classes of S3") {
  Group G = make_group("symmetric:3");
  ConjugacyPartition part = G.conjugacy_classes_in_ball(4, 4);
  REQUIRE(part.classes.size() == 3);
  std::multiset<std::size_t> sizes;
  for (const auto& cls : part.classes) sizes.insert(cls.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  // identity sits in the singleton class
  CHECK(part.label_of(G.identity()) == "e");
}

TEST_CASE("centralizer of x inside Ball(2) of the free group") {
  Group G = make_group("free:2");
  std::vector<GroupElement> cent = G.centralizer_in_ball(el(G, "x"), 2);
  std::set<std::string> words;
  for (const GroupElement& g : cent) words.insert(G.str(g));
  CHECK(words == std::set<std::string>{"e", "x", "x^-1", "x^2", "x^-2"});
}

TEST_CASE("ball ordering is graded lexicographic and deterministic") {
  Group G = make_group("abelian:2");
  Ball ball = G.enumerate_ball(2);
  REQUIRE(ball.size() == 13);
  CHECK(G.str(ball.elements[0]) == "e");
  // radius-1 sphere follows in payload order
  for (std::size_t i = 1; i <= 4; ++i) CHECK(ball.length_of(ball.elements[i]) == 1);
  for (std::size_t i = 5; i < 13; ++i) CHECK(ball.length_of(ball.elements[i]) == 2);
  CHECK(std::is_sorted(ball.elements.begin() + 1, ball.elements.begin() + 5));
  CHECK(std::is_sorted(ball.elements.begin() + 5, ball.elements.end()));
}

TEST_CASE("group spec validation") {
  CHECK_THROWS_AS(GroupSpec::parse("free:0"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("symmetric:6"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("heisenberg:2"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("unknown:1"), ParseError);
  CHECK(GroupSpec::parse("free:2").str() == "free:2");
  CHECK(GroupSpec::parse("heisenberg").str() == "heisenberg");
}

TEST_CASE("word parse errors") {
  Group G = make_group("free:2");
  CHECK_THROWS_AS((void)G.parse("q"), ParseError);
  CHECK_THROWS_AS((void)G.parse("x^"), ParseError);
  CHECK_THROWS_AS((void)G.parse("x**y"), ParseError);
  CHECK(G.parse("e^5") == G.identity());
  Group D = make_group("dihedral:4");
  CHECK(D.str(el(D, "s*r")) == "r^3*s");  // s r = r^-1 s
}

TEST_CASE("mixed-group elements are rejected") {
  Group F = make_group("free:2");
  Group A = make_group("abelian:2");
  GroupElement foreign = A.generator(0);
  CHECK_THROWS_AS((void)F.mul(F.generator(0), foreign), DomainError);
  CHECK_THROWS_AS(F.check_element(foreign), DomainError);
}
