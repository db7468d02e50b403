#include <random>

#include "artin/automorphism.hpp"
#include "artin/classifier.hpp"
#include "artin/error.hpp"
#include "artin/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace artin;
using testing_support::LinearRep;

namespace {

const DefiningGraph tri = complete_graph(3, 3);

Word W(const DefiningGraph& g, const std::string& s) { return parse_word(s, g.names); }

}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(W(tri, "a b b- c")) == W(tri, "a c"));
  CHECK(free_reduce({}).empty());
  CHECK(free_reduce(W(tri, "a a a")) == W(tri, "a a a"));
  CHECK(free_reduce(W(tri, "a b c c- b- a-")).empty());
}

TEST_CASE("word syntax round trip") {
  CHECK(W(tri, "a^3 b^-2") == W(tri, "a a a b- b-"));
  CHECK(format_word(W(tri, "a b- c"), tri.names) == "a b- c");
  CHECK(format_word({}, tri.names) == "1");
  CHECK_THROWS_AS(W(tri, "a d"), Error);
}

TEST_CASE("height") {
  CHECK(height(W(tri, "a b c")) == 3);
  CHECK(height(W(tri, "a- b")) == 0);
  CHECK(height(W(tri, "a b c a b c")) == 6);
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    Word u = testing_support::random_word(rng, 3, 10), v = testing_support::random_word(rng, 3, 10);
    CHECK(height(concat(u, v)) == height(u) + height(v));
  }
}

TEST_CASE("applying automorphisms") {
  CHECK(apply_aut(parse_automorphism(tri, "invert"), W(tri, "a b")) == W(tri, "a- b-"));
  CHECK(apply_aut(parse_automorphism(tri, "graph a>b b>a"), W(tri, "a b a")) == W(tri, "b a b"));
  CHECK(apply_aut(parse_automorphism(tri, "conj c; graph a>b b>c c>a"), W(tri, "a")) == W(tri, "c b c-"));
  CHECK_THROWS_AS(parse_automorphism(tri, "graph a>b"), Error);
  CHECK_THROWS_AS(parse_automorphism(tri, "rotate"), Error);
}

TEST_CASE("normalized automorphism triples") {
  ArtinAutomorphism a = normalize_aut(tri, "invert; conj a");
  CHECK(a.conj == W(tri, "a"));
  CHECK(a.sigma.is_identity());
  CHECK(a.eps == 1);
  ArtinAutomorphism u = normalize_aut(tri, "conj a b"), v = normalize_aut(tri, "conj c- a");
  ArtinAutomorphism uv = compose_auts(u, v);
  CHECK(uv.conj == W(tri, "a b c- a"));
  CHECK(uv.sigma.is_identity());
  CHECK(uv.eps == 0);
}

TEST_CASE("composition acts as composition of maps") {
  std::mt19937 rng(5);
  auto sigmas = graph_automorphisms(tri);
  auto random_aut = [&] {
    return ArtinAutomorphism{testing_support::random_word(rng, 3, 4), sigmas[rng() % sigmas.size()],
                             static_cast<int>(rng() % 2)};
  };
  for (int i = 0; i < 300; ++i) {
    ArtinAutomorphism g1 = random_aut(), g2 = random_aut();
    Word w = testing_support::random_word(rng, 3, 8);
    CHECK(free_reduce(apply_aut(compose_auts(g1, g2), w)) == free_reduce(apply_aut(g1, apply_aut(g2, w))));
    CHECK(free_reduce(apply_aut(compose_auts(inverse_aut(g1), g1), w)) == free_reduce(w));
  }
}

TEST_CASE("abelianization vectors") {
  CHECK(abelianization_vector(tri, W(tri, "a b c")) == std::vector<long>{3});
  DefiningGraph e4 = edge_graph(4);
  CHECK(abelianization_vector(e4, W(e4, "a b-")) == std::vector<long>{1, -1});
  Word raw = W(tri, "a b b- c a- a");
  CHECK(abelianization_vector(tri, raw) == abelianization_vector(tri, free_reduce(raw)));
}

TEST_CASE("word equality examples") {
  DefiningGraph e3 = edge_graph(3), e4 = edge_graph(4);
  EqualityVerdict r = word_equal(e3, W(e3, "a b a"), W(e3, "b a b"));
  CHECK(r.equal());
  CHECK(check_verdict(e3, W(e3, "a b a"), W(e3, "b a b"), r));
  EqualityVerdict n4 = word_equal(e4, W(e4, "a"), W(e4, "b"));
  CHECK(n4.not_equal());
  CHECK(n4.invariant == "abelianization");
  // Heights and abelianization agree; the dihedral normal form separates them even with no budget.
  EqualityVerdict n3 = word_equal(e3, W(e3, "a"), W(e3, "b"), 0);
  CHECK(n3.not_equal());
  CHECK(n3.invariant == "dihedral_nf");
}

TEST_CASE("fixedness examples") {
  DefiningGraph e3 = edge_graph(3), e4 = edge_graph(4);
  CHECK(is_fixed(e3, parse_automorphism(e3, "graph a>b b>a"), W(e3, "a b a")).equal());
  EqualityVerdict iota = is_fixed(tri, parse_automorphism(tri, "invert"), W(tri, "a"));
  CHECK(iota.not_equal());
  CHECK(iota.invariant == "height");
  CHECK(is_fixed(e4, parse_automorphism(e4, "graph a>b b>a; invert"), W(e4, "a b a- b-")).equal());
}

TEST_CASE("oracle agrees with an independent linear representation") {
  std::vector<DefiningGraph> graphs = {
      tri, complete_graph(3, 4), complete_graph(4, 3),
      validate_graph("edge a b 3\nedge b c 4\nedge c d 5\nedge d a 6"),
      validate_graph("edge a b 5\nedge b c 3\nvertex d\nvertex a\nvertex b\nvertex c")};
  unsigned seed = 1;
  for (const auto& g : graphs) {
    LinearRep rep(g, seed++);
    REQUIRE(rep.relations_hold(g));
    std::mt19937 rng(seed);
    for (int i = 0; i < 150; ++i) {
      Word u = testing_support::random_word(rng, g.size(), 12);
      Word v = testing_support::insert_relators(rng, g, u, 3);
      EqualityVerdict eq = word_equal(g, u, v);
      CHECK(eq.equal());
      CHECK(check_verdict(g, u, v, eq));
      Word x = testing_support::random_word(rng, g.size(), 12);
      EqualityVerdict r = word_equal(g, u, x);
      REQUIRE(r.verdict != Verdict::UNKNOWN);
      CHECK(r.equal() == rep.same(u, x));
      CHECK(check_verdict(g, u, x, r));
      CHECK(word_equal(g, x, u).verdict == r.verdict);
      if (r.equal()) {
        CHECK(height(u) == height(x));
        CHECK(abelianization_vector(g, u) == abelianization_vector(g, x));
      }
    }
  }
}

TEST_CASE("small budgets refine to UNKNOWN only") {
  std::mt19937 rng(9);
  for (int i = 0; i < 100; ++i) {
    Word u = testing_support::random_word(rng, 3, 10);
    Word v = rng() % 2 ? testing_support::insert_relators(rng, tri, u, 2) : testing_support::random_word(rng, 3, 10);
    Verdict full = word_equal(tri, u, v).verdict;
    CHECK(word_equal(tri, u, u).equal());
    for (long b : {0L, 5L, 50L}) {
      Verdict part = word_equal(tri, u, v, b).verdict;
      CHECK((part == full || part == Verdict::UNKNOWN));
    }
  }
}

TEST_CASE("fixedness is carried along isogredience") {
  std::mt19937 rng(21);
  auto sigmas = graph_automorphisms(tri);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    ArtinAutomorphism g{testing_support::random_word(rng, 3, 3), sigmas[rng() % sigmas.size()],
                        static_cast<int>(rng() % 2)};
    Word w = twisted_z(g);  // always fixed
    REQUIRE(is_fixed(tri, g, w).equal());
    Word h = testing_support::random_word(rng, 3, 4);
    ArtinAutomorphism c = conjugate_aut(g, h);
    CHECK(is_fixed(tri, c, concat({h, w, inverse(h)})).equal());
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("twisted products") {
  DefiningGraph e = edge_graph(3);
  CHECK(free_reduce(twisted_z(normalize_aut(e, "conj a b; invert"))) == W(e, "a b a- b-"));
  CHECK(twisted_z(normalize_aut(tri, "conj a c")) == W(tri, "a c"));
  ArtinAutomorphism g = normalize_aut(tri, "conj a b c a b c a b; graph a>c c>b b>a");
  CHECK(psi_order(g) == 3);
  Word z = twisted_z(g);
  CHECK(is_fixed(tri, g, z).equal());
  CHECK(word_equal(tri, concat(z, W(tri, "a b c a b c")), concat(W(tri, "a b c a b c"), z)).equal());
}

TEST_CASE("canonical word is the least geodesic in the rewriting closure") {
  std::vector<DefiningGraph> graphs = {tri, complete_graph(3, 4), edge_graph(5),
                                       validate_graph("vertex a\nvertex b\nvertex c\nvertex d\nvertex e\nedge a b 3\nedge b c inf\nedge c d 4")};
  std::mt19937 rng(31);
  for (const auto& g : graphs) {
    Rewriter rw(g);
    for (int i = 0; i < 120; ++i) {
      Word w = testing_support::random_word(rng, g.size(), 12);
      bool complete = false;
      auto cl = rw.geodesic_closure(rw.geodesic(w), 100000, &complete);
      REQUIRE(complete);
      Word c = rw.canonical(w);
      CHECK(c == *std::min_element(cl.begin(), cl.end(), lex_less));
      CHECK(word_equal(g, c, w).equal());
    }
  }
}
