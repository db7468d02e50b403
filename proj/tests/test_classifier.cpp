#include <random>

#include "artin/classifier.hpp"
#include "artin/dihedral.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace artin;

namespace {

const DefiningGraph tri = complete_graph(3, 3);

Word W(const std::string& s) { return parse_word(s, tri.names); }

bool same_gens(const DefiningGraph& g, const std::vector<Word>& got, const std::vector<std::string>& want) {
  if (got.size() != want.size()) return false;
  for (size_t i = 0; i < got.size(); ++i)
    if (!word_equal(g, got[i], parse_word(want[i], g.names)).equal()) return false;
  return true;
}

bool all_fixed(const DefiningGraph& g, const ArtinAutomorphism& a, const FixReport& r) {
  for (const Word& w : r.generators)
    if (!is_fixed(g, a, w).equal()) return false;
  return true;
}

}  // namespace

TEST_CASE("rank bound") {
  CHECK(rank_bound(2) == 2);
  CHECK(rank_bound(3) == 5);
  CHECK(rank_bound(4) == 10);
  CHECK(rank_bound(5) == 17);
}

TEST_CASE("ellipticity examples") {
  Ellipticity s = ellipticity(tri, normalize_aut(tri, "graph a>c c>a"));
  CHECK(s.motion == Motion::ELLIPTIC);
  CHECK(s.vertex.h.empty());
  CHECK(s.vertex.S.empty());

  CHECK(ellipticity(tri, normalize_aut(tri, "conj a b c a b c")).motion == Motion::HYPERBOLIC);

  Ellipticity e = ellipticity(tri, normalize_aut(tri, "conj a b a- b-; graph a>b b>a"));
  REQUIRE(e.motion == Motion::ELLIPTIC);
  // The fixed vertex h v_S found satisfies the coset equation h^-1 g psi(h) in A_S.
  ArtinAutomorphism a = normalize_aut(tri, "conj a b a- b-; graph a>b b>a");
  Rewriter rw(tri);
  Word twisted = concat({inverse(e.vertex.h), a.conj, apply_psi(a.sigma, a.eps, e.vertex.h)});
  CHECK(rw.in_parabolic(twisted, e.vertex.S));
}

TEST_CASE("isogredience reduction cases") {
  auto reduce = [](const std::string& s) {
    ArtinAutomorphism a = normalize_aut(tri, s);
    return reduce_isogredience(tri, a, ellipticity(tri, a));
  };
  Reduction s = reduce("graph a>b b>a");
  CHECK(s.kind == ReductionCase::BASE_PSI);
  CHECK(s.witness.empty());

  DefiningGraph star = validate_graph("edge a b 3\nedge a c 3");
  ArtinAutomorphism a3 = normalize_aut(star, "conj a^3; graph b>c c>b");
  Reduction p = reduce_isogredience(star, a3, ellipticity(star, a3));
  CHECK(p.kind == ReductionCase::GENERATOR_POWER);
  CHECK(p.a == 0);
  CHECK(p.k == 3);
  CHECK(p.witness.empty());

  Reduction d = reduce("conj c a b a b a b c-");
  CHECK(d.kind == ReductionCase::DIHEDRAL_VERTEX);
  CHECK(d.witness == W("c"));

  ArtinAutomorphism hyp = normalize_aut(tri, "conj a b c a b c");
  CHECK_THROWS(reduce_isogredience(tri, hyp, ellipticity(tri, hyp)));
}

TEST_CASE("elliptic examples") {
  FixReport s = classify(tri, normalize_aut(tri, "graph a>b b>a"));
  CHECK(s.tag == FixTag::ARTIN_FREE_PRODUCT);
  CHECK(same_gens(tri, s.generators, {"c", "a b a"}));

  DefiningGraph e4 = edge_graph(4);
  ArtinAutomorphism si = normalize_aut(e4, "graph a>b b>a; invert");
  FixReport f = classify(e4, si);
  CHECK(f.tag == FixTag::Z);
  CHECK(same_gens(e4, f.generators, {"a b a- b-"}));
  // The same case inside a larger graph goes through the elliptic classification.
  DefiningGraph sq = validate_graph("edge a b 4\nedge b c 3\nedge c d 4\nedge d a 3");
  ArtinAutomorphism sw = normalize_aut(sq, "graph a>b b>a c>d d>c; invert");
  FixReport fr = classify(sq, sw);
  CHECK(fr.tag == FixTag::FREE);
  CHECK(fr.rank == 2);
  CHECK(same_gens(sq, fr.generators, {"a b a- b-", "c d c- d-"}));

  ArtinAutomorphism pa = normalize_aut(tri, "conj a");
  FixReport za = classify(tri, pa);
  CHECK(za.tag == FixTag::Z_CROSS_F);
  CHECK(za.generators.size() == 5);
  CHECK(all_fixed(tri, pa, za));

  ArtinAutomorphism pai = normalize_aut(tri, "conj a; invert");
  FixReport fa = classify(tri, pai);
  CHECK(fa.tag == FixTag::FREE);
  CHECK(fa.rank == 1);
  REQUIRE(fa.generators.size() == 1);
  CHECK(height(fa.generators[0]) == 0);
  CHECK(all_fixed(tri, pai, fa));
}

TEST_CASE("hyperbolic examples") {
  ArtinAutomorphism q2 = normalize_aut(tri, "conj a b c a b c a b c a b c");
  FixReport r = classify(tri, q2);
  CHECK(r.tag == FixTag::DIHEDRAL_A4);
  CHECK(same_gens(tri, r.generators, {"b", "a b c"}));

  ArtinAutomorphism cyc = normalize_aut(tri, "conj a b c a b c a b; graph a>c b>a c>b");
  FixReport rc = classify(tri, cyc);
  CHECK(rc.tag == FixTag::DIHEDRAL_A4);
  CHECK(same_gens(tri, rc.generators, {"b", "a b c"}));
  CHECK(all_fixed(tri, cyc, rc));

  for (std::string s : {"conj a b c a b c; invert", "conj a b c a b c; graph a>b b>a; invert"}) {
    ArtinAutomorphism a = normalize_aut(tri, s);
    FixReport z = classify(tri, a);
    CHECK(z.tag == FixTag::Z);
    for (const Word& w : z.generators) CHECK(height(w) == 0);
  }
}

TEST_CASE("verification of reports") {
  for (std::string s : {"conj a b c a b c", "graph a>b b>a", "conj a", "conj a b a c", "conj a b a b"}) {
    ArtinAutomorphism a = normalize_aut(tri, s);
    Verification v = verify_report(tri, a, classify(tri, a));
    CHECK_MESSAGE(v.ok, s);
  }
  // A wrong claim is rejected: b is not fixed by phi_a.
  ArtinAutomorphism a = normalize_aut(tri, "conj a");
  FixReport bad;
  bad.tag = FixTag::Z;
  bad.generators = {W("b")};
  CHECK_FALSE(verify_report(tri, a, bad).ok);
  // A Z2 claim with non-commuting generators is rejected.
  FixReport nc;
  nc.tag = FixTag::Z2;
  nc.generators = {W("a"), W("b c b-")};
  CHECK_FALSE(verify_report(tri, a, nc).ok);
}

TEST_CASE("centralizer cases") {
  CentralizerResult ex = centralizer_case(tri, W("a b c a b c"));
  CHECK(ex.tag == CentralizerCase::HYP_EXOTIC);
  CHECK(same_gens(tri, ex.generators, {"b", "a b c"}));

  CentralizerResult t1 = centralizer_case(tri, W("a"));
  CHECK(t1.tag == CentralizerCase::TYPE1_TREE);
  CHECK(t1.generators.size() == 5);

  DefiningGraph g = validate_graph("edge a b 4\nedge b c 3\nedge a c 3");
  CentralizerResult t2 = centralizer_case(g, parse_word("a b a b", g.names));
  CHECK(t2.tag == CentralizerCase::TYPE2_VERTEX);
  CHECK(same_gens(g, t2.generators, {"a", "b"}));

  CentralizerResult ax = centralizer_case(tri, W("a b a c"));
  CHECK(ax.tag == CentralizerCase::HYP_TRANSVERSE);
  for (const Word& w : ax.generators) CHECK(word_equal(tri, concat(w, W("a b a c")), concat(W("a b a c"), w)).equal());
}

TEST_CASE("twisted product is fixed and hyperbolic reports commute with it") {
  std::mt19937 rng(17);
  auto sigmas = graph_automorphisms(tri);
  int hyperbolic = 0;
  for (int i = 0; i < 40; ++i) {
    ArtinAutomorphism a{testing_support::random_word(rng, 3, 5), sigmas[rng() % sigmas.size()],
                        static_cast<int>(rng() % 2)};
    a.conj = free_reduce(a.conj);
    Word z = twisted_z(a);
    CHECK(is_fixed(tri, a, z).equal());
    FixReport r = classify(tri, a);
    CHECK(r.generators.size() <= static_cast<size_t>(rank_bound(3)));
    if (r.confidence == Confidence::PROVEN) CHECK(all_fixed(tri, a, r));
    if (a.eps == 1)
      for (const Word& w : r.generators) CHECK(height(w) == 0);
    if (ellipticity(tri, a).motion == Motion::HYPERBOLIC) {
      ++hyperbolic;
      for (const Word& w : r.generators) CHECK(word_equal(tri, concat(w, z), concat(z, w)).equal());
    }
  }
  CHECK(hyperbolic > 0);
}

TEST_CASE("single edges agree with the exact edge-group computation") {
  for (int m : {3, 4, 5, 6}) {
    DefiningGraph g = edge_graph(m);
    for (std::string s : {"graph a>b b>a", "invert", "conj a b", "conj a; graph a>b b>a; invert"}) {
      ArtinAutomorphism a = normalize_aut(g, s);
      FixReport r = classify(g, a);
      FixReport d = dihedral_fix(m, a);
      CHECK(subgroup_ball(m, r, 6) == subgroup_ball(m, d, 6));
      CHECK(verify_report(g, a, r).ok);
    }
  }
}
