#include <map>
#include <random>
#include <set>

#include "artin/dihedral.hpp"
#include "artin/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace artin;
using testing_support::LinearRep;

namespace {

const std::vector<std::string> bs_names{"x", "t"};

Word A(int m, const std::string& s) { return parse_word(s, edge_graph(m).names); }
Word X(const std::string& s) { return parse_word(s, bs_names); }

ArtinAutomorphism aut(int m, const std::string& s) { return parse_automorphism(edge_graph(m), s); }

}  // namespace

TEST_CASE("Garside normal forms") {
  CHECK(garside_nf(3, A(3, "a b a")) == garside_nf(3, A(3, "b a b")));
  DihedralGroup d4(4);
  Word a = A(4, "a");
  CHECK(d4.nf(concat(d4.delta(), a)) == d4.nf(concat(a, d4.delta())));
  DihedralGroup d5(5);
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    Word w = testing_support::random_word(rng, 2, 12);
    CHECK(d5.nf(concat(d5.center(), w)) == d5.nf(concat(w, d5.center())));
  }
}

TEST_CASE("normal forms are multiplicative") {
  for (int m = 3; m <= 6; ++m) {
    std::mt19937 rng(m);
    for (int i = 0; i < 200; ++i) {
      Word u = testing_support::random_word(rng, 2, 10), v = testing_support::random_word(rng, 2, 10);
      Word nu = nf_to_word(m, garside_nf(m, u)), nv = nf_to_word(m, garside_nf(m, v));
      CHECK(garside_nf(m, concat(u, v)) == garside_nf(m, concat(nu, nv)));
      CHECK(garside_nf(m, nu) == garside_nf(m, u));
    }
  }
}

TEST_CASE("normal forms, the oracle and a linear representation agree on short words") {
  for (int m = 3; m <= 6; ++m) {
    DefiningGraph g = edge_graph(m);
    LinearRep rep(g, 100 + m);
    REQUIRE(rep.relations_hold(g));
    auto words = testing_support::all_words(2, 6);
    // Classes by normal form must coincide with classes by matrix image.
    std::map<GarsideNF, LinearRep::Mat> by_nf;
    std::map<LinearRep::Mat, GarsideNF> by_mat;
    int mismatches = 0;
    for (const Word& w : words) {
      GarsideNF nf = garside_nf(m, w);
      auto img = rep.image(w);
      auto [i, fresh] = by_nf.emplace(nf, img);
      if (!fresh && i->second != img) ++mismatches;
      auto [j, fresh2] = by_mat.emplace(img, nf);
      if (!fresh2 && !(j->second == nf)) ++mismatches;
    }
    CHECK(mismatches == 0);
    // All pairs of words of length <= 4 through the oracle.
    auto small = testing_support::all_words(2, 4);
    int wrong = 0;
    for (size_t i = 0; i < small.size(); ++i)
      for (size_t j = i; j < small.size(); ++j) {
        bool same = garside_nf(m, small[i]) == garside_nf(m, small[j]);
        EqualityVerdict r = word_equal(g, small[i], small[j]);
        if (r.equal() != same || r.verdict == Verdict::UNKNOWN) ++wrong;
      }
    CHECK(wrong == 0);
  }
}

TEST_CASE("presentation conversions") {
  CHECK(convert(4, A(4, "a b"), Conversion::ARTIN_TO_BS) == X("x"));
  CHECK(word_equal(edge_graph(4), convert(4, X("x t-"), Conversion::BS_TO_ARTIN), A(4, "a")).equal());
  CHECK(convert(5, A(5, "a b"), Conversion::ARTIN_TO_TORUS) == parse_word("y", {"x", "y"}));
  for (int m = 3; m <= 8; ++m) {
    std::mt19937 rng(m);
    bool even = m % 2 == 0;
    for (int i = 0; i < 50; ++i) {
      Word w = testing_support::random_word(rng, 2, 10);
      Word there = convert(m, w, even ? Conversion::ARTIN_TO_BS : Conversion::ARTIN_TO_TORUS);
      Word back = convert(m, there, even ? Conversion::BS_TO_ARTIN : Conversion::TORUS_TO_ARTIN);
      CHECK(garside_nf(m, back) == garside_nf(m, w));
    }
  }
}

TEST_CASE("Britton normal forms") {
  CHECK(britton_nf(2, X("t x^2 t-")) == britton_nf(2, X("x^2")));
  BrittonNF pinch_free = britton_nf(2, X("t x t-"));
  CHECK(britton_word(pinch_free) == X("t x t-"));
  CHECK(britton_nf(3, X("x^3 t x t x^-3")) == britton_nf(3, X("t x t")));
  // Britton forms separate exactly the elements separated by Garside forms.
  for (int n : {2, 3, 4}) {
    int m = 2 * n;
    std::mt19937 rng(n);
    for (int i = 0; i < 200; ++i) {
      Word u = testing_support::random_word(rng, 2, 8), v = testing_support::random_word(rng, 2, 8);
      if (i % 2) v = testing_support::insert_relators(rng, edge_graph(m), u, 2);
      bool nf_eq = garside_nf(m, u) == garside_nf(m, v);
      bool br_eq = britton_nf(n, convert(m, u, Conversion::ARTIN_TO_BS)) ==
                   britton_nf(n, convert(m, v, Conversion::ARTIN_TO_BS));
      CHECK(nf_eq == br_eq);
    }
  }
}

TEST_CASE("outer classes of the even dihedral automorphisms") {
  BSAutClass iota = outer_class(4, aut(4, "invert"));
  CHECK(iota.cls == BSClass::AB);
  CHECK(britton_nf(2, iota.inner) == britton_nf(2, X("t")));
  BSAutClass sigma = outer_class(4, aut(4, "graph a>b b>a"));
  CHECK(sigma.cls == BSClass::BG);
  CHECK(britton_nf(2, sigma.inner) == britton_nf(2, X("t")));
  CHECK(outer_class(4, aut(4, "graph a>b b>a; invert")).cls == BSClass::AG);
  // The class description reproduces the automorphism on generators.
  for (int m : {4, 6, 8}) {
    int n = m / 2;
    for (std::string s : {"invert", "graph a>b b>a", "graph a>b b>a; invert", "conj a b- a; invert",
                          "conj b a; graph a>b b>a", "conj a b a"}) {
      ArtinAutomorphism a = aut(m, s);
      BSAutClass c = outer_class(m, a);
      for (Word w : {A(m, "a"), A(m, "b")}) {
        Word lhs = convert(m, apply_aut(a, w), Conversion::ARTIN_TO_BS);
        Word rhs = concat({c.inner, apply_bs_class(c.cls, convert(m, w, Conversion::ARTIN_TO_BS)), inverse(c.inner)});
        CHECK(britton_nf(n, lhs) == britton_nf(n, rhs));
      }
    }
  }
}

TEST_CASE("finite order") {
  CHECK(is_finite_order(4, aut(4, "graph a>b b>a")));
  CHECK(is_finite_order(4, aut(4, "invert")));
  // x = ab has x^2 central, so phi_x squared is the identity.
  CHECK(is_finite_order(4, aut(4, "conj a b")));
  CHECK_FALSE(is_finite_order(4, aut(4, "conj b")));
  CHECK(is_finite_order(4, aut(4, "conj a b a b")));
}

TEST_CASE("centralizers in the even edge group") {
  auto c1 = dihedral_centralizer(4, A(4, "a b a b"));
  CHECK(c1.tag == CentralizerTag::CENTRAL);
  auto c2 = dihedral_centralizer(4, A(4, "a b"));
  CHECK(c2.tag == CentralizerTag::ELLIPTIC_Z);
  REQUIRE(c2.generators.size() == 1);
  CHECK(garside_nf(4, c2.generators[0]) == garside_nf(4, A(4, "a b")));
  auto c3 = dihedral_centralizer(4, A(4, "b"));
  CHECK(c3.tag == CentralizerTag::HYPERBOLIC_Z2);
  REQUIRE(c3.generators.size() == 2);
  DihedralGroup d(4);
  for (const Word& w : c3.generators) CHECK(d.equal(concat(w, A(4, "b")), concat(A(4, "b"), w)));
  std::set<GarsideNF> gens{garside_nf(4, c3.generators[0]), garside_nf(4, c3.generators[1])};
  CHECK(gens.count(garside_nf(4, A(4, "b"))));
  CHECK(gens.count(garside_nf(4, A(4, "a b a b"))));
}

TEST_CASE("fixed subgroups of edge-group automorphisms") {
  auto gens_are = [](int m, const FixReport& r, const std::string& w) {
    REQUIRE(r.generators.size() == 1);
    Word g = r.generators[0], e = A(m, w);
    return garside_nf(m, g) == garside_nf(m, e) || garside_nf(m, g) == garside_nf(m, inverse(e));
  };
  FixReport s4 = dihedral_fix(4, aut(4, "graph a>b b>a; invert"));
  CHECK(s4.tag == FixTag::Z);
  CHECK(gens_are(4, s4, "a b a- b-"));
  FixReport s6 = dihedral_fix(6, aut(6, "graph a>b b>a; invert"));
  CHECK(s6.tag == FixTag::Z);
  CHECK(gens_are(6, s6, "b a b a- b- a-"));
  FixReport d5 = dihedral_fix(5, aut(5, "conj a b a b a"));
  CHECK(d5.tag == FixTag::Z);
  CHECK(gens_are(5, d5, "a b a b a"));
  FixReport ab = dihedral_fix(4, aut(4, "conj a b; invert"));
  CHECK(ab.tag == FixTag::Z);
  CHECK(gens_are(4, ab, "a b a- b-"));
  for (const FixReport* r : {&s4, &s6, &d5, &ab}) CHECK(r->confidence == Confidence::PROVEN);
}

TEST_CASE("fixed subgroups equal brute force on a small ball and commute with z") {
  for (int m = 3; m <= 6; ++m) {
    DefiningGraph g = edge_graph(m);
    for (std::string s : {"graph a>b b>a", "invert", "conj a", "conj a b; invert", "conj a; graph a>b b>a; invert"}) {
      ArtinAutomorphism a = aut(m, s);
      FixReport r = dihedral_fix(m, a);
      bool complete = true;
      CHECK(brute_fixed(m, a, 6) == subgroup_ball(m, r, 6, &complete));
      CHECK(complete);
      Word z = twisted_z(a);
      for (const Word& w : r.generators) {
        CHECK(is_fixed(g, a, w).equal());
        CHECK(word_equal(g, concat(w, z), concat(z, w)).equal());
      }
    }
  }
}

TEST_CASE("brute-force fixed elements") {
  auto only_one = brute_fixed(3, aut(3, "invert"), 6);
  REQUIRE(only_one.size() == 1);
  CHECK(only_one[0] == GarsideNF{});
  CHECK(brute_fixed(4, ArtinAutomorphism::identity(2), 5) == enumerate_nfs(4, 5));
  // sigma iota on m = 4: exactly the powers of a b a- b- in the ball.
  auto fixed = brute_fixed(4, aut(4, "graph a>b b>a; invert"), 6);
  FixReport r;
  r.tag = FixTag::Z;
  r.generators = {A(4, "a b a- b-")};
  CHECK(fixed == subgroup_ball(4, r, 6));
}

TEST_CASE("Bass-Serre tree fixed sets") {
  // sigma on m = 4 fixes only the midpoint of one edge.
  TreeFixedSet s = tree_fixed_set(4, aut(4, "graph a>b b>a"), 3);
  CHECK(s.vertices.empty());
  CHECK(s.midpoints.size() == 1);
  TreeFixedSet id = tree_fixed_set(4, ArtinAutomorphism::identity(2), 3);
  CHECK(id.vertices.size() == id.ball.size());
  // Odd n, class AG with k = 0: the axis of t x t x^-2.
  ArtinAutomorphism ag{{}, GraphAutomorphism{{1, 0}}, 1};
  Word s30 = ag_axis_generator(3, 0);
  CHECK(britton_nf(3, s30) == britton_nf(3, X("t x t x^-2")));
  TreeFixedSet f = tree_fixed_set(6, ag, 4);
  CHECK(f.vertices == tree_axis(3, s30, 4));
}

TEST_CASE("tree action: inner automorphisms act by left multiplication and orientation follows the class") {
  for (int n : {2, 3}) {
    int m = 2 * n;
    TreeFixedSet ball = tree_fixed_set(m, ArtinAutomorphism::identity(2), 3);
    std::mt19937 rng(n);
    for (int i = 0; i < 20; ++i) {
      Word g = testing_support::random_word(rng, 2, 5);
      BSAutClass inner{BSClass::ID, g};
      for (const auto& v : ball.ball) {
        Word rep = britton_word(v);
        CHECK(tree_act(n, inner, v) == tree_vertex(n, concat(g, rep)));
      }
    }
    for (BSClass c : {BSClass::ID, BSClass::AB, BSClass::AG, BSClass::BG}) {
      BSAutClass a{c, {}};
      bool preserves = c == BSClass::ID || c == BSClass::AG;
      int bad = 0;
      for (const auto& u : ball.ball)
        for (const auto& v : tree_neighbours(n, u)) {
          if (!tree_oriented(n, u, v)) continue;
          bool kept = tree_oriented(n, tree_act(n, a, u), tree_act(n, a, v));
          if (kept != preserves) ++bad;
        }
      CHECK(bad == 0);
    }
  }
}
