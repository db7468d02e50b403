#pragma once

#include <string>
#include <utility>
#include <vector>

#include "artin/automorphism.hpp"
#include "artin/garside.hpp"
#include "artin/presentation.hpp"
#include "artin/report.hpp"
#include "artin/word.hpp"

namespace artin {

// Elements of the edge group on generators a (0) and b (1) with label m >= 3.
class DihedralGroup {
 public:
  explicit DihedralGroup(int m);

  int m() const { return m_; }
  int n() const { return m_ / 2; }  // m = 2n or 2n + 1
  bool even() const { return m_ % 2 == 0; }
  const DefiningGraph& graph() const { return graph_; }

  Word delta() const { return delta_word(m_); }
  // Generator of the centre: Delta for even m, Delta^2 for odd m.
  Word center() const { return even() ? delta() : power(delta(), 2); }

  GarsideNF nf(const Word& w) const { return garside_nf(m_, w); }
  bool equal(const Word& u, const Word& v) const { return nf(u) == nf(v); }
  bool is_central(const Word& w) const;

 private:
  int m_;
  DefiningGraph graph_;
};

// Conversions between the Artin letters and the two alternative presentations:
// even m = 2n: <x,t | t x^n t^-1 = x^n>, x = ab, t = b;
// odd m = 2n+1: <x,y | x^2 = y^m>, x = Delta, y = ab.
// Letter 0 is x, letter 1 is t or y.
enum class Conversion { ARTIN_TO_BS, BS_TO_ARTIN, ARTIN_TO_TORUS, TORUS_TO_ARTIN };
Word convert(int m, const Word& w, Conversion c);

// Quotient by the centre: Z_n * Z (factors x, t) for even m, Z_2 * Z_m (factors x, y) for odd m.
// Syllables alternate between the two factors; finite-factor exponents lie in [1, order).
struct QuotientElem {
  std::vector<std::pair<int, long>> syl;
  bool operator==(const QuotientElem& o) const { return syl == o.syl; }
};
long factor_order(int m, int factor);  // 0 for the infinite factor
QuotientElem project(int m, const Word& w);
QuotientElem quotient_mul(int m, const QuotientElem& u, const QuotientElem& v);
QuotientElem quotient_inverse(int m, const QuotientElem& u);
Word lift(int m, const QuotientElem& q);
// Writes q = h c h^-1 with c cyclically reduced.
void cyclic_reduce(int m, const QuotientElem& q, QuotientElem& h, QuotientElem& c);

// Britton normal form x^E t^{d1} x^{e1} ... t^{dr} x^{er} for <x,t | t x^n t^-1 = x^n>:
// x^n is central and carried into E, every e_i lies in [0,n), interior e_i are nonzero.
struct BrittonNF {
  long E = 0;
  std::vector<std::pair<long, long>> syl;  // (d_i, e_i)
  bool operator==(const BrittonNF& o) const { return E == o.E && syl == o.syl; }
  bool operator<(const BrittonNF& o) const { return E != o.E ? E < o.E : syl < o.syl; }
};
BrittonNF britton_nf(int n, const Word& bs);
void britton_mul(int n, BrittonNF& nf, Letter l);
Word britton_word(const BrittonNF& nf);

// Outer classes of the inducible automorphisms in the even presentation:
// AB: x -> x^-1, t -> t^-1;  AG: x -> x^-1, t -> t x^-1;  BG: x -> x, t -> t^-1 x.
enum class BSClass { ID, AB, AG, BG };
const char* bs_class_name(BSClass c);
struct BSAutClass {
  BSClass cls = BSClass::ID;
  Word inner;  // h in the x,t letters; the automorphism is phi_h rho
};
Word apply_bs_class(BSClass c, const Word& bs);
BSAutClass outer_class(int m, const ArtinAutomorphism& a);
bool is_finite_order(int m, const ArtinAutomorphism& a);

// Bass-Serre tree of the even presentation. A vertex g<x> is keyed by the Britton form of
// g with the trailing x-power removed and E reduced mod n.
BrittonNF tree_vertex(int n, const Word& bs);
long tree_depth(const BrittonNF& v);
std::vector<BrittonNF> tree_neighbours(int n, const BrittonNF& v);
BrittonNF tree_act(int n, const BSAutClass& a, const BrittonNF& v);
// Edges are oriented from g<x> to g t<x>; returns true when (u, v) is such an edge.
bool tree_oriented(int n, const BrittonNF& u, const BrittonNF& v);

struct TreeFixedSet {
  std::vector<BrittonNF> ball;
  std::vector<BrittonNF> vertices;                           // fixed vertices
  std::vector<std::pair<BrittonNF, BrittonNF>> midpoints;    // inverted edges
};
TreeFixedSet tree_fixed_set(int m, const ArtinAutomorphism& a, int radius);
// Vertices on the axis of a hyperbolic element s within the ball of the given radius.
std::vector<BrittonNF> tree_axis(int n, const Word& s_bs, int radius);
std::string tree_to_dot(int m, const TreeFixedSet& t);

// Fixed-element generators of the class AG automorphism phi_{x^k} rho_AG.
Word ag_axis_generator(int n, long k);

enum class CentralizerTag { CENTRAL, ELLIPTIC_Z, HYPERBOLIC_Z2 };
const char* centralizer_tag_name(CentralizerTag t);
struct DihedralCentralizer {
  CentralizerTag tag;
  std::vector<Word> generators;  // {a, b}, {c} or {r, z}
};
DihedralCentralizer dihedral_centralizer(int m, const Word& g);

// Exact fixed subgroup of an inducible automorphism of the edge group.
FixReport dihedral_fix(int m, const ArtinAutomorphism& a, long budget = kDefaultBudget);

// Every element with normal-form length <= bound that the automorphism fixes.
std::vector<GarsideNF> brute_fixed(int m, const ArtinAutomorphism& a, long bound);
// Elements of the subgroup named by a report with normal-form length <= bound.
// `complete` is cleared when the enumeration window may have missed elements.
std::vector<GarsideNF> subgroup_ball(int m, const FixReport& r, long bound, bool* complete = nullptr);

}  // namespace artin
