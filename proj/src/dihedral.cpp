#include "artin/dihedral.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "artin/error.hpp"
#include "artin/geodesic.hpp"

namespace artin {

namespace {

const Letter kA = make_letter(0, 1), kB = make_letter(1, 1);
const Letter kX = make_letter(0, 1), kT = make_letter(1, 1);

long mod(long a, long n) { return ((a % n) + n) % n; }

Word ab_word() { return {kA, kB}; }

}  // namespace

DihedralGroup::DihedralGroup(int m) : m_(m), graph_(edge_graph(m)) {
  if (m < 3) throw Error(ErrorCode::COEFFICIENT_BELOW_3, "dihedral label " + std::to_string(m));
}

bool DihedralGroup::is_central(const Word& w) const {
  GarsideNF f = nf(w);
  return f.P.empty() && (even() || f.p % 2 == 0);
}

// ---------------------------------------------------------------------------
// Presentation conversions

Word convert(int m, const Word& w, Conversion c) {
  bool even = m % 2 == 0;
  bool wants_even = c == Conversion::ARTIN_TO_BS || c == Conversion::BS_TO_ARTIN;
  if (even != wants_even)
    throw Error(ErrorCode::PARITY_MISMATCH, "label " + std::to_string(m) + " does not match the presentation");
  long n = m / 2;
  Word img0, img1;
  switch (c) {
    case Conversion::ARTIN_TO_BS:
      img0 = {kX, -kT};
      img1 = {kT};
      break;
    case Conversion::BS_TO_ARTIN:
      img0 = ab_word();
      img1 = {kB};
      break;
    case Conversion::ARTIN_TO_TORUS:
      img0 = concat(power({kT}, n + 1), {-kX});
      img1 = concat({kX}, power({kT}, -n));
      break;
    case Conversion::TORUS_TO_ARTIN:
      img0 = delta_word(m);
      img1 = ab_word();
      break;
  }
  Word out;
  for (Letter l : w) {
    const Word& im = gen_of(l) == 0 ? img0 : img1;
    Word piece = l > 0 ? im : inverse(im);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(out);
}

// ---------------------------------------------------------------------------
// Quotient by the centre

long factor_order(int m, int factor) {
  if (m % 2 == 0) return factor == 0 ? m / 2 : 0;
  return factor == 0 ? 2 : m;
}

namespace {

void push_syllable(int m, QuotientElem& q, int f, long e) {
  long ord = factor_order(m, f);
  if (ord > 0) e = mod(e, ord);
  if (e == 0) return;
  if (!q.syl.empty() && q.syl.back().first == f) {
    long s = q.syl.back().second + e;
    if (ord > 0) s = mod(s, ord);
    if (s == 0)
      q.syl.pop_back();
    else
      q.syl.back().second = s;
    return;
  }
  q.syl.push_back({f, e});
}

long symmetric(long e, long ord) { return (ord > 0 && e > ord / 2) ? e - ord : e; }

}  // namespace

QuotientElem quotient_mul(int m, const QuotientElem& u, const QuotientElem& v) {
  QuotientElem out = u;
  for (auto [f, e] : v.syl) push_syllable(m, out, f, e);
  return out;
}

QuotientElem quotient_inverse(int m, const QuotientElem& u) {
  QuotientElem out;
  for (auto it = u.syl.rbegin(); it != u.syl.rend(); ++it) push_syllable(m, out, it->first, -it->second);
  return out;
}

QuotientElem project(int m, const Word& w) {
  long n = m / 2;
  QuotientElem ia, ib;
  if (m % 2 == 0) {
    push_syllable(m, ia, 0, 1);
    push_syllable(m, ia, 1, -1);
    push_syllable(m, ib, 1, 1);
  } else {
    push_syllable(m, ia, 1, n + 1);
    push_syllable(m, ia, 0, 1);
    push_syllable(m, ib, 0, 1);
    push_syllable(m, ib, 1, -n);
  }
  QuotientElem out;
  for (Letter l : w) {
    const QuotientElem& im = gen_of(l) == 0 ? ia : ib;
    out = quotient_mul(m, out, l > 0 ? im : quotient_inverse(m, im));
  }
  return out;
}

Word lift(int m, const QuotientElem& q) {
  Word out;
  for (auto [f, e] : q.syl) {
    long se = symmetric(e, factor_order(m, f));
    Word piece;
    if (m % 2 == 0)
      piece = f == 0 ? power(ab_word(), se) : power({kB}, se);
    else
      piece = f == 0 ? power(delta_word(m), se) : power(ab_word(), se);
    out = concat(out, piece);
  }
  return out;
}

void cyclic_reduce(int m, const QuotientElem& q, QuotientElem& h, QuotientElem& c) {
  h = QuotientElem{};
  c = q;
  while (c.syl.size() >= 2 && c.syl.front().first == c.syl.back().first) {
    QuotientElem s;
    s.syl.push_back(c.syl.front());
    h = quotient_mul(m, h, s);
    c = quotient_mul(m, quotient_mul(m, quotient_inverse(m, s), c), s);
  }
}

// ---------------------------------------------------------------------------
// Britton normal form

void britton_mul(int n, BrittonNF& nf, Letter l) {
  int s = sign_of(l);
  if (gen_of(l) == 0) {
    if (nf.syl.empty()) {
      nf.E += s;
      return;
    }
    long e = nf.syl.back().second + s;
    if (e == n) {
      e = 0;
      nf.E += n;
    } else if (e < 0) {
      e = n - 1;
      nf.E -= n;
    }
    nf.syl.back().second = e;
    return;
  }
  if (!nf.syl.empty() && nf.syl.back().second == 0) {
    nf.syl.back().first += s;
    if (nf.syl.back().first == 0) nf.syl.pop_back();
    return;
  }
  nf.syl.push_back({s, 0});
}

BrittonNF britton_nf(int n, const Word& bs) {
  BrittonNF nf;
  for (Letter l : bs) britton_mul(n, nf, l);
  return nf;
}

Word britton_word(const BrittonNF& nf) {
  Word out = power({kX}, nf.E);
  for (auto [d, e] : nf.syl) {
    Word p = power({kT}, d), q = power({kX}, e);
    out.insert(out.end(), p.begin(), p.end());
    out.insert(out.end(), q.begin(), q.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Outer classes in the even presentation

const char* bs_class_name(BSClass c) {
  switch (c) {
    case BSClass::ID: return "ID";
    case BSClass::AB: return "AB";
    case BSClass::AG: return "AG";
    case BSClass::BG: return "BG";
  }
  return "?";
}

Word apply_bs_class(BSClass c, const Word& bs) {
  Word ix, it;
  switch (c) {
    case BSClass::ID: return bs;
    case BSClass::AB:
      ix = {-kX};
      it = {-kT};
      break;
    case BSClass::AG:
      ix = {-kX};
      it = {kT, -kX};
      break;
    case BSClass::BG:
      ix = {kX};
      it = {-kT, kX};
      break;
  }
  Word out;
  for (Letter l : bs) {
    const Word& im = gen_of(l) == 0 ? ix : it;
    Word piece = l > 0 ? im : inverse(im);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(out);
}

BSAutClass outer_class(int m, const ArtinAutomorphism& a) {
  if (m % 2 != 0) throw Error(ErrorCode::PARITY_MISMATCH, "outer classes use the even presentation");
  bool sig = !a.sigma.is_identity();
  BSAutClass out;
  Word h;
  // iota = phi_t AB, sigma = phi_t BG, sigma iota = AG.
  if (sig && a.eps) {
    out.cls = BSClass::AG;
  } else if (sig) {
    out.cls = BSClass::BG;
    h = {kT};
  } else if (a.eps) {
    out.cls = BSClass::AB;
    h = {kT};
  }
  out.inner = concat(convert(m, a.conj, Conversion::ARTIN_TO_BS), h);
  return out;
}

bool is_finite_order(int m, const ArtinAutomorphism& a) {
  QuotientElem h, c;
  cyclic_reduce(m, project(m, twisted_z(a)), h, c);
  return c.syl.empty() || (c.syl.size() == 1 && factor_order(m, c.syl[0].first) > 0);
}

// ---------------------------------------------------------------------------
// Bass-Serre tree

BrittonNF tree_vertex(int n, const Word& bs) {
  BrittonNF v = britton_nf(n, bs);
  if (v.syl.empty()) return BrittonNF{};
  v.syl.back().second = 0;
  v.E = mod(v.E, n);
  return v;
}

long tree_depth(const BrittonNF& v) {
  long d = 0;
  for (auto [t, e] : v.syl) d += t < 0 ? -t : t;
  return d;
}

std::vector<BrittonNF> tree_neighbours(int n, const BrittonNF& v) {
  std::vector<BrittonNF> out;
  Word r = britton_word(v);
  for (int k = 0; k < n; ++k)
    for (int s : {1, -1}) {
      Word w = concat({r, power({kX}, k), Word{make_letter(1, s)}});
      out.push_back(tree_vertex(n, w));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BrittonNF tree_act(int n, const BSAutClass& a, const BrittonNF& v) {
  return tree_vertex(n, concat(a.inner, apply_bs_class(a.cls, britton_word(v))));
}

bool tree_oriented(int n, const BrittonNF& u, const BrittonNF& v) {
  Word r = britton_word(u);
  for (int k = 0; k < n; ++k)
    if (tree_vertex(n, concat({r, power({kX}, k), Word{kT}})) == v) return true;
  return false;
}

namespace {

std::vector<BrittonNF> tree_ball(int n, int radius) {
  std::set<BrittonNF> seen{BrittonNF{}};
  std::deque<BrittonNF> q{BrittonNF{}};
  while (!q.empty()) {
    BrittonNF v = q.front();
    q.pop_front();
    if (tree_depth(v) >= radius) continue;
    for (const auto& u : tree_neighbours(n, v))
      if (tree_depth(u) <= radius && seen.insert(u).second) q.push_back(u);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

TreeFixedSet tree_fixed_set(int m, const ArtinAutomorphism& a, int radius) {
  int n = m / 2;
  BSAutClass c = outer_class(m, a);
  TreeFixedSet out;
  out.ball = tree_ball(n, radius);
  std::set<BrittonNF> inball(out.ball.begin(), out.ball.end());
  for (const auto& v : out.ball) {
    BrittonNF img = tree_act(n, c, v);
    if (img == v) out.vertices.push_back(v);
    // An inverted edge swaps its two endpoints.
    if (tree_oriented(n, v, img) && inball.count(img) && tree_act(n, c, img) == v)
      out.midpoints.push_back({v, img});
  }
  return out;
}

std::vector<BrittonNF> tree_axis(int n, const Word& s_bs, int radius) {
  // Path from the base vertex to s v0, one vertex per t-letter of the Britton word.
  Word sw = britton_word(britton_nf(n, s_bs));
  std::vector<Word> path{{}};
  Word prefix;
  for (Letter l : sw) {
    prefix.push_back(l);
    if (gen_of(l) == 1) path.push_back(prefix);
  }
  std::set<BrittonNF> out;
  long len = static_cast<long>(path.size()) - 1;
  if (len == 0) return {BrittonNF{}};
  for (long j = -(radius / len + 2); j <= radius / len + 2; ++j) {
    Word sj = power(sw, j);
    for (const auto& p : path) {
      BrittonNF v = tree_vertex(n, concat(sj, p));
      if (tree_depth(v) <= radius) out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

std::string tree_to_dot(int m, const TreeFixedSet& t) {
  int n = m / 2;
  std::vector<std::string> names{"x", "t"};
  std::map<BrittonNF, int> id;
  for (const auto& v : t.ball) id.emplace(v, static_cast<int>(id.size()));
  std::set<BrittonNF> fixed(t.vertices.begin(), t.vertices.end());
  std::set<std::pair<BrittonNF, BrittonNF>> inverted(t.midpoints.begin(), t.midpoints.end());
  std::ostringstream os;
  os << "digraph tree {\n";
  for (const auto& [v, i] : id) {
    os << "  v" << i << " [label=\"" << format_word(britton_word(v), names) << " v\"";
    if (fixed.count(v)) os << ", color=red, style=bold";
    os << "];\n";
  }
  for (const auto& [v, i] : id) {
    Word r = britton_word(v);
    for (int k = 0; k < n; ++k) {
      BrittonNF u = tree_vertex(n, concat({r, power({kX}, k), Word{kT}}));
      auto it = id.find(u);
      if (it == id.end()) continue;
      os << "  v" << i << " -> v" << it->second;
      if (inverted.count({v, u}) || inverted.count({u, v})) os << " [color=red, label=\"midpoint\"]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

Word ag_axis_generator(int n, long k) {
  k = mod(k, n);
  Word X = {kX}, T = {kT};
  auto xp = [&](long e) { return power(X, e); };
  if (n % 2 == 1) {
    if (k % 2 == 0) return concat({xp(k / 2), T, xp((n - 1) / 2), T, xp((-k - n - 1) / 2)});
    return concat({xp((k + n) / 2), T, xp((n - 1) / 2), T, xp((-k - 1) / 2)});
  }
  if (k % 2 == 0) return concat({xp(k / 2), T, xp(n / 2), inverse(T), xp((-k - n) / 2)});
  return concat({xp((k + 1) / 2), inverse(T), xp(n / 2), T, xp((-k - n - 1) / 2)});
}

// ---------------------------------------------------------------------------
// Centralisers

const char* centralizer_tag_name(CentralizerTag t) {
  switch (t) {
    case CentralizerTag::CENTRAL: return "CENTRAL";
    case CentralizerTag::ELLIPTIC_Z: return "ELLIPTIC_Z";
    case CentralizerTag::HYPERBOLIC_Z2: return "HYPERBOLIC_Z2";
  }
  return "?";
}

namespace {

// Positive orientation, then the shortest and shortlex-least spelling.
Word normalize_generator(const Rewriter& rw, const Word& w) {
  Word c = rw.canonical(w), ci = rw.canonical(inverse(w));
  long h = height(c);
  if (h > 0) return c;
  if (h < 0) return ci;
  return shortlex_less(ci, c) ? ci : c;
}

// Among r z^j pick the shortest geodesic.
Word shortest_translate(const Rewriter& rw, const Word& r, const Word& z) {
  Word best;
  bool have = false;
  for (long j = -3; j <= 3; ++j) {
    Word c = rw.canonical(concat(r, power(z, j)));
    if (!have || shortlex_less(c, best)) {
      best = c;
      have = true;
    }
  }
  return best;
}

}  // namespace

DihedralCentralizer dihedral_centralizer(int m, const Word& g) {
  DihedralGroup D(m);
  if (D.is_central(g)) return {CentralizerTag::CENTRAL, {{kA}, {kB}}};
  Rewriter rw(D.graph());
  QuotientElem h, c;
  cyclic_reduce(m, project(m, g), h, c);
  Word hl = lift(m, h);
  auto conj = [&](const Word& w) { return concat({hl, w, inverse(hl)}); };
  if (c.syl.size() == 1) {
    int f = c.syl[0].first;
    if (factor_order(m, f) > 0) {
      Word gen = (D.even() || f == 1) ? ab_word() : D.delta();
      return {CentralizerTag::ELLIPTIC_Z, {normalize_generator(rw, conj(gen))}};
    }
    Word r = shortest_translate(rw, conj({kB}), D.center());
    return {CentralizerTag::HYPERBOLIC_Z2, {normalize_generator(rw, r), D.center()}};
  }
  // The primitive root of a cyclically reduced element is its shortest period.
  size_t L = c.syl.size(), d = L;
  for (size_t p = 1; p < L; ++p) {
    if (L % p) continue;
    bool ok = true;
    for (size_t i = p; i < L && ok; ++i) ok = c.syl[i] == c.syl[i - p];
    if (ok) {
      d = p;
      break;
    }
  }
  QuotientElem root;
  root.syl.assign(c.syl.begin(), c.syl.begin() + d);
  Word r = shortest_translate(rw, conj(lift(m, root)), D.center());
  return {CentralizerTag::HYPERBOLIC_Z2, {normalize_generator(rw, r), D.center()}};
}

// ---------------------------------------------------------------------------
// Fixed subgroups

namespace {

// Named spellings preferred over search output when they generate the same cyclic group.
std::vector<Word> preferred_forms(int m) {
  std::vector<Word> out{delta_word(m), power(delta_word(m), 2)};
  if (m % 2 == 0) {
    long n = m / 2;
    Word ab = ab_word(), ba = {kB, kA};
    if (n % 2 == 0)
      out.push_back(concat(power(ab, n / 2), power(ba, -n / 2)));
    else
      out.push_back(concat({Word{kB}, power(ab, (n - 1) / 2), power(ba, -(n - 1) / 2), Word{-kA}}));
  }
  return out;
}

void set_cyclic(const DihedralGroup& D, const Rewriter& rw, FixReport& r, const Word& c) {
  r.tag = FixTag::Z;
  Word gen = normalize_generator(rw, c);
  for (const Word& p : preferred_forms(D.m()))
    if (D.equal(p, gen) || D.equal(inverse(p), gen)) gen = p;
  r.generators = {gen};
}

void set_z2(const Rewriter& rw, FixReport& r, const Word& u, const Word& z) {
  r.tag = FixTag::Z2;
  r.generators = {normalize_generator(rw, u), z};
}

}  // namespace

FixReport dihedral_fix(int m, const ArtinAutomorphism& a, long budget) {
  DihedralGroup D(m);
  const DefiningGraph& G = D.graph();
  Rewriter rw(G);
  FixReport r;
  Word g = a.conj;
  bool sig = !a.sigma.is_identity();
  int eps = a.eps;
  if (!D.even() && sig) {
    // The graph symmetry is conjugation by Delta in odd dihedrals.
    g = concat(g, D.delta());
    sig = false;
  }
  Word z = D.center();

  if (!sig && eps == 0) {
    DihedralCentralizer c = dihedral_centralizer(m, g);
    if (c.tag == CentralizerTag::CENTRAL) {
      r.tag = FixTag::ARTIN;
      r.subgraph = {0, 1};
      r.generators = c.generators;
      r.case_name = "inner by a central element";
    } else if (c.tag == CentralizerTag::ELLIPTIC_Z) {
      set_cyclic(D, rw, r, c.generators[0]);
      r.case_name = "centraliser of an elliptic element";
    } else {
      set_z2(rw, r, c.generators[0], z);
      r.case_name = "centraliser of a hyperbolic element";
    }
    certify_fixed(G, a, r, budget);
    return r;
  }

  ArtinAutomorphism inv{g, sig ? GraphAutomorphism{{1, 0}} : GraphAutomorphism::identity(2), eps};
  Word w = concat(g, apply_psi(inv.sigma, eps, g));
  auto image = [&](const Word& x) { return apply_aut(inv, x); };

  if (!D.is_central(w)) {
    // The square is conjugation by w, so Fix lies in C(w) and acts on it.
    DihedralCentralizer c = dihedral_centralizer(m, w);
    if (c.tag == CentralizerTag::ELLIPTIC_Z) {
      const Word& gen = c.generators[0];
      if (D.equal(image(gen), gen)) {
        set_cyclic(D, rw, r, gen);
      } else {
        r.tag = FixTag::TRIVIAL;
      }
      r.case_name = "square is elliptic: Fix inside a cyclic centraliser";
    } else {
      const Word& rt = c.generators[0];
      // gamma(z) = z^e1 and gamma(r) = r^i z^j.
      long e1 = eps ? -1 : 1;
      QuotientElem qr = project(m, rt), qi = project(m, image(rt));
      long i = qi == qr ? 1 : -1;
      long hz = height(z);
      long j = (height(image(rt)) - i * height(rt)) / hz;
      if (!D.equal(image(rt), concat(power(rt, i), power(z, j))))
        r.notes.push_back("centraliser action did not match r^i z^j");
      r.case_name = "square is hyperbolic: kernel of the action on C(w) = Z^2";
      if (i == 1 && e1 == 1) {
        if (j == 0)
          set_z2(rw, r, rt, z);
        else
          set_cyclic(D, rw, r, z);
      } else if (i == 1) {
        if (j % 2 == 0)
          set_cyclic(D, rw, r, concat(rt, power(z, j / 2)));
        else
          set_cyclic(D, rw, r, concat(power(rt, 2), power(z, j)));
      } else if (e1 == 1) {
        set_cyclic(D, rw, r, z);
      } else {
        r.tag = FixTag::TRIVIAL;
      }
    }
    certify_fixed(G, a, r, budget);
    return r;
  }

  if (!D.even()) {
    r.tag = FixTag::TRIVIAL;
    r.case_name = "finite-order inversion class";
    return r;
  }

  // Involution of the even group: it fixes the midpoint of [v0, gamma v0] in the tree.
  int n = m / 2;
  BSAutClass bc = outer_class(m, inv);
  Word path = britton_word(britton_nf(n, bc.inner));
  long dist = 0;
  for (Letter l : path)
    if (gen_of(l) == 1) ++dist;
  Word prefix;
  long steps = 0;
  for (Letter l : path) {
    if (gen_of(l) == 1) {
      if (steps == dist / 2) break;
      ++steps;
    }
    prefix.push_back(l);
  }
  // prefix ends just before the t-letter leaving the midpoint vertex (or crossing the midpoint edge).
  if (dist % 2 == 1) {
    r.case_name = "involution inverting an edge";
    if (D.equal(image(z), z))
      set_cyclic(D, rw, r, z);
    else
      r.tag = FixTag::TRIVIAL;
    certify_fixed(G, a, r, budget);
    return r;
  }
  Word hb = prefix;
  BrittonNF u = britton_nf(n, concat({inverse(hb), bc.inner, apply_bs_class(bc.cls, hb)}));
  if (!u.syl.empty()) r.notes.push_back("midpoint vertex is not fixed");
  long k = mod(u.E, n);
  Word ha = convert(m, hb, Conversion::BS_TO_ARTIN);
  r.witness = ha;
  auto conj = [&](const Word& x) { return concat({ha, convert(m, x, Conversion::BS_TO_ARTIN), inverse(ha)}); };
  switch (bc.cls) {
    case BSClass::AB:
      r.tag = FixTag::TRIVIAL;
      r.case_name = "involution of class AB fixing a vertex";
      break;
    case BSClass::BG:
      set_cyclic(D, rw, r, conj({kX}));
      r.case_name = "involution of class BG fixing a vertex";
      break;
    case BSClass::AG:
      set_cyclic(D, rw, r, conj(ag_axis_generator(n, k)));
      r.case_name = "class AG: axis generator for k = " + std::to_string(k);
      break;
    case BSClass::ID: break;
  }
  certify_fixed(G, a, r, budget);
  return r;
}

std::vector<GarsideNF> brute_fixed(int m, const ArtinAutomorphism& a, long bound) {
  std::vector<GarsideNF> out;
  for (const auto& nf : enumerate_nfs(m, bound))
    if (garside_nf(m, apply_aut(a, nf_to_word(m, nf))) == nf) out.push_back(nf);
  return out;
}

std::vector<GarsideNF> subgroup_ball(int m, const FixReport& r, long bound, bool* complete) {
  if (complete) *complete = true;
  std::set<GarsideNF> out;
  auto keep = [&](const Word& w) {
    GarsideNF nf = garside_nf(m, w);
    if (nf_length(m, nf) <= bound) out.insert(nf);
    return nf_length(m, nf);
  };
  long J = 2 * bound + 4;
  switch (r.tag) {
    case FixTag::TRIVIAL: out.insert(GarsideNF{}); break;
    case FixTag::ARTIN: {
      auto all = enumerate_nfs(m, bound);
      out.insert(all.begin(), all.end());
      break;
    }
    case FixTag::Z:
      for (long j = -J; j <= J; ++j) {
        long len = keep(power(r.generators[0], j));
        if ((j <= -J + 1 || j >= J - 1) && len <= bound && complete) *complete = false;
      }
      break;
    case FixTag::Z2:
      for (long i = -J; i <= J; ++i)
        for (long j = -J; j <= J; ++j) {
          long len = keep(concat(power(r.generators[0], i), power(r.generators[1], j)));
          bool edge = i <= -J + 1 || i >= J - 1 || j <= -J + 1 || j >= J - 1;
          if (edge && len <= bound && complete) *complete = false;
        }
      break;
    default:
      if (complete) *complete = false;
      break;
  }
  return {out.begin(), out.end()};
}

}  // namespace artin
