#include "artin/classifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "artin/dihedral.hpp"
#include "artin/error.hpp"
#include "artin/garside.hpp"
#include "artin/geodesic.hpp"

namespace artin {

namespace {

struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

std::vector<Letter> all_letters(int n) {
  std::vector<Letter> out;
  for (int s = 0; s < n; ++s) {
    out.push_back(make_letter(s, 1));
    out.push_back(make_letter(s, -1));
  }
  return out;
}

// Smallest sigma-invariant spherical type containing v, or 3.
int spherical_type(const DefiningGraph& g, const GraphAutomorphism& sig, const Word& v, std::vector<int>& S) {
  S.clear();
  if (v.empty()) return 0;
  std::vector<int> sup = support(v);
  if (sup.size() == 1 && sig.perm[sup[0]] == sup[0]) {
    S = sup;
    return 1;
  }
  if (sup.size() > 2) return 3;
  for (int x = 0; x < g.size(); ++x)
    for (int y = x + 1; y < g.size(); ++y) {
      if (!g.adjacent(x, y)) continue;
      std::vector<int> xy{x, y};
      if (!std::includes(xy.begin(), xy.end(), sup.begin(), sup.end())) continue;
      std::vector<int> img{sig.perm[x], sig.perm[y]};
      std::sort(img.begin(), img.end());
      if (img != xy) continue;
      S = xy;
      return 2;
    }
  return 3;
}

struct SearchOut {
  std::vector<TwistedState> states;  // in exploration order
  TwistedState best;
  long explored = 0;
};

// Best-first search over twisted conjugates h^-1 g psi(h), shortest first.
SearchOut twisted_search(const DefiningGraph& g, const Rewriter& rw, const ArtinAutomorphism& a,
                         const SearchLimits& lim, bool stop_at_vertex) {
  SearchOut out;
  Word start = rw.canonical(a.conj);
  size_t max_len = start.size() + static_cast<size_t>(lim.slack);
  auto cmp = [](const std::pair<Word, Word>& x, const std::pair<Word, Word>& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    if (x.first != y.first) return shortlex_less(x.first, y.first);
    return shortlex_less(x.second, y.second);
  };
  std::set<std::pair<Word, Word>, decltype(cmp)> queue(cmp);
  std::set<Word, ShortlexLess> seen;
  queue.insert({start, {}});
  seen.insert(start);
  auto letters = all_letters(g.size());
  while (!queue.empty() && out.explored < lim.states) {
    auto [value, h] = *queue.begin();
    queue.erase(queue.begin());
    ++out.explored;
    TwistedState st{h, value, 3, {}};
    st.type = spherical_type(g, a.sigma, value, st.S);
    if (st.type < out.best.type) out.best = st;
    out.states.push_back(st);
    if (stop_at_vertex && out.best.type == 0) break;
    for (Letter x : letters) {
      Word nv = rw.canonical(concat({Word{-x}, value, apply_psi(a.sigma, a.eps, Word{x})}));
      if (nv.size() > max_len || !seen.insert(nv).second) continue;
      queue.insert({nv, concat(h, Word{x})});
    }
  }
  return out;
}

// Inside A_st, looks for a lower-type fixed vertex adjacent to a fixed type 2 vertex.
bool refine_in_edge(const DefiningGraph& g, const ArtinAutomorphism& a, TwistedState& st, const SearchLimits& lim) {
  int s = st.S[0], t = st.S[1], m = g.m(s, t);
  auto to_local = [&](const Word& w) {
    Word o;
    for (Letter l : w) o.push_back(make_letter(gen_of(l) == s ? 0 : 1, sign_of(l)));
    return o;
  };
  auto to_global = [&](const Word& w) {
    Word o;
    for (Letter l : w) o.push_back(make_letter(gen_of(l) == 0 ? s : t, sign_of(l)));
    return o;
  };
  GarsideNF start = garside_nf(m, to_local(st.value));
  long max_len = nf_length(m, start) + lim.slack + 2;
  std::map<GarsideNF, Word> seen{{start, {}}};
  std::vector<GarsideNF> frontier{start};
  std::vector<Letter> letters{make_letter(s, 1), make_letter(s, -1), make_letter(t, 1), make_letter(t, -1)};
  long explored = 0;
  for (size_t i = 0; i < frontier.size() && explored < 4 * lim.states; ++i, ++explored) {
    GarsideNF cur = frontier[i];
    Word x = seen[cur];
    Word value = to_global(nf_to_word(m, cur));
    std::vector<int> S;
    int type = spherical_type(g, a.sigma, value, S);
    if (type < 2) {
      st.h = concat(st.h, x);
      st.value = free_reduce(value);
      st.type = type;
      st.S = S;
      return true;
    }
    for (Letter l : letters) {
      Word nv = concat({Word{-l}, value, apply_psi(a.sigma, a.eps, Word{l})});
      GarsideNF nf = garside_nf(m, to_local(nv));
      if (nf_length(m, nf) > max_len || seen.count(nf)) continue;
      seen[nf] = concat(x, Word{l});
      frontier.push_back(nf);
    }
  }
  return false;
}

struct Triangle {
  int x, y, w;
};

// Ordered triples spanning triangles with every label 3.
std::vector<Triangle> exotic_triangles(const DefiningGraph& g) {
  std::vector<Triangle> out;
  int n = g.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int w = 0; w < n; ++w) {
        if (x == y || y == w || x == w) continue;
        if (g.m(x, y) == 3 && g.m(y, w) == 3 && g.m(x, w) == 3) out.push_back({x, y, w});
      }
  return out;
}

Word triple(const Triangle& T) { return {make_letter(T.x, 1), make_letter(T.y, 1), make_letter(T.w, 1)}; }

Word conj_by(const Word& u, const Word& w) { return free_reduce(concat({u, w, inverse(u)})); }

void conjugate_generators(FixReport& r, const Word& h) {
  for (Word& w : r.generators) w = conj_by(h, w);
}

void add_check(FixReport& r, const std::string& kind, const std::string& claim, bool ok, const std::string& detail) {
  Certificate c;
  c.kind = kind;
  c.claim = claim;
  c.verdict = ok ? Verdict::EQUAL : Verdict::NOT_EQUAL;
  c.invariant = ok ? "" : "count";
  c.detail = detail;
  add_certificate(r, c);
}

std::string gens_text(const DefiningGraph& g, const std::vector<int>& S) {
  std::string o;
  for (int s : S) o += g.names[s];
  return o;
}

// Fixed subgroup of sigma iota^eps, generators before conjugation.
void base_case(const DefiningGraph& g, const ArtinAutomorphism& rep, FixReport& r) {
  SigmaData d = sigma_data(g, rep.sigma);
  if (rep.eps == 0) {
    for (int s : d.fixed_vertices) r.generators.push_back({make_letter(s, 1)});
    for (auto [s, t] : d.transposed_pairs) r.generators.push_back(alternating(s, t, g.m(s, t)));
    int pairs = static_cast<int>(d.transposed_pairs.size());
    r.subgraph = d.fixed_vertices;
    r.rank = pairs;
    if (d.fixed_vertices.empty() && pairs == 0)
      r.tag = FixTag::TRIVIAL;
    else if (pairs == 0)
      r.tag = FixTag::ARTIN;
    else if (d.fixed_vertices.empty())
      r.tag = FixTag::FREE;
    else
      r.tag = FixTag::ARTIN_FREE_PRODUCT;
    r.case_name = "elliptic: graph automorphism";
    return;
  }
  for (auto [s, t] : d.transposed_pairs) {
    int m = g.m(s, t);
    if (m % 2) continue;
    int n = m / 4;
    Word core = concat(alternating(s, t, 2 * n), inverse(alternating(t, s, 2 * n)));
    if (m % 4 == 0)
      r.generators.push_back(free_reduce(core));
    else
      r.generators.push_back(free_reduce(concat({Word{make_letter(t, 1)}, core, Word{make_letter(s, -1)}})));
  }
  r.rank = static_cast<int>(r.generators.size());
  r.tag = r.generators.empty() ? FixTag::TRIVIAL : FixTag::FREE;
  r.case_name = "elliptic: graph automorphism with inversion";
}

// Fixed subgroup of phi_{a^k} sigma (eps 0) or phi_a sigma iota (eps 1).
void generator_power_case(const DefiningGraph& g, const ArtinAutomorphism& rep, int a, long k, FixReport& r,
                          std::vector<Word>& remark) {
  Letter la = make_letter(a, 1);
  if (rep.eps == 0) {
    OddComponentGraph og = gamma_a_odd(g, rep.sigma, a, EdgeLabelling::GARSIDE);
    Pi1Basis basis = pi1_basis(og);
    r.generators.push_back({la});
    for (const Word& w : basis.loops) r.generators.push_back(free_reduce(w));
    for (size_t i = 0; i < og.nodes.size(); ++i) {
      const auto& nd = og.nodes[i];
      if (!nd.is_edge) continue;
      DihedralGroup D(nd.m);
      Word z;
      for (Letter l : D.center()) z.push_back(make_letter(gen_of(l) == 0 ? nd.s : nd.t, sign_of(l)));
      r.generators.push_back(conj_by(basis.tree_paths[i], z));
      Word full;
      for (Letter l : power(D.delta(), std::lcm(2, nd.m))) full.push_back(make_letter(gen_of(l) == 0 ? nd.s : nd.t, sign_of(l)));
      remark.push_back(conj_by(basis.tree_paths[i], full));
    }
    r.rank = static_cast<int>(r.generators.size()) - 1;
    r.tag = FixTag::Z_CROSS_F;
    r.case_name = "elliptic: power of a generator, " + g.names[a] + "^" + std::to_string(k);
    return;
  }
  OddComponentGraph og = gamma_a_odd(g, rep.sigma, a, EdgeLabelling::ALTERNATING);
  Pi1Basis basis = pi1_basis(og);
  for (const Word& w : basis.loops) r.generators.push_back(free_reduce(w));
  r.rank = static_cast<int>(r.generators.size());
  r.tag = r.generators.empty() ? FixTag::TRIVIAL : FixTag::FREE;
  r.case_name = "elliptic: generator with inversion, " + g.names[a];
}

void dihedral_vertex_case(const DefiningGraph& g, const ArtinAutomorphism& rep, int s, int t, FixReport& r,
                          const SearchLimits& lim) {
  int m = g.m(s, t);
  ArtinAutomorphism local = ArtinAutomorphism::identity(2);
  for (Letter l : rep.conj) local.conj.push_back(make_letter(gen_of(l) == s ? 0 : 1, sign_of(l)));
  if (rep.sigma.perm[s] == t) local.sigma.perm = {1, 0};
  local.eps = rep.eps;
  FixReport d = dihedral_fix(m, local, lim.budget);
  r.tag = d.tag;
  r.rank = d.rank;
  r.finite_index = d.finite_index;
  for (const Word& w : d.generators) {
    Word o;
    for (Letter l : w) o.push_back(make_letter(gen_of(l) == 0 ? s : t, sign_of(l)));
    r.generators.push_back(o);
  }
  if (d.tag == FixTag::ARTIN || d.tag == FixTag::ARTIN_FREE_PRODUCT) r.subgraph = {s, t};
  r.case_name = "elliptic: single vertex v_" + g.names[s] + g.names[t] + " (" + d.case_name + ")";
  for (const auto& n : d.notes) r.notes.push_back(n);
}

FixReport cyclic_report(const Word& z, bool finite_index) {
  FixReport r;
  r.tag = FixTag::Z;
  r.generators = {z};
  r.finite_index = finite_index;
  return r;
}

}  // namespace

ArtinAutomorphism normalize_aut(const DefiningGraph& g, const std::string& text) {
  ArtinAutomorphism a = parse_automorphism(g, text);
  a.conj = free_reduce(a.conj);
  return a;
}

long rank_bound(int n) { return static_cast<long>(n) * n - 2L * n + 2; }

const char* motion_name(Motion m) {
  switch (m) {
    case Motion::ELLIPTIC: return "ELLIPTIC";
    case Motion::HYPERBOLIC: return "HYPERBOLIC";
    case Motion::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

const char* reduction_case_name(ReductionCase c) {
  switch (c) {
    case ReductionCase::BASE_PSI: return "BASE_PSI";
    case ReductionCase::GENERATOR_POWER: return "GENERATOR_POWER";
    case ReductionCase::DIHEDRAL_VERTEX: return "DIHEDRAL_VERTEX";
  }
  return "?";
}

const char* centralizer_case_name(CentralizerCase c) {
  switch (c) {
    case CentralizerCase::TYPE1_TREE: return "TYPE1_TREE";
    case CentralizerCase::TYPE2_VERTEX: return "TYPE2_VERTEX";
    case CentralizerCase::HYP_AXIS_IN_TREE: return "HYP_AXIS_IN_TREE";
    case CentralizerCase::HYP_PLAIN: return "HYP_PLAIN";
    case CentralizerCase::HYP_EXOTIC: return "HYP_EXOTIC";
    case CentralizerCase::HYP_TRANSVERSE: return "HYP_TRANSVERSE";
  }
  return "?";
}

Ellipticity ellipticity(const DefiningGraph& g, const ArtinAutomorphism& a, const SearchLimits& lim) {
  Rewriter rw(g);
  Ellipticity e;
  e.z = twisted_z(a);
  SearchOut so = twisted_search(g, rw, a, lim, true);
  e.explored = so.explored;
  if (so.best.type <= 2) {
    e.motion = Motion::ELLIPTIC;
    e.vertex = so.best;
    if (e.vertex.type == 2) refine_in_edge(g, a, e.vertex, lim);
    e.evidence = "fixed vertex " + format_word(e.vertex.h, g.names) + " v_" + gens_text(g, e.vertex.S);
    return e;
  }
  // gamma^n acts as z, so gamma is elliptic exactly when z is.
  Word zg = rw.geodesic(e.z);
  if (zg.empty()) {
    e.evidence = "gamma has finite order but no fixed vertex was found";
    return e;
  }
  SearchOut zs = twisted_search(g, rw, ArtinAutomorphism::inner(zg, g.size()), lim, true);
  if (zs.best.type <= 2) {
    e.evidence = "z conjugates into A_" + gens_text(g, zs.best.S) + " but no fixed vertex was found";
    return e;
  }
  std::vector<int> smallest;
  for (const auto& st : zs.states) {
    auto sup = support(st.value);
    if (smallest.empty() || sup.size() < smallest.size()) smallest = sup;
  }
  e.motion = Motion::HYPERBOLIC;
  e.evidence = "no fixed vertex among " + std::to_string(so.explored) + " twisted conjugates; " +
               std::to_string(zs.explored) + " conjugates of z all have support of size >= " +
               std::to_string(smallest.size()) + " or outside any finite edge";
  return e;
}

Reduction reduce_isogredience(const DefiningGraph& g, const ArtinAutomorphism& a, const Ellipticity& e) {
  if (e.motion != Motion::ELLIPTIC) throw Error(ErrorCode::BUDGET_EXCEEDED, "no fixed vertex found");
  Reduction r;
  r.witness = e.vertex.h;
  r.reduced = e.vertex.value;
  if (e.vertex.type == 0) {
    r.kind = ReductionCase::BASE_PSI;
  } else if (e.vertex.type == 1) {
    r.kind = ReductionCase::GENERATOR_POWER;
    r.a = e.vertex.S[0];
    r.k = height(e.vertex.value);
    if (a.eps) {
      // s^-q s^k iota(s^q) = s^(k - 2q): the exponent only matters mod 2.
      long q = (r.k - ((r.k % 2) + 2) % 2) / 2;
      r.witness = concat(r.witness, power({make_letter(r.a, 1)}, q));
      r.k -= 2 * q;
      r.reduced = power({make_letter(r.a, 1)}, r.k);
      if (r.k == 0) r.kind = ReductionCase::BASE_PSI;
    }
  } else {
    r.kind = ReductionCase::DIHEDRAL_VERTEX;
    r.s = e.vertex.S[0];
    r.t = e.vertex.S[1];
  }
  r.witness = free_reduce(r.witness);
  (void)g;
  return r;
}

ArtinAutomorphism representative(const ArtinAutomorphism& a, const Reduction& r) {
  return {r.reduced, a.sigma, a.eps};
}

FixReport classify_elliptic(const DefiningGraph& g, const ArtinAutomorphism& a, const Reduction& red,
                            const SearchLimits& lim) {
  FixReport r;
  std::vector<Word> remark;
  ArtinAutomorphism rep = representative(a, red);
  switch (red.kind) {
    case ReductionCase::BASE_PSI: base_case(g, rep, r); break;
    case ReductionCase::GENERATOR_POWER: generator_power_case(g, rep, red.a, red.k, r, remark); break;
    case ReductionCase::DIHEDRAL_VERTEX: dihedral_vertex_case(g, rep, red.s, red.t, r, lim); break;
  }
  r.witness = red.witness;
  conjugate_generators(r, red.witness);
  add_certificate(r, equality_certificate(g, "witness", "h^-1 g psi(h) = case representative",
                                          concat({inverse(red.witness), a.conj, apply_psi(a.sigma, a.eps, red.witness)}),
                                          red.reduced, lim.budget));
  certify_fixed(g, a, r, lim.budget);
  // The free-basis description names Delta^lcm(2,m) at each edge; those are powers of the
  // emitted centre generators and are certified as well.
  for (const Word& w : remark) {
    Word cw = conj_by(red.witness, w);
    add_certificate(r, equality_certificate(g, "fixed", "gamma(" + format_word(cw, g.names) + ") = itself",
                                            apply_aut(a, cw), cw, lim.budget));
  }
  return r;
}

CentralizerResult hyperbolic_pattern(const DefiningGraph& g, const Word& w, const SearchLimits& lim) {
  Rewriter rw(g);
  CentralizerResult out;
  out.generators = {free_reduce(w)};
  SearchLimits small = lim;
  small.states = std::min<long>(lim.states, 400);
  SearchOut so = twisted_search(g, rw, ArtinAutomorphism::inner(w, g.size()), small, false);
  auto tris = exotic_triangles(g);
  std::vector<TwistedState> cands(so.states.begin(), so.states.begin() + std::min<size_t>(so.states.size(), 48));
  bool unknown = false;
  auto eq = [&](const Word& u, const Word& v) {
    EqualityVerdict ev = word_equal(g, u, v, lim.budget);
    if (ev.verdict == Verdict::UNKNOWN) unknown = true;
    return ev.equal();
  };
  // u^-1 w u = value, so w = u value u^-1.
  for (const auto& st : cands) {
    long ht = height(st.value);
    if (ht == 0 || ht % 6) continue;
    for (const auto& T : tris) {
      auto sup = support(st.value);
      if (!std::all_of(sup.begin(), sup.end(), [&](int x) { return x == T.x || x == T.y || x == T.w; })) continue;
      Word D = power(triple(T), 2);
      if (!eq(st.value, power(D, ht / 6))) continue;
      out.tag = CentralizerCase::HYP_EXOTIC;
      out.conjugator = st.h;
      out.triangle = {T.x, T.y, T.w};
      out.generators = {conj_by(st.h, {make_letter(T.y, 1)}), conj_by(st.h, triple(T))};
      return out;
    }
  }
  for (const auto& st : cands)
    for (int s = 0; s < g.size(); ++s) {
      Word ls{make_letter(s, 1)};
      if (!eq(concat(st.value, ls), concat(ls, st.value))) continue;
      out.tag = CentralizerCase::HYP_AXIS_IN_TREE;
      out.conjugator = st.h;
      out.generator = s;
      out.generators.push_back(conj_by(st.h, ls));
      return out;
    }
  for (const auto& st : cands)
    for (const auto& T : tris) {
      if (!(T.x < T.y && T.y < T.w)) continue;
      Word D = power(triple(T), 2);
      if (!eq(concat(st.value, D), concat(D, st.value))) continue;
      // A common power with the exotic centre puts w in the exotic centraliser, not transverse to it.
      long ht = height(st.value);
      if (ht != 0) {
        long p = 6 / std::gcd(6L, std::labs(ht)), q = p * ht / 6;
        bool common = false;
        for (long j = 1; j <= 3 && !common; ++j) common = eq(power(st.value, j * p), power(D, j * q));
        if (common) continue;
      }
      out.tag = CentralizerCase::HYP_TRANSVERSE;
      out.conjugator = st.h;
      out.triangle = {T.x, T.y, T.w};
      out.generators.push_back(conj_by(st.h, D));
      return out;
    }
  out.tag = CentralizerCase::HYP_PLAIN;
  if (unknown) out.confidence = Confidence::BUDGET_LIMITED;
  return out;
}

FixReport classify_hyperbolic(const DefiningGraph& g, const ArtinAutomorphism& a, const SearchLimits& lim) {
  Word z = twisted_z(a);
  FixReport r;
  if (a.eps) {
    r = cyclic_report(z, true);
    r.case_name = "hyperbolic with inversion";
    certify_fixed(g, a, r, lim.budget);
    add_check(r, "height", "ht(z) = 0", height(z) == 0, "ht = " + std::to_string(height(z)));
    return r;
  }
  CentralizerResult c = hyperbolic_pattern(g, z, lim);
  auto fixed = [&](const Word& w) { return is_fixed(g, a, w, lim.budget).verdict; };
  switch (c.tag) {
    case CentralizerCase::HYP_EXOTIC: {
      Verdict vb = fixed(c.generators[0]), vc = fixed(c.generators[1]);
      if (vb == Verdict::EQUAL && vc == Verdict::EQUAL) {
        r.tag = FixTag::DIHEDRAL_A4;
        r.generators = c.generators;
        r.case_name = "hyperbolic: z a power of the exotic centre";
      } else {
        // Fix is cyclic inside the exotic centraliser and always contains its centre.
        if (vc == Verdict::EQUAL)
          r = cyclic_report(c.generators[1], false);
        else
          r = cyclic_report(conj_by(c.conjugator, power(triple({c.triangle[0], c.triangle[1], c.triangle[2]}), 2)), true);
        r.case_name = "hyperbolic: z a power of the exotic centre, centraliser not fixed";
        if (vb == Verdict::UNKNOWN || vc == Verdict::UNKNOWN) {
          r.confidence = Confidence::BUDGET_LIMITED;
          r.notes.push_back("fixedness of the exotic centraliser generators undecided at budget");
        }
      }
      break;
    }
    case CentralizerCase::HYP_AXIS_IN_TREE:
      r.tag = FixTag::Z2;
      r.generators = {z, c.generators[1]};
      r.finite_index = true;
      r.case_name = "hyperbolic: axis in the standard tree of " + g.names[c.generator];
      break;
    case CentralizerCase::HYP_TRANSVERSE: {
      Verdict v = fixed(c.generators[1]);
      if (v == Verdict::EQUAL) {
        r.tag = FixTag::Z2;
        r.generators = {z, c.generators[1]};
        r.finite_index = true;
        r.case_name = "hyperbolic: transverse to an exotic plane, centre fixed";
      } else {
        r = cyclic_report(z, true);
        r.case_name = "hyperbolic: transverse to an exotic plane, centre not fixed";
        if (v == Verdict::UNKNOWN) {
          r.confidence = Confidence::BUDGET_LIMITED;
          r.notes.push_back("fixedness of the exotic centre undecided at budget");
        }
      }
      break;
    }
    default:
      r = cyclic_report(z, true);
      r.case_name = "hyperbolic: cyclic centraliser";
      if (c.confidence == Confidence::BUDGET_LIMITED) {
        r.confidence = Confidence::BUDGET_LIMITED;
        r.notes.push_back("pattern search hit the equality budget");
      }
  }
  r.witness = c.conjugator;
  certify_fixed(g, a, r, lim.budget);
  return r;
}

FixReport classify(const DefiningGraph& g, const ArtinAutomorphism& a, const SearchLimits& lim) {
  if (g.size() == 2 && g.adjacent(0, 1)) {
    FixReport r = dihedral_fix(g.m(0, 1), a, lim.budget);
    r.case_name = "single edge: " + r.case_name;
    return r;
  }
  Ellipticity e = ellipticity(g, a, lim);
  if (e.motion == Motion::ELLIPTIC) return classify_elliptic(g, a, reduce_isogredience(g, a, e), lim);
  FixReport r = classify_hyperbolic(g, a, lim);
  if (e.motion == Motion::UNKNOWN) {
    r.confidence = Confidence::BUDGET_LIMITED;
    r.case_name = "undecided motion; " + r.case_name;
  }
  r.notes.insert(r.notes.begin(), e.evidence);
  return r;
}

CentralizerResult centralizer_case(const DefiningGraph& g, const Word& w, const SearchLimits& lim) {
  ArtinAutomorphism a = ArtinAutomorphism::inner(free_reduce(w), g.size());
  Ellipticity e = ellipticity(g, a, lim);
  if (e.motion == Motion::ELLIPTIC) {
    Reduction red = reduce_isogredience(g, a, e);
    if (red.kind == ReductionCase::BASE_PSI) throw Error(ErrorCode::PARSE_ERROR, "centraliser of the identity");
    FixReport r = classify_elliptic(g, a, red, lim);
    CentralizerResult out;
    out.tag = red.kind == ReductionCase::GENERATOR_POWER ? CentralizerCase::TYPE1_TREE : CentralizerCase::TYPE2_VERTEX;
    out.generators = r.generators;
    out.conjugator = red.witness;
    out.generator = red.a;
    out.confidence = r.confidence;
    return out;
  }
  CentralizerResult out = hyperbolic_pattern(g, w, lim);
  if (e.motion == Motion::UNKNOWN) out.confidence = Confidence::BUDGET_LIMITED;
  return out;
}

Verification verify_report(const DefiningGraph& g, const ArtinAutomorphism& a, const FixReport& r,
                           const SearchLimits& lim) {
  Verification v;
  auto record = [&](Certificate c) {
    if (c.verdict != Verdict::EQUAL) {
      v.ok = false;
      v.failures.push_back(c.kind + ": " + c.claim + " [" + verdict_name(c.verdict) + "]");
    }
    v.checks.push_back(std::move(c));
  };
  auto count_check = [&](const std::string& kind, const std::string& claim, bool ok, const std::string& detail) {
    Certificate c;
    c.kind = kind;
    c.claim = claim;
    c.verdict = ok ? Verdict::EQUAL : Verdict::NOT_EQUAL;
    c.invariant = ok ? "" : "count";
    c.detail = detail;
    record(c);
  };
  auto fmt = [&](const Word& w) { return format_word(w, g.names); };
  const auto& G = r.generators;

  for (const Word& w : G)
    record(equality_certificate(g, "fixed", "gamma(" + fmt(w) + ") = itself", apply_aut(a, w), w, lim.budget));

  long bound = rank_bound(std::max(2, g.size()));
  count_check("rank", std::to_string(G.size()) + " generators <= " + std::to_string(bound),
              static_cast<long>(G.size()) <= bound, "n = " + std::to_string(g.size()));

  auto commute = [&](const Word& x, const Word& y) {
    record(equality_certificate(g, "relation", "[" + fmt(x) + ", " + fmt(y) + "] = 1", concat(x, y), concat(y, x),
                                lim.budget));
  };
  switch (r.tag) {
    case FixTag::Z2:
      if (G.size() == 2) commute(G[0], G[1]);
      break;
    case FixTag::Z_CROSS_F:
      for (size_t i = 1; i < G.size(); ++i) commute(G[0], G[i]);
      break;
    case FixTag::DIHEDRAL_A4:
      if (G.size() == 2) {
        // With s = x^-1 and t = x y the pair satisfies the length 4 braid relation stst = tsts.
        Word s = inverse(G[0]), t = concat(G[0], G[1]);
        record(equality_certificate(g, "relation", "stst = tsts for s = " + fmt(s) + ", t = " + fmt(free_reduce(t)),
                                    power(concat(s, t), 2), power(concat(t, s), 2), lim.budget));
      }
      break;
    case FixTag::ARTIN:
    case FixTag::ARTIN_FREE_PRODUCT:
      for (size_t i = 0; i < r.subgraph.size() && i < G.size(); ++i)
        for (size_t j = i + 1; j < r.subgraph.size() && j < G.size(); ++j) {
          int m = g.m(r.subgraph[i], r.subgraph[j]);
          if (m == kInfinity) continue;
          Word lhs, rhs;
          for (int k = 0; k < m; ++k) {
            lhs = concat(lhs, k % 2 ? G[j] : G[i]);
            rhs = concat(rhs, k % 2 ? G[i] : G[j]);
          }
          record(equality_certificate(g, "relation",
                                      "braid relation of length " + std::to_string(m) + " between " + fmt(G[i]) +
                                          " and " + fmt(G[j]),
                                      lhs, rhs, lim.budget));
        }
      break;
    default: break;
  }

  if (a.eps) {
    bool ok = std::all_of(G.begin(), G.end(), [](const Word& w) { return height(w) == 0; });
    count_check("height", "every generator has height 0", ok, "inversion reverses height");
  }

  if (g.size() == 2 && g.adjacent(0, 1)) {
    int m = g.m(0, 1);
    bool complete = true;
    auto brute = brute_fixed(m, a, lim.bound);
    auto ball = subgroup_ball(m, r, lim.bound, &complete);
    std::sort(brute.begin(), brute.end());
    std::sort(ball.begin(), ball.end());
    Certificate c;
    c.kind = "brute_force";
    c.claim = "fixed elements of length <= " + std::to_string(lim.bound) + " = subgroup elements of that length";
    c.verdict = brute == ball ? (complete ? Verdict::EQUAL : Verdict::UNKNOWN) : Verdict::NOT_EQUAL;
    c.detail = std::to_string(brute.size()) + " fixed, " + std::to_string(ball.size()) + " generated";
    record(c);
  }
  return v;
}

}  // namespace artin
