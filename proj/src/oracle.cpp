#include "artin/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "artin/garside.hpp"

namespace artin {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::EQUAL: return "EQUAL";
    case Verdict::NOT_EQUAL: return "NOT_EQUAL";
    case Verdict::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

namespace {

std::string vec_text(const std::vector<long>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// Rewrites a word over {s,t} into the letters 0 and 1 of the edge group.
Word to_edge_letters(const Word& w, int s) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(make_letter(gen_of(l) == s ? 0 : 1, sign_of(l)));
  return out;
}

std::string nf_text(const GarsideNF& nf) {
  std::ostringstream os;
  os << "D^" << nf.p << " *";
  for (Letter l : nf.P) os << (gen_of(l) == 0 ? " s" : " t");
  return os.str();
}

}  // namespace

bool dihedral_fragment(const DefiningGraph& g, const Word& u, const Word& v, int& s, int& t) {
  std::vector<int> sup = support(u), sv = support(v);
  sup.insert(sup.end(), sv.begin(), sv.end());
  std::sort(sup.begin(), sup.end());
  sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
  if (sup.size() > 2) return false;
  if (sup.size() == 2) {
    if (!g.adjacent(sup[0], sup[1])) return false;
    s = sup[0];
    t = sup[1];
    return true;
  }
  // One generator or none: any finite edge through it will do.
  int a = sup.empty() ? 0 : sup[0];
  for (int b = 0; b < g.size(); ++b)
    if (g.adjacent(a, b)) {
      s = std::min(a, b);
      t = std::max(a, b);
      return true;
    }
  return false;
}

EqualityVerdict word_equal(const DefiningGraph& g, const Word& u, const Word& v, long budget) {
  EqualityVerdict r;
  Word fu = free_reduce(u), fv = free_reduce(v);
  if (fu == fv) {
    r.verdict = Verdict::EQUAL;
    r.trace.start(u);
    if (u != v) r.trace.push('F', v);
    return r;
  }
  long hu = height(fu), hv = height(fv);
  if (hu != hv) {
    r.verdict = Verdict::NOT_EQUAL;
    r.invariant = "height";
    r.detail = std::to_string(hu) + " vs " + std::to_string(hv);
    return r;
  }
  auto au = abelianization_vector(g, fu), av = abelianization_vector(g, fv);
  if (au != av) {
    r.verdict = Verdict::NOT_EQUAL;
    r.invariant = "abelianization";
    r.detail = vec_text(au) + " vs " + vec_text(av);
    return r;
  }
  int s = -1, t = -1;
  if (dihedral_fragment(g, fu, fv, s, t)) {
    int m = g.m(s, t);
    GarsideNF nu = garside_nf(m, to_edge_letters(fu, s)), nv = garside_nf(m, to_edge_letters(fv, s));
    if (!(nu == nv)) {
      r.verdict = Verdict::NOT_EQUAL;
      r.invariant = "dihedral_nf";
      r.detail = g.names[s] + g.names[t] + ": " + nf_text(nu) + " vs " + nf_text(nv);
      return r;
    }
  }
  // Reduce u v^-1 to a geodesic; the empty word proves equality.
  Rewriter rw(g);
  Word x = concat(fu, inverse(fv)), out;
  Trace tr;
  long left = budget;
  bool done = rw.reduce(x, out, left, &tr);
  r.spent = budget - left;
  if (!done) {
    r.verdict = Verdict::UNKNOWN;
    r.detail = "budget of " + std::to_string(budget) + " spent";
    return r;
  }
  if (!out.empty()) {
    r.verdict = Verdict::NOT_EQUAL;
    r.invariant = "geodesic";
    r.detail = "u v^-1 reduces to nonempty geodesic " + format_word(out, g.names);
    return r;
  }
  // Turn the derivation u v^-1 -> 1 into u -> v by right multiplication with v.
  r.verdict = Verdict::EQUAL;
  r.trace.start(u);
  for (size_t i = 0; i < tr.states.size(); ++i) {
    Word st = tr.states[i];
    st.insert(st.end(), fv.begin(), fv.end());
    r.trace.push(i == 0 ? 'F' : tr.kinds[i - 1], st);
  }
  r.trace.push('F', v);
  return r;
}

EqualityVerdict is_fixed(const DefiningGraph& g, const ArtinAutomorphism& a, const Word& w, long budget) {
  return word_equal(g, apply_aut(a, w), w, budget);
}

bool check_verdict(const DefiningGraph& g, const Word& u, const Word& v, const EqualityVerdict& r,
                   std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  switch (r.verdict) {
    case Verdict::UNKNOWN: return true;
    case Verdict::EQUAL:
      if (r.trace.states.empty() || r.trace.states.front() != u || r.trace.states.back() != v)
        return fail("trace endpoints differ from the compared words");
      return replay_trace(g, r.trace, why);
    case Verdict::NOT_EQUAL: {
      Word fu = free_reduce(u), fv = free_reduce(v);
      if (r.invariant == "height") return height(fu) != height(fv) ? true : fail("heights agree");
      if (r.invariant == "abelianization")
        return abelianization_vector(g, fu) != abelianization_vector(g, fv) ? true : fail("abelianizations agree");
      if (r.invariant == "dihedral_nf") {
        int s, t;
        if (!dihedral_fragment(g, fu, fv, s, t)) return fail("words leave every dihedral parabolic");
        int m = g.m(s, t);
        return garside_nf(m, to_edge_letters(fu, s)) == garside_nf(m, to_edge_letters(fv, s))
                   ? fail("normal forms agree")
                   : true;
      }
      if (r.invariant == "geodesic") {
        Rewriter rw(g);
        return rw.geodesic(concat(fu, inverse(fv))).empty() ? fail("quotient reduces to 1") : true;
      }
      return fail("unknown invariant " + r.invariant);
    }
  }
  return fail("bad verdict");
}

}  // namespace artin
