#include "artin/automorphism.hpp"

#include <numeric>
#include <sstream>

#include "artin/error.hpp"

namespace artin {

ArtinAutomorphism ArtinAutomorphism::identity(int n) { return {{}, GraphAutomorphism::identity(n), 0}; }

ArtinAutomorphism ArtinAutomorphism::inner(const Word& g, int n) {
  return {free_reduce(g), GraphAutomorphism::identity(n), 0};
}

Word apply_psi(const GraphAutomorphism& sigma, int eps, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(make_letter(sigma.perm.at(gen_of(l)), eps ? -sign_of(l) : sign_of(l)));
  return out;
}

Word apply_aut(const ArtinAutomorphism& a, const Word& w) {
  return concat({a.conj, apply_psi(a.sigma, a.eps, w), inverse(a.conj)});
}

Word apply_aut_checked(const DefiningGraph& g, const ArtinAutomorphism& a, const Word& w) {
  for (Letter l : w)
    if (gen_of(l) >= g.size()) throw Error(ErrorCode::UNKNOWN_GENERATOR, "letter index " + std::to_string(gen_of(l)));
  return apply_aut(a, w);
}

ArtinAutomorphism compose_auts(const ArtinAutomorphism& outer, const ArtinAutomorphism& inner) {
  // phi_g1 psi1 phi_g2 psi2 = phi_{g1 psi1(g2)} psi1 psi2; sigma and iota commute.
  ArtinAutomorphism out;
  out.conj = concat(outer.conj, apply_psi(outer.sigma, outer.eps, inner.conj));
  out.sigma = outer.sigma.compose(inner.sigma);
  out.eps = (outer.eps + inner.eps) % 2;
  return out;
}

ArtinAutomorphism compose_auts_checked(const DefiningGraph& g1, const DefiningGraph& g2,
                                       const ArtinAutomorphism& outer, const ArtinAutomorphism& inner) {
  if (!(g1 == g2)) throw Error(ErrorCode::GRAPH_MISMATCH, "automorphisms act on different graphs");
  return compose_auts(outer, inner);
}

ArtinAutomorphism inverse_aut(const ArtinAutomorphism& a) {
  ArtinAutomorphism out;
  out.sigma = a.sigma.inverse();
  out.eps = a.eps;
  out.conj = free_reduce(apply_psi(out.sigma, out.eps, inverse(a.conj)));
  return out;
}

ArtinAutomorphism power_aut(const ArtinAutomorphism& a, int k) {
  ArtinAutomorphism base = k < 0 ? inverse_aut(a) : a;
  ArtinAutomorphism out = ArtinAutomorphism::identity(static_cast<int>(a.sigma.perm.size()));
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = compose_auts(out, base);
  return out;
}

ArtinAutomorphism conjugate_aut(const ArtinAutomorphism& a, const Word& h) {
  ArtinAutomorphism out = a;
  out.conj = concat({h, a.conj, apply_psi(a.sigma, a.eps, inverse(h))});
  return out;
}

int psi_order(const ArtinAutomorphism& a) {
  int o = a.sigma.order();
  if (a.eps && o % 2 == 1) o *= 2;
  return o;
}

Word twisted_z(const ArtinAutomorphism& a) {
  int n = psi_order(a);
  Word z, cur = a.conj;
  for (int i = 0; i < n; ++i) {
    z.insert(z.end(), cur.begin(), cur.end());
    cur = apply_psi(a.sigma, a.eps, cur);
  }
  return free_reduce(z);
}

ArtinAutomorphism parse_automorphism(const DefiningGraph& g, const std::string& text) {
  ArtinAutomorphism out = ArtinAutomorphism::identity(g.size());
  std::string clause;
  std::istringstream in(text);
  while (std::getline(in, clause, ';')) {
    std::istringstream cs(clause);
    std::string head;
    if (!(cs >> head)) continue;
    std::string rest;
    std::getline(cs, rest);
    if (head == "conj") {
      out.conj = parse_word(rest, g.names);
    } else if (head == "graph") {
      out.sigma = parse_graph_map(g, rest);
    } else if (head == "invert") {
      std::string extra;
      if (std::istringstream(rest) >> extra) throw Error(ErrorCode::PARSE_ERROR, "'invert' takes no argument");
      out.eps = 1;
    } else {
      throw Error(ErrorCode::PARSE_ERROR, "unknown clause '" + head + "'");
    }
  }
  return out;
}

std::string format_automorphism(const DefiningGraph& g, const ArtinAutomorphism& a) {
  std::string out;
  if (!a.conj.empty()) out += "conj " + format_word(a.conj, g.names);
  if (!a.sigma.is_identity()) out += std::string(out.empty() ? "" : " ; ") + "graph " + format_graph_map(g, a.sigma);
  if (a.eps) out += std::string(out.empty() ? "" : " ; ") + "invert";
  return out.empty() ? "id" : out;
}

std::vector<int> odd_components(const DefiningGraph& g) {
  std::vector<int> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [i, j] : g.edges())
    if (g.m(i, j) % 2 == 1) parent[std::max(find(i), find(j))] = std::min(find(i), find(j));
  // Components numbered by their smallest vertex.
  std::vector<int> id(g.size(), -1), out(g.size());
  int next = 0;
  for (int i = 0; i < g.size(); ++i) {
    int r = find(i);
    if (id[r] < 0) id[r] = next++;
    out[i] = id[r];
  }
  return out;
}

std::vector<long> abelianization_vector(const DefiningGraph& g, const Word& w) {
  auto comp = odd_components(g);
  int k = 0;
  for (int c : comp) k = std::max(k, c + 1);
  std::vector<long> v(k, 0);
  for (Letter l : w) v[comp.at(gen_of(l))] += sign_of(l);
  return v;
}

}  // namespace artin
