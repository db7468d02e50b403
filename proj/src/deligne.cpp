#include "artin/deligne.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "artin/garside.hpp"

namespace artin {

std::string vertex_text(const DefiningGraph& g, const DeligneVertex& v) {
  std::string s = format_word(v.rep, g.names) + " v_";
  if (v.S.empty()) return s + "0";
  for (int x : v.S) s += g.names[x];
  return s;
}

DeligneComplex::DeligneComplex(const DefiningGraph& g, LocalBounds b) : g_(&g), rw_(g), bounds_(b) {
  types_.push_back({});
  for (int s = 0; s < g.size(); ++s) types_.push_back({s});
  for (auto [s, t] : g.edges()) types_.push_back({s, t});
  int maxm = 2;
  for (auto [s, t] : g.edges()) maxm = std::max(maxm, g.m(s, t));
  if (bounds_.generator_power <= 0) bounds_.generator_power = 2 * maxm;
}

DeligneVertex DeligneComplex::vertex(const Word& g, std::vector<int> S) const {
  std::sort(S.begin(), S.end());
  bool complete = true;
  DeligneVertex v{rw_.coset_canonical(g, S, 4096, &complete), S};
  if (!complete) exact_ = false;
  return v;
}

DeligneVertex DeligneComplex::translate(const Word& g, const DeligneVertex& v) const {
  return vertex(concat(g, v.rep), v.S);
}

DeligneVertex DeligneComplex::act(const ArtinAutomorphism& a, const DeligneVertex& v) const {
  std::vector<int> S;
  for (int s : v.S) S.push_back(a.sigma.perm[s]);
  return vertex(concat(a.conj, apply_psi(a.sigma, a.eps, v.rep)), S);
}

std::vector<DeligneVertex> DeligneComplex::up(const DeligneVertex& v) const {
  std::vector<DeligneVertex> out;
  for (const auto& T : types_) {
    if (T.size() <= v.S.size()) continue;
    if (!std::includes(T.begin(), T.end(), v.S.begin(), v.S.end())) continue;
    out.push_back(vertex(v.rep, T));
  }
  return out;
}

std::vector<DeligneVertex> DeligneComplex::down(const DeligneVertex& v) const {
  std::set<DeligneVertex> out;
  if (v.type() == 1) {
    int s = v.S[0];
    for (long k = -bounds_.generator_power; k <= bounds_.generator_power; ++k)
      out.insert(vertex(concat(v.rep, power({make_letter(s, 1)}, k)), {}));
  } else if (v.type() == 2) {
    int s = v.S[0], t = v.S[1], m = g_->m(s, t);
    long bound = bounds_.dihedral_length > 0 ? bounds_.dihedral_length : 2L * m;
    for (const auto& nf : enumerate_nfs(m, bound)) {
      Word h;
      for (Letter l : nf_to_word(m, nf)) h.push_back(make_letter(gen_of(l) == 0 ? s : t, sign_of(l)));
      Word gh = concat(v.rep, h);
      out.insert(vertex(gh, {}));
      out.insert(vertex(gh, {s}));
      out.insert(vertex(gh, {t}));
    }
  }
  return {out.begin(), out.end()};
}

int DeligneBall::index_of(const DeligneVertex& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || !(*it == v)) return -1;
  return static_cast<int>(it - vertices.begin());
}

std::vector<std::vector<int>> DeligneBall::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

DeligneBall build_ball(const DeligneComplex& X, int radius) {
  DeligneBall ball;
  ball.radius = radius;
  std::map<DeligneVertex, int> dist;
  std::deque<DeligneVertex> q;
  DeligneVertex b = X.base();
  dist[b] = 0;
  q.push_back(b);
  while (!q.empty()) {
    DeligneVertex v = q.front();
    q.pop_front();
    int d = dist[v];
    if (d >= radius) continue;
    auto nb = X.up(v);
    auto dn = X.down(v);
    nb.insert(nb.end(), dn.begin(), dn.end());
    for (const auto& u : nb)
      if (dist.emplace(u, d + 1).second) q.push_back(u);
  }
  for (const auto& [v, d] : dist) {
    ball.vertices.push_back(v);
    ball.dist.push_back(d);
  }
  // Inclusions are found exactly from the finite upward links.
  for (size_t i = 0; i < ball.vertices.size(); ++i) {
    const auto& v = ball.vertices[i];
    auto ups = X.up(v);
    for (const auto& u : ups) {
      int j = ball.index_of(u);
      if (j >= 0) ball.edges.push_back({static_cast<int>(i), j});
    }
    if (v.type() == 0)
      for (const auto& u : ups) {
        if (u.type() != 1) continue;
        for (const auto& w : ups) {
          if (w.type() != 2 || !std::includes(w.S.begin(), w.S.end(), u.S.begin(), u.S.end())) continue;
          int j = ball.index_of(u), k = ball.index_of(w);
          if (j >= 0 && k >= 0) ball.triangles.push_back({static_cast<int>(i), j, k});
        }
      }
  }
  std::sort(ball.edges.begin(), ball.edges.end());
  std::sort(ball.triangles.begin(), ball.triangles.end());
  ball.degraded = !X.exact();
  return ball;
}

FixedVertices fixed_vertices(const DeligneComplex& X, const ArtinAutomorphism& a, const DeligneBall& ball) {
  FixedVertices out;
  for (size_t i = 0; i < ball.vertices.size(); ++i)
    if (X.fixes(a, ball.vertices[i])) out.vertices.push_back(static_cast<int>(i));
  out.lower_bound = !X.exact();
  return out;
}

FixedVertices standard_tree_ball(const DeligneComplex& X, const Word& h, int a, const DeligneBall& ball) {
  Word c = concat({h, Word{make_letter(a, 1)}, inverse(h)});
  return fixed_vertices(X, ArtinAutomorphism::inner(c, X.graph().size()), ball);
}

Displacement displacement_field(const DeligneComplex& X, const Word& g, const DeligneBall& ball) {
  Displacement out;
  auto adj = ball.adjacency();
  for (size_t i = 0; i < ball.vertices.size(); ++i) {
    int j = ball.index_of(X.translate(g, ball.vertices[i]));
    if (j < 0) {
      out.out_of_ball.push_back(static_cast<int>(i));
      continue;
    }
    std::vector<long> d(ball.vertices.size(), -1);
    std::deque<int> q{static_cast<int>(i)};
    d[i] = 0;
    while (!q.empty() && d[j] < 0) {
      int u = q.front();
      q.pop_front();
      for (int w : adj[u])
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          q.push_back(w);
        }
    }
    if (d[j] < 0) {
      out.out_of_ball.push_back(static_cast<int>(i));
      continue;
    }
    out.value[static_cast<int>(i)] = d[j];
  }
  for (auto [i, v] : out.value)
    if (out.minimum < 0 || v < out.minimum) out.minimum = v;
  for (auto [i, v] : out.value)
    if (v == out.minimum) out.minset.push_back(i);
  return out;
}

SimplexShape simplex_shape(int m) {
  const double pi = std::acos(-1.0);
  SimplexShape s;
  s.angle_ab = pi / (2.0 * m);
  s.angle_a = pi / 2.0;
  s.angle_empty = pi - s.angle_a - s.angle_ab;
  // Law of sines with the side opposite v_ab of length 1.
  double k = 1.0 / std::sin(s.angle_ab);
  s.side_empty_a = 1.0;
  s.side_empty_ab = k * std::sin(s.angle_a);
  s.side_a_ab = k * std::sin(s.angle_empty);
  return s;
}

ProbeReport compatibility_probe(const DeligneComplex& X, const DeligneBall& ball, int samples, unsigned seed) {
  const DefiningGraph& G = X.graph();
  std::mt19937 rng(seed);
  auto sigmas = graph_automorphisms(G);
  auto random_word = [&](int maxlen) {
    Word w;
    int L = static_cast<int>(rng() % (maxlen + 1));
    for (int i = 0; i < L; ++i) w.push_back(make_letter(static_cast<int>(rng() % G.size()), rng() % 2 ? 1 : -1));
    return free_reduce(w);
  };
  ProbeReport out;
  for (int i = 0; i < samples; ++i) {
    ArtinAutomorphism a{random_word(4), sigmas[rng() % sigmas.size()], static_cast<int>(rng() % 2)};
    Word g = random_word(4);
    const DeligneVertex& x = ball.vertices[rng() % ball.vertices.size()];
    DeligneVertex lhs = X.act(a, X.translate(g, x));
    DeligneVertex rhs = X.translate(apply_aut(a, g), X.act(a, x));
    ++out.samples;
    if (!(lhs == rhs)) {
      ++out.failures;
      out.failed.push_back(format_automorphism(G, a) + " | " + format_word(g, G.names) + " | " + vertex_text(G, x));
    }
  }
  return out;
}

nlohmann::ordered_json ball_to_json(const DeligneComplex& X, const DeligneBall& ball, const std::vector<int>* fixed) {
  const DefiningGraph& G = X.graph();
  nlohmann::ordered_json j;
  j["radius"] = ball.radius;
  j["degraded"] = ball.degraded;
  std::set<int> fx;
  if (fixed) fx.insert(fixed->begin(), fixed->end());
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (size_t i = 0; i < ball.vertices.size(); ++i) {
    const auto& v = ball.vertices[i];
    nlohmann::ordered_json vj;
    vj["rep"] = format_word(v.rep, G.names);
    std::string S;
    for (int s : v.S) S += G.names[s];
    vj["S"] = S;
    vj["type"] = v.type();
    vj["dist"] = ball.dist[i];
    if (fixed) vj["fixed"] = fx.count(static_cast<int>(i)) > 0;
    vs.push_back(vj);
  }
  j["vertices"] = vs;
  j["edges"] = ball.edges;
  j["triangles"] = ball.triangles;
  return j;
}

std::string ball_to_dot(const DeligneComplex& X, const DeligneBall& ball, const std::vector<int>* fixed) {
  const DefiningGraph& G = X.graph();
  std::set<int> fx;
  if (fixed) fx.insert(fixed->begin(), fixed->end());
  std::ostringstream os;
  os << "graph deligne {\n";
  for (size_t i = 0; i < ball.vertices.size(); ++i) {
    if (ball.vertices[i].type() == 0) continue;
    os << "  n" << i << " [label=\"" << vertex_text(G, ball.vertices[i]) << "\"";
    if (fx.count(static_cast<int>(i))) os << ", color=red, style=bold";
    os << "];\n";
  }
  // Essential 1-skeleton: edges between type 1 and type 2 vertices.
  for (auto [u, v] : ball.edges)
    if (ball.vertices[u].type() > 0 && ball.vertices[v].type() > 0) os << "  n" << u << " -- n" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace artin
