#include "artin/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "artin/error.hpp"

namespace artin {

int DefiningGraph::index_of(const std::string& name) const {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) return -1;
  return static_cast<int>(it - names.begin());
}

std::vector<std::pair<int, int>> DefiningGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

DefiningGraph validate_graph(const std::string& text) {
  std::set<std::string> declared;
  struct RawEdge {
    std::string u, v;
    int m;
    int line;
  };
  std::vector<RawEdge> raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    std::string where = "line " + std::to_string(lineno);
    if (tok[0] == "vertex") {
      if (tok.size() != 2 || !valid_name(tok[1]))
        throw Error(ErrorCode::PARSE_ERROR, where + ": expected 'vertex <name>'");
      declared.insert(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4 || !valid_name(tok[1]) || !valid_name(tok[2]))
        throw Error(ErrorCode::PARSE_ERROR, where + ": expected 'edge <u> <v> <m>'");
      int m;
      if (tok[3] == "inf" || tok[3] == "INFINITY" || tok[3] == "oo") {
        m = kInfinity;
      } else {
        try {
          size_t used = 0;
          m = std::stoi(tok[3], &used);
          if (used != tok[3].size()) throw std::invalid_argument(tok[3]);
        } catch (const std::exception&) {
          throw Error(ErrorCode::PARSE_ERROR, where + ": bad coefficient '" + tok[3] + "'");
        }
        if (m < 3) throw Error(ErrorCode::COEFFICIENT_BELOW_3, where + ": m=" + tok[3]);
      }
      if (tok[1] == tok[2]) throw Error(ErrorCode::LOOP_EDGE, where + ": " + tok[1]);
      raw.push_back({tok[1], tok[2], m, lineno});
    } else {
      throw Error(ErrorCode::PARSE_ERROR, where + ": unknown directive '" + tok[0] + "'");
    }
  }
  // Once any vertex is declared, edges may only use declared vertices.
  bool strict = !declared.empty();
  std::set<std::string> all = declared;
  for (const auto& e : raw) {
    for (const auto& x : {e.u, e.v}) {
      if (strict && !declared.count(x))
        throw Error(ErrorCode::UNKNOWN_VERTEX, "line " + std::to_string(e.line) + ": " + x);
      all.insert(x);
    }
  }
  DefiningGraph g;
  g.names.assign(all.begin(), all.end());
  g.coef.assign(g.size(), std::vector<int>(g.size(), kInfinity));
  std::set<std::pair<int, int>> seen;
  for (const auto& e : raw) {
    int i = g.index_of(e.u), j = g.index_of(e.v);
    auto key = std::minmax(i, j);
    if (!seen.insert(key).second)
      throw Error(ErrorCode::DUPLICATE_EDGE, "line " + std::to_string(e.line) + ": " + e.u + " " + e.v);
    g.coef[i][j] = g.coef[j][i] = e.m;
  }
  return g;
}

DefiningGraph complete_graph(int n, int label) {
  std::string text;
  for (int i = 0; i < n; ++i) text += "vertex " + std::string(1, static_cast<char>('a' + i)) + "\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      text += "edge " + std::string(1, static_cast<char>('a' + i)) + " " +
              std::string(1, static_cast<char>('a' + j)) + " " + std::to_string(label) + "\n";
  return validate_graph(text);
}

DefiningGraph edge_graph(int m) { return validate_graph("edge a b " + std::to_string(m) + "\n"); }

std::string graph_to_text(const DefiningGraph& g) {
  std::string out;
  for (const auto& n : g.names) out += "vertex " + n + "\n";
  for (auto [i, j] : g.edges()) out += "edge " + g.names[i] + " " + g.names[j] + " " + std::to_string(g.m(i, j)) + "\n";
  return out;
}

GraphAutomorphism GraphAutomorphism::identity(int n) {
  GraphAutomorphism s;
  for (int i = 0; i < n; ++i) s.perm.push_back(i);
  return s;
}

bool GraphAutomorphism::is_identity() const {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

int GraphAutomorphism::order() const {
  GraphAutomorphism p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p.compose(*this);
    ++k;
  }
  return k;
}

GraphAutomorphism GraphAutomorphism::compose(const GraphAutomorphism& inner) const {
  GraphAutomorphism out;
  for (int x : inner.perm) out.perm.push_back(perm[x]);
  return out;
}

GraphAutomorphism GraphAutomorphism::inverse() const {
  GraphAutomorphism out;
  out.perm.assign(perm.size(), 0);
  for (size_t i = 0; i < perm.size(); ++i) out.perm[perm[i]] = static_cast<int>(i);
  return out;
}

bool is_graph_automorphism(const DefiningGraph& g, const GraphAutomorphism& s) {
  if (static_cast<int>(s.perm.size()) != g.size()) return false;
  std::vector<int> hit(g.size(), 0);
  for (int x : s.perm) {
    if (x < 0 || x >= g.size() || hit[x]) return false;
    hit[x] = 1;
  }
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      if (g.m(i, j) != g.m(s.perm[i], s.perm[j])) return false;
  return true;
}

std::vector<GraphAutomorphism> graph_automorphisms(const DefiningGraph& g) {
  int n = g.size();
  // Label signature per vertex prunes candidate images.
  std::vector<std::vector<int>> sig(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) sig[i].push_back(g.m(i, j));
    std::sort(sig[i].begin(), sig[i].end());
  }
  std::vector<GraphAutomorphism> out;
  std::vector<int> perm(n, -1), used(n, 0);
  // Images tried in increasing index order, so the identity comes first and the list is lexicographic.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back({perm});
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || sig[c] != sig[i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g.m(i, j) == g.m(c, perm[j]);
      if (!ok) continue;
      perm[i] = c;
      used[c] = 1;
      self(self, i + 1);
      used[c] = 0;
      perm[i] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

GraphAutomorphism parse_graph_map(const DefiningGraph& g, const std::string& text) {
  GraphAutomorphism s = GraphAutomorphism::identity(g.size());
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto gt = tok.find('>');
    if (gt == std::string::npos) throw Error(ErrorCode::PARSE_ERROR, "expected u>v, got '" + tok + "'");
    int u = g.index_of(tok.substr(0, gt)), v = g.index_of(tok.substr(gt + 1));
    if (u < 0 || v < 0) throw Error(ErrorCode::UNKNOWN_GENERATOR, "'" + tok + "'");
    s.perm[u] = v;
  }
  if (!is_graph_automorphism(g, s))
    throw Error(ErrorCode::NOT_AN_AUTOMORPHISM, "'" + text + "' is not a label-preserving graph automorphism");
  return s;
}

std::string format_graph_map(const DefiningGraph& g, const GraphAutomorphism& s) {
  std::string out;
  for (int i = 0; i < g.size(); ++i) {
    if (s.perm[i] == i) continue;
    if (!out.empty()) out += ' ';
    out += g.names[i] + ">" + g.names[s.perm[i]];
  }
  return out.empty() ? "id" : out;
}

SigmaData sigma_data(const DefiningGraph& g, const GraphAutomorphism& s) {
  if (!is_graph_automorphism(g, s)) throw Error(ErrorCode::NOT_AN_AUTOMORPHISM, "sigma_data");
  SigmaData d;
  for (int i = 0; i < g.size(); ++i) {
    int j = s.perm[i];
    if (j == i)
      d.fixed_vertices.push_back(i);
    else if (i < j && s.perm[j] == i && g.adjacent(i, j))
      d.transposed_pairs.emplace_back(i, j);
  }
  return d;
}

std::vector<std::vector<std::pair<int, int>>> OddComponentGraph::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(nodes.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].gen_node].emplace_back(edges[e].edge_node, static_cast<int>(e));
    adj[edges[e].edge_node].emplace_back(edges[e].gen_node, static_cast<int>(e));
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

namespace {

Word edge_label(int s, int t, int m, int from, EdgeLabelling lab) {
  // Only the direction leaving the smaller generator-vertex of an odd edge carries a label.
  if (from != s || m % 2 == 0) return {};
  if (lab == EdgeLabelling::GARSIDE) return alternating(s, t, m);
  if (lab == EdgeLabelling::ALTERNATING) {
    int n = (m - 1) / 2;
    Word w;
    for (int i = 1; i <= 2 * n; ++i) {
      int gen = (i % 2 == 1) ? t : s;
      w.push_back(make_letter(gen, i <= n ? -1 : 1));
    }
    return w;
  }
  return {};
}

}  // namespace

OddComponentGraph gamma_a_odd(const DefiningGraph& g, const GraphAutomorphism& s, int a,
                              EdgeLabelling labelling) {
  if (!is_graph_automorphism(g, s)) throw Error(ErrorCode::NOT_AN_AUTOMORPHISM, "gamma_a_odd");
  if (a < 0 || a >= g.size() || s.perm[a] != a)
    throw Error(ErrorCode::VERTEX_NOT_FIXED, "generator is not fixed by the graph automorphism");
  SigmaData d = sigma_data(g, s);
  std::vector<int> fixed(g.size(), 0);
  for (int v : d.fixed_vertices) fixed[v] = 1;

  // Full cut graph, nodes in canonical order: generators, then edge-vertices by (s,t,side).
  OddComponentGraph full;
  std::map<int, int> gen_node;
  for (int v : d.fixed_vertices) {
    gen_node[v] = static_cast<int>(full.nodes.size());
    full.nodes.push_back({false, v, -1, -1, 0});
  }
  for (auto [u, v] : g.edges()) {
    if (!fixed[u] || !fixed[v]) continue;
    int m = g.m(u, v);
    if (m % 2 == 1) {
      int id = static_cast<int>(full.nodes.size());
      full.nodes.push_back({true, u, v, -1, m});
      full.edges.push_back({gen_node[u], id, edge_label(u, v, m, u, labelling)});
      full.edges.push_back({gen_node[v], id, edge_label(u, v, m, v, labelling)});
    } else {
      for (int side : {u, v}) {
        int id = static_cast<int>(full.nodes.size());
        full.nodes.push_back({true, u, v, side, m});
        full.edges.push_back({gen_node[side], id, {}});
      }
    }
  }
  // Component of v^a.
  auto adj = full.adjacency();
  std::vector<int> keep(full.nodes.size(), 0);
  std::deque<int> q{gen_node[a]};
  keep[gen_node[a]] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (auto [y, e] : adj[x])
      if (!keep[y]) {
        keep[y] = 1;
        q.push_back(y);
      }
  }
  OddComponentGraph out;
  std::vector<int> remap(full.nodes.size(), -1);
  for (size_t i = 0; i < full.nodes.size(); ++i)
    if (keep[i]) {
      remap[i] = static_cast<int>(out.nodes.size());
      out.nodes.push_back(full.nodes[i]);
    }
  for (const auto& e : full.edges)
    if (keep[e.gen_node]) out.edges.push_back({remap[e.gen_node], remap[e.edge_node], e.label});
  out.basepoint = remap[gen_node[a]];
  return out;
}

Pi1Basis pi1_basis(const OddComponentGraph& graph) {
  auto adj = graph.adjacency();
  size_t n = graph.nodes.size();
  Pi1Basis out;
  out.tree_paths.assign(n, {});
  std::vector<int> seen(n, 0), tree_edge(graph.edges.size(), 0);
  std::deque<int> q{graph.basepoint};
  seen[graph.basepoint] = 1;
  auto step = [&](int from, int e) {
    const auto& ed = graph.edges[e];
    return from == ed.gen_node ? ed.label : inverse(ed.label);
  };
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (auto [y, e] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      tree_edge[e] = 1;
      out.tree_paths[y] = concat(out.tree_paths[x], step(x, e));
      q.push_back(y);
    }
  }
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    if (tree_edge[e]) continue;
    const auto& ed = graph.edges[e];
    Word loop = concat({out.tree_paths[ed.gen_node], ed.label, inverse(out.tree_paths[ed.edge_node])});
    out.loops.push_back(loop);
  }
  return out;
}

std::string graph_to_dot(const DefiningGraph& g) {
  std::string out = "graph Gamma {\n";
  for (const auto& n : g.names) out += "  \"" + n + "\";\n";
  for (auto [i, j] : g.edges())
    out += "  \"" + g.names[i] + "\" -- \"" + g.names[j] + "\" [label=\"" + std::to_string(g.m(i, j)) + "\"];\n";
  out += "}\n";
  return out;
}

std::string sigma_graph_to_dot(const DefiningGraph& g, const GraphAutomorphism& s) {
  SigmaData d = sigma_data(g, s);
  std::string out = "graph GammaSigma {\n";
  for (int v : d.fixed_vertices) out += "  \"" + g.names[v] + "\";\n";
  for (auto [i, j] : g.edges())
    if (s.perm[i] == i && s.perm[j] == j)
      out += "  \"" + g.names[i] + "\" -- \"" + g.names[j] + "\" [label=\"" + std::to_string(g.m(i, j)) + "\"];\n";
  for (auto [i, j] : d.transposed_pairs)
    out += "  \"Delta_" + g.names[i] + g.names[j] + "\" [shape=box, label=\"Delta_" + g.names[i] + g.names[j] +
           " (m=" + std::to_string(g.m(i, j)) + ")\"];\n";
  out += "}\n";
  return out;
}

std::string odd_graph_to_dot(const DefiningGraph& g, const OddComponentGraph& og) {
  auto node_name = [&](const OddComponentGraph::Node& nd) {
    if (!nd.is_edge) return "v^" + g.names[nd.s];
    std::string nm = "v^" + g.names[nd.s] + g.names[nd.t];
    if (nd.side >= 0) nm += "@" + g.names[nd.side];
    return nm;
  };
  std::string out = "digraph GammaOdd {\n";
  for (size_t i = 0; i < og.nodes.size(); ++i) {
    out += "  \"" + node_name(og.nodes[i]) + "\"";
    if (static_cast<int>(i) == og.basepoint) out += " [shape=doublecircle]";
    out += ";\n";
  }
  for (const auto& e : og.edges)
    out += "  \"" + node_name(og.nodes[e.gen_node]) + "\" -> \"" + node_name(og.nodes[e.edge_node]) +
           "\" [label=\"" + format_word(e.label, g.names) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace artin
