#pragma once

#include <string>
#include <utility>
#include <vector>

#include "artin/word.hpp"

namespace artin {

constexpr int kInfinity = 0;

// Labelled simplicial graph. Vertices are kept sorted by name; that order is the
// total order used by every labelling convention.
struct DefiningGraph {
  std::vector<std::string> names;
  std::vector<std::vector<int>> coef;  // coef[i][j] = m_ij, or kInfinity when there is no edge

  int size() const { return static_cast<int>(names.size()); }
  int m(int i, int j) const { return coef[i][j]; }
  bool adjacent(int i, int j) const { return i != j && coef[i][j] != kInfinity; }
  int index_of(const std::string& name) const;
  std::vector<std::pair<int, int>> edges() const;
  bool operator==(const DefiningGraph& o) const { return names == o.names && coef == o.coef; }
};

// Builds a graph from its text description; throws Error on invalid input.
DefiningGraph validate_graph(const std::string& text);
DefiningGraph complete_graph(int n, int label);
DefiningGraph edge_graph(int m);
std::string graph_to_text(const DefiningGraph& g);

struct GraphAutomorphism {
  std::vector<int> perm;  // perm[i] = image of vertex i

  static GraphAutomorphism identity(int n);
  bool is_identity() const;
  int order() const;
  GraphAutomorphism compose(const GraphAutomorphism& inner) const;  // this after inner
  GraphAutomorphism inverse() const;
  bool operator==(const GraphAutomorphism& o) const { return perm == o.perm; }
};

bool is_graph_automorphism(const DefiningGraph& g, const GraphAutomorphism& s);
std::vector<GraphAutomorphism> graph_automorphisms(const DefiningGraph& g);
// Parses "a>b b>a"; unmentioned vertices are fixed.
GraphAutomorphism parse_graph_map(const DefiningGraph& g, const std::string& text);
std::string format_graph_map(const DefiningGraph& g, const GraphAutomorphism& s);

struct SigmaData {
  std::vector<int> fixed_vertices;
  std::vector<std::pair<int, int>> transposed_pairs;  // (s,t) with s < t
};

SigmaData sigma_data(const DefiningGraph& g, const GraphAutomorphism& s);

enum class EdgeLabelling { TRIVIAL, GARSIDE, ALTERNATING };

// Bipartite graph on generator-vertices v^s and edge-vertices v^{st}.
struct OddComponentGraph {
  struct Node {
    bool is_edge = false;
    int s = -1, t = -1;  // generator index, or edge endpoints with s < t
    int side = -1;       // for a cut even edge-vertex: the endpoint it stays attached to
    int m = 0;
  };
  struct Edge {
    int gen_node, edge_node;
    Word label;  // read when walking from gen_node to edge_node
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  int basepoint = 0;

  int betti_number() const { return static_cast<int>(edges.size()) - static_cast<int>(nodes.size()) + 1; }
  std::vector<std::vector<std::pair<int, int>>> adjacency() const;  // (neighbour, edge index)
};

OddComponentGraph gamma_a_odd(const DefiningGraph& g, const GraphAutomorphism& s, int a,
                              EdgeLabelling labelling);

struct Pi1Basis {
  std::vector<Word> loops;
  std::vector<Word> tree_paths;  // label word along the spanning tree from the basepoint, per node
};

Pi1Basis pi1_basis(const OddComponentGraph& graph);

std::string graph_to_dot(const DefiningGraph& g);
// Gamma^sigma on the fixed vertices; each transposed pair is drawn as an isolated box for Delta_st.
std::string sigma_graph_to_dot(const DefiningGraph& g, const GraphAutomorphism& s);
std::string odd_graph_to_dot(const DefiningGraph& g, const OddComponentGraph& og);

}  // namespace artin
