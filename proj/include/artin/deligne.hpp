#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "artin/automorphism.hpp"
#include "artin/geodesic.hpp"
#include "artin/presentation.hpp"
#include "json.hpp"

namespace artin {

// The coset g A_S, S empty, a vertex, or a finite edge. rep is the canonical coset word.
struct DeligneVertex {
  Word rep;
  std::vector<int> S;
  int type() const { return static_cast<int>(S.size()); }
  bool operator==(const DeligneVertex& o) const { return S == o.S && rep == o.rep; }
  bool operator<(const DeligneVertex& o) const { return S != o.S ? S < o.S : rep < o.rep; }
};

std::string vertex_text(const DefiningGraph& g, const DeligneVertex& v);

// Bounds for enumerating the infinite links of type 1 and type 2 vertices.
struct LocalBounds {
  long generator_power = 0;   // |k| bound for g s^k v_empty; 0 means 2 * max label
  long dihedral_length = 0;   // normal-form length bound inside A_st; 0 means 2 m_st
};

class DeligneComplex {
 public:
  explicit DeligneComplex(const DefiningGraph& g, LocalBounds b = {});

  const DefiningGraph& graph() const { return *g_; }
  const Rewriter& rewriter() const { return rw_; }

  DeligneVertex vertex(const Word& g, std::vector<int> S) const;
  DeligneVertex base() const { return vertex({}, {}); }
  // Spherical types: the empty set, single vertices, finite edges.
  const std::vector<std::vector<int>>& types() const { return types_; }

  DeligneVertex translate(const Word& g, const DeligneVertex& v) const;
  // sigma . g v_S = sigma(g) v_sigma(S), iota . g v_S = iota(g) v_S, phi_h . g v_S = h g v_S.
  DeligneVertex act(const ArtinAutomorphism& a, const DeligneVertex& v) const;
  bool fixes(const ArtinAutomorphism& a, const DeligneVertex& v) const { return act(a, v) == v; }

  // Cosets strictly containing v (finite), and a bounded part of the cosets strictly inside v.
  std::vector<DeligneVertex> up(const DeligneVertex& v) const;
  std::vector<DeligneVertex> down(const DeligneVertex& v) const;

  // Cleared when some canonical form could not be certified within the closure limit.
  bool exact() const { return exact_; }

 private:
  const DefiningGraph* g_;
  Rewriter rw_;
  LocalBounds bounds_;
  std::vector<std::vector<int>> types_;
  mutable bool exact_ = true;
};

struct DeligneBall {
  int radius = 0;
  std::vector<DeligneVertex> vertices;  // sorted
  std::vector<int> dist;                // combinatorial distance from v_empty inside the truncated link graph
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> triangles;
  bool degraded = false;

  int index_of(const DeligneVertex& v) const;
  std::vector<std::vector<int>> adjacency() const;
};

DeligneBall build_ball(const DeligneComplex& X, int radius);

struct FixedVertices {
  std::vector<int> vertices;  // indices into the ball
  bool lower_bound = false;
};
FixedVertices fixed_vertices(const DeligneComplex& X, const ArtinAutomorphism& a, const DeligneBall& ball);

// Fixed set of phi_{h a h^-1} within the ball.
FixedVertices standard_tree_ball(const DeligneComplex& X, const Word& h, int a, const DeligneBall& ball);

struct Displacement {
  std::map<int, long> value;      // ball index -> d(v, g v)
  std::vector<int> out_of_ball;   // vertices whose image leaves the ball
  long minimum = -1;
  std::vector<int> minset;
};
Displacement displacement_field(const DeligneComplex& X, const Word& g, const DeligneBall& ball);

struct SimplexShape {
  double angle_empty, angle_a, angle_ab;  // at v_empty, v_a, v_ab
  double side_empty_a, side_empty_ab, side_a_ab;
};
SimplexShape simplex_shape(int m);

struct ProbeReport {
  int samples = 0;
  int failures = 0;
  std::vector<std::string> failed;
};
// Random (gamma, g, x) with x in the ball: gamma . (g x) = gamma(g) (gamma . x).
ProbeReport compatibility_probe(const DeligneComplex& X, const DeligneBall& ball, int samples, unsigned seed);

nlohmann::ordered_json ball_to_json(const DeligneComplex& X, const DeligneBall& ball,
                                    const std::vector<int>* fixed = nullptr);
std::string ball_to_dot(const DeligneComplex& X, const DeligneBall& ball, const std::vector<int>* fixed = nullptr);

}  // namespace artin
