#pragma once

#include <string>
#include <vector>

#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin {

// phi_g sigma iota^eps, acting as w -> g sigma(iota^eps(w)) g^-1.
struct ArtinAutomorphism {
  Word conj;
  GraphAutomorphism sigma;
  int eps = 0;

  static ArtinAutomorphism identity(int n);
  static ArtinAutomorphism inner(const Word& g, int n);
  bool operator==(const ArtinAutomorphism& o) const {
    return conj == o.conj && sigma == o.sigma && eps == o.eps;
  }
};

// psi = sigma iota^eps applied letterwise (no conjugation).
Word apply_psi(const GraphAutomorphism& sigma, int eps, const Word& w);
Word apply_aut(const ArtinAutomorphism& a, const Word& w);
// Checked variant: throws UNKNOWN_GENERATOR when a letter is outside the graph.
Word apply_aut_checked(const DefiningGraph& g, const ArtinAutomorphism& a, const Word& w);
ArtinAutomorphism compose_auts(const ArtinAutomorphism& outer, const ArtinAutomorphism& inner);
ArtinAutomorphism compose_auts_checked(const DefiningGraph& g1, const DefiningGraph& g2,
                                       const ArtinAutomorphism& outer, const ArtinAutomorphism& inner);
ArtinAutomorphism inverse_aut(const ArtinAutomorphism& a);
ArtinAutomorphism power_aut(const ArtinAutomorphism& a, int k);
// phi_h a phi_h^-1.
ArtinAutomorphism conjugate_aut(const ArtinAutomorphism& a, const Word& h);
// Order of psi = sigma iota^eps.
int psi_order(const ArtinAutomorphism& a);
// g psi(g) ... psi^{n-1}(g) with n the order of psi.
Word twisted_z(const ArtinAutomorphism& a);

// DSL: "conj <word> ; graph a>b b>a ; invert", any subset of clauses in any order.
ArtinAutomorphism parse_automorphism(const DefiningGraph& g, const std::string& text);
std::string format_automorphism(const DefiningGraph& g, const ArtinAutomorphism& a);

// Exponent sums after identifying generators joined by odd-labelled edges.
std::vector<int> odd_components(const DefiningGraph& g);  // component id per generator
std::vector<long> abelianization_vector(const DefiningGraph& g, const Word& w);

}  // namespace artin
