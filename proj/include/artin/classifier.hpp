#pragma once

#include <string>
#include <vector>

#include "artin/automorphism.hpp"
#include "artin/oracle.hpp"
#include "artin/presentation.hpp"
#include "artin/report.hpp"

namespace artin {

struct SearchLimits {
  long budget = kDefaultBudget;  // per equality test
  long states = 6000;            // twisted-conjugacy states explored
  int slack = 4;                 // allowed length growth over the starting word
  long bound = 8;                // normal-form length bound for brute-force cross-checks
};

// Parses the automorphism DSL into a normalized triple (conj, sigma, eps).
ArtinAutomorphism normalize_aut(const DefiningGraph& g, const std::string& text);

long rank_bound(int n);

// One twisted conjugate h^-1 g psi(h), with the smallest spherical type it lies in.
struct TwistedState {
  Word h;
  Word value;  // canonical geodesic
  int type = 3;            // 0, 1, 2, or 3 for "not in a spherical parabolic fixed by sigma"
  std::vector<int> S;      // the spherical type reached
};

enum class Motion { ELLIPTIC, HYPERBOLIC, UNKNOWN };
const char* motion_name(Motion m);

struct Ellipticity {
  Motion motion = Motion::UNKNOWN;
  TwistedState vertex;     // the fixed vertex h v_S of lowest type found
  Word z;                  // twisted product
  std::string evidence;
  long explored = 0;
};

// Searches h v_S with h^-1 g psi(h) in A_S and sigma(S) = S (such vertices are fixed);
// otherwise looks for evidence that z does not conjugate into a spherical parabolic.
Ellipticity ellipticity(const DefiningGraph& g, const ArtinAutomorphism& a, const SearchLimits& lim = {});

enum class ReductionCase { BASE_PSI, GENERATOR_POWER, DIHEDRAL_VERTEX };
const char* reduction_case_name(ReductionCase c);

struct Reduction {
  ReductionCase kind = ReductionCase::BASE_PSI;
  Word witness;           // h with phi_h^-1 gamma phi_h the case representative
  int a = -1;             // generator for GENERATOR_POWER
  long k = 0;
  int s = -1, t = -1;     // edge for DIHEDRAL_VERTEX
  Word reduced;           // h^-1 g psi(h)
};

// Throws BUDGET_EXCEEDED when the search found no fixed vertex.
Reduction reduce_isogredience(const DefiningGraph& g, const ArtinAutomorphism& a, const Ellipticity& e);

// The case representative phi_h^-1 gamma phi_h.
ArtinAutomorphism representative(const ArtinAutomorphism& a, const Reduction& r);

FixReport classify_elliptic(const DefiningGraph& g, const ArtinAutomorphism& a, const Reduction& r,
                            const SearchLimits& lim = {});
FixReport classify_hyperbolic(const DefiningGraph& g, const ArtinAutomorphism& a, const SearchLimits& lim = {});
FixReport classify(const DefiningGraph& g, const ArtinAutomorphism& a, const SearchLimits& lim = {});

enum class CentralizerCase { TYPE1_TREE, TYPE2_VERTEX, HYP_AXIS_IN_TREE, HYP_PLAIN, HYP_EXOTIC, HYP_TRANSVERSE };
const char* centralizer_case_name(CentralizerCase c);

struct CentralizerResult {
  CentralizerCase tag = CentralizerCase::HYP_PLAIN;
  std::vector<Word> generators;
  Word conjugator;    // u with u^-1 w u the pattern element that was recognised
  std::vector<int> triangle;  // ordered (x, y, w) for the exotic and transverse patterns
  int generator = -1;         // standard generator for the tree patterns
  Confidence confidence = Confidence::PROVEN;
};

// Recognises the hyperbolic patterns of w among its short conjugates.
CentralizerResult hyperbolic_pattern(const DefiningGraph& g, const Word& w, const SearchLimits& lim = {});
CentralizerResult centralizer_case(const DefiningGraph& g, const Word& w, const SearchLimits& lim = {});

struct Verification {
  bool ok = true;
  std::vector<Certificate> checks;
  std::vector<std::string> failures;
};

// Fixedness, generator count, tag relations, and a brute-force comparison on single edges.
Verification verify_report(const DefiningGraph& g, const ArtinAutomorphism& a, const FixReport& r,
                           const SearchLimits& lim = {});

}  // namespace artin
