#pragma once

#include <string>

#include "artin/automorphism.hpp"
#include "artin/geodesic.hpp"
#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin {

constexpr long kDefaultBudget = 100000;

enum class Verdict { EQUAL, NOT_EQUAL, UNKNOWN };
const char* verdict_name(Verdict v);

// EQUAL carries a derivation from u to v; NOT_EQUAL names the invariant that
// separates the two words; UNKNOWN means the budget ran out.
struct EqualityVerdict {
  Verdict verdict = Verdict::UNKNOWN;
  Trace trace;
  std::string invariant;  // height | abelianization | dihedral_nf | geodesic
  std::string detail;
  long spent = 0;

  bool equal() const { return verdict == Verdict::EQUAL; }
  bool not_equal() const { return verdict == Verdict::NOT_EQUAL; }
};

EqualityVerdict word_equal(const DefiningGraph& g, const Word& u, const Word& v, long budget = kDefaultBudget);
EqualityVerdict is_fixed(const DefiningGraph& g, const ArtinAutomorphism& a, const Word& w,
                         long budget = kDefaultBudget);

// Re-checks a verdict independently of how it was produced: EQUAL traces must
// start at u, end at v and replay; NOT_EQUAL invariants are recomputed.
bool check_verdict(const DefiningGraph& g, const Word& u, const Word& v, const EqualityVerdict& r,
                   std::string* why = nullptr);

// Index of the dihedral parabolic {s,t} (finite label) containing both words, if any.
bool dihedral_fragment(const DefiningGraph& g, const Word& u, const Word& v, int& s, int& t);

}  // namespace artin
