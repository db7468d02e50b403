#pragma once

#include <vector>

#include "artin/word.hpp"

namespace artin {

// Left normal form Delta^p P of an element of the dihedral Artin group on
// generators 0 (a) and 1 (b): P is a positive word with no alternating run of length m.
struct GarsideNF {
  long p = 0;
  Word P;
  bool operator==(const GarsideNF& o) const { return p == o.p && P == o.P; }
  bool operator<(const GarsideNF& o) const { return p != o.p ? p < o.p : P < o.P; }
};

Word delta_word(int m, int first = 0);
GarsideNF garside_nf(int m, const Word& w);
Word nf_to_word(int m, const GarsideNF& nf);
long nf_length(int m, const GarsideNF& nf);
// All normal forms with nf_length <= bound, sorted.
std::vector<GarsideNF> enumerate_nfs(int m, long bound);

}  // namespace artin
