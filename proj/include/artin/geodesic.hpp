#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin {

// A derivation: consecutive states differ by one braid relation applied at one
// position ('R') or have the same free reduction ('F').
struct Trace {
  std::vector<Word> states;
  std::vector<char> kinds;  // kinds[i] explains states[i] -> states[i+1]

  size_t steps() const { return kinds.size(); }
  void start(const Word& w) {
    states = {w};
    kinds.clear();
  }
  void push(char kind, const Word& w) {
    kinds.push_back(kind);
    states.push_back(w);
  }
};

// Checks every step of a trace against the relations of the graph.
bool replay_trace(const DefiningGraph& g, const Trace& t, std::string* why = nullptr);

// A critical two-generator subword: prefix alternating run of sign e and length l,
// suffix alternating run of sign -e and length r, l + r = m.
struct CriticalForm {
  int e, l, r, choice;
  int s, t, m;
};

// Length-preserving rewriting of critical subwords plus rightward length-reducing
// chains; reduces any word to a geodesic.
class Rewriter {
 public:
  explicit Rewriter(const DefiningGraph& g) : g_(&g) {}

  const DefiningGraph& graph() const { return *g_; }

  // Reduces w to a geodesic. Returns false if the budget runs out; budget counts
  // examined chain transitions.
  bool reduce(const Word& w, Word& out, long& budget, Trace* trace = nullptr) const;
  Word geodesic(const Word& w) const;

  // All critical forms of w[i, j).
  std::vector<CriticalForm> critical_forms(const Word& w, int i, int j) const;
  // Applies a critical rewrite to w[i, j) in place, recording intermediate words.
  void apply_tau(Word& w, int i, int j, const CriticalForm& f, Trace* trace,
                 const Word* prefix = nullptr, const Word* suffix = nullptr) const;

  // Geodesic representatives reachable by critical rewrites, capped at `limit` words.
  std::vector<Word> geodesic_closure(const Word& geo, size_t limit, bool* complete) const;
  // Shortlex-least word over the closure of the geodesic of w.
  Word canonical(const Word& w, size_t limit = 4096, bool* complete = nullptr) const;
  // Canonical representative of the coset w A_S: minimal length element, then canonical.
  Word coset_canonical(const Word& w, const std::vector<int>& S, size_t limit = 4096,
                       bool* complete = nullptr) const;
  // Membership in the standard parabolic A_S: the geodesic uses only letters of S.
  bool in_parabolic(const Word& w, const std::vector<int>& S) const;

 private:
  bool find_chain(const Word& W, Letter g, std::vector<std::pair<int, CriticalForm>>& moves,
                  std::vector<int>& ends, long& budget) const;

  const DefiningGraph* g_;
};

}  // namespace artin
