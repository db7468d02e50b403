#include "artin/garside.hpp"

#include <algorithm>

namespace artin {

namespace {

Word swap_ab(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(make_letter(1 - gen_of(l), sign_of(l)));
  return out;
}

Word delta_conj(int m, const Word& w) { return m % 2 == 1 ? swap_ab(w) : w; }

// Pulls every length-m alternating run of the positive word P to the left as a Delta.
void normalize(int m, GarsideNF& nf) {
  while (true) {
    int n = static_cast<int>(nf.P.size()), run = 0, start = -1;
    for (int i = 0; i < n; ++i) {
      run = (i > 0 && nf.P[i] != nf.P[i - 1]) ? run + 1 : 1;
      if (run == m) {
        start = i - m + 1;
        break;
      }
    }
    if (start < 0) return;
    Word X(nf.P.begin(), nf.P.begin() + start), Y(nf.P.begin() + start + m, nf.P.end());
    Word nx = delta_conj(m, X);
    nx.insert(nx.end(), Y.begin(), Y.end());
    nf.P = nx;
    nf.p += 1;
  }
}

}  // namespace

Word delta_word(int m, int first) { return alternating(first, 1 - first, m); }

GarsideNF garside_nf(int m, const Word& w) {
  GarsideNF nf;
  for (Letter l : w) {
    int x = gen_of(l);
    if (l > 0) {
      nf.P.push_back(make_letter(x, 1));
    } else {
      // x^-1 = Delta^-1 (Delta x^-1), and Delta x^-1 is Delta spelled to end in x, minus that letter.
      int first = (m % 2 == 1) ? x : 1 - x;
      Word D = delta_word(m, first);
      D.pop_back();
      Word np = delta_conj(m, nf.P);
      np.insert(np.end(), D.begin(), D.end());
      nf.P = np;
      nf.p -= 1;
    }
    normalize(m, nf);
  }
  return nf;
}

Word nf_to_word(int m, const GarsideNF& nf) {
  Word out = power(delta_word(m), nf.p);
  out.insert(out.end(), nf.P.begin(), nf.P.end());
  return free_reduce(out);
}

long nf_length(int m, const GarsideNF& nf) { return (nf.p < 0 ? -nf.p : nf.p) * m + static_cast<long>(nf.P.size()); }

std::vector<GarsideNF> enumerate_nfs(int m, long bound) {
  // Positive words without an alternating run of length m, by length.
  std::vector<Word> positives{{}};
  std::vector<Word> frontier{{}};
  for (long len = 1; len <= bound; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (int x : {0, 1}) {
        Word v = w;
        v.push_back(make_letter(x, 1));
        int run = 1, n = static_cast<int>(v.size());
        while (run < n && v[n - 1 - run] != v[n - run]) ++run;
        if (run < m) next.push_back(v);
      }
    positives.insert(positives.end(), next.begin(), next.end());
    frontier = next;
  }
  std::vector<GarsideNF> out;
  for (long p = -(bound / m); p <= bound / m; ++p)
    for (const auto& P : positives)
      if ((p < 0 ? -p : p) * m + static_cast<long>(P.size()) <= bound) out.push_back({p, P});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace artin
