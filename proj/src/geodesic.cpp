#include "artin/geodesic.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace artin {

namespace {

int max_label(const DefiningGraph& g) {
  int mx = 0;
  for (auto [i, j] : g.edges()) mx = std::max(mx, g.m(i, j));
  return mx;
}

// Alternating run lengths of a two-generator word, updated letter by letter.
struct RunStats {
  int maxP = 0, maxN = 0, run = 0, sign = 0;
  Letter last = 0;
  void add(Letter x) {
    if (run > 0 && sign_of(x) == sign && gen_of(x) != gen_of(last))
      ++run;
    else {
      run = 1;
      sign = sign_of(x);
    }
    last = x;
    if (sign > 0)
      maxP = std::max(maxP, run);
    else
      maxN = std::max(maxN, run);
  }
};

int prefix_run(const Word& c, int e) {
  if (c.empty() || sign_of(c[0]) != e) return 0;
  int k = 1;
  while (k < static_cast<int>(c.size()) && sign_of(c[k]) == e && gen_of(c[k]) != gen_of(c[k - 1])) ++k;
  return k;
}

int suffix_run(const Word& c, int e) {
  int n = static_cast<int>(c.size());
  if (n == 0 || sign_of(c[n - 1]) != e) return 0;
  int k = 1;
  while (k < n && sign_of(c[n - 1 - k]) == e && gen_of(c[n - 1 - k]) != gen_of(c[n - k])) ++k;
  return k;
}

}  // namespace

std::vector<CriticalForm> Rewriter::critical_forms(const Word& w, int i, int j) const {
  std::vector<CriticalForm> out;
  if (j - i < 2) return out;
  Word c(w.begin() + i, w.begin() + j);
  auto sup = support(c);
  if (sup.size() != 2 || !g_->adjacent(sup[0], sup[1])) return out;
  int s = sup[0], t = sup[1], m = g_->m(s, t);
  RunStats st;
  for (Letter x : c) st.add(x);
  if (st.maxP + st.maxN != m) return out;
  int len = static_cast<int>(c.size());
  for (int e : {1, -1}) {
    int l = e > 0 ? st.maxP : st.maxN;
    int r = e > 0 ? st.maxN : st.maxP;
    if (l + r > len) continue;
    if (l > 0 && prefix_run(c, e) < l) continue;
    if (r > 0 && suffix_run(c, -e) < r) continue;
    int choices = (l == 0 || r == 0) ? 2 : 1;
    for (int ch = 0; ch < choices; ++ch) out.push_back({e, l, r, ch, s, t, m});
  }
  return out;
}

void Rewriter::apply_tau(Word& w, int i, int j, const CriticalForm& f, Trace* trace, const Word* prefix,
                         const Word* suffix) const {
  const int s = f.s, t = f.t, m = f.m, e = f.e;
  auto other = [&](int x) { return x == s ? t : s; };
  auto record = [&](char kind) {
    if (!trace) return;
    Word full;
    if (prefix) full = *prefix;
    full.insert(full.end(), w.begin(), w.end());
    if (suffix) full.insert(full.end(), suffix->begin(), suffix->end());
    trace->push(kind, full);
  };
  // Rewrites the block w[p, p+m) (alternating, sign e) so it starts with generator `first`.
  auto spell = [&](int p, int first) {
    if (gen_of(w[p]) == first) return;
    for (int k = 0; k < m; ++k) w[p + k] = make_letter(k % 2 == 0 ? first : other(first), e);
    record('R');
  };
  auto last_gen_when_first = [&](int first) { return m % 2 == 1 ? first : other(first); };
  auto spell_ending = [&](int p, int last) {
    int first = (m % 2 == 1) ? last : other(last);
    spell(p, first);
  };
  (void)last_gen_when_first;

  const int len = j - i, l = f.l, r = f.r;
  int bp = i;
  if (r > 0) {
    int q0 = l > 0 ? other(gen_of(w[i + l - 1])) : (f.choice ? t : s);
    Word Q = alternating(q0, other(q0), r, e);
    Word ins = Q;
    Word qi = inverse(Q);
    ins.insert(ins.end(), qi.begin(), qi.end());
    w.insert(w.begin() + i + l, ins.begin(), ins.end());
    record('F');
  }
  // The block w[bp, bp+m) is now a spelling of Delta^e; push it across the next len - l letters.
  for (int k = 0; k < len - l; ++k) {
    Letter z = w[bp + m];
    int gz = gen_of(z);
    if (sign_of(z) == e) {
      spell_ending(bp, other(gz));
      ++bp;
    } else {
      spell_ending(bp, gz);
      w.erase(w.begin() + bp + m - 1, w.begin() + bp + m + 1);
      int f0 = other(gen_of(w[bp]));
      Letter pair[2] = {make_letter(f0, -e), make_letter(f0, e)};
      w.insert(w.begin() + bp, pair, pair + 2);
      record('F');
      ++bp;
    }
  }
  if (r > 0) {
    spell_ending(bp, gen_of(w[bp + m]));
    w.erase(w.begin() + bp + m - r, w.begin() + bp + m + r);
    record('F');
  } else {
    spell(bp, f.choice ? t : s);
  }
}

bool Rewriter::find_chain(const Word& W, Letter g, std::vector<std::pair<int, CriticalForm>>& moves,
                          std::vector<int>& ends, long& budget) const {
  const int L = static_cast<int>(W.size());
  const int N = g_->size();
  const Letter goal = -g;
  std::vector<char> dead(static_cast<size_t>(L + 1) * (2 * N + 1), 0);
  auto key = [&](int i, Letter f) { return static_cast<size_t>(i) * (2 * N + 1) + (f + N); };
  bool out_of_budget = false;

  auto dfs = [&](auto&& self, int i, Letter f) -> bool {
    if (dead[key(i, f)]) return false;
    dead[key(i, f)] = 1;
    int s = gen_of(f), o = -1;
    Word c{f};
    RunStats st;
    st.add(f);
    int m = 0;
    for (int j = i; j < L; ++j) {
      Letter x = W[j];
      int gx = gen_of(x);
      if (gx != s) {
        if (o < 0) {
          if (!g_->adjacent(s, gx)) break;
          o = gx;
          m = g_->m(s, o);
        } else if (gx != o) {
          break;
        }
      }
      c.push_back(x);
      st.add(x);
      if (--budget < 0) {
        out_of_budget = true;
        return false;
      }
      if (o < 0) continue;
      if (st.maxP + st.maxN > m) break;
      if (st.maxP + st.maxN < m) continue;
      for (const auto& form : critical_forms(c, 0, static_cast<int>(c.size()))) {
        Word r = c;
        apply_tau(r, 0, static_cast<int>(r.size()), form, nullptr);
        Letter nf = r.back();
        bool hit = (j + 1 == L) ? nf == goal : self(self, j + 1, nf);
        if (out_of_budget) return false;
        if (hit) {
          moves.emplace_back(i - 1, form);
          ends.push_back(j + 1);
          return true;
        }
      }
    }
    return false;
  };

  for (int s = L - 1; s >= 0; --s) {
    if (dfs(dfs, s + 1, W[s])) {
      std::reverse(moves.begin(), moves.end());
      std::reverse(ends.begin(), ends.end());
      return true;
    }
    if (out_of_budget) return false;
  }
  return false;
}

bool Rewriter::reduce(const Word& w, Word& out, long& budget, Trace* trace) const {
  Word W;
  if (trace) trace->start(w);
  for (size_t k = 0; k < w.size(); ++k) {
    Letter x = w[k];
    Word rest(w.begin() + k + 1, w.end());
    if (!W.empty() && W.back() == -x) {
      W.pop_back();
      if (trace) {
        Word full = W;
        full.insert(full.end(), rest.begin(), rest.end());
        trace->push('F', full);
      }
      continue;
    }
    std::vector<std::pair<int, CriticalForm>> moves;
    std::vector<int> ends;
    long before = budget;
    bool found = find_chain(W, x, moves, ends, budget);
    if (budget < 0) {
      budget = 0;
      return false;
    }
    (void)before;
    if (!found) {
      W.push_back(x);
      continue;
    }
    Word suffix{x};
    suffix.insert(suffix.end(), rest.begin(), rest.end());
    for (size_t q = 0; q < moves.size(); ++q) {
      // Work on the affected window only; the trace sees the whole word.
      int a = moves[q].first, b = ends[q];
      Word pre(W.begin(), W.begin() + a), win(W.begin() + a, W.begin() + b), post(W.begin() + b, W.end());
      post.insert(post.end(), suffix.begin(), suffix.end());
      apply_tau(win, 0, b - a, moves[q].second, trace, &pre, &post);
      std::copy(win.begin(), win.end(), W.begin() + a);
    }
    W.pop_back();
    if (trace) {
      Word full = W;
      full.insert(full.end(), rest.begin(), rest.end());
      trace->push('F', full);
    }
  }
  out = W;
  return true;
}

Word Rewriter::geodesic(const Word& w) const {
  long budget = 1L << 40;
  Word out;
  reduce(w, out, budget);
  return out;
}

std::vector<Word> Rewriter::geodesic_closure(const Word& geo, size_t limit, bool* complete) const {
  std::set<Word> seen{geo};
  std::deque<Word> q{geo};
  std::vector<Word> out{geo};
  bool full = true;
  while (!q.empty()) {
    Word x = q.front();
    q.pop_front();
    const int L = static_cast<int>(x.size());
    for (int i = 0; i < L; ++i) {
      int s = gen_of(x[i]), o = -1, m = 0;
      RunStats st;
      st.add(x[i]);
      for (int j = i + 1; j < L; ++j) {
        int gx = gen_of(x[j]);
        if (gx != s) {
          if (o < 0) {
            if (!g_->adjacent(s, gx)) break;
            o = gx;
            m = g_->m(s, o);
          } else if (gx != o) {
            break;
          }
        }
        st.add(x[j]);
        if (o < 0 || st.maxP + st.maxN < m) continue;
        if (st.maxP + st.maxN > m) break;
        for (const auto& form : critical_forms(x, i, j + 1)) {
          Word y = x;
          Word win(y.begin() + i, y.begin() + j + 1);
          apply_tau(win, 0, j + 1 - i, form, nullptr);
          std::copy(win.begin(), win.end(), y.begin() + i);
          if (seen.insert(y).second) {
            if (seen.size() > limit) {
              full = false;
              q.clear();
              break;
            }
            out.push_back(y);
            q.push_back(y);
          }
        }
        if (!full) break;
      }
      if (!full) break;
    }
  }
  if (complete) *complete = full;
  return out;
}

// Greedy: the least first letter of any geodesic is the least x with |x^-1 w| = |w| - 1.
// This equals the minimum over the closure without enumerating it. Working with the
// inverse W of the geodesic, each test is a single chain search for the appended x.
Word Rewriter::canonical(const Word& w, size_t, bool* complete) const {
  Word W = inverse(geodesic(w)), out;
  std::vector<Letter> order;
  for (int i = 0; i < g_->size(); ++i) order.insert(order.end(), {make_letter(i, 1), make_letter(i, -1)});
  while (!W.empty()) {
    for (Letter x : order) {
      if (W.back() == -x) {
        W.pop_back();
        out.push_back(x);
        break;
      }
      std::vector<std::pair<int, CriticalForm>> moves;
      std::vector<int> ends;
      long budget = 1L << 40;
      if (!find_chain(W, x, moves, ends, budget)) continue;
      for (size_t q = 0; q < moves.size(); ++q) apply_tau(W, moves[q].first, ends[q], moves[q].second, nullptr);
      W.pop_back();
      out.push_back(x);
      break;
    }
  }
  if (complete) *complete = true;
  return out;
}

Word Rewriter::coset_canonical(const Word& w, const std::vector<int>& S, size_t limit, bool* complete) const {
  Word cur = geodesic(w);
  bool all = true;
  while (true) {
    bool c = true;
    auto cl = geodesic_closure(cur, limit, &c);
    all = all && c;
    bool stripped = false;
    for (const auto& x : cl) {
      if (!x.empty() && uses_only(Word{x.back()}, S)) {
        cur.assign(x.begin(), x.end() - 1);
        stripped = true;
        break;
      }
    }
    if (!stripped) {
      if (complete) *complete = all;
      return *std::min_element(cl.begin(), cl.end(), lex_less);
    }
  }
}

bool Rewriter::in_parabolic(const Word& w, const std::vector<int>& S) const { return uses_only(geodesic(w), S); }

bool replay_trace(const DefiningGraph& g, const Trace& t, std::string* why) {
  auto fail = [&](size_t k, const std::string& msg) {
    if (why) *why = "step " + std::to_string(k) + ": " + msg;
    return false;
  };
  if (t.states.size() != t.kinds.size() + 1) return fail(0, "malformed trace");
  int maxm = max_label(g);
  for (size_t k = 0; k < t.kinds.size(); ++k) {
    const Word& a = t.states[k];
    const Word& b = t.states[k + 1];
    for (const Word* x : {&a, &b})
      for (Letter l : *x)
        if (l == 0 || gen_of(l) >= g.size()) return fail(k, "letter outside the graph");
    if (t.kinds[k] == 'F') {
      if (free_reduce(a) != free_reduce(b)) return fail(k, "free step changes the free reduction");
      continue;
    }
    if (t.kinds[k] != 'R') return fail(k, "unknown step kind");
    if (a.size() != b.size()) return fail(k, "relation step changes length");
    int n = static_cast<int>(a.size()), d0 = -1, d1 = -1;
    for (int p = 0; p < n; ++p)
      if (a[p] != b[p]) {
        if (d0 < 0) d0 = p;
        d1 = p;
      }
    if (d0 < 0) return fail(k, "relation step changes nothing");
    bool ok = false;
    for (int p = d0; p >= std::max(0, d0 - maxm) && !ok; --p) {
      if (p + 1 >= n) continue;
      int s = gen_of(a[p]), tt = gen_of(a[p + 1]), e = sign_of(a[p]);
      if (!g.adjacent(s, tt)) continue;
      int M = g.m(s, tt);
      if (p + M > n || p + M - 1 < d1) continue;
      bool good = true;
      for (int q = 0; q < M && good; ++q) {
        good = a[p + q] == make_letter(q % 2 == 0 ? s : tt, e) && b[p + q] == make_letter(q % 2 == 0 ? tt : s, e);
      }
      ok = good;
    }
    if (!ok) return fail(k, "no braid relation explains the change");
  }
  return true;
}

}  // namespace artin
