#pragma once

// Test-side oracles that share no code with the library's word problem.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace testing_support {

using artin::DefiningGraph;
using artin::Word;

// Prime p = 1 mod 2520, so F_p holds primitive m-th roots of unity for every m <= 10.
inline uint64_t pick_prime() {
  auto is_prime = [](uint64_t n) {
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return n > 1;
  };
  uint64_t p = (1ULL << 30) / 2520 * 2520 + 1;
  while (!is_prime(p)) p += 2520;
  return p;
}

struct Fp {
  uint64_t p;
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t mul(uint64_t a, uint64_t b) const { return a * b % p; }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    for (a %= p; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
  // Some primitive m-th root of unity.
  uint64_t root(int m) const {
    for (uint64_t g = 2;; ++g) {
      uint64_t z = pow(g, (p - 1) / m);
      bool primitive = true;
      for (int d = 1; d < m; ++d)
        if (m % d == 0 && pow(z, d) == 1) primitive = false;
      if (primitive) return z;
    }
  }
};

// Deformed reflection representation over F_p: s_i e_i = -t e_i, s_i e_j = e_j + c_ij e_i,
// with c_ij = 1 and c_ji = lambda_ij t for i < j, lambda = 2 + zeta + zeta^-1, zeta of order m_ij.
// Equal group elements have equal images, so distinct images prove inequality.
class LinearRep {
 public:
  using Mat = std::vector<uint64_t>;

  LinearRep(const DefiningGraph& g, unsigned seed) : f_{pick_prime()}, n_(g.size()) {
    std::mt19937_64 rng(seed);
    uint64_t t = 2 + rng() % (f_.p - 3);
    std::vector<std::vector<uint64_t>> lambda(n_, std::vector<uint64_t>(n_, 0));
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        int m = g.m(i, j);
        if (m == artin::kInfinity) {
          lambda[i][j] = 5 + rng() % 1000;  // no relation to respect
        } else {
          uint64_t z = f_.root(m);
          lambda[i][j] = f_.add(2, f_.add(z, f_.inv(z)));
        }
      }
    for (int i = 0; i < n_; ++i) {
      Mat a = identity();
      a[i * n_ + i] = f_.sub(0, t);
      for (int j = 0; j < n_; ++j)
        if (j != i) a[i * n_ + j] = i < j ? 1 : f_.mul(lambda[j][i], t);
      gens_.push_back(a);
    }
    for (const Mat& a : gens_) invs_.push_back(inverse(a));
  }

  Mat image(const Word& w) const {
    Mat r = identity();
    for (artin::Letter l : w) r = mul(r, l > 0 ? gens_[artin::gen_of(l)] : invs_[artin::gen_of(l)]);
    return r;
  }
  bool same(const Word& u, const Word& v) const { return image(u) == image(v); }

  // The braid relations hold for the matrices, i.e. the map is a homomorphism.
  bool relations_hold(const DefiningGraph& g) const {
    for (auto [s, t] : g.edges()) {
      int m = g.m(s, t);
      if (image(artin::alternating(s, t, m)) != image(artin::alternating(t, s, m))) return false;
    }
    return true;
  }

 private:
  Mat identity() const {
    Mat r(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) r[i * n_ + i] = 1;
    return r;
  }
  Mat mul(const Mat& a, const Mat& b) const {
    Mat r(n_ * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        uint64_t x = a[i * n_ + k];
        if (!x) continue;
        for (int j = 0; j < n_; ++j) r[i * n_ + j] = f_.add(r[i * n_ + j], f_.mul(x, b[k * n_ + j]));
      }
    return r;
  }
  // Gauss-Jordan over F_p.
  Mat inverse(Mat a) const {
    Mat r = identity();
    for (int c = 0; c < n_; ++c) {
      int piv = c;
      while (a[piv * n_ + c] == 0) ++piv;
      for (int j = 0; j < n_; ++j) {
        std::swap(a[piv * n_ + j], a[c * n_ + j]);
        std::swap(r[piv * n_ + j], r[c * n_ + j]);
      }
      uint64_t iv = f_.inv(a[c * n_ + c]);
      for (int j = 0; j < n_; ++j) {
        a[c * n_ + j] = f_.mul(a[c * n_ + j], iv);
        r[c * n_ + j] = f_.mul(r[c * n_ + j], iv);
      }
      for (int i = 0; i < n_; ++i) {
        if (i == c || a[i * n_ + c] == 0) continue;
        uint64_t k = a[i * n_ + c];
        for (int j = 0; j < n_; ++j) {
          a[i * n_ + j] = f_.sub(a[i * n_ + j], f_.mul(k, a[c * n_ + j]));
          r[i * n_ + j] = f_.sub(r[i * n_ + j], f_.mul(k, r[c * n_ + j]));
        }
      }
    }
    return r;
  }

  Fp f_;
  int n_;
  std::vector<Mat> gens_, invs_;
};

inline Word random_word(std::mt19937& rng, int n, int max_len) {
  Word w;
  int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) w.push_back(artin::make_letter(static_cast<int>(rng() % n), rng() % 2 ? 1 : -1));
  return artin::free_reduce(w);
}

// Inserts `count` random defining relators r r'^-1 at random positions: the result equals w.
inline Word insert_relators(std::mt19937& rng, const DefiningGraph& g, Word w, int count) {
  auto edges = g.edges();
  for (int k = 0; k < count && !edges.empty(); ++k) {
    auto [s, t] = edges[rng() % edges.size()];
    int m = g.m(s, t);
    Word rel = artin::concat(artin::alternating(s, t, m), artin::inverse(artin::alternating(t, s, m)));
    if (rng() % 2) rel = artin::inverse(rel);
    size_t pos = rng() % (w.size() + 1);
    w.insert(w.begin() + static_cast<long>(pos), rel.begin(), rel.end());
  }
  return w;
}

// All freely reduced words of length <= L on n generators.
inline std::vector<Word> all_words(int n, int L) {
  std::vector<Word> out{{}};
  std::vector<Word> layer{{}};
  for (int len = 1; len <= L; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (int g = 0; g < n; ++g)
        for (int s : {1, -1}) {
          artin::Letter l = artin::make_letter(g, s);
          if (!w.empty() && w.back() == -l) continue;
          Word x = w;
          x.push_back(l);
          next.push_back(x);
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace testing_support
