#include "artin/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "artin/error.hpp"

namespace artin {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::PARSE_ERROR: return "PARSE_ERROR";
    case ErrorCode::DUPLICATE_EDGE: return "DUPLICATE_EDGE";
    case ErrorCode::COEFFICIENT_BELOW_3: return "COEFFICIENT_BELOW_3";
    case ErrorCode::LOOP_EDGE: return "LOOP_EDGE";
    case ErrorCode::UNKNOWN_VERTEX: return "UNKNOWN_VERTEX";
    case ErrorCode::NOT_AN_AUTOMORPHISM: return "NOT_AN_AUTOMORPHISM";
    case ErrorCode::VERTEX_NOT_FIXED: return "VERTEX_NOT_FIXED";
    case ErrorCode::UNKNOWN_GENERATOR: return "UNKNOWN_GENERATOR";
    case ErrorCode::GRAPH_MISMATCH: return "GRAPH_MISMATCH";
    case ErrorCode::PARITY_MISMATCH: return "PARITY_MISMATCH";
    case ErrorCode::NOT_INDUCIBLE: return "NOT_INDUCIBLE";
    case ErrorCode::BUDGET_EXCEEDED: return "BUDGET_EXCEEDED";
    case ErrorCode::OUT_OF_BALL: return "OUT_OF_BALL";
  }
  return "UNKNOWN_ERROR";
}

bool lex_less(const Word& u, const Word& v) {
  size_t n = std::min(u.size(), v.size());
  for (size_t i = 0; i < n; ++i) {
    int ru = letter_rank(u[i]), rv = letter_rank(v[i]);
    if (ru != rv) return ru < rv;
  }
  return u.size() < v.size();
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return lex_less(u, v);
}

Word free_reduce(const Word& raw) {
  Word out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return free_reduce(out);
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return free_reduce(out);
}

Word power(const Word& w, long k) {
  Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(out);
}

long height(const Word& w) {
  long h = 0;
  for (Letter l : w) h += sign_of(l);
  return h;
}

bool uses_only(const Word& w, const std::vector<int>& gens) {
  for (Letter l : w) {
    bool ok = false;
    for (int g : gens) ok = ok || gen_of(l) == g;
    if (!ok) return false;
  }
  return true;
}

std::vector<int> support(const Word& w) {
  std::vector<int> out;
  for (Letter l : w) {
    int g = gen_of(l);
    bool seen = false;
    for (int x : out) seen = seen || x == g;
    if (!seen) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Word alternating(int s, int t, int length, int sign) {
  Word out;
  for (int i = 0; i < length; ++i) out.push_back(make_letter(i % 2 == 0 ? s : t, sign));
  return out;
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1" || tok == "e") continue;
    std::string name = tok;
    long exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      try {
        size_t used = 0;
        exp = std::stol(e, &used);
        if (used != e.size()) throw std::invalid_argument(e);
      } catch (const std::exception&) {
        throw Error(ErrorCode::PARSE_ERROR, "bad exponent in '" + tok + "'");
      }
    } else if (!name.empty() && name.back() == '-') {
      name.pop_back();
      exp = -1;
    }
    int g = -1;
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) g = static_cast<int>(i);
    if (g < 0) throw Error(ErrorCode::UNKNOWN_GENERATOR, "'" + name + "'");
    for (long i = 0; i < (exp < 0 ? -exp : exp); ++i) out.push_back(make_letter(g, exp < 0 ? -1 : 1));
  }
  return free_reduce(out);
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    const std::string& nm = names.at(gen_of(w[i]));
    if (run == 1)
      out += nm + (w[i] < 0 ? "-" : "");
    else
      out += nm + "^" + std::to_string(w[i] < 0 ? -run : run);
    i = j;
  }
  return out;
}

uint64_t word_hash(const Word& w) {
  uint64_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= static_cast<uint64_t>(static_cast<int64_t>(l) + 1000);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace artin
