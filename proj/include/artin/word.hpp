#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace artin {

// A letter is +(g+1) or -(g+1) for generator index g.
using Letter = int;
using Word = std::vector<Letter>;

inline int gen_of(Letter l) { return (l > 0 ? l : -l) - 1; }
inline int sign_of(Letter l) { return l > 0 ? 1 : -1; }
inline Letter make_letter(int gen, int sign) { return sign > 0 ? gen + 1 : -(gen + 1); }

// Total order on letters: a < a- < b < b- < ...
inline int letter_rank(Letter l) { return 2 * gen_of(l) + (l < 0 ? 1 : 0); }
bool lex_less(const Word& u, const Word& v);
bool shortlex_less(const Word& u, const Word& v);

Word free_reduce(const Word& raw);
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word concat(std::initializer_list<Word> parts);
Word power(const Word& w, long k);
long height(const Word& w);
bool uses_only(const Word& w, const std::vector<int>& gens);
std::vector<int> support(const Word& w);

// Alternating word s t s t ... of the given length; negative sign gives the letters inverted.
Word alternating(int s, int t, int length, int sign = 1);

// Word text: whitespace separated letters `a`, `a-`, `a^3`, `a^-2`.
// Generator names are looked up through the supplied list.
Word parse_word(const std::string& text, const std::vector<std::string>& names);
std::string format_word(const Word& w, const std::vector<std::string>& names);

uint64_t word_hash(const Word& w);

}  // namespace artin
