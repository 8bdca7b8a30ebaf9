#pragma once

#include <string>
#include <vector>

#include "sisem/matrix.hpp"

namespace sisem {

// Alphabet of the free monoid: the generator and its adjoint.
enum class Letter : unsigned char { G = 0, GStar = 1 };

// Nonempty sequence of letters denoting an ordered product of T and T*.
using Word = std::vector<Letter>;

inline Letter flip(Letter l) { return l == Letter::G ? Letter::GStar : Letter::G; }

// Reverse and flip; eval(star(w)) == adjoint(eval(w)).
Word star(const Word& w);

// Ordered product with T substituted for G and T* for GStar.
CMatrix eval(const Word& w, const CMatrix& t);

// Lexicographic order with G < GStar; shorter prefixes sort first.
bool word_lex_less(const Word& a, const Word& b);

// "g" / "g*" concatenation, e.g. [G, G, GStar] -> "ggg*".
std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s);

// All words of a given length in lexicographic order.
std::vector<Word> words_of_length(int len);

}  // namespace sisem
