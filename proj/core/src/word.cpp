#include "sisem/word.hpp"

#include <algorithm>

namespace sisem {

Word star(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (Letter& l : r) l = flip(l);
    return r;
}

CMatrix eval(const Word& w, const CMatrix& t) {
    if (w.empty()) throw PreconditionViolated("eval: word must be nonempty");
    const CMatrix tstar = adjoint(t);
    auto mat = [&](Letter l) -> const CMatrix& { return l == Letter::G ? t : tstar; };
    CMatrix r = mat(w.front());
    for (size_t i = 1; i < w.size(); ++i) r = mul(r, mat(w[i]));
    return r;
}

bool word_lex_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (Letter l : w) s += (l == Letter::G ? "g" : "g*");
    return s;
}

Word word_from_string(const std::string& s) {
    Word w;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != 'g') throw ParseError("word: expected 'g' or 'g*'");
        if (i + 1 < s.size() && s[i + 1] == '*') {
            w.push_back(Letter::GStar);
            i += 2;
        } else {
            w.push_back(Letter::G);
            i += 1;
        }
    }
    if (w.empty()) throw ParseError("word: empty");
    return w;
}

std::vector<Word> words_of_length(int len) {
    std::vector<Word> out;
    if (len < 1) return out;
    out.reserve(static_cast<size_t>(1) << len);
    Word w(static_cast<size_t>(len), Letter::G);
    while (true) {
        out.push_back(w);
        int i = len - 1;
        while (i >= 0 && w[i] == Letter::GStar) {
            w[i] = Letter::G;
            --i;
        }
        if (i < 0) break;
        w[i] = Letter::GStar;
    }
    return out;
}

}  // namespace sisem
