#include "gab/word.hpp"

#include <algorithm>
#include <sstream>

namespace gab {

std::string Gen::name(std::uint32_t g, bool tag_slots) {
    std::string s;
    if (tag_slots) s = slot(g) == 0 ? "L:" : "R:";
    switch (kind(g)) {
        case D: return s + "D";
        case DInv: return s + "Dinv";
        case X: {
            int r = row(g), c = col(g);
            std::ostringstream os;
            if (r <= 9 && c <= 9) os << "x" << r << c;
            else os << "x(" << r << "," << c << ")";
            return s + os.str();
        }
    }
    return s + "?";
}

Word operator*(const Word& a, const Word& b) {
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    Word r;
    r.letters.assign(letters.begin() + pos, letters.begin() + pos + len);
    return r;
}

std::size_t Word::find(const Word& factor, std::size_t from) const {
    if (factor.size() > size()) return npos;
    for (std::size_t p = from; p + factor.size() <= size(); ++p) {
        if (std::equal(factor.letters.begin(), factor.letters.end(), letters.begin() + p))
            return p;
    }
    return npos;
}

bool Word::ends_with(const Word& w) const {
    return w.size() <= size() &&
           std::equal(w.letters.begin(), w.letters.end(), letters.end() - w.size());
}

std::string Word::str(bool tag_slots) const {
    if (letters.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (k) s += "*";
        s += Gen::name(letters[k], tag_slots);
    }
    return s;
}

Cmp word_compare(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size() ? Cmp::LT : Cmp::GT;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u.letters[k] != v.letters[k]) return u.letters[k] < v.letters[k] ? Cmp::LT : Cmp::GT;
    }
    return Cmp::EQ;
}

} // namespace gab
