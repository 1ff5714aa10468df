#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gab {

/// Generator of a presented algebra, encoded in one uint32 so that the
/// numeric order is the generator order: tensor slot major (slot 0 < slot 1),
/// then d_inv < d < x(1,1) < x(1,2) < ... < x(2,1) < ... lexicographic on
/// (row, col).
struct Gen {
    enum Kind : std::uint8_t { DInv = 0, D = 1, X = 2 };

    static std::uint32_t d(std::uint8_t slot = 0) { return pack(slot, D, 0, 0); }
    static std::uint32_t d_inv(std::uint8_t slot = 0) { return pack(slot, DInv, 0, 0); }
    static std::uint32_t x(int row, int col, std::uint8_t slot = 0) {
        return pack(slot, X, static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(col));
    }
    static std::uint32_t pack(std::uint8_t slot, Kind k, std::uint8_t row, std::uint8_t col) {
        return (std::uint32_t(slot) << 24) | (std::uint32_t(k) << 16) | (std::uint32_t(row) << 8) | col;
    }
    static std::uint8_t slot(std::uint32_t g) { return (g >> 24) & 0xff; }
    static Kind kind(std::uint32_t g) { return static_cast<Kind>((g >> 16) & 0xff); }
    static int row(std::uint32_t g) { return (g >> 8) & 0xff; }
    static int col(std::uint32_t g) { return g & 0xff; }
    /// Retag the tensor slot.
    static std::uint32_t with_slot(std::uint32_t g, std::uint8_t slot) {
        return (g & 0x00ffffffu) | (std::uint32_t(slot) << 24);
    }

    /// Text form: D, Dinv, x11 (or x(10,3) past single digits); slot tags
    /// render as "L:" / "R:" prefixes.
    static std::string name(std::uint32_t g, bool tag_slots = false);
};

/// Word in the free monoid on generators; the empty word is the unit.
/// Total order: length first, then letterwise by generator order. This
/// degree-lex order is a well-order compatible with concatenation.
struct Word {
    std::vector<std::uint32_t> letters;

    Word() = default;
    explicit Word(std::vector<std::uint32_t> ls) : letters(std::move(ls)) {}
    static Word one() { return Word(); }
    static Word of(std::uint32_t g) { return Word({g}); }

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    friend Word operator*(const Word& a, const Word& b);
    Word subword(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word suffix(std::size_t len) const { return subword(letters.size() - len, len); }

    /// First position >= from where `factor` occurs, or npos.
    std::size_t find(const Word& factor, std::size_t from = 0) const;
    bool contains(const Word& factor) const { return find(factor) != npos; }
    bool ends_with(const Word& w) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

    std::string str(bool tag_slots = false) const;
};

enum class Cmp { LT, EQ, GT };

/// Degree-lex comparison ("according to their length", then lexicographically).
Cmp word_compare(const Word& u, const Word& v);

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_compare(a, b) == Cmp::LT; }
};

} // namespace gab
