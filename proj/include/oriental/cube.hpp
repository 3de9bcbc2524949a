#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oriental/errors.hpp"

namespace oriental {

/// The three symbols of the interval object. The order Minus < Zero < Plus
/// is fixed and used for all canonical sorting.
enum class Symbol : std::uint8_t { Minus = 0, Zero = 1, Plus = 2 };

char to_char(Symbol s);
Symbol symbol_from_char(char c); // throws InvalidCharacter

/// A word over {-,0,+} naming a sub-cube of the n-cube, n = length.
/// Immutable value type; the empty word is the unique 0-cube.
class CubeWord {
public:
    CubeWord() = default;
    explicit CubeWord(std::vector<Symbol> syms) : syms_(std::move(syms)) {}

    std::size_t size() const { return syms_.size(); }
    Symbol at(std::size_t i) const { return syms_.at(i); } // 0-based
    const std::vector<Symbol>& symbols() const { return syms_; }

    auto operator<=>(const CubeWord&) const = default;

private:
    std::vector<Symbol> syms_;
};

/// Zero-position signature of a word: all words sharing it are parallel.
/// Positions are 1-based, matching the usual "i-th position" phrasing.
struct ParallelClass {
    std::size_t ambient = 0;
    std::set<int> zero_positions;

    auto operator<=>(const ParallelClass&) const = default;

    /// Compact digit label such as "345" (distinct digits for n <= 9).
    std::string label() const;
};

CubeWord parse_word(std::string_view text); // throws InvalidCharacter
std::string to_string(const CubeWord& w);

/// Number of Zero entries; the dimension of the sub-cube.
std::size_t dimension(const CubeWord& w);

/// Swap Minus and Plus, fix Zero. An involution preserving parallel classes.
CubeWord antipodal(const CubeWord& w);

/// The * pairing: y of length dimension(x) is substituted into the Zero
/// positions of x in increasing order. Associative where defined.
CubeWord substitute(const CubeWord& x, const CubeWord& y); // throws ArityMismatch

CubeWord append_lambda(const CubeWord& w); // append Minus
CubeWord append_mu(const CubeWord& w);     // append Zero
CubeWord append_nu(const CubeWord& w);     // append Plus

/// The 2*dimension(w) codimension-1 faces, in canonical word order.
std::set<CubeWord> geometric_faces(const CubeWord& w); // throws NotACell

ParallelClass parallel_class(const CubeWord& w);

/// True iff u lies in the closure of w (u agrees with w off w's zeros).
bool is_face_of(const CubeWord& u, const CubeWord& w);

/// All 3^n words of length n, in canonical order.
std::vector<CubeWord> all_words(std::size_t n);

} // namespace oriental
