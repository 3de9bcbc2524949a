#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oriental/block.hpp"

namespace oriental {

/// A sub-simplex named by its strictly increasing vertex list; rendered
/// as a digit string in angle brackets, <023>.
struct SimplexWord {
    std::vector<int> vertices;

    std::size_t dim() const { return vertices.size() - 1; }
    auto operator<=>(const SimplexWord&) const = default;
};

std::string to_string(const SimplexWord& w);

/// Token sequence of simplex words and separators, mirroring LinearForm.
struct SimplicialForm {
    using Sep = LinearForm::Sep;
    using Token = std::variant<SimplexWord, Sep>;
    std::vector<Token> tokens;

    bool operator==(const SimplicialForm&) const = default;
};

std::string to_string(const SimplicialForm& f);

/// Vertex label of a {-,+} word: the 1-based position of the last Plus,
/// or 0 when none occurs.
int explode_vertex(const CubeWord& w); // throws HasZeros

/// Simplex label of an arbitrary word: the vertex of its sign part plus
/// all Zero positions beyond the last Plus. Degenerate (no value) when
/// the simplex dimension falls below the cube dimension.
std::optional<SimplexWord> explode_word(const CubeWord& w);

/// Corner slicing: the cocycle form over ambient n becomes a cocycle on
/// the (n-1)-simplex. Segments whose top word contains Minus are cut,
/// vertices and *_0 drop out, and separator indices shift down by one.
SimplicialForm slice(const LinearForm& f, std::size_t n); // throws MalformedForm

/// Simplex-in-cube expansion: words map through explode_word onto the
/// n-simplex; identity terms (degenerate words and cube vertices) are
/// forgotten, each absorbing a separator.
SimplicialForm explode(const LinearForm& f, std::size_t n);

/// Paths-and-triangles reading: the form becomes a cocycle on the
/// (n+1)-simplex. Segments whose top word has Zeros separated by a Plus
/// are cut, separator indices shift up, and every word is padded with
/// consecutive edges into a full path from 0 to n+1.
SimplicialForm strings(const LinearForm& f, std::size_t n); // throws MalformedForm

/// Top-segment canonicalization: per top-level sub-block, the set of
/// maximal-dimension simplex words; empty segments are dropped.
std::vector<std::vector<SimplexWord>> top_cell_sequence(const SimplicialForm& f);

/// The three derivations of the Delta^m cocycle: slice of the (m+1)-cube
/// form, explode of the m-cube form, strings of the (m-1)-cube form;
/// they must agree on top-cell sequences for both sides.
struct RoutesReport {
    bool ok = false;
    std::string failure;
    SimplicialForm via_slice, via_explode, via_strings; // source side
};

RoutesReport routes_agree(std::size_t m); // m >= 2

} // namespace oriental
