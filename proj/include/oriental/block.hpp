#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "oriental/cube.hpp"

namespace oriental {

/// Alternately nested rows and columns of cube words: odd levels are
/// columns, even levels are rows. A 0-block is a single word.
class Block {
public:
    Block() = default; // leaf holding the 0-cube
    explicit Block(CubeWord w) : word_(std::move(w)) {}
    Block(std::size_t level, std::vector<Block> children); // throws StructureError

    bool is_leaf() const { return level_ == 0; }
    std::size_t level() const { return level_; }
    const CubeWord& word() const; // leaf only
    const std::vector<Block>& children() const; // node only

    bool operator==(const Block&) const = default;

private:
    std::size_t level_ = 0;
    CubeWord word_;
    std::vector<Block> children_;
};

bool is_column(const Block& b); // odd level
bool is_row(const Block& b);    // even level, >= 2

/// Max dimension over the leaf words.
std::size_t block_dimension(const Block& b);

/// Ambient word length (all leaves share it).
std::size_t block_ambient(const Block& b);

/// Leaf words in reading order.
std::vector<CubeWord> block_words(const Block& b);

/// Wrap in singleton nodes up to the given level.
Block promote(const Block& b, std::size_t level);

/// Strip singleton wrappers down to the minimal nesting.
Block demote(const Block& b);

/// Distinguishedness: in every sub-j-block, all children but one have
/// dimension exactly j and the remaining one has dimension >= j.
bool is_distinguished(const Block& b);

/// Index of the unique child with dimension > level; throws
/// NotDistinguished when absent or ambiguous.
std::size_t distinguished_child(const Block& b);

/// The full j-sub-blocks in reading order.
std::vector<Block> sub_blocks(const Block& b, std::size_t j);

/// Token sequence "w1 *k1 w2 *k2 ... wt": the linear form of a block.
struct LinearForm {
    struct Sep {
        std::size_t k = 0;
        bool operator==(const Sep&) const = default;
    };
    using Token = std::variant<CubeWord, Sep>;
    std::vector<Token> tokens;

    bool operator==(const LinearForm&) const = default;
};

LinearForm linearize(const Block& b);
std::string to_string(const LinearForm& f);
LinearForm parse_form(const std::string& text); // throws ParseError

/// Reconstruct the unique minimal nesting of a linear form over ambient n.
Block parse_linear(const std::string& text, std::size_t n); // throws ParseError
Block form_to_block(const LinearForm& f, std::size_t n);

/// Reverse the token sequence and apply the antipodal map to every word.
/// An involution; sends the source cocycle form to the target form.
LinearForm reverse_involute(const LinearForm& f);

/// Same nesting shape, and every pair of corresponding full sub-blocks
/// carries the same set of words.
bool agree_per_subblock_sets(const Block& a, const Block& b);

std::string block_to_json(const Block& b);
Block block_from_json(const std::string& json_text); // throws ParseError, StructureError

} // namespace oriental
