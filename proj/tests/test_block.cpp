#include "doctest.h"

#include <random>

#include "oriental/block.hpp"
#include "oriental/errors.hpp"

using namespace oriental;

namespace {
const char* kSigma23 = "-00 *0 0++ *1 -0- *0 0+0 *1 00- *0 ++0";
}

TEST_CASE("parse and linearize round-trip the small sources") {
    CHECK(to_string(linearize(parse_linear("-", 1))) == "-");
    CHECK(to_string(linearize(parse_linear("-0 *0 0+", 2))) == "-0 *0 0+");
    CHECK(to_string(linearize(parse_linear(kSigma23, 3))) == kSigma23);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_linear("ab *0 cd", 2), ParseError);
    CHECK_THROWS_AS(parse_linear("-0 *0", 2), ParseError);
    CHECK_THROWS_AS(parse_linear("*0 -0", 2), ParseError);
    CHECK_THROWS_AS(parse_linear("-0 *x 0+", 2), ParseError);
    CHECK_THROWS_AS(parse_linear("", 2), ParseError);
    CHECK_THROWS_AS(parse_linear("-0 *0 0+0", 2), ParseError); // wrong ambient
    CHECK_THROWS_AS(parse_linear("-0 0+", 2), ParseError);     // missing separator
}

TEST_CASE("parsed structure of the 2-block source") {
    Block b = parse_linear(kSigma23, 3);
    CHECK(b.level() == 2);
    CHECK(is_row(b));
    REQUIRE(b.children().size() == 3);
    for (const auto& col : b.children()) {
        CHECK(is_column(col));
        CHECK(col.children().size() == 2);
    }
    CHECK(block_dimension(b) == 2);
    CHECK(block_ambient(b) == 3);
}

TEST_CASE("a single word parses to a 0-block") {
    Block b = parse_linear("-", 1);
    CHECK(b.is_leaf());
    CHECK(block_dimension(parse_linear("000", 3)) == 3);
}

TEST_CASE("promotion wraps and linearizes identically") {
    Block b = parse_linear("-0 *0 0+", 2);
    Block p = promote(b, 4);
    CHECK(p.level() == 4);
    CHECK(to_string(linearize(p)) == "-0 *0 0+");
    CHECK_THROWS_AS(promote(p, 2), LevelMismatch);
    CHECK(demote(p).level() == 1);
}

TEST_CASE("distinguishedness") {
    CHECK(is_distinguished(parse_linear("-", 1)));
    CHECK(is_distinguished(parse_linear("-0 *0 0+", 2)));
    CHECK(is_distinguished(parse_linear(kSigma23, 3)));
    // two dimension-2 children in one column exceed level 1
    Block bad(1, {Block(parse_word("-00")), Block(parse_word("0+0"))});
    CHECK_FALSE(is_distinguished(bad));
    CHECK_THROWS_AS(distinguished_child(bad), NotDistinguished);
    Block good(1, {Block(parse_word("-0-")), Block(parse_word("0+0"))});
    CHECK(distinguished_child(good) == 1);
}

TEST_CASE("full sub-blocks in reading order") {
    Block b = parse_linear(kSigma23, 3);
    auto ones = sub_blocks(b, 1);
    REQUIRE(ones.size() == 3);
    CHECK(to_string(linearize(ones[0])) == "-00 *0 0++");
    CHECK(to_string(linearize(ones[1])) == "-0- *0 0+0");
    CHECK(to_string(linearize(ones[2])) == "00- *0 ++0");
    auto zeros = sub_blocks(b, 0);
    CHECK(zeros.size() == 6);
    Block leaf = parse_linear("-", 1);
    auto self = sub_blocks(leaf, 0);
    REQUIRE(self.size() == 1);
    CHECK(self[0] == leaf);
}

TEST_CASE("reverse involution") {
    auto f = parse_form(kSigma23);
    auto rev = reverse_involute(f);
    CHECK(to_string(rev) == "--0 *0 00+ *1 0-0 *0 +0+ *1 0-- *0 +00");
    CHECK(reverse_involute(rev) == f);
    CHECK(to_string(reverse_involute(parse_form("-"))) == "+");
}

TEST_CASE("random forms round-trip through the block tree") {
    std::mt19937 rng(588);
    const char symbols[] = {'-', '0', '+'};
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 4;
        std::size_t count = 1 + rng() % 8;
        std::string text;
        for (std::size_t i = 0; i < count; ++i) {
            if (i) text += " *" + std::to_string(rng() % 4) + " ";
            for (std::size_t c = 0; c < n; ++c) text += symbols[rng() % 3];
        }
        CHECK(to_string(linearize(parse_linear(text, n))) == text);
    }
}

TEST_CASE("json round trip and validation") {
    Block b = parse_linear(kSigma23, 3);
    Block back = block_from_json(block_to_json(b));
    CHECK(to_string(linearize(back)) == kSigma23);
    CHECK_THROWS_AS(block_from_json("{\"k\": 1, \"axis\": \"row\", \"children\": "
                                    "[{\"word\": \"-\"}]}"),
                    StructureError);
    CHECK_THROWS_AS(block_from_json("not json"), ParseError);
}
