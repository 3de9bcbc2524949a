#include "oriental/block.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oriental/errors.hpp"

namespace oriental {

Block::Block(std::size_t level, std::vector<Block> children)
    : level_(level), children_(std::move(children)) {
    if (level_ == 0) throw StructureError("a node block must have level >= 1");
    if (children_.empty()) throw StructureError("a node block must have children");
    for (const auto& c : children_)
        if (c.level() != level_ - 1)
            throw StructureError("child of level-" + std::to_string(level_) +
                                 " block has level " + std::to_string(c.level()));
}

const CubeWord& Block::word() const {
    if (!is_leaf()) throw StructureError("word() called on a non-leaf block");
    return word_;
}

const std::vector<Block>& Block::children() const {
    if (is_leaf()) throw StructureError("children() called on a leaf block");
    return children_;
}

bool is_column(const Block& b) { return b.level() % 2 == 1; }
bool is_row(const Block& b) { return !b.is_leaf() && b.level() % 2 == 0; }

std::size_t block_dimension(const Block& b) {
    if (b.is_leaf()) return dimension(b.word());
    std::size_t d = 0;
    for (const auto& c : b.children()) d = std::max(d, block_dimension(c));
    return d;
}

std::size_t block_ambient(const Block& b) {
    const Block* cur = &b;
    while (!cur->is_leaf()) cur = &cur->children().front();
    return cur->word().size();
}

static void collect_words(const Block& b, std::vector<CubeWord>& out) {
    if (b.is_leaf()) {
        out.push_back(b.word());
        return;
    }
    for (const auto& c : b.children()) collect_words(c, out);
}

std::vector<CubeWord> block_words(const Block& b) {
    std::vector<CubeWord> out;
    collect_words(b, out);
    return out;
}

Block promote(const Block& b, std::size_t level) {
    if (b.level() > level)
        throw LevelMismatch("cannot promote level " + std::to_string(b.level()) +
                            " block to lower level " + std::to_string(level));
    Block out = b;
    for (std::size_t l = b.level() + 1; l <= level; ++l) out = Block(l, {std::move(out)});
    return out;
}

Block demote(const Block& b) {
    const Block* cur = &b;
    while (!cur->is_leaf() && cur->children().size() == 1) cur = &cur->children().front();
    if (cur->is_leaf()) return *cur;
    std::vector<Block> kids;
    kids.reserve(cur->children().size());
    for (const auto& c : cur->children()) kids.push_back(c); // children keep their level
    return Block(cur->level(), std::move(kids));
}

bool is_distinguished(const Block& b) {
    if (b.is_leaf()) return true;
    std::size_t j = b.level();
    std::size_t off = 0;
    for (const auto& c : b.children()) {
        std::size_t d = block_dimension(c);
        if (d == j) continue;
        if (d < j) return false;
        if (++off > 1) return false;
    }
    for (const auto& c : b.children())
        if (!is_distinguished(c)) return false;
    return true;
}

std::size_t distinguished_child(const Block& b) {
    if (b.is_leaf()) throw NotDistinguished("leaf has no children");
    std::size_t j = b.level();
    std::size_t idx = b.children().size();
    for (std::size_t i = 0; i < b.children().size(); ++i) {
        std::size_t d = block_dimension(b.children()[i]);
        if (d > j) {
            if (idx != b.children().size())
                throw NotDistinguished("two children of dimension > " + std::to_string(j));
            idx = i;
        } else if (d < j) {
            throw NotDistinguished("child of dimension " + std::to_string(d) +
                                   " below level " + std::to_string(j));
        }
    }
    if (idx == b.children().size())
        throw NotDistinguished("no child of dimension > " + std::to_string(j));
    return idx;
}

std::vector<Block> sub_blocks(const Block& b, std::size_t j) {
    if (b.level() <= j) return {b};
    std::vector<Block> out;
    for (const auto& c : b.children()) {
        auto sub = sub_blocks(c, j);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

static void linearize_into(const Block& b, LinearForm& f, bool& first) {
    if (b.is_leaf()) {
        if (!first) throw StructureError("internal: missing separator");
        f.tokens.emplace_back(b.word());
        first = false;
        return;
    }
    bool lead = true;
    for (const auto& c : b.children()) {
        if (!lead) {
            f.tokens.emplace_back(LinearForm::Sep{b.level() - 1});
            first = true;
        }
        linearize_into(c, f, first);
        lead = false;
    }
}

LinearForm linearize(const Block& b) {
    LinearForm f;
    bool first = true;
    linearize_into(b, f, first);
    return f;
}

std::string to_string(const LinearForm& f) {
    std::string out;
    for (const auto& tok : f.tokens) {
        if (!out.empty()) out += ' ';
        if (std::holds_alternative<CubeWord>(tok))
            out += to_string(std::get<CubeWord>(tok));
        else
            out += "*" + std::to_string(std::get<LinearForm::Sep>(tok).k);
    }
    return out;
}

LinearForm parse_form(const std::string& text) {
    LinearForm f;
    std::istringstream in(text);
    std::string tok;
    bool expect_word = true;
    while (in >> tok) {
        if (tok[0] == '*') {
            if (expect_word) throw ParseError("separator \"" + tok + "\" where a word was expected");
            std::size_t pos = 0;
            int k = -1;
            try {
                k = std::stoi(tok.substr(1), &pos);
            } catch (const std::exception&) {
                throw ParseError("bad separator \"" + tok + "\"");
            }
            if (pos + 1 != tok.size() || k < 0) throw ParseError("bad separator \"" + tok + "\"");
            f.tokens.emplace_back(LinearForm::Sep{static_cast<std::size_t>(k)});
            expect_word = true;
        } else {
            if (!expect_word) throw ParseError("word \"" + tok + "\" where a separator was expected");
            try {
                f.tokens.emplace_back(parse_word(tok));
            } catch (const InvalidCharacter& e) {
                throw ParseError(std::string("bad word \"") + tok + "\": " + e.what());
            }
            expect_word = false;
        }
    }
    if (f.tokens.empty()) throw ParseError("empty form");
    if (expect_word) throw ParseError("form ends with a separator");
    return f;
}

namespace {

using TokenIt = std::vector<LinearForm::Token>::const_iterator;

Block parse_span(TokenIt begin, TokenIt end, std::size_t level) {
    std::size_t max_sep = 0;
    bool has_sep = false;
    for (auto it = begin; it != end; ++it) {
        if (const auto* s = std::get_if<LinearForm::Sep>(&*it)) {
            has_sep = true;
            max_sep = std::max(max_sep, s->k);
        }
    }
    if (!has_sep) {
        if (std::distance(begin, end) != 1)
            throw ParseError("adjacent words without a separator");
        return promote(Block(std::get<CubeWord>(*begin)), level);
    }
    std::vector<Block> kids;
    auto span_start = begin;
    for (auto it = begin; it != end; ++it) {
        const auto* s = std::get_if<LinearForm::Sep>(&*it);
        if (s && s->k == max_sep) {
            kids.push_back(parse_span(span_start, it, max_sep));
            span_start = it + 1;
        }
    }
    kids.push_back(parse_span(span_start, end, max_sep));
    return promote(Block(max_sep + 1, std::move(kids)), level);
}

} // namespace

Block form_to_block(const LinearForm& f, std::size_t n) {
    for (const auto& tok : f.tokens)
        if (const auto* w = std::get_if<CubeWord>(&tok))
            if (w->size() != n)
                throw ParseError("word \"" + to_string(*w) + "\" has length " +
                                 std::to_string(w->size()) + ", ambient is " + std::to_string(n));
    std::size_t top = 0;
    for (const auto& tok : f.tokens)
        if (const auto* s = std::get_if<LinearForm::Sep>(&tok)) top = std::max(top, s->k + 1);
    return parse_span(f.tokens.begin(), f.tokens.end(), top);
}

Block parse_linear(const std::string& text, std::size_t n) {
    return form_to_block(parse_form(text), n);
}

LinearForm reverse_involute(const LinearForm& f) {
    LinearForm out;
    out.tokens.reserve(f.tokens.size());
    for (auto it = f.tokens.rbegin(); it != f.tokens.rend(); ++it) {
        if (const auto* w = std::get_if<CubeWord>(&*it))
            out.tokens.emplace_back(antipodal(*w));
        else
            out.tokens.emplace_back(*it);
    }
    return out;
}

bool agree_per_subblock_sets(const Block& a, const Block& b) {
    if (a.level() != b.level()) return false;
    if (a.is_leaf()) return a.word() == b.word();
    if (a.children().size() != b.children().size()) return false;
    auto words = [](const Block& x) {
        auto ws = block_words(x);
        return std::set<CubeWord>(ws.begin(), ws.end());
    };
    if (words(a) != words(b)) return false;
    for (std::size_t i = 0; i < a.children().size(); ++i)
        if (!agree_per_subblock_sets(a.children()[i], b.children()[i])) return false;
    return true;
}

namespace {

nlohmann::json block_json(const Block& b) {
    if (b.is_leaf()) return nlohmann::json{{"word", to_string(b.word())}};
    nlohmann::json j;
    j["k"] = b.level();
    j["axis"] = is_column(b) ? "column" : "row";
    j["children"] = nlohmann::json::array();
    for (const auto& c : b.children()) j["children"].push_back(block_json(c));
    return j;
}

Block block_of_json(const nlohmann::json& j) {
    if (j.contains("word")) return Block(parse_word(j.at("word").get<std::string>()));
    std::size_t k = j.at("k").get<std::size_t>();
    if (k == 0) throw StructureError("node with k = 0");
    std::string axis = j.at("axis").get<std::string>();
    std::string expected = k % 2 == 1 ? "column" : "row";
    if (axis != expected)
        throw StructureError("level " + std::to_string(k) + " block declared as " + axis +
                             ", expected " + expected);
    std::vector<Block> kids;
    for (const auto& c : j.at("children")) {
        Block child = block_of_json(c);
        if (child.level() >= k)
            throw StructureError("separator index " + std::to_string(child.level()) +
                                 " >= declared block level " + std::to_string(k));
        kids.push_back(promote(child, k - 1));
    }
    return Block(k, std::move(kids));
}

} // namespace

std::string block_to_json(const Block& b) { return block_json(b).dump(); }

Block block_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    try {
        return block_of_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad block JSON: ") + e.what());
    }
}

} // namespace oriental
