#include "oriental/simplex.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "oriental/cocycle.hpp"

namespace oriental {

std::string to_string(const SimplexWord& w) {
    std::string out = "<";
    for (int v : w.vertices) out += std::to_string(v);
    out += ">";
    return out;
}

std::string to_string(const SimplicialForm& f) {
    std::string out;
    for (const auto& tok : f.tokens) {
        if (!out.empty()) out += ' ';
        if (std::holds_alternative<SimplexWord>(tok))
            out += to_string(std::get<SimplexWord>(tok));
        else
            out += "*" + std::to_string(std::get<SimplicialForm::Sep>(tok).k);
    }
    return out;
}

int explode_vertex(const CubeWord& w) {
    if (dimension(w) != 0)
        throw HasZeros("explode_vertex: \"" + to_string(w) + "\" is not a vertex");
    int h = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.at(i) == Symbol::Plus) h = static_cast<int>(i) + 1;
    return h;
}

std::optional<SimplexWord> explode_word(const CubeWord& w) {
    int h = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.at(i) == Symbol::Plus) h = static_cast<int>(i) + 1;
    SimplexWord s;
    s.vertices.push_back(h);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.at(i) == Symbol::Zero && static_cast<int>(i) + 1 > h)
            s.vertices.push_back(static_cast<int>(i) + 1);
    if (s.dim() < dimension(w)) return std::nullopt;
    return s;
}

namespace {

/// Nested simplicial block mirroring Block's shape.
struct STree {
    std::size_t level = 0;
    SimplexWord word;          // leaf
    std::vector<STree> children;
    bool is_leaf() const { return children.empty() && level == 0; }
};

void linearize_stree(const STree& t, SimplicialForm& f) {
    if (t.is_leaf()) {
        f.tokens.emplace_back(t.word);
        return;
    }
    bool lead = true;
    for (const auto& c : t.children) {
        if (!lead) f.tokens.emplace_back(SimplicialForm::Sep{t.level - 1});
        linearize_stree(c, f);
        lead = false;
    }
}

SimplicialForm to_form(const std::optional<STree>& t) {
    SimplicialForm f;
    if (t) linearize_stree(*t, f);
    return f;
}

CubeWord max_dim_word(const Block& b) {
    CubeWord best;
    std::size_t best_dim = 0;
    bool have = false;
    for (const auto& w : block_words(b)) {
        if (!have || dimension(w) > best_dim) {
            best = w;
            best_dim = dimension(w);
            have = true;
        }
    }
    return best;
}

bool has_minus(const CubeWord& w) {
    return std::find(w.symbols().begin(), w.symbols().end(), Symbol::Minus) != w.symbols().end();
}

bool zeros_split_by_plus(const CubeWord& w) {
    bool seen_zero = false, plus_after_zero = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w.at(i) == Symbol::Zero) {
            if (plus_after_zero) return true;
            seen_zero = true;
        } else if (w.at(i) == Symbol::Plus && seen_zero) {
            plus_after_zero = true;
        }
    }
    return false;
}

/// Top-down segment pruning: drop any child whose highest-dimensional
/// word triggers the cut predicate, absorbing its separator.
std::optional<Block> prune(const Block& b, bool (*cut)(const CubeWord&)) {
    if (b.is_leaf()) return cut(b.word()) ? std::optional<Block>{} : std::optional<Block>{b};
    std::vector<Block> kept;
    for (const auto& c : b.children()) {
        if (cut(max_dim_word(c))) continue;
        auto sub = prune(c, cut);
        if (sub) kept.push_back(std::move(*sub));
    }
    if (kept.empty()) return std::nullopt;
    return Block(b.level(), std::move(kept));
}

} // namespace

SimplicialForm slice(const LinearForm& f, std::size_t n) {
    Block b = form_to_block(f, n);
    auto pruned = prune(b, has_minus);
    if (!pruned) return {};

    // vertices and *_0 drop out; each surviving 1-block carries at most
    // one cell, which becomes a leaf one level down
    std::function<std::optional<STree>(const Block&)> convert =
        [&](const Block& blk) -> std::optional<STree> {
        if (blk.level() >= 2) {
            STree t;
            t.level = blk.level() - 1;
            for (const auto& c : blk.children()) {
                auto sub = convert(c);
                if (sub) t.children.push_back(std::move(*sub));
            }
            if (t.children.empty()) return std::nullopt;
            return t;
        }
        std::vector<CubeWord> cells;
        if (blk.is_leaf()) {
            if (dimension(blk.word()) >= 1) cells.push_back(blk.word());
        } else {
            for (const auto& c : blk.children())
                if (dimension(c.word()) >= 1) cells.push_back(c.word());
        }
        if (cells.empty()) return std::nullopt; // only vertices here
        if (cells.size() > 1)
            throw MalformedForm("slice: a 1-block kept " + std::to_string(cells.size()) +
                                " non-vertex cells");
        STree leaf;
        for (std::size_t i = 0; i < cells[0].size(); ++i)
            if (cells[0].at(i) == Symbol::Zero) leaf.word.vertices.push_back(static_cast<int>(i));
        return leaf;
    };
    return to_form(convert(*pruned));
}

SimplicialForm explode(const LinearForm& f, std::size_t n) {
    Block b = form_to_block(f, n);

    std::function<std::optional<STree>(const Block&)> convert =
        [&](const Block& blk) -> std::optional<STree> {
        if (blk.is_leaf()) {
            if (dimension(blk.word()) == 0) return std::nullopt; // identity deformation
            auto s = explode_word(blk.word());
            if (!s) return std::nullopt;
            STree leaf;
            leaf.word = *s;
            return leaf;
        }
        STree t;
        t.level = blk.level();
        for (const auto& c : blk.children()) {
            auto sub = convert(c);
            if (sub) t.children.push_back(std::move(*sub));
        }
        if (t.children.empty()) return std::nullopt;
        return t;
    };
    return to_form(convert(b));
}

SimplicialForm strings(const LinearForm& f, std::size_t n) {
    Block b = form_to_block(f, n);
    auto pruned = prune(b, zeros_split_by_plus);
    if (!pruned) return {};
    int end_label = static_cast<int>(n) + 1;

    auto convert_word = [&](const CubeWord& w) -> SimplexWord {
        SimplexWord s;
        if (dimension(w) >= 1) {
            std::size_t first_zero = 0, last_zero = 0;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w.at(i) == Symbol::Zero) {
                    if (s.vertices.empty()) first_zero = i;
                    last_zero = i;
                    s.vertices.push_back(static_cast<int>(i) + 1);
                }
            int start = 0;
            for (std::size_t i = 0; i < first_zero; ++i)
                if (w.at(i) == Symbol::Plus) start = static_cast<int>(i) + 1;
            int stop = end_label;
            for (std::size_t i = last_zero + 1; i < w.size(); ++i)
                if (w.at(i) == Symbol::Plus) {
                    stop = static_cast<int>(i) + 1;
                    break;
                }
            s.vertices.insert(s.vertices.begin(), start);
            s.vertices.push_back(stop);
            return s;
        }
        // a vertex names a path; it contributes its unique non-consecutive
        // edge, the rest being restored by the path padding below
        std::vector<int> path{0};
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w.at(i) == Symbol::Plus) path.push_back(static_cast<int>(i) + 1);
        path.push_back(end_label);
        std::vector<std::pair<int, int>> jumps;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (path[i + 1] > path[i] + 1) jumps.emplace_back(path[i], path[i + 1]);
        if (jumps.size() > 1)
            throw MalformedForm("strings: vertex \"" + to_string(w) +
                                "\" has more than one path jump");
        if (jumps.empty())
            s.vertices = {0, 1};
        else
            s.vertices = {jumps[0].first, jumps[0].second};
        return s;
    };

    auto padded_leaf = [&](const CubeWord& w) -> STree {
        STree col;
        col.level = 1;
        SimplexWord s = convert_word(w);
        for (int v = 0; v < s.vertices.front(); ++v) {
            STree e;
            e.word.vertices = {v, v + 1};
            col.children.push_back(std::move(e));
        }
        STree mid;
        mid.word = s;
        col.children.push_back(std::move(mid));
        for (int v = s.vertices.back(); v < end_label; ++v) {
            STree e;
            e.word.vertices = {v, v + 1};
            col.children.push_back(std::move(e));
        }
        return col;
    };

    std::function<STree(const Block&)> convert = [&](const Block& blk) -> STree {
        if (blk.is_leaf()) return padded_leaf(blk.word());
        STree t;
        t.level = blk.level() + 1;
        for (const auto& c : blk.children()) t.children.push_back(convert(c));
        return t;
    };
    return to_form(convert(*pruned));
}

std::vector<std::vector<SimplexWord>> top_cell_sequence(const SimplicialForm& f) {
    std::vector<std::vector<SimplexWord>> out;
    if (f.tokens.empty()) return out;
    std::size_t top = 0;
    std::size_t max_verts = 0;
    for (const auto& tok : f.tokens) {
        if (const auto* s = std::get_if<SimplicialForm::Sep>(&tok))
            top = std::max(top, s->k);
        else
            max_verts = std::max(max_verts, std::get<SimplexWord>(tok).vertices.size());
    }
    std::set<SimplexWord> segment;
    auto flush = [&] {
        if (!segment.empty()) {
            out.emplace_back(segment.begin(), segment.end());
            segment.clear();
        }
    };
    for (const auto& tok : f.tokens) {
        if (const auto* s = std::get_if<SimplicialForm::Sep>(&tok)) {
            if (s->k == top) flush();
        } else if (std::get<SimplexWord>(tok).vertices.size() == max_verts) {
            segment.insert(std::get<SimplexWord>(tok));
        }
    }
    flush();
    return out;
}

RoutesReport routes_agree(std::size_t m) {
    if (m < 2) throw Error("routes_agree: m must be >= 2");
    RoutesReport rep;
    auto a = cocycle(m + 1);
    auto b = cocycle(m);
    auto c = cocycle(m - 1);
    rep.via_slice = slice(a.source_form, m + 1);
    rep.via_explode = explode(b.source_form, m);
    rep.via_strings = strings(c.source_form, m - 1);

    auto check = [&](const SimplicialForm& s1, const SimplicialForm& s2, const SimplicialForm& s3,
                     const char* side) -> bool {
        auto t1 = top_cell_sequence(s1);
        auto t2 = top_cell_sequence(s2);
        auto t3 = top_cell_sequence(s3);
        if (t1 != t2) {
            rep.failure = std::string(side) + ": slice and explode top cells differ";
            return false;
        }
        if (t1 != t3) {
            rep.failure = std::string(side) + ": slice and strings top cells differ";
            return false;
        }
        return true;
    };
    if (!check(rep.via_slice, rep.via_explode, rep.via_strings, "source")) return rep;
    if (!check(slice(a.target_form, m + 1), explode(b.target_form, m),
               strings(c.target_form, m - 1), "target"))
        return rep;
    rep.ok = true;
    return rep;
}

} // namespace oriental
