#include "oriental/pile.hpp"

#include <algorithm>
#include <map>

namespace oriental {

Pile::Pile(std::size_t n, std::vector<std::vector<CubeWord>> levels)
    : n_(n), levels_(std::move(levels)) {
    if (levels_.empty()) throw Error("pile must have at least level 0");
    std::size_t m = levels_.size() - 1;
    for (std::size_t j = 0; j <= m; ++j) {
        if (levels_[j].size() != binom(m, j))
            throw Error("pile level " + std::to_string(j) + " has " +
                        std::to_string(levels_[j].size()) + " words, expected C(" +
                        std::to_string(m) + "," + std::to_string(j) + ") = " +
                        std::to_string(binom(m, j)));
        std::set<CubeWord> seen;
        for (const auto& w : levels_[j]) {
            if (w.size() != n_)
                throw Error("pile word \"" + to_string(w) + "\" has length " +
                            std::to_string(w.size()) + ", ambient is " + std::to_string(n_));
            if (dimension(w) != j)
                throw Error("pile word \"" + to_string(w) + "\" has dimension " +
                            std::to_string(dimension(w)) + " at level " + std::to_string(j));
            if (!seen.insert(w).second)
                throw Error("duplicate pile word \"" + to_string(w) + "\"");
        }
    }
}

std::set<CubeWord> Pile::level_set(std::size_t j) const {
    return {levels_.at(j).begin(), levels_.at(j).end()};
}

bool Pile::contains(const CubeWord& w) const {
    std::size_t d = dimension(w);
    if (d >= levels_.size()) return false;
    const auto& lv = levels_[d];
    return std::find(lv.begin(), lv.end(), w) != lv.end();
}

bool Pile::same_sets(const Pile& other) const {
    if (n_ != other.n_ || levels_.size() != other.levels_.size()) return false;
    for (std::size_t j = 0; j < levels_.size(); ++j)
        if (level_set(j) != other.level_set(j)) return false;
    return true;
}

Pile face_pile(Side side, std::size_t n) {
    std::vector<std::vector<CubeWord>> levels;
    for (std::size_t k = 0; k <= n; ++k)
        levels.push_back(side == Side::Source ? psi(k, n) : omega(k, n));
    return Pile(n, std::move(levels));
}

Pile source_pile_with_target_top(std::size_t n) {
    std::vector<std::vector<CubeWord>> levels;
    for (std::size_t k = 0; k <= n; ++k)
        levels.push_back(k + 1 == n ? omega(k, n) : psi(k, n));
    return Pile(n, std::move(levels));
}

Pile target_pile_with_source_top(std::size_t n) {
    std::vector<std::vector<CubeWord>> levels;
    for (std::size_t k = 0; k <= n; ++k)
        levels.push_back(k + 1 == n ? psi(k, n) : omega(k, n));
    return Pile(n, std::move(levels));
}

EmbeddedFaces embedded_faces(const CubeWord& x, Side side) {
    EmbeddedFaces ef;
    ef.x = x;
    ef.side = side;
    std::size_t p = dimension(x);
    for (std::size_t j = 0; j < p; ++j) {
        std::vector<CubeWord> level;
        const auto& faces = side == Side::Source ? psi(j, p) : omega(j, p);
        level.reserve(faces.size());
        for (const auto& w : faces) level.push_back(substitute(x, w));
        ef.levels.push_back(std::move(level));
    }
    return ef;
}

std::vector<CubeWord> missing_for_pi(const Pile& p, const CubeWord& x) {
    std::vector<CubeWord> missing;
    if (!p.contains(x)) missing.push_back(x);
    EmbeddedFaces src = embedded_faces(x, Side::Source);
    for (std::size_t j = 0; j < src.levels.size(); ++j) {
        auto have = p.level_set(j);
        for (const auto& w : src.levels[j])
            if (!have.count(w)) missing.push_back(w);
    }
    return missing;
}

bool can_apply(const Pile& p, const CubeWord& x) { return missing_for_pi(p, x).empty(); }

NotApplicable::NotApplicable(std::string msg, CubeWord x_, std::vector<CubeWord> missing_)
    : Error(std::move(msg)), x(std::move(x_)), missing(std::move(missing_)) {}

StarPreconditionFailed::StarPreconditionFailed(std::string msg, std::size_t level_,
                                               std::vector<CubeWord> offending_)
    : Error(std::move(msg)), level(level_), offending(std::move(offending_)) {}

StepFailed::StepFailed(std::size_t index_, const std::string& reason_)
    : Error("step " + std::to_string(index_) + ": " + reason_),
      index(index_),
      reason(reason_) {}

/// Replace, level by level, the words of `out` by the words of `in`,
/// matching by parallel class so each class keeps its display slot.
static Pile replace_in_levels(const Pile& pile,
                              const std::vector<std::vector<CubeWord>>& out,
                              const std::vector<std::vector<CubeWord>>& in) {
    std::vector<std::vector<CubeWord>> levels = pile.levels();
    for (std::size_t j = 0; j < out.size(); ++j) {
        std::map<ParallelClass, CubeWord> repl;
        for (const auto& w : in[j]) repl.emplace(parallel_class(w), w);
        std::set<CubeWord> removed(out[j].begin(), out[j].end());
        for (auto& w : levels[j]) {
            if (!removed.count(w)) continue;
            auto it = repl.find(parallel_class(w));
            if (it == repl.end()) throw Error("replacement is not class-preserving");
            w = it->second;
        }
    }
    return Pile(pile.ambient(), std::move(levels));
}

static Pile apply_pi_impl(const Pile& p, const CubeWord& x, Side from, Side to) {
    std::vector<CubeWord> missing;
    if (!p.contains(x)) missing.push_back(x);
    EmbeddedFaces before = embedded_faces(x, from);
    for (std::size_t j = 0; j < before.levels.size(); ++j) {
        auto have = p.level_set(j);
        for (const auto& w : before.levels[j])
            if (!have.count(w)) missing.push_back(w);
    }
    if (!missing.empty()) {
        std::string msg = "pi_" + to_string(x) + " not applicable; missing:";
        for (const auto& w : missing) msg += " " + to_string(w);
        throw NotApplicable(msg, x, missing);
    }
    EmbeddedFaces after = embedded_faces(x, to);
    return replace_in_levels(p, before.levels, after.levels);
}

Pile apply_pi(const Pile& p, const CubeWord& x) {
    return apply_pi_impl(p, x, Side::Source, Side::Target);
}

Pile apply_pi_reverse(const Pile& p, const CubeWord& x) {
    return apply_pi_impl(p, x, Side::Target, Side::Source);
}

Pile apply_star(const Pile& p, std::size_t k) {
    if (k == 0) return p;
    std::size_t n = p.ambient();
    std::size_t jmax = std::min(k - 1, p.top());
    std::vector<std::vector<CubeWord>> out, in;
    for (std::size_t j = 0; j <= jmax; ++j) {
        const auto& expect = omega(j, n);
        std::set<CubeWord> expect_set(expect.begin(), expect.end());
        std::vector<CubeWord> offending;
        for (const auto& w : p.level(j))
            if (!expect_set.count(w)) offending.push_back(w);
        if (!offending.empty() || p.level(j).size() != expect.size()) {
            std::string msg = "*_" + std::to_string(k) + ": level " + std::to_string(j) +
                              " is not omega_" + std::to_string(j) + "[" + std::to_string(n) +
                              "]; offending:";
            for (const auto& w : offending) msg += " " + to_string(w);
            throw StarPreconditionFailed(msg, j, offending);
        }
        out.push_back(expect);
        in.push_back(psi(j, n));
    }
    return replace_in_levels(p, out, in);
}

std::string TransitionLabel::to_string() const {
    if (kind == Kind::Pi) return "pi:" + oriental::to_string(word);
    return "star:" + std::to_string(k);
}

Trace run(const LinearForm& form, const Pile& start) {
    Trace t{start, {}};
    Pile cur = start;
    for (std::size_t i = 0; i < form.tokens.size(); ++i) {
        const auto& tok = form.tokens[i];
        TransitionLabel label;
        try {
            if (const auto* w = std::get_if<CubeWord>(&tok)) {
                label.kind = TransitionLabel::Kind::Pi;
                label.word = *w;
                cur = apply_pi(cur, *w);
            } else {
                const auto& s = std::get<LinearForm::Sep>(tok);
                label.kind = TransitionLabel::Kind::Star;
                label.k = s.k;
                cur = apply_star(cur, s.k);
            }
        } catch (const Error& e) {
            throw StepFailed(i, e.what());
        }
        t.steps.push_back({label, cur});
    }
    return t;
}

NestedDiskReport check_nested_disks(const Trace& t) {
    NestedDiskReport report;
    std::size_t n = t.initial.ambient();
    std::vector<std::set<CubeWord>> initial_boundary(n + 1);
    for (std::size_t k = 1; k <= t.initial.top(); ++k) {
        auto cert = certify_disk(t.initial.level_set(k), k);
        if (!cert.ok) {
            report.failure = "initial state, level " + std::to_string(k) + ": " + cert.failure;
            return report;
        }
        initial_boundary[k] = cert.boundary;
    }
    for (std::size_t i = 0; i < t.state_count(); ++i) {
        const Pile& s = t.state(i);
        for (std::size_t k = 0; k <= s.top(); ++k) {
            auto words = s.level_set(k);
            if (!is_section(words, k, n)) {
                report.failure = "state " + std::to_string(i) + ", level " + std::to_string(k) +
                                 ": not a section";
                return report;
            }
            if (k == 0) continue;
            auto cert = certify_disk(words, k);
            if (!cert.ok) {
                report.failure = "state " + std::to_string(i) + ", level " + std::to_string(k) +
                                 ": " + cert.failure;
                return report;
            }
            if (cert.boundary != initial_boundary[k]) {
                report.failure = "state " + std::to_string(i) + ", level " + std::to_string(k) +
                                 ": boundary changed";
                return report;
            }
        }
    }
    report.ok = true;
    return report;
}

} // namespace oriental
