// Acceptance suite: one line per criterion, exit 0 only if all pass.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oriental/cocycle.hpp"
#include "oriental/simplex.hpp"

using namespace oriental;
using nlohmann::json;

namespace {

std::string g_fixture_dir;

json load_json(const std::string& name) {
    std::ifstream in(g_fixture_dir + "/" + name);
    if (!in) throw Error("cannot open fixture " + name);
    json j;
    in >> j;
    return j;
}

std::string load_text(const std::string& name) {
    std::ifstream in(g_fixture_dir + "/" + name);
    if (!in) throw Error("cannot open fixture " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::set<CubeWord> as_word_set(const json& arr) {
    std::set<CubeWord> out;
    for (const auto& s : arr) out.insert(parse_word(s.get<std::string>()));
    return out;
}

// criterion 1: the k-face lists for n <= 4 match the worked table as sets
std::string criterion1() {
    json j = load_json("examples_4_3.json");
    std::size_t checked = 0;
    for (const auto& e : j.at("entries")) {
        Side side = e.at("side") == "source" ? Side::Source : Side::Target;
        std::size_t k = e.at("k"), n = e.at("n");
        const auto& got = side == Side::Source ? psi(k, n) : omega(k, n);
        if (std::set<CubeWord>(got.begin(), got.end()) != as_word_set(e.at("words")))
            return std::string(e.at("side")) + " k=" + std::to_string(k) +
                   " n=" + std::to_string(n) + " differs from the table";
        std::size_t card = k >= n ? 1 : binom(n, k);
        if (got.size() != card)
            return "cardinality of k=" + std::to_string(k) + " n=" + std::to_string(n) +
                   " is not C(n,k)";
        ++checked;
    }
    if (checked != 40) return "expected 40 table entries, saw " + std::to_string(checked);
    return "";
}

// criterion 2: generated sources linearize to the worked forms, token for token
std::string criterion2() {
    std::istringstream in(load_text("example_5_4.txt"));
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++n;
        if (to_string(linearize(sigma_block(n - 1, n))) != line)
            return "sigma_" + std::to_string(n - 1) + "[" + std::to_string(n) +
                   "] differs from the worked form";
    }
    if (n != 4) return "fixture must list the four worked forms";
    std::size_t words = 0;
    std::set<std::size_t> seps;
    for (const auto& tok : linearize(sigma_block(3, 4)).tokens) {
        if (std::holds_alternative<CubeWord>(tok))
            ++words;
        else
            seps.insert(std::get<LinearForm::Sep>(tok).k);
    }
    if (words != 44 || seps != std::set<std::size_t>{0, 1, 2})
        return "the 4-cube source is not the 44-word {*0,*1,*2} form";
    return "";
}

// criterion 3: the 12 pile states of the 3-cube trace, one word per class
std::string criterion3() {
    json j = load_json("table2.json");
    Trace t = run_source(3);
    const auto& steps = j.at("steps");
    if (t.state_count() != steps.size())
        return "trace has " + std::to_string(t.state_count()) + " states, table has " +
               std::to_string(steps.size());
    for (std::size_t i = 0; i < t.state_count(); ++i) {
        if (i > 0 && steps[i].at("label") != t.steps[i - 1].label.to_string())
            return "transition " + std::to_string(i) + " differs";
        const Pile& p = t.state(i);
        for (std::size_t k = 0; k <= 3; ++k) {
            std::map<ParallelClass, CubeWord> got, want;
            for (const auto& w : p.level(k)) got.emplace(parallel_class(w), w);
            for (const auto& w : as_word_set(steps[i].at("pile").at("v" + std::to_string(k))))
                want.emplace(parallel_class(w), w);
            if (got != want)
                return "state " + std::to_string(i) + ", level " + std::to_string(k) +
                       " differs per class";
        }
    }
    return "";
}

// criterion 4: v2 checkpoints of the 4-cube trace at *_2 boundaries
std::string criterion4() {
    json j = load_json("table3_v2.json");
    Trace t = run_source(4);
    std::vector<std::set<CubeWord>> cps{t.initial.level_set(2)};
    for (const auto& s : t.steps)
        if (s.label.kind == TransitionLabel::Kind::Star && s.label.k == 2)
            cps.push_back(s.state.level_set(2));
    cps.push_back(t.final_state().level_set(2));
    const auto& cols = j.at("columns");
    if (cps.size() != cols.size())
        return std::to_string(cps.size()) + " checkpoints, table has " +
               std::to_string(cols.size()) + " columns";
    for (std::size_t i = 0; i < cps.size(); ++i)
        if (cps[i] != as_word_set(cols[i]))
            return "checkpoint " + std::to_string(i) + " differs";
    std::size_t d3 = 0;
    for (const auto& tok : linearize(sigma_block(3, 4)).tokens)
        if (const auto* w = std::get_if<CubeWord>(&tok))
            if (dimension(*w) == 3) ++d3;
    if (d3 != 4) return "expected four 3-cube applications";
    return "";
}

// criterion 5: both cocycle forms execute for n = 2..5 and land on target
std::string criterion5() {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto rep = verify_execution(n);
        if (!rep.ok) return "n=" + std::to_string(n) + ": " + rep.failure;
    }
    return "";
}

// criterion 6: disk certificates for all face lists up to n = 7 and
// nested-disk monitoring of every criterion-5 trace
std::string criterion6() {
    for (std::size_t n = 1; n <= 7; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            for (Side side : {Side::Source, Side::Target}) {
                auto cert = certify_disk(face_list(side, k, n).word_set(), k);
                if (!cert.ok)
                    return std::string(to_string(side)) + " k=" + std::to_string(k) +
                           " n=" + std::to_string(n) + ": " + cert.failure;
                std::set<CubeWord> expect;
                for (const auto& w : psi(k - 1, n)) expect.insert(w);
                for (const auto& w : omega(k - 1, n)) expect.insert(w);
                if (closure(cert.boundary) != closure(expect))
                    return std::string(to_string(side)) + " k=" + std::to_string(k) +
                           " n=" + std::to_string(n) + ": boundary differs";
            }
    for (std::size_t n = 2; n <= 5; ++n) {
        auto r1 = check_nested_disks(run_source(n));
        if (!r1.ok) return "source trace n=" + std::to_string(n) + ": " + r1.failure;
        auto r2 = check_nested_disks(run_target(n));
        if (!r2.ok) return "target trace n=" + std::to_string(n) + ": " + r2.failure;
    }
    return "";
}

// criterion 7: antipodal duality of the face lists and of the forms
std::string criterion7() {
    for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            std::set<CubeWord> im;
            for (const auto& w : psi(k, n)) im.insert(antipodal(w));
            if (im != face_list(Side::Target, k, n).word_set())
                return "antipodal(psi_" + std::to_string(k) + "[" + std::to_string(n) +
                       "]) != omega";
        }
    for (std::size_t n = 1; n <= 5; ++n) {
        auto c = cocycle(n);
        Block a = form_to_block(reverse_involute(c.source_form), n);
        Block b = form_to_block(c.target_form, n);
        if (!agree_per_subblock_sets(a, b))
            return "n=" + std::to_string(n) +
                   ": reverse involute of the source differs from the target";
    }
    return "";
}

// criterion 8: every generated cocycle block is distinguished
std::string criterion8() {
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t k = 1; k < n; ++k) {
            if (!is_distinguished(sigma_block(k, n)))
                return "sigma_" + std::to_string(k) + "[" + std::to_string(n) + "]";
            if (!is_distinguished(tau_block(k, n)))
                return "tau_" + std::to_string(k) + "[" + std::to_string(n) + "]";
        }
    return "";
}

// criterion 9: the five 4-cube applications of the 5-cube run expose the
// recorded source 3-cube classes, between the recorded start and end
std::string criterion9() {
    json j = load_json("appendix_5cube.json");
    Trace t = run_source(5);
    if (t.initial.level_set(3) != as_word_set(j.at("initial_v3")))
        return "initial 3-level differs";
    if (t.final_state().level_set(3) != as_word_set(j.at("final_v3")))
        return "final 3-level differs";
    std::vector<std::pair<std::string, std::set<std::string>>> ops;
    for (const auto& s : t.steps) {
        if (s.label.kind != TransitionLabel::Kind::Pi || dimension(s.label.word) != 4) continue;
        std::set<std::string> classes;
        auto ef = embedded_faces(s.label.word, Side::Source);
        for (const auto& w : ef.levels[3]) classes.insert(parallel_class(w).label());
        ops.emplace_back(to_string(s.label.word), classes);
    }
    const auto& want = j.at("operators");
    if (ops.size() != want.size())
        return std::to_string(ops.size()) + " operators, expected " + std::to_string(want.size());
    for (std::size_t i = 0; i < ops.size(); ++i) {
        std::set<std::string> classes;
        for (const auto& c : want[i].at("classes")) classes.insert(c.get<std::string>());
        if (ops[i].first != want[i].at("word"))
            return "operator " + std::to_string(i + 1) + " is " + ops[i].first;
        if (ops[i].second != classes)
            return "operator " + std::to_string(i + 1) + " exposes different classes";
    }
    // every intermediate state keeps one representative per 3-cube class
    for (std::size_t i = 0; i < t.state_count(); ++i) {
        std::set<std::string> classes;
        for (const auto& w : t.state(i).level(3)) classes.insert(parallel_class(w).label());
        if (classes.size() != 10) return "state " + std::to_string(i) + " lost a 3-cube class";
    }
    return "";
}

// criterion 10: the routes to the simplex agree, and the 6-simplex data
// contains the recorded four-simplex run
std::string criterion10() {
    for (std::size_t m : {3, 4}) {
        auto rep = routes_agree(m);
        if (!rep.ok) return "m=" + std::to_string(m) + ": " + rep.failure;
    }
    std::istringstream in(load_text("appendix_delta6_run.txt"));
    std::vector<std::string> want;
    std::string tok;
    while (in >> tok) want.push_back(tok);
    auto form = strings(cocycle(5).source_form, 5);
    std::vector<std::string> big;
    for (const auto& t : form.tokens)
        if (const auto* w = std::get_if<SimplexWord>(&t))
            if (w->vertices.size() >= 5) big.push_back(to_string(*w));
    for (std::size_t i = 0; i + want.size() <= big.size(); ++i)
        if (std::equal(want.begin(), want.end(), big.begin() + i)) return "";
    return "recorded four-simplex run not present in the 6-simplex data";
}

} // namespace

int main(int argc, char** argv) {
    g_fixture_dir = argc > 1 ? argv[1] : "fixtures";
    struct Criterion {
        int id;
        const char* what;
        std::function<std::string()> check;
    };
    const std::vector<Criterion> criteria = {
        {1, "k-face table for n <= 4", criterion1},
        {2, "worked linear forms, token for token", criterion2},
        {3, "12-state trace of the 3-cube source", criterion3},
        {4, "3-cube action checkpoints on the 4-cube", criterion4},
        {5, "execution oracle for n = 2..5", criterion5},
        {6, "disk certificates up to n = 7 and nested disks", criterion6},
        {7, "antipodal duality up to n = 8, form duality to n = 5", criterion7},
        {8, "distinguishedness of generated blocks to n = 5", criterion8},
        {9, "5-cube recombination operators", criterion9},
        {10, "three simplicial routes and the 6-simplex run", criterion10},
    };
    bool ok = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            failure = c.check();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (failure.empty() ? "PASS" : "FAIL") << "  criterion " << c.id << ": "
                  << c.what << "  [" << ms << " ms]";
        if (!failure.empty()) std::cout << "  -- " << failure;
        std::cout << "\n";
        ok = ok && failure.empty();
    }
    return ok ? 0 : 1;
}
