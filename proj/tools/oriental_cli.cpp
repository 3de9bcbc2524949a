#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oriental/cocycle.hpp"
#include "oriental/render.hpp"
#include "oriental/simplex.hpp"

using namespace oriental;
using nlohmann::json;

namespace {

std::size_t max_n() {
    if (const char* env = std::getenv("ORIENTAL_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    }
    return 5;
}

std::vector<std::string> word_strings(const std::vector<CubeWord>& ws) {
    std::vector<std::string> out;
    out.reserve(ws.size());
    for (const auto& w : ws) out.push_back(to_string(w));
    return out;
}

json pile_json(const Pile& p) {
    json j = json::object();
    for (std::size_t k = 0; k < p.levels().size(); ++k)
        j["v" + std::to_string(k)] = word_strings(p.level(k));
    return j;
}

json trace_json(const Trace& t) {
    json steps = json::array();
    steps.push_back({{"label", "start"}, {"pile", pile_json(t.initial)}});
    for (const auto& s : t.steps)
        steps.push_back({{"label", s.label.to_string()}, {"pile", pile_json(s.state)}});
    return json{{"steps", steps}};
}

// ---- text layout helpers -------------------------------------------------

using Grid = std::vector<std::string>;

std::size_t grid_width(const Grid& g) {
    std::size_t w = 0;
    for (const auto& line : g) w = std::max(w, line.size());
    return w;
}

Grid pad(const Grid& g, std::size_t width, std::size_t height) {
    Grid out = g;
    out.resize(height);
    for (auto& line : out) line.resize(width, ' ');
    return out;
}

/// Nested table layout: columns joined with bars, higher
/// blocks stacked with double rules.
Grid block_grid(const Block& b) {
    if (b.is_leaf()) return {to_string(b.word())};
    if (b.level() == 1) {
        Grid out;
        for (const auto& c : b.children()) out.push_back(to_string(c.word()));
        return out;
    }
    if (b.level() % 2 == 0) { // row: place children side by side
        std::vector<Grid> parts;
        std::size_t height = 0;
        for (const auto& c : b.children()) {
            parts.push_back(block_grid(c));
            height = std::max(height, parts.back().size());
        }
        Grid out(height);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Grid p = pad(parts[i], grid_width(parts[i]), height);
            for (std::size_t r = 0; r < height; ++r)
                out[r] += (i ? " | " : "") + p[r];
        }
        return out;
    }
    Grid out; // column: stack children under double rules
    for (const auto& c : b.children()) {
        Grid p = block_grid(c);
        if (!out.empty()) out.push_back(std::string(std::max(grid_width(out), grid_width(p)), '='));
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

void print_grid(const Grid& g) {
    for (const auto& line : g) std::cout << line << "\n";
}

int fail_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

// ---- fixture suite ---------------------------------------------------------

struct FixtureResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture " + path);
    json j;
    in >> j;
    return j;
}

std::string load_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::set<CubeWord> as_word_set(const json& arr) {
    std::set<CubeWord> out;
    for (const auto& s : arr) out.insert(parse_word(s.get<std::string>()));
    return out;
}

FixtureResult fx_examples43(const std::string& dir) {
    FixtureResult r{"examples43", true, ""};
    json j = load_json(dir + "/examples_4_3.json");
    for (const auto& e : j.at("entries")) {
        Side side = e.at("side") == "source" ? Side::Source : Side::Target;
        std::size_t k = e.at("k"), n = e.at("n");
        auto got = face_list(side, k, n).word_set();
        auto want = as_word_set(e.at("words"));
        std::size_t card = k >= n ? 1 : binom(n, k);
        if (got != want || got.size() != card) {
            r.pass = false;
            r.detail = std::string(e.at("side")) + " k=" + std::to_string(k) +
                       " n=" + std::to_string(n) + " differs";
            return r;
        }
    }
    return r;
}

FixtureResult fx_example54(const std::string& dir) {
    FixtureResult r{"example54", true, ""};
    std::istringstream in(load_text(dir + "/example_5_4.txt"));
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++n;
        std::string got = to_string(linearize(sigma_block(n - 1, n)));
        if (got != line) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": generated form differs";
            return r;
        }
    }
    if (n < 4) {
        r.pass = false;
        r.detail = "fixture lists only " + std::to_string(n) + " forms";
    }
    return r;
}

bool pile_matches(const Pile& p, const json& expected) {
    for (std::size_t k = 0; k < p.levels().size(); ++k) {
        auto it = expected.find("v" + std::to_string(k));
        if (it == expected.end()) return false;
        if (p.level_set(k) != as_word_set(*it)) return false;
    }
    return true;
}

FixtureResult fx_table2(const std::string& dir) {
    FixtureResult r{"table2", true, ""};
    json j = load_json(dir + "/table2.json");
    Trace t = run_source(3);
    const auto& steps = j.at("steps");
    if (steps.size() != t.state_count()) {
        r.pass = false;
        r.detail = "state count " + std::to_string(t.state_count()) + " != " +
                   std::to_string(steps.size());
        return r;
    }
    for (std::size_t i = 0; i < t.state_count(); ++i) {
        if (i > 0 && steps[i].at("label") != t.steps[i - 1].label.to_string()) {
            r.pass = false;
            r.detail = "label mismatch at step " + std::to_string(i);
            return r;
        }
        if (!pile_matches(t.state(i), steps[i].at("pile"))) {
            r.pass = false;
            r.detail = "pile mismatch at state " + std::to_string(i);
            return r;
        }
    }
    return r;
}

std::vector<Pile> star_checkpoints(const Trace& t, std::size_t k) {
    std::vector<Pile> cps{t.initial};
    for (const auto& s : t.steps)
        if (s.label.kind == TransitionLabel::Kind::Star && s.label.k == k)
            cps.push_back(s.state);
    cps.push_back(t.final_state());
    return cps;
}

FixtureResult fx_table3(const std::string& dir) {
    FixtureResult r{"table3", true, ""};
    json j = load_json(dir + "/table3_v2.json");
    auto cps = star_checkpoints(run_source(4), 2);
    const auto& cols = j.at("columns");
    if (cols.size() != cps.size()) {
        r.pass = false;
        r.detail = "checkpoint count differs";
        return r;
    }
    for (std::size_t i = 0; i < cps.size(); ++i) {
        if (cps[i].level_set(2) != as_word_set(cols[i])) {
            r.pass = false;
            r.detail = "column " + std::to_string(i) + " differs";
            return r;
        }
    }
    return r;
}

FixtureResult fx_appendix5(const std::string& dir) {
    FixtureResult r{"appendix5", true, ""};
    json j = load_json(dir + "/appendix_5cube.json");
    Trace t = run_source(5);
    if (t.initial.level_set(3) != as_word_set(j.at("initial_v3")) ||
        t.final_state().level_set(3) != as_word_set(j.at("final_v3"))) {
        r.pass = false;
        r.detail = "3-level start or end differs";
        return r;
    }
    std::vector<std::pair<std::string, std::set<std::string>>> ops;
    for (const auto& s : t.steps) {
        if (s.label.kind != TransitionLabel::Kind::Pi || dimension(s.label.word) != 4) continue;
        std::set<std::string> classes;
        auto ef = embedded_faces(s.label.word, Side::Source);
        for (const auto& w : ef.levels[3]) classes.insert(parallel_class(w).label());
        ops.emplace_back(to_string(s.label.word), classes);
    }
    const auto& want = j.at("operators");
    if (ops.size() != want.size()) {
        r.pass = false;
        r.detail = "operator count differs";
        return r;
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
        std::set<std::string> classes;
        for (const auto& c : want[i].at("classes")) classes.insert(c.get<std::string>());
        if (ops[i].first != want[i].at("word") || ops[i].second != classes) {
            r.pass = false;
            r.detail = "operator " + std::to_string(i + 1) + " differs";
            return r;
        }
    }
    return r;
}

FixtureResult fx_delta6(const std::string& dir) {
    FixtureResult r{"delta6", true, ""};
    std::istringstream in(load_text(dir + "/appendix_delta6_run.txt"));
    std::vector<std::string> want;
    std::string tok;
    while (in >> tok) want.push_back(tok);
    auto form = strings(cocycle(5).source_form, 5);
    std::vector<std::string> big;
    for (const auto& t : form.tokens)
        if (const auto* w = std::get_if<SimplexWord>(&t))
            if (w->vertices.size() >= 5) big.push_back(to_string(*w));
    bool found = false;
    if (want.size() <= big.size())
        for (std::size_t i = 0; i + want.size() <= big.size() && !found; ++i)
            found = std::equal(want.begin(), want.end(), big.begin() + i);
    if (!found) {
        r.pass = false;
        r.detail = "quoted run not present";
    }
    return r;
}

int run_fixtures(const std::string& dir, const std::string& only) {
    std::vector<std::pair<std::string, FixtureResult (*)(const std::string&)>> all = {
        {"examples43", fx_examples43}, {"example54", fx_example54}, {"table2", fx_table2},
        {"table3", fx_table3},         {"appendix5", fx_appendix5}, {"delta6", fx_delta6}};
    bool ok = true;
    std::size_t ran = 0;
    for (const auto& [name, fn] : all) {
        if (!only.empty() && name != only) continue;
        FixtureResult r;
        try {
            r = fn(dir);
        } catch (const std::exception& e) {
            r.name = name;
            r.pass = false;
            r.detail = e.what();
        }
        ++ran;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        ok = ok && r.pass;
    }
    if (ran == 0) {
        std::cerr << "error: no fixture named \"" << only << "\"\n";
        return 2;
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"oriented n-cube cocycle engine"};
    app.require_subcommand(1);

    // faces
    auto* faces_cmd = app.add_subcommand("faces", "source/target k-face lists");
    std::size_t fn = 3;
    int fk = -1;
    std::string fside = "both", fformat = "text";
    faces_cmd->add_option("--n", fn, "ambient dimension")->required();
    faces_cmd->add_option("--k", fk, "face dimension (default: all)");
    faces_cmd->add_option("--side", fside)->check(CLI::IsMember({"source", "target", "both"}));
    faces_cmd->add_option("--format", fformat)->check(CLI::IsMember({"text", "json"}));

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "execute a cocycle form on its start pile");
    std::size_t tn = 3;
    std::string tside = "source", tformat = "text", tlevels;
    int tcheckpoints = -1;
    trace_cmd->add_option("--n", tn)->required();
    trace_cmd->add_option("--side", tside)->check(CLI::IsMember({"source", "target"}));
    trace_cmd->add_option("--levels", tlevels, "comma-separated levels to display");
    trace_cmd->add_option("--format", tformat)->check(CLI::IsMember({"text", "json"}));
    trace_cmd->add_option("--checkpoints", tcheckpoints,
                          "only states at *_K boundaries, plus first and last");

    // cocycle
    auto* coc_cmd = app.add_subcommand("cocycle", "the (n-1)-cocycle condition");
    std::size_t cn = 3;
    std::string cside = "both", cformat = "linear";
    coc_cmd->add_option("--n", cn)->required();
    coc_cmd->add_option("--side", cside)->check(CLI::IsMember({"source", "target", "both"}));
    coc_cmd->add_option("--format", cformat)->check(CLI::IsMember({"linear", "json", "table"}));

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "structural and execution checks");
    std::size_t vn = 3;
    std::string vcheck = "all";
    ver_cmd->add_option("--n", vn)->required();
    ver_cmd->add_option("--check", vcheck)
        ->check(CLI::IsMember({"all", "execution", "disks", "duality", "prop62"}));

    // simplex
    auto* sim_cmd = app.add_subcommand("simplex", "simplicial cocycle via a conversion route");
    std::size_t sn = 3;
    std::string svia = "slice", sformat = "linear";
    sim_cmd->add_option("--n", sn)->required();
    sim_cmd->add_option("--via", svia)->check(CLI::IsMember({"slice", "explode", "strings"}));
    sim_cmd->add_option("--format", sformat)->check(CLI::IsMember({"linear", "json"}));

    // simplex-agree
    auto* agree_cmd = app.add_subcommand("simplex-agree", "compare the three conversion routes");
    std::size_t am = 3;
    agree_cmd->add_option("--m", am)->required();

    // render
    auto* ren_cmd = app.add_subcommand("render", "DOT output of a block or trace");
    std::size_t rn = 3;
    int rk = -1;
    std::string rwhat = "block", rside = "source";
    ren_cmd->add_option("--n", rn)->required();
    ren_cmd->add_option("--what", rwhat)->check(CLI::IsMember({"block", "trace"}));
    ren_cmd->add_option("--side", rside)->check(CLI::IsMember({"source", "target"}));
    ren_cmd->add_option("--k", rk, "block level (default n-1)");

    // fixtures
    auto* fix_cmd = app.add_subcommand("fixtures", "run the checked-in regression fixtures");
    std::string fdir = ORIENTAL_FIXTURE_DIR, fonly;
    fix_cmd->add_option("--dir", fdir, "fixture directory");
    fix_cmd->add_option("--only", fonly, "run a single fixture by name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*faces_cmd) {
            std::vector<std::pair<Side, std::size_t>> wanted;
            for (std::size_t k = 0; k <= fn; ++k) {
                if (fk >= 0 && static_cast<std::size_t>(fk) != k) continue;
                if (fside != "target") wanted.emplace_back(Side::Source, k);
                if (fside != "source") wanted.emplace_back(Side::Target, k);
            }
            if (fformat == "json") {
                json entries = json::array();
                for (auto [side, k] : wanted)
                    entries.push_back({{"side", to_string(side)},
                                       {"k", k},
                                       {"words", word_strings(face_list(side, k, fn).words)}});
                std::cout << json{{"n", fn}, {"entries", entries}}.dump(2) << "\n";
            } else {
                std::vector<Grid> cols;
                std::size_t height = 1;
                for (auto [side, k] : wanted) {
                    Grid g{std::string(side == Side::Source ? "psi_" : "omega_") +
                           std::to_string(k)};
                    for (const auto& w : face_list(side, k, fn).words) g.push_back(to_string(w));
                    height = std::max(height, g.size());
                    cols.push_back(g);
                }
                Grid out(height);
                for (std::size_t i = 0; i < cols.size(); ++i) {
                    Grid p = pad(cols[i], std::max<std::size_t>(grid_width(cols[i]), fn), height);
                    for (std::size_t r = 0; r < height; ++r)
                        out[r] += (i ? "  " : "") + p[r];
                }
                print_grid(out);
            }
            return 0;
        }

        if (*trace_cmd) {
            Side side = tside == "source" ? Side::Source : Side::Target;
            Trace t = side == Side::Source ? run_source(tn) : run_target(tn);
            std::vector<std::size_t> levels;
            if (tlevels.empty()) {
                for (std::size_t j = 0; j <= tn; ++j) levels.push_back(j);
            } else {
                std::stringstream ss(tlevels);
                std::string item;
                while (std::getline(ss, item, ',')) levels.push_back(std::stoul(item));
            }
            std::vector<std::pair<std::string, Pile>> states;
            if (tcheckpoints >= 0) {
                auto cps = star_checkpoints(t, static_cast<std::size_t>(tcheckpoints));
                for (std::size_t i = 0; i < cps.size(); ++i)
                    states.emplace_back("c" + std::to_string(i), cps[i]);
            } else {
                states.emplace_back("start", t.initial);
                for (const auto& s : t.steps)
                    states.emplace_back(s.label.to_string(), s.state);
            }
            if (tformat == "json") {
                json steps = json::array();
                for (const auto& [label, pile] : states)
                    steps.push_back({{"label", label}, {"pile", pile_json(pile)}});
                std::cout << json{{"steps", steps}}.dump(2) << "\n";
            } else {
                for (std::size_t j : levels) {
                    if (j > tn) return fail_usage("level out of range");
                    std::cout << "v" << j << ":\n";
                    // one row per parallel class, one column per state
                    std::map<std::string, std::vector<std::string>> rows;
                    for (const auto& [label, pile] : states)
                        for (const auto& w : pile.level(j))
                            rows[parallel_class(w).label()].push_back(to_string(w));
                    for (const auto& [cls, words] : rows) {
                        std::cout << "  [" << cls << "]";
                        for (const auto& w : words) std::cout << " " << w;
                        std::cout << "\n";
                    }
                }
                std::cout << "transitions:";
                for (const auto& [label, pile] : states) std::cout << " " << label;
                std::cout << "\n";
            }
            return 0;
        }

        if (*coc_cmd) {
            auto c = cocycle(cn);
            if (cformat == "json") {
                json j{{"n", cn}};
                if (cside != "target")
                    j["source"] = json::parse(block_to_json(sigma_block(cn - 1, cn)));
                if (cside != "source")
                    j["target"] = json::parse(block_to_json(tau_block(cn - 1, cn)));
                std::cout << j.dump(2) << "\n";
            } else if (cformat == "table") {
                if (cside != "target") {
                    std::cout << "source:\n";
                    print_grid(block_grid(sigma_block(cn - 1, cn)));
                }
                if (cside != "source") {
                    std::cout << "target:\n";
                    print_grid(block_grid(tau_block(cn - 1, cn)));
                }
            } else {
                if (cside != "target") std::cout << to_string(c.source_form) << "\n";
                if (cside != "source") std::cout << to_string(c.target_form) << "\n";
            }
            return 0;
        }

        if (*ver_cmd) {
            if (vn > max_n())
                return fail_usage("n exceeds ORIENTAL_MAX_N (" + std::to_string(max_n()) +
                                  "); raise the environment variable to allow this");
            bool ok = true;
            auto report = [&](const std::string& name, bool pass, const std::string& detail) {
                std::cout << (pass ? "ok  " : "FAIL") << "  " << name;
                if (!detail.empty()) std::cout << "  (" << detail << ")";
                std::cout << "\n";
                ok = ok && pass;
            };
            if (vcheck == "all" || vcheck == "execution") {
                auto r = verify_execution(vn);
                report("execution", r.ok, r.failure);
            }
            if (vcheck == "all" || vcheck == "disks") {
                std::string failure;
                for (std::size_t k = 1; k <= vn && failure.empty(); ++k)
                    for (Side side : {Side::Source, Side::Target}) {
                        auto cert = certify_disk(face_list(side, k, vn).word_set(), k);
                        if (!cert.ok) {
                            failure = "face list k=" + std::to_string(k) + ": " + cert.failure;
                            break;
                        }
                    }
                if (failure.empty() && vn >= 1) {
                    auto r1 = check_nested_disks(run_source(vn));
                    if (!r1.ok) failure = "source trace: " + r1.failure;
                    auto r2 = check_nested_disks(run_target(vn));
                    if (failure.empty() && !r2.ok) failure = "target trace: " + r2.failure;
                }
                report("disks", failure.empty(), failure);
            }
            if (vcheck == "all" || vcheck == "duality") {
                std::string failure;
                for (std::size_t k = 0; k <= vn; ++k) {
                    std::set<CubeWord> im;
                    for (const auto& w : psi(k, vn)) im.insert(antipodal(w));
                    if (im != face_list(Side::Target, k, vn).word_set()) {
                        failure = "antipodal(psi_" + std::to_string(k) + ") != omega";
                        break;
                    }
                }
                if (failure.empty() && vn >= 1) {
                    auto c = cocycle(vn);
                    Block a = form_to_block(reverse_involute(c.source_form), vn);
                    Block b = form_to_block(c.target_form, vn);
                    if (!agree_per_subblock_sets(a, b))
                        failure = "reverse involute of the source differs from the target";
                    else if (reverse_involute(c.source_form) != c.target_form)
                        std::cout << "note: duality holds per sub-block but not token for token\n";
                }
                report("duality", failure.empty(), failure);
            }
            if ((vcheck == "all" || vcheck == "prop62") && vn >= 2) {
                auto r = verify_prop_6_2(vn);
                report("prop62", r.ok,
                       r.ok ? "i:" + std::to_string(r.restriction_checks) +
                                  " ii:" + std::to_string(r.gluing_checks) + " strict:" +
                                  std::to_string(r.gluing_strict)
                            : r.failure);
            }
            return ok ? 0 : 1;
        }

        if (*sim_cmd) {
            auto c = cocycle(sn);
            SimplicialForm src, tgt;
            if (svia == "slice") {
                src = slice(c.source_form, sn);
                tgt = slice(c.target_form, sn);
            } else if (svia == "explode") {
                src = explode(c.source_form, sn);
                tgt = explode(c.target_form, sn);
            } else {
                src = strings(c.source_form, sn);
                tgt = strings(c.target_form, sn);
            }
            if (sformat == "json") {
                std::cout << json{{"n", sn},
                                  {"via", svia},
                                  {"source", to_string(src)},
                                  {"target", to_string(tgt)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << to_string(src) << "\n" << to_string(tgt) << "\n";
            }
            return 0;
        }

        if (*agree_cmd) {
            auto rep = routes_agree(am);
            std::cout << (rep.ok ? "ok" : "FAIL") << "  routes m=" << am;
            if (!rep.failure.empty()) std::cout << "  (" << rep.failure << ")";
            std::cout << "\n";
            std::cout << "slice:   " << to_string(rep.via_slice) << "\n";
            std::cout << "explode: " << to_string(rep.via_explode) << "\n";
            std::cout << "strings: " << to_string(rep.via_strings) << "\n";
            return rep.ok ? 0 : 1;
        }

        if (*ren_cmd) {
            Side side = rside == "source" ? Side::Source : Side::Target;
            if (rwhat == "trace") {
                Trace t = side == Side::Source ? run_source(rn) : run_target(rn);
                std::cout << render_trace_dot(t, rside + " trace of the " + std::to_string(rn) +
                                                     "-cube");
            } else {
                std::size_t k = rk >= 0 ? static_cast<std::size_t>(rk) : rn - 1;
                const Block& b =
                    side == Side::Source ? sigma_block(k, rn) : tau_block(k, rn);
                std::cout << render_block_dot(b, rside + " " + std::to_string(k) + "-block of the " +
                                                     std::to_string(rn) + "-cube");
            }
            return 0;
        }

        if (*fix_cmd) return run_fixtures(fdir, fonly);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
