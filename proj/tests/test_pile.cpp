#include "doctest.h"

#include <algorithm>
#include <map>

#include "oriental/cocycle.hpp"
#include "oriental/pile.hpp"

using namespace oriental;

namespace {

std::set<CubeWord> set_of(std::initializer_list<const char*> texts) {
    std::set<CubeWord> out;
    for (const char* t : texts) out.insert(parse_word(t));
    return out;
}

// per-parallel-class view of one level
std::map<std::string, std::string> by_class(const Pile& p, std::size_t j) {
    std::map<std::string, std::string> out;
    for (const auto& w : p.level(j)) out[parallel_class(w).label()] = to_string(w);
    return out;
}

} // namespace

TEST_CASE("face piles satisfy the pile conditions") {
    for (std::size_t n = 0; n <= 5; ++n) {
        Pile p = face_pile(Side::Source, n);
        CHECK(p.top() == n);
        for (std::size_t j = 0; j <= n; ++j) {
            CHECK(p.level(j).size() == binom(n, j));
            CHECK(is_section(p.level_set(j), j, n));
        }
    }
    CHECK(face_pile(Side::Source, 0).level(0) == std::vector<CubeWord>{CubeWord{}});
}

TEST_CASE("pile validation rejects malformed input") {
    CHECK_THROWS(Pile(2, {{parse_word("--")}, {parse_word("-0")}, {parse_word("00")}}));
    CHECK_THROWS(Pile(2, {{parse_word("--")}, {parse_word("-0"), parse_word("-0")},
                          {parse_word("00")}}));
    CHECK_THROWS(Pile(2, {{parse_word("--")}, {parse_word("-0"), parse_word("00")},
                          {parse_word("00")}}));
}

TEST_CASE("embedded faces") {
    auto src = embedded_faces(parse_word("-00"), Side::Source);
    REQUIRE(src.levels.size() == 2);
    CHECK(std::set<CubeWord>(src.levels[0].begin(), src.levels[0].end()) == set_of({"---"}));
    CHECK(std::set<CubeWord>(src.levels[1].begin(), src.levels[1].end()) ==
          set_of({"--0", "-0+"}));
    auto tgt = embedded_faces(parse_word("-00"), Side::Target);
    CHECK(std::set<CubeWord>(tgt.levels[0].begin(), tgt.levels[0].end()) == set_of({"-++"}));
    CHECK(std::set<CubeWord>(tgt.levels[1].begin(), tgt.levels[1].end()) ==
          set_of({"-0-", "-+0"}));
    CHECK(embedded_faces(parse_word("+-+"), Side::Source).levels.empty());
}

TEST_CASE("applicability") {
    Pile psi3 = face_pile(Side::Source, 3);
    CHECK(can_apply(psi3, parse_word("-00")));
    CHECK_FALSE(can_apply(psi3, parse_word("0+0")));
    CHECK(can_apply(psi3, parse_word("---"))); // vertex present, no face condition
    CHECK_FALSE(can_apply(psi3, parse_word("+++")));
    auto missing = missing_for_pi(psi3, parse_word("0+0"));
    CHECK(!missing.empty());
    try {
        apply_pi(psi3, parse_word("0+0"));
        FAIL("expected NotApplicable");
    } catch (const NotApplicable& e) {
        CHECK(e.x == parse_word("0+0"));
        // the 0-source of 0+0 is -+- which Psi_3 does not contain
        CHECK(std::find(e.missing.begin(), e.missing.end(), parse_word("-+-")) !=
              e.missing.end());
    }
    try {
        apply_star(psi3, 1);
        FAIL("expected StarPreconditionFailed");
    } catch (const StarPreconditionFailed& e) {
        CHECK(e.level == 0);
        REQUIRE(e.offending.size() == 1);
        CHECK(e.offending[0] == parse_word("---"));
    }
}

TEST_CASE("pi transitions follow the first two columns of the 3-cube table") {
    Pile psi3 = face_pile(Side::Source, 3);
    Pile p2 = apply_pi(psi3, parse_word("-00"));
    CHECK(p2.level_set(0) == set_of({"-++"}));
    CHECK(p2.level_set(1) == set_of({"-+0", "-0-", "0++"}));
    CHECK(p2.level_set(2) == psi3.level_set(2));
    // display keeps one word per class in a stable slot
    CHECK(by_class(p2, 1) == std::map<std::string, std::string>{
                                 {"1", "0++"}, {"2", "-0-"}, {"3", "-+0"}});
    CHECK_THROWS_AS(apply_pi(psi3, parse_word("0+0")), NotApplicable);
    // a vertex acts as the identity
    Pile same = apply_pi(psi3, parse_word("---"));
    CHECK(same.same_sets(psi3));
}

TEST_CASE("pi reverse inverts pi") {
    Pile psi3 = face_pile(Side::Source, 3);
    Pile p2 = apply_pi(psi3, parse_word("-00"));
    CHECK(apply_pi_reverse(p2, parse_word("-00")).same_sets(psi3));
}

TEST_CASE("star rewrites omega levels back to psi") {
    Pile omega3 = face_pile(Side::Target, 3);
    Pile reset = apply_star(omega3, 2);
    CHECK(reset.level_set(0) == set_of({"---"}));
    CHECK(reset.level_set(1) == set_of({"--0", "-0+", "0++"}));
    CHECK(reset.level_set(2) == omega3.level_set(2));
    // star_0 is the identity
    CHECK(apply_star(face_pile(Side::Source, 3), 0).same_sets(face_pile(Side::Source, 3)));
    // precondition: level 0 of Psi_3 is not omega_0
    CHECK_THROWS_AS(apply_star(face_pile(Side::Source, 3), 1), StarPreconditionFailed);
}

TEST_CASE("run of the empty form") {
    LinearForm empty;
    Pile psi3 = face_pile(Side::Source, 3);
    CHECK_THROWS_AS(parse_form(""), ParseError);
    Trace t = run(empty, psi3);
    CHECK(t.state_count() == 1);
}

TEST_CASE("run fails fast with the step index") {
    Pile psi3 = face_pile(Side::Source, 3);
    auto form = parse_form("0+0 *0 -00");
    try {
        run(form, psi3);
        FAIL("expected StepFailed");
    } catch (const StepFailed& e) {
        CHECK(e.index == 0);
    }
}

TEST_CASE("the 2-cocycle source trace of the 3-cube, per class") {
    auto form = parse_form("-00 *0 0++ *1 -0- *0 0+0 *1 00- *0 ++0");
    Trace t = run(form, face_pile(Side::Source, 3));
    REQUIRE(t.state_count() == 12);
    const char* v0[] = {"---", "-++", "-++", "+++", "---", "-+-",
                        "-+-", "+++", "---", "++-", "++-", "+++"};
    // rows by parallel class: 3 = ..0 row, 2 = .0. row, 1 = 0.. row
    const char* row3[] = {"--0", "-+0", "-+0", "-+0", "-+0", "-+0",
                          "-+0", "++0", "++0", "++0", "++0", "++0"};
    const char* row2[] = {"-0+", "-0-", "-0-", "-0-", "-0-", "-0-",
                          "-0-", "-0-", "-0-", "+0-", "+0-", "+0-"};
    const char* row1[] = {"0++", "0++", "0++", "0++", "0++", "0++",
                          "0++", "0+-", "0+-", "0--", "0--", "0--"};
    for (std::size_t i = 0; i < 12; ++i) {
        const Pile& p = t.state(i);
        CHECK(to_string(p.level(0)[0]) == v0[i]);
        auto classes = by_class(p, 1);
        CHECK(classes["3"] == row3[i]);
        CHECK(classes["2"] == row2[i]);
        CHECK(classes["1"] == row1[i]);
        CHECK(p.level_set(2) == set_of({"-00", "0+0", "00-"}));
        CHECK(p.level_set(3) == set_of({"000"}));
    }
}

TEST_CASE("pi preserves parallel classes at every level") {
    auto form = parse_form("-00 *0 0++ *1 -0- *0 0+0 *1 00- *0 ++0");
    Trace t = run(form, face_pile(Side::Source, 3));
    for (std::size_t i = 0; i < t.state_count(); ++i)
        for (std::size_t j = 0; j <= 3; ++j) {
            std::set<ParallelClass> classes;
            for (const auto& w : t.state(i).level(j)) classes.insert(parallel_class(w));
            CHECK(classes.size() == binom(3, j));
        }
}

TEST_CASE("pi is antipodally equivariant") {
    // antipodal(pi_x(P)) = reverse-pi_{antipodal(x)}(antipodal(P))
    auto form = parse_form("-00 *0 0++ *1 -0- *0 0+0 *1 00- *0 ++0");
    Trace t = run(form, face_pile(Side::Source, 3));
    auto flip = [](const Pile& p) {
        std::vector<std::vector<CubeWord>> levels;
        for (const auto& lv : p.levels()) {
            std::vector<CubeWord> out;
            for (const auto& w : lv) out.push_back(antipodal(w));
            levels.push_back(out);
        }
        return Pile(p.ambient(), levels);
    };
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& lab = t.steps[i].label;
        if (lab.kind != TransitionLabel::Kind::Pi) continue;
        const Pile& before = t.state(i);
        const Pile& after = t.steps[i].state;
        CHECK(flip(after).same_sets(apply_pi_reverse(flip(before), antipodal(lab.word))));
    }
}

TEST_CASE("both readings of star agree where the rewrite applies") {
    // wherever *_k fires in a canonical trace, rewriting omega levels to
    // psi equals applying the antipodal involution to those levels
    for (std::size_t n : {3, 4}) {
        auto form = linearize(sigma_block(n - 1, n));
        Trace t = run(form, face_pile(Side::Source, n));
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
            const auto& lab = t.steps[i].label;
            if (lab.kind != TransitionLabel::Kind::Star || lab.k == 0) continue;
            const Pile& before = t.state(i);
            const Pile& after = t.steps[i].state;
            for (std::size_t j = 0; j < lab.k; ++j) {
                std::set<CubeWord> flipped;
                for (const auto& w : before.level(j)) flipped.insert(antipodal(w));
                CHECK(after.level_set(j) == flipped);
            }
        }
    }
}

TEST_CASE("nested disk monitoring accepts the canonical trace") {
    auto form = parse_form("-00 *0 0++ *1 -0- *0 0+0 *1 00- *0 ++0");
    Trace t = run(form, face_pile(Side::Source, 3));
    CHECK(check_nested_disks(t).ok);
}

TEST_CASE("nested disk monitoring flags a broken section") {
    // level 1 misses class 1 and repeats class 3: counts pass, section fails
    Pile broken(3, {{parse_word("---")},
                    {parse_word("--0"), parse_word("-0+"), parse_word("-+0")},
                    {parse_word("-00"), parse_word("0+0"), parse_word("00-")},
                    {parse_word("000")}});
    Trace t{broken, {}};
    auto rep = check_nested_disks(t);
    CHECK_FALSE(rep.ok);
    CHECK(rep.failure.find("section") != std::string::npos);
}
