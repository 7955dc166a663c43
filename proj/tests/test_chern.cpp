#include "kato/chern.hpp"
#include "kato/enumerate.hpp"
#include "kato/errors.hpp"
#include "kato/graph.hpp"
#include "kato/sequence.hpp"
#include "kato/validate.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace kato;

TEST_CASE("adjunction solve on the worked examples") {
    auto m = solve_adjunction(build_dual_graph(parse_symbolic("[s2 r2]")));
    CHECK(m.values == std::vector<Rat>{2, 1, 2, 3});
    CHECK(m.tip == 1);
    CHECK(m.index == 1);

    auto h = solve_adjunction(build_dual_graph(parse_symbolic("[s1 s1 r2]")));
    CHECK(h.values == std::vector<Rat>{Rat(5, 2), Rat(3, 2), 3, Rat(7, 2)});
    CHECK(h.tip == Rat(3, 2));
    CHECK(h.index == 2);
}

TEST_CASE("adjunction system is singular exactly for Enoki graphs") {
    CHECK_THROWS_AS(solve_adjunction(build_dual_graph(parse_symbolic("[r3]"))), SingularSystem);
    CHECK_THROWS_AS(solve_adjunction(build_dual_graph(parse_expanded(std::vector<int>{4, 2, 2}))),
                    SelfLoopUnsupported);
}

TEST_CASE("tip multiplicity formula") {
    for (int k = 1; k <= 6; ++k) {
        auto s = parse_symbolic("[s" + std::to_string(k) + " r" + std::to_string(k) + "]");
        CHECK(tip_multiplicity(s) == 1);
    }
    CHECK(tip_multiplicity(parse_symbolic("[s1 s1 r2]")) == Rat(3, 2));
    CHECK(tip_multiplicity(parse_symbolic("[s2 r2]")) == 1);
    CHECK_THROWS_AS(tip_multiplicity(parse_symbolic("[r3]")), NotSimple);
}

TEST_CASE("closed form agrees with the oracle on the worked examples") {
    auto c = closed_form_multiplicities(parse_symbolic("[s2 r2]"));
    CHECK(c.values == std::vector<Rat>{2, 1, 2, 3});
    auto h = closed_form_multiplicities(parse_symbolic("[s1 s1 r2]"));
    CHECK(h.values == std::vector<Rat>{Rat(5, 2), Rat(3, 2), 3, Rat(7, 2)});
}

TEST_CASE("closed form equals oracle over the full simple sweep") {
    for (const auto& s : enumerate_sequences(2, 10, SequenceFilter::Simple)) {
        auto g = build_dual_graph(s);
        if (g.has_self_loop) continue;
        CAPTURE(s.symbolic());
        auto oracle = solve_adjunction(g);
        auto closed = closed_form_multiplicities(s);
        CHECK(closed.values == oracle.values);
        CHECK(closed.index == oracle.index);
        // the minimum multiplicity is positive and attained at a tip
        CHECK(oracle.tip > 0);
        auto roles = decompose(g);
        bool at_tip = false;
        for (int t : roles.tips) at_tip = at_tip || oracle.values[t] == oracle.tip;
        CHECK(at_tip);
        for (const Rat& d : oracle.values) CHECK(d >= oracle.tip);
    }
}

TEST_CASE("cross validation skips inapplicable classes gracefully") {
    auto enoki = cross_validate(parse_symbolic("[r3]"));
    CHECK(enoki.all_pass);
    bool skipped = false;
    for (const auto& c : enoki.checks) skipped = skipped || c.identity.find("Enoki") != std::string::npos;
    CHECK(skipped);
}

TEST_CASE("mutation names round-trip") {
    for (const auto& name : mutation_names()) {
        auto m = mutation_from_name(name);
        REQUIRE(m.has_value());
        CHECK(*m != ClosedFormMutation::None);
    }
    CHECK_FALSE(mutation_from_name("bogus").has_value());
}

TEST_CASE("every mutation is caught by the harness") {
    for (const auto& name : mutation_names()) {
        auto res = run_validation(6, *mutation_from_name(name));
        CAPTURE(name);
        CHECK_FALSE(res.pass());
    }
    CHECK(run_validation(8).pass());
}

TEST_CASE("c0 and root mutations fail their named identities") {
    auto find = [](const SweepResult& r, const std::string& id) {
        for (const auto& f : r.failures)
            if (f.identity == id) return true;
        return false;
    };
    CHECK(find(run_validation(6, ClosedFormMutation::C0PlusOne), "c0 = t + 1"));
    CHECK(find(run_validation(6, ClosedFormMutation::RootPlusOne), "root = t + l"));
    CHECK(find(run_validation(6, ClosedFormMutation::BlackOffset),
               "closed_form equals adjunction oracle"));
    CHECK(find(run_validation(6, ClosedFormMutation::TipNumerator),
               "closed_form equals adjunction oracle"));
}
