#include "doctest.h"

#include <set>

#include "revlatch/builders.hpp"
#include "revlatch/errors.hpp"
#include "revlatch/simulate.hpp"

using namespace revlatch;

namespace {

// Hand oracles for the two characteristic equations.
bool d_next(bool e, bool d, bool q) { return (d && e) || (!e && q); }
bool jk_next(bool e, bool j, bool k, bool q) {
    return (((j && !q) || (!k && q)) && e) || (!e && q);
}

LatchState q_state(bool q) { return LatchState{{{"Q", q}}}; }

} // namespace

TEST_CASE("eval_combinational: spelled-out cases") {
    Circuit d = d_latch_q();

    EvalResult r = eval_combinational(d, {{"E", true}, {"D", false}}, q_state(true));
    CHECK(r.outputs.at("Q") == false);
    CHECK(r.next_state.values.at("Q") == false);

    r = eval_combinational(d, {{"E", false}, {"D", true}}, q_state(false));
    CHECK(r.outputs.at("Q") == false);
    CHECK(r.next_state.values.at("Q") == false);

    r = eval_combinational(d, {{"E", true}, {"D", true}}, q_state(false));
    CHECK(r.outputs.at("Q") == true);
    CHECK(r.next_state.values.at("Q") == true);

    Circuit jk = jk_latch_q();
    r = eval_combinational(jk, {{"E", true}, {"J", true}, {"K", true}}, q_state(true));
    CHECK(r.next_state.values.at("Q") == false); // toggle
}

TEST_CASE("eval_combinational: binding errors") {
    Circuit d = d_latch_q();
    CHECK_THROWS_AS(eval_combinational(d, {{"E", true}}, q_state(false)), InputError);
    CHECK_THROWS_AS(eval_combinational(d, {{"E", true}, {"D", false}}, LatchState{}),
                    InputError);
    CHECK_THROWS_AS(
        eval_combinational(d, {{"E", true}, {"D", false}, {"X", true}}, q_state(false)),
        InputError);
}

TEST_CASE("step matches the hand oracles exhaustively") {
    Circuit d_variants[] = {d_latch_q(), d_latch_qq()};
    for (const Circuit& c : d_variants) {
        for (int e = 0; e <= 1; ++e)
            for (int dd = 0; dd <= 1; ++dd)
                for (int q = 0; q <= 1; ++q) {
                    LatchState next = step(c, {{"E", e != 0}, {"D", dd != 0}}, q_state(q != 0));
                    CHECK(next.values.at("Q") == d_next(e, dd, q));
                }
    }

    Circuit jk_variants[] = {jk_latch_q(), jk_latch_qq()};
    for (const Circuit& c : jk_variants) {
        for (int e = 0; e <= 1; ++e)
            for (int j = 0; j <= 1; ++j)
                for (int k = 0; k <= 1; ++k)
                    for (int q = 0; q <= 1; ++q) {
                        LatchState next = step(
                            c, {{"E", e != 0}, {"J", j != 0}, {"K", k != 0}}, q_state(q != 0));
                        CHECK(next.values.at("Q") == jk_next(e, j, k, q));
                    }
    }
}

TEST_CASE("held inputs reach a fixpoint, except the JK race-around") {
    // The D latch settles in one step on every assignment. The JK latch
    // cannot: its characteristic makes E=J=K=1 a toggle, so repeating that
    // event oscillates. Anywhere else it settles.
    for (const char* name : {"d-latch-q", "d-latch-qq"}) {
        Circuit c = build_named_latch(name);
        for (int e = 0; e <= 1; ++e)
            for (int d = 0; d <= 1; ++d)
                for (int q = 0; q <= 1; ++q) {
                    Binding in{{"E", e != 0}, {"D", d != 0}};
                    LatchState once = step(c, in, q_state(q != 0));
                    CHECK(step(c, in, once) == once);
                }
    }
    for (const char* name : {"jk-latch-q", "jk-latch-qq"}) {
        Circuit c = build_named_latch(name);
        for (int e = 0; e <= 1; ++e)
            for (int j = 0; j <= 1; ++j)
                for (int k = 0; k <= 1; ++k)
                    for (int q = 0; q <= 1; ++q) {
                        Binding in{{"E", e != 0}, {"J", j != 0}, {"K", k != 0}};
                        LatchState once = step(c, in, q_state(q != 0));
                        const bool race_around = e && j && k;
                        CAPTURE(e);
                        CAPTURE(j);
                        CAPTURE(k);
                        CAPTURE(q);
                        CHECK((step(c, in, once) == once) == !race_around);
                    }
    }
}

TEST_CASE("simulate_sequence folds step and chains states") {
    Circuit d = d_latch_q();
    SimTrace trace = simulate_sequence(
        d,
        {{{"E", true}, {"D", true}}, {{"E", false}, {"D", false}}, {{"E", false}, {"D", true}}},
        q_state(false));
    REQUIRE(trace.steps.size() == 3);
    CHECK(trace.steps[0].state_after.values.at("Q") == true);
    CHECK(trace.steps[1].state_after.values.at("Q") == true);
    CHECK(trace.steps[2].state_after.values.at("Q") == true);
    for (size_t i = 0; i + 1 < trace.steps.size(); ++i)
        CHECK(trace.steps[i].state_after == trace.steps[i + 1].state_before);
    CHECK(trace.unstable_steps.empty());

    Circuit jk = jk_latch_q();
    Binding toggle{{"E", true}, {"J", true}, {"K", true}};
    SimTrace jk_trace = simulate_sequence(jk, {toggle, toggle}, q_state(false));
    CHECK(jk_trace.steps[0].state_after.values.at("Q") == true);
    CHECK(jk_trace.steps[1].state_after.values.at("Q") == false);
    // the race-around diagnostic fires on both toggle events
    CHECK(jk_trace.unstable_steps == std::vector<size_t>{0, 1});

    CHECK(simulate_sequence(d, {}, q_state(false)).steps.empty());

    CHECK_THROWS_WITH_AS(simulate_sequence(d, {{{"E", true}}}, q_state(false)),
                         doctest::Contains("event 0"), InputError);
}

TEST_CASE("check_characteristic: holds for the builders") {
    Expr d_eq = Expr::parse("D*E + !E*Q");
    Expr jk_eq = Expr::parse("(J*!Q + !K*Q)*E + !E*Q");

    for (const char* name : {"d-latch-q", "d-latch-qq"}) {
        CharacteristicVerdict v = check_characteristic(build_named_latch(name), d_eq);
        CHECK(v.holds);
        CHECK(v.assignments == 8);
    }
    for (const char* name : {"jk-latch-q", "jk-latch-qq"}) {
        CharacteristicVerdict v = check_characteristic(build_named_latch(name), jk_eq);
        CHECK(v.holds);
        CHECK(v.assignments == 16);
    }
}

TEST_CASE("check_characteristic: first counterexample in index order") {
    CharacteristicVerdict v = check_characteristic(d_latch_q(), Expr::parse("D"));
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.counterexample.has_value());
    Binding cx = *v.counterexample;
    CHECK(cx.at("E") == false);
    CHECK(cx.at("D") == true);
    CHECK(cx.at("Q") == false);
}

TEST_CASE("check_characteristic: unknown symbols rejected") {
    CHECK_THROWS_AS(check_characteristic(d_latch_q(), Expr::parse("D*X")), InputError);
}

TEST_CASE("check_complementarity") {
    CHECK(check_complementarity(d_latch_qq()).complementary);
    CHECK(check_complementarity(jk_latch_qq()).complementary);

    // FG with a constant-0 control copies A to both outputs: never complementary
    Circuit copy;
    copy.add_line(Line{"a", LineRole::primary_input, std::nullopt});
    copy.add_line(Line{"z", LineRole::constant_zero, std::nullopt});
    copy.add_gate(Library::builtins().find("FG"),
                  {Driver::from_line("a"), Driver::from_line("z")},
                  {Disposition::primary("x"), Disposition::primary("y")});
    ComplementVerdict v = check_complementarity(copy);
    CHECK_FALSE(v.complementary);
    CHECK(v.counterexample.has_value());

    CHECK_THROWS_AS(check_complementarity(d_latch_q()), InputError);
}

TEST_CASE("transparency and hold of the D latch") {
    Circuit d = d_latch_q();
    for (int dd = 0; dd <= 1; ++dd)
        for (int q = 0; q <= 1; ++q) {
            CHECK(step(d, {{"E", true}, {"D", dd != 0}}, q_state(q != 0)).values.at("Q") ==
                  (dd != 0));
            CHECK(step(d, {{"E", false}, {"D", dd != 0}}, q_state(q != 0)).values.at("Q") ==
                  (q != 0));
        }
}

TEST_CASE("JK behavior table at E=1: hold, reset, set, toggle") {
    Circuit jk = jk_latch_q();
    for (int q = 0; q <= 1; ++q) {
        bool qb = q != 0;
        CHECK(step(jk, {{"E", true}, {"J", false}, {"K", false}}, q_state(qb)).values.at("Q") ==
              qb);
        CHECK(step(jk, {{"E", true}, {"J", false}, {"K", true}}, q_state(qb)).values.at("Q") ==
              false);
        CHECK(step(jk, {{"E", true}, {"J", true}, {"K", false}}, q_state(qb)).values.at("Q") ==
              true);
        CHECK(step(jk, {{"E", true}, {"J", true}, {"K", true}}, q_state(qb)).values.at("Q") ==
              !qb);
    }
}

TEST_CASE("determinism: repeated evaluation is identical") {
    Circuit jk = jk_latch_qq();
    Binding in{{"E", true}, {"J", true}, {"K", false}};
    EvalResult a = eval_combinational(jk, in, q_state(false));
    EvalResult b = eval_combinational(jk, in, q_state(false));
    CHECK(a.outputs == b.outputs);
    CHECK(a.next_state == b.next_state);
    CHECK(a.port_values == b.port_values);
}

TEST_CASE("composite bijectivity: cut feedback, free all lines") {
    // With the feedback cut and every line (constants included) freed, a
    // fan-out-free cascade of bijective gates permutes its value space.
    for (const std::string& name : latch_builder_names()) {
        CAPTURE(name);
        Circuit original = build_named_latch(name);

        Circuit freed;
        std::vector<std::string> free_lines;
        for (const Line& l : original.lines()) {
            freed.add_line(Line{l.id, LineRole::primary_input, std::nullopt});
            free_lines.push_back(l.id);
        }
        for (const GateInstance& g : original.gates())
            freed.add_gate(g.gate, g.inputs, g.outputs);

        const auto states = freed.state_names();
        const size_t n_free = free_lines.size() + states.size();
        REQUIRE(n_free <= 12);

        // terminal ports: garbage, primary, feedback source
        std::vector<std::pair<int, int>> terminals;
        for (int i = 0; i < static_cast<int>(freed.gates().size()); ++i)
            for (int p = 0; p < freed.gates()[static_cast<size_t>(i)].gate->arity(); ++p)
                if (freed.gates()[static_cast<size_t>(i)]
                        .outputs[static_cast<size_t>(p)]
                        .kind != Disposition::Kind::consumed)
                    terminals.emplace_back(i, p);
        REQUIRE(terminals.size() == n_free);

        std::set<std::vector<bool>> images;
        for (unsigned a = 0; a < (1u << n_free); ++a) {
            Binding in;
            for (size_t j = 0; j < free_lines.size(); ++j)
                in[free_lines[j]] = ((a >> j) & 1u) != 0;
            LatchState st;
            for (size_t s = 0; s < states.size(); ++s)
                st.values[states[s]] = ((a >> (free_lines.size() + s)) & 1u) != 0;
            EvalResult r = eval_combinational(freed, in, st);
            std::vector<bool> image;
            for (const auto& [i, p] : terminals)
                image.push_back(r.port_values[static_cast<size_t>(i)][static_cast<size_t>(p)]);
            images.insert(std::move(image));
        }
        CHECK(images.size() == (1u << n_free));
    }
}
